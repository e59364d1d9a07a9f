#pragma once

#include "lorentz/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorentz {

/// Exponent vector of a monomial x^a = x_1^{a_1} ... x_n^{a_n}. Entries are >= 0.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : e_(n, 0) {}
    ExponentVector(std::initializer_list<int> init) : e_(init) { validate(); }
    explicit ExponentVector(std::vector<int> entries) : e_(std::move(entries)) { validate(); }

    static ExponentVector unit(std::size_t n, std::size_t i) {
        ExponentVector v(n);
        v.e_.at(i) = 1;
        return v;
    }
    static ExponentVector filled(std::size_t n, int value) {
        return ExponentVector(std::vector<int>(n, value));
    }

    std::size_t size() const noexcept { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    const std::vector<int>& entries() const noexcept { return e_; }
    auto begin() const noexcept { return e_.begin(); }
    auto end() const noexcept { return e_.end(); }

    void set(std::size_t i, int value) {
        if (value < 0) throw std::invalid_argument("negative exponent");
        e_.at(i) = value;
    }

    /// |a| = sum of entries.
    int degree() const noexcept { return std::accumulate(e_.begin(), e_.end(), 0); }

    /// Componentwise a <= kappa.
    bool is_below(const ExponentVector& kappa) const {
        check_size(kappa);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > kappa.e_[i]) return false;
        return true;
    }

    ExponentVector operator+(const ExponentVector& o) const {
        check_size(o);
        ExponentVector r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    /// Throws if any entry would become negative; use is_below first.
    ExponentVector operator-(const ExponentVector& o) const {
        check_size(o);
        ExponentVector r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0) throw std::invalid_argument("exponent subtraction underflow");
        }
        return r;
    }

    /// Concatenation (x-block followed by w-block).
    ExponentVector concat(const ExponentVector& o) const {
        ExponentVector r(*this);
        r.e_.insert(r.e_.end(), o.e_.begin(), o.e_.end());
        return r;
    }

    ExponentVector slice(std::size_t from, std::size_t count) const {
        return ExponentVector(std::vector<int>(e_.begin() + static_cast<std::ptrdiff_t>(from),
                                               e_.begin() + static_cast<std::ptrdiff_t>(from + count)));
    }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.e_ <=> b.e_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

private:
    void validate() const {
        for (int v : e_)
            if (v < 0) throw std::invalid_argument("negative exponent");
    }
    void check_size(const ExponentVector& o) const {
        if (o.size() != size()) throw std::invalid_argument("exponent vectors of different length");
    }

    std::vector<int> e_;
};

/// Graded lexicographic order, largest first: higher total degree first, then
/// lexicographically larger first (x1^2 before x1*x2 before x2^2).
struct GradedLexDescending {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a > b;
    }
};

struct ExponentHash {
    std::size_t operator()(const ExponentVector& a) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int v : a) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
        return h;
    }
};

/// a! = a_1! ... a_n!
inline Integer factorial(const ExponentVector& a) {
    Integer r = 1;
    for (int v : a) r *= factorial(static_cast<unsigned>(v));
    return r;
}

/// a! / (a - b)!, zero unless b <= a.
inline Integer falling_factorial(const ExponentVector& a, const ExponentVector& b) {
    if (!b.is_below(a)) return 0;
    Integer r = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int k = 0; k < b[i]; ++k) r *= static_cast<unsigned long>(a[i] - k);
    return r;
}

/// prod_i C(kappa_i, b_i)
inline Integer binomial(const ExponentVector& kappa, const ExponentVector& b) {
    Integer r = 1;
    for (std::size_t i = 0; i < kappa.size(); ++i)
        r *= binomial(static_cast<unsigned>(kappa[i]), static_cast<unsigned>(b[i]));
    return r;
}

/// All exponent vectors of length n and total degree d, lexicographically
/// descending ((d,0,..,0) first).
inline std::vector<ExponentVector> compositions(std::size_t n, int d) {
    std::vector<ExponentVector> out;
    if (d < 0 || n == 0) return out;
    std::vector<int> cur(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == n) {
            cur[i] = left;
            out.emplace_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, d);
    return out;
}

/// All exponent vectors b with b <= kappa, lexicographically descending.
inline std::vector<ExponentVector> box(const ExponentVector& kappa) {
    std::vector<ExponentVector> out;
    const std::size_t n = kappa.size();
    std::vector<int> cur(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            out.emplace_back(cur);
            return;
        }
        for (int v = kappa[i]; v >= 0; --v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

/// Weakly decreasing sequence of non-negative integers.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    /// |lambda|
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    /// Number of non-zero parts.
    std::size_t length() const noexcept {
        return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
    }
    /// lambda_i (0-based), zero beyond the stored parts.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition& a, const Partition& b) {
        std::size_t n = std::max(a.parts_.size(), b.parts_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

private:
    void validate() const {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("negative part in partition");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    std::vector<int> parts_;
};

/// All partitions of m with at most max_len parts, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int m, std::size_t max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (cur.size() == max_len) return;
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

}  // namespace lorentz
