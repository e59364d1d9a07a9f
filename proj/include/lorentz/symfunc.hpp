#pragma once

#include "lorentz/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lorentz {

/// e_k(x_1..x_n)
inline Polynomial elementary_symmetric(std::size_t n, int k) {
    Polynomial p(n);
    if (k < 0 || static_cast<std::size_t>(k) > n) return p;
    for (const auto& a : compositions(n, k))
        if (std::all_of(a.begin(), a.end(), [](int v) { return v <= 1; })) p.add_term(a, 1);
    return p;
}

/// h_k(x_1..x_n)
inline Polynomial complete_homogeneous(std::size_t n, int k) {
    Polynomial p(n);
    if (k < 0) return p;
    for (const auto& a : compositions(n, k)) p.add_term(a, 1);
    return p;
}

/// e_k(a_1..a_m) for numbers a.
inline Rational elementary_symmetric_value(std::span<const Rational> a, int k) {
    if (k < 0 || static_cast<std::size_t>(k) > a.size()) return 0;
    // e[j] after processing a prefix
    std::vector<Rational> e(static_cast<std::size_t>(k) + 1, Rational(0));
    e[0] = 1;
    for (const auto& v : a)
        for (std::size_t j = static_cast<std::size_t>(k); j >= 1; --j) e[j] += v * e[j - 1];
    return e[static_cast<std::size_t>(k)];
}

/// Schur polynomial s_lambda(x_1..x_n) via the Jacobi-Trudi determinant
/// det(h_{lambda_i - i + j}). Zero when lambda has more than n non-zero parts.
inline Polynomial schur(const Partition& lambda, std::size_t n) {
    if (n == 0) throw std::invalid_argument("schur needs at least one variable");
    const std::size_t len = lambda.length();
    if (len > n) return Polynomial(n);
    std::vector<Polynomial> h;
    const int top = lambda[0] + static_cast<int>(len);
    for (int k = 0; k <= top; ++k) h.push_back(complete_homogeneous(n, k));
    auto hk = [&](int k) { return (k < 0 || k > top) ? Polynomial(n) : h[static_cast<std::size_t>(k)]; };
    std::vector<std::vector<Polynomial>> m(len, std::vector<Polynomial>(len, Polynomial(n)));
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j < len; ++j)
            m[i][j] = hk(lambda[i] - static_cast<int>(i) + static_cast<int>(j));
    return determinant(m, n);
}

/// A permutation w of {1..n} in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : w_(std::move(images)) {
        std::vector<bool> seen(w_.size(), false);
        for (int v : w_) {
            if (v < 1 || static_cast<std::size_t>(v) > w_.size() || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("not a permutation of 1..n");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
        if (w_.empty()) throw std::invalid_argument("empty permutation");
    }
    static Permutation identity(std::size_t n) {
        std::vector<int> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i + 1);
        return Permutation(std::move(w));
    }
    static Permutation longest(std::size_t n) {
        std::vector<int> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(n - i);
        return Permutation(std::move(w));
    }

    std::size_t size() const noexcept { return w_.size(); }
    /// w(i+1), 0-based argument.
    int operator()(std::size_t i) const { return w_.at(i); }
    const std::vector<int>& images() const noexcept { return w_; }

    /// w s_i: swaps positions i and i+1 (0-based).
    Permutation swapped(std::size_t i) const {
        Permutation r(*this);
        std::swap(r.w_.at(i), r.w_.at(i + 1));
        return r;
    }

    /// Lehmer code c_i = #{j > i : w(j) < w(i)}.
    std::vector<int> code() const {
        std::vector<int> c(w_.size(), 0);
        for (std::size_t i = 0; i < w_.size(); ++i)
            for (std::size_t j = i + 1; j < w_.size(); ++j)
                if (w_[j] < w_[i]) ++c[i];
        return c;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> w_;
};

/// Exact quotient g / (x_i - x_{i+1}) (0-based i). Throws std::logic_error when
/// the division leaves a remainder.
inline Polynomial divide_by_difference(Polynomial g, std::size_t i) {
    const std::size_t n = g.nvars();
    Polynomial quotient(n);
    const auto ei = ExponentVector::unit(n, i);
    const auto ej = ExponentVector::unit(n, i + 1);
    while (!g.is_zero()) {
        // leading term with respect to the x_i exponent
        auto best = g.terms().begin();
        for (auto it = g.terms().begin(); it != g.terms().end(); ++it)
            if (it->first[i] > best->first[i]) best = it;
        if (best->first[i] == 0) throw std::logic_error("divided difference is not exact");
        const ExponentVector q = best->first - ei;
        const Rational c = best->second;
        quotient.add_term(q, c);
        g.add_term(q + ei, -c);
        g.add_term(q + ej, c);
    }
    return quotient;
}

/// Divided difference (f - s_i f) / (x_i - x_{i+1}), 0-based i.
inline Polynomial divided_difference(const Polynomial& f, std::size_t i) {
    if (i + 1 >= f.nvars()) throw std::invalid_argument("divided difference index out of range");
    Polynomial swapped(f.nvars());
    for (const auto& [a, c] : f.terms()) {
        std::vector<int> e = a.entries();
        std::swap(e[i], e[i + 1]);
        swapped.add_term(ExponentVector(e), c);
    }
    return divide_by_difference(f - swapped, i);
}

/// Schubert polynomial S_w in n = |w| variables, computed top-down from
/// S_{w0} = x^delta, delta = (n-1, ..., 1, 0), via S_{w s_i} = d_i S_w when
/// w(i) > w(i+1).
inline Polynomial schubert(const Permutation& w) {
    const std::size_t n = w.size();
    // Walk up from w to w0 by ascents, remembering the indices.
    std::vector<std::size_t> path;
    Permutation cur = w;
    while (true) {
        std::size_t i = 0;
        while (i + 1 < n && cur(i) > cur(i + 1)) ++i;
        if (i + 1 >= n) break;
        path.push_back(i);
        cur = cur.swapped(i);
    }
    std::vector<int> delta(n);
    for (std::size_t k = 0; k < n; ++k) delta[k] = static_cast<int>(n - 1 - k);
    Polynomial s = Polynomial::monomial(ExponentVector(delta));
    for (auto it = path.rbegin(); it != path.rend(); ++it) s = divided_difference(s, *it);
    return s;
}

/// Both sides of x^{(d,..,d)} s_lambda(1/x) = s_kappa(x), kappa = (d - lambda_n, ..., d - lambda_1):
/// the left side by exponent reversal, the right side by `schur`.
inline std::pair<Polynomial, Polynomial> schur_dual_identity(const Partition& lambda, std::size_t n) {
    if (lambda.length() > n) throw std::invalid_argument("partition longer than the number of variables");
    const int d = lambda.size();
    Polynomial left = reverse_exponents(schur(lambda, n), ExponentVector::filled(n, d));
    std::vector<int> kappa(n);
    for (std::size_t i = 0; i < n; ++i) kappa[i] = d - lambda[n - 1 - i];
    Polynomial right = schur(Partition(kappa), n);
    return {std::move(left), std::move(right)};
}

}  // namespace lorentz
