#pragma once

#include "lorentz/exponent.hpp"
#include "lorentz/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lorentz {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// The variable count is part of the value: x1 in 1 variable and x1 in 3
/// variables are different polynomials. Zero coefficients are never stored.
/// Terms iterate in graded lexicographic order, largest monomial first.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, GradedLexDescending>;

    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {
        if (nvars == 0) throw std::invalid_argument("polynomial needs at least one variable");
    }

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(ExponentVector(nvars), c);
        return p;
    }
    static Polynomial monomial(const ExponentVector& a, const Rational& c = 1) {
        Polynomial p(a.size());
        p.add_term(a, c);
        return p;
    }
    /// x_{i+1} (0-based index i).
    static Polynomial variable(std::size_t nvars, std::size_t i) {
        return monomial(ExponentVector::unit(nvars, i));
    }
    /// sum_i c_i x_i
    static Polynomial linear(std::span<const Rational> coefficients) {
        Polynomial p(coefficients.size());
        for (std::size_t i = 0; i < coefficients.size(); ++i)
            p.add_term(ExponentVector::unit(coefficients.size(), i), coefficients[i]);
        return p;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const ExponentVector& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::vector<ExponentVector> support() const {
        std::vector<ExponentVector> s;
        s.reserve(terms_.size());
        for (const auto& [a, c] : terms_) s.push_back(a);
        return s;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const noexcept { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    bool is_homogeneous() const noexcept {
        if (terms_.empty()) return true;
        return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
    }

    /// Componentwise maximum of the support (all zeros for the zero polynomial).
    ExponentVector multidegree() const {
        std::vector<int> m(nvars_, 0);
        for (const auto& [a, c] : terms_)
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], a[i]);
        return ExponentVector(m);
    }

    /// Accumulates c * x^a; drops the term if the sum cancels.
    void add_term(const ExponentVector& a, const Rational& c) {
        if (a.size() != nvars_) throw std::invalid_argument("exponent length does not match variable count");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(a, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [a, c] : r.terms_) c = -c;
        return r;
    }
    Polynomial& operator+=(const Polynomial& g) {
        check_arity(g);
        for (const auto& [a, c] : g.terms_) add_term(a, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& g) {
        check_arity(g);
        for (const auto& [a, c] : g.terms_) add_term(a, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [a, c] : terms_) c *= k;
        return *this;
    }

    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(Polynomial f, const Rational& k) { return f *= k; }
    friend Polynomial operator*(const Rational& k, Polynomial f) { return f *= k; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        f.check_arity(g);
        Polynomial r(f.nvars_);
        for (const auto& [a, c] : f.terms_)
            for (const auto& [b, d] : g.terms_) r.add_term(a + b, c * d);
        return r;
    }

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
    }

    void check_arity(const Polynomial& g) const {
        if (g.nvars_ != nvars_)
            throw std::invalid_argument("variable count mismatch: " + std::to_string(nvars_) + " vs " +
                                        std::to_string(g.nvars_));
    }

private:
    std::size_t nvars_;
    TermMap terms_;
};

inline Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }

inline Polynomial pow(const Polynomial& f, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    Polynomial r = Polynomial::constant(f.nvars(), 1);
    Polynomial base = f;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

/// Iterated partial derivative d^alpha f.
inline Polynomial partial(const Polynomial& f, const ExponentVector& alpha) {
    if (alpha.size() != f.nvars()) throw std::invalid_argument("derivative multi-index has wrong length");
    Polynomial r(f.nvars());
    for (const auto& [b, c] : f.terms()) {
        if (!alpha.is_below(b)) continue;
        r.add_term(b - alpha, c * Rational(falling_factorial(b, alpha)));
    }
    return r;
}

inline Polynomial partial(const Polynomial& f, std::size_t i) {
    return partial(f, ExponentVector::unit(f.nvars(), i));
}

/// D_v f = sum_i v_i d f / d x_i
inline Polynomial directional_derivative(const Polynomial& f, std::span<const Rational> v) {
    if (v.size() != f.nvars()) throw std::invalid_argument("direction has wrong length");
    Polynomial r(f.nvars());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) r += v[i] * partial(f, i);
    return r;
}

/// Formal antiderivative, x^b -> b!/(b+alpha)! x^{b+alpha}.
inline Polynomial antiderivative(const Polynomial& f, const ExponentVector& alpha) {
    if (alpha.size() != f.nvars()) throw std::invalid_argument("antiderivative multi-index has wrong length");
    Polynomial r(f.nvars());
    for (const auto& [b, c] : f.terms()) {
        const auto target = b + alpha;
        r.add_term(target, c / Rational(falling_factorial(target, alpha)));
    }
    return r;
}

/// f(Ax): A has f.nvars() rows; the result lives in (columns of A) variables.
inline Polynomial substitute_linear(const Polynomial& f, const RationalMatrix& a) {
    if (a.size() != f.nvars())
        throw std::invalid_argument("substitution matrix needs " + std::to_string(f.nvars()) + " rows, got " +
                                    std::to_string(a.size()));
    const std::size_t m = a.front().size();
    if (m == 0) throw std::invalid_argument("substitution matrix has no columns");
    for (const auto& row : a)
        if (row.size() != m) throw std::invalid_argument("ragged substitution matrix");

    std::vector<Polynomial> forms;
    forms.reserve(a.size());
    for (const auto& row : a) forms.push_back(Polynomial::linear(row));

    // powers[i][k] = forms[i]^k, filled on demand
    const auto md = f.multidegree();
    std::vector<std::vector<Polynomial>> powers(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        powers[i].push_back(Polynomial::constant(m, 1));
        for (int k = 1; k <= md[i]; ++k) powers[i].push_back(powers[i].back() * forms[i]);
    }

    Polynomial r(m);
    for (const auto& [b, c] : f.terms()) {
        Polynomial t = Polynomial::constant(m, c);
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] > 0) t = t * powers[i][static_cast<std::size_t>(b[i])];
        r += t;
    }
    return r;
}

/// Terms with exponent <= kappa.
inline Polynomial truncate_le(const Polynomial& f, const ExponentVector& kappa) {
    if (kappa.size() != f.nvars()) throw std::invalid_argument("truncation box has wrong length");
    Polynomial r(f.nvars());
    for (const auto& [a, c] : f.terms())
        if (a.is_below(kappa)) r.add_term(a, c);
    return r;
}

/// Terms with exponent >= kappa.
inline Polynomial truncate_ge(const Polynomial& f, const ExponentVector& kappa) {
    if (kappa.size() != f.nvars()) throw std::invalid_argument("truncation box has wrong length");
    Polynomial r(f.nvars());
    for (const auto& [a, c] : f.terms())
        if (kappa.is_below(a)) r.add_term(a, c);
    return r;
}

/// N: x^a -> x^a / a!
inline Polynomial normalize(const Polynomial& f) {
    Polynomial r(f.nvars());
    for (const auto& [a, c] : f.terms()) r.add_term(a, c / Rational(factorial(a)));
    return r;
}

/// N^{-1}: x^a -> a! x^a
inline Polynomial denormalize(const Polynomial& f) {
    Polynomial r(f.nvars());
    for (const auto& [a, c] : f.terms()) r.add_term(a, c * Rational(factorial(a)));
    return r;
}

inline Rational evaluate(const Polynomial& f, std::span<const Rational> t) {
    if (t.size() != f.nvars()) throw std::invalid_argument("evaluation point has wrong length");
    Rational sum = 0;
    for (const auto& [a, c] : f.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < a.size() && term != 0; ++i)
            for (int k = 0; k < a[i]; ++k) term *= t[i];
        sum += term;
    }
    return sum;
}

/// x^kappa * f(1/x_1, ..., 1/x_n); requires multidegree(f) <= kappa.
inline Polynomial reverse_exponents(const Polynomial& f, const ExponentVector& kappa) {
    if (kappa.size() != f.nvars()) throw std::invalid_argument("reversal box has wrong length");
    Polynomial r(f.nvars());
    for (const auto& [a, c] : f.terms()) {
        if (!a.is_below(kappa)) throw std::invalid_argument("box " + kappa.to_string() + " does not contain " + a.to_string());
        r.add_term(kappa - a, c);
    }
    return r;
}

/// Reinterprets f in a larger ambient space: variable i of f becomes variable
/// placement[i] of the result.
inline Polynomial embed(const Polynomial& f, std::size_t nvars, std::span<const std::size_t> placement) {
    if (placement.size() != f.nvars()) throw std::invalid_argument("placement has wrong length");
    Polynomial r(nvars);
    for (const auto& [a, c] : f.terms()) {
        ExponentVector b(nvars);
        for (std::size_t i = 0; i < a.size(); ++i) b.set(placement[i], b[placement[i]] + a[i]);
        r.add_term(b, c);
    }
    return r;
}

/// Embeds f into nvars variables, keeping variable i at position offset + i.
inline Polynomial embed(const Polynomial& f, std::size_t nvars, std::size_t offset = 0) {
    std::vector<std::size_t> placement(f.nvars());
    for (std::size_t i = 0; i < placement.size(); ++i) placement[i] = offset + i;
    return embed(f, nvars, placement);
}

/// Determinant of a square matrix of polynomials, by cofactor expansion along
/// rows with memoization on the set of remaining columns.
inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, std::size_t nvars) {
    const std::size_t d = m.size();
    if (d == 0) return Polynomial::constant(nvars, 1);
    if (d > 20) throw std::invalid_argument("matrix too large for cofactor expansion");
    for (const auto& row : m)
        if (row.size() != d) throw std::invalid_argument("determinant of a non-square matrix");

    std::unordered_map<unsigned long, Polynomial> memo;
    const unsigned long full = (1UL << d) - 1;
    // minor(mask) = det of rows [d - popcount(mask), d) restricted to the columns in mask
    auto minor = [&](auto&& self, unsigned long mask) -> Polynomial {
        if (mask == 0) return Polynomial::constant(nvars, 1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const std::size_t row = d - static_cast<std::size_t>(__builtin_popcountl(mask));
        Polynomial acc(nvars);
        int sign = 1;
        for (std::size_t col = 0; col < d; ++col) {
            if (!(mask & (1UL << col))) continue;
            const auto& entry = m[row][col];
            if (!entry.is_zero()) {
                Polynomial term = entry * self(self, mask & ~(1UL << col));
                if (sign > 0)
                    acc += term;
                else
                    acc -= term;
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return minor(minor, full);
}

}  // namespace lorentz
