#pragma once

#include "lorentz/lorentzian.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/symfunc.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lorentz {

/// s^dual = N(x^kappa s(1/x)): c x^a -> c/(kappa-a)! x^{kappa-a}.
inline Polynomial dual(const Polynomial& s, const ExponentVector& kappa) {
    if (kappa.size() != s.nvars()) throw std::invalid_argument("dual box has wrong length");
    Polynomial r(s.nvars());
    for (const auto& [a, c] : s.terms()) {
        if (!a.is_below(kappa))
            throw std::invalid_argument("box " + kappa.to_string() + " too small for monomial " + a.to_string());
        const auto b = kappa - a;
        r.add_term(b, c / Rational(factorial(b)));
    }
    return r;
}

/// Inverse of `dual`: f^wedge = x^kappa (N^{-1} f)(1/x), c x^b -> b! c x^{kappa-b}.
inline Polynomial wedge(const Polynomial& f, const ExponentVector& kappa) {
    if (kappa.size() != f.nvars()) throw std::invalid_argument("wedge box has wrong length");
    Polynomial r(f.nvars());
    for (const auto& [b, c] : f.terms()) {
        if (!b.is_below(kappa))
            throw std::invalid_argument("box " + kappa.to_string() + " too small for monomial " + b.to_string());
        r.add_term(kappa - b, c * Rational(factorial(b)));
    }
    return r;
}

/// Dually Lorentzian: dual(s, multidegree(s)) is Lorentzian.
inline LorentzVerdict is_dually_lorentzian(const Polynomial& s) {
    if (!s.is_homogeneous()) throw std::invalid_argument("dually Lorentzian check needs a homogeneous polynomial");
    return is_lorentzian(dual(s, s.multidegree()));
}

/// The constant-coefficient differential operator d_s = s(d/dx_1, ..., d/dx_n).
struct DiffOperator {
    Polynomial symbol_poly;
};

/// d_s f = sum_a lambda_a d^a f.
inline Polynomial apply_operator(const DiffOperator& op, const Polynomial& f) {
    op.symbol_poly.check_arity(f);
    Polynomial r(f.nvars());
    for (const auto& [a, lambda] : op.symbol_poly.terms())
        for (const auto& [b, c] : f.terms()) {
            if (!a.is_below(b)) continue;
            r.add_term(b - a, lambda * c * Rational(falling_factorial(b, a)));
        }
    return r;
}

inline Polynomial apply_operator(const Polynomial& s, const Polynomial& f) { return apply_operator(DiffOperator{s}, f); }

/// d_f s: the Lorentzian-operator action on a (dually Lorentzian) polynomial s.
/// Covers directional derivatives (f linear) and the derived polynomial
/// s^(1) (f = x_1 + ... + x_n).
inline Polynomial apply_lorentzian_operator_to_dual(const Polynomial& f, const Polynomial& s) {
    return apply_operator(DiffOperator{f}, s);
}

/// s(D_{w_1}, ..., D_{w_m}) f for directions w_j in the variables of f.
inline Polynomial apply_directional_operator(const Polynomial& s, std::span<const RationalVector> directions,
                                             const Polynomial& f) {
    if (directions.size() != s.nvars()) throw std::invalid_argument("need one direction per operator variable");
    Polynomial r(f.nvars());
    for (const auto& [a, lambda] : s.terms()) {
        Polynomial g = f;
        for (std::size_t j = 0; j < a.size(); ++j)
            for (int k = 0; k < a[j]; ++k) g = directional_derivative(g, directions[j]);
        r += lambda * g;
    }
    return r;
}

/// Symbol of d_s on R_gamma, a polynomial in (x_1..x_n, w_1..w_n):
/// sum_{b <= gamma} C(gamma, b) (d_s x^b) w^{gamma-b}.
inline Polynomial symbol_of(const DiffOperator& op, const ExponentVector& gamma) {
    const auto& s = op.symbol_poly;
    const std::size_t n = s.nvars();
    if (gamma.size() != n) throw std::invalid_argument("symbol box has wrong length");
    if (!s.multidegree().is_below(gamma)) throw std::invalid_argument("symbol box too small for operator");
    Polynomial sym(2 * n);
    for (const auto& b : box(gamma)) {
        const Polynomial image = apply_operator(op, Polynomial::monomial(b));
        const Rational weight(binomial(gamma, b));
        const auto wexp = gamma - b;
        for (const auto& [a, c] : image.terms()) sym.add_term(a.concat(wexp), weight * c);
    }
    return sym;
}

/// Closed catalog of linear operators whose duals are supported.
namespace op {
struct Identity {};
/// d^alpha
struct Derivative {
    ExponentVector alpha;
};
/// d_s
struct Differential {
    Polynomial symbol;
};
/// f -> x^beta f
struct MultiplyMonomial {
    ExponentVector beta;
};
struct TruncateLe {
    ExponentVector kappa;
};
struct TruncateGe {
    ExponentVector kappa;
};
/// N
struct Normalize {};
/// N^{-1}
struct Denormalize {};
/// x^b -> x^b / (kappa - b)!
struct BoxScaling {
    ExponentVector kappa;
};
}  // namespace op

using LinearOperator = std::variant<op::Identity, op::Derivative, op::Differential, op::MultiplyMonomial,
                                    op::TruncateLe, op::TruncateGe, op::Normalize, op::Denormalize, op::BoxScaling>;

inline Polynomial apply_linear(const LinearOperator& t, const Polynomial& f) {
    struct Visitor {
        const Polynomial& f;
        Polynomial operator()(const op::Identity&) const { return f; }
        Polynomial operator()(const op::Derivative& d) const { return partial(f, d.alpha); }
        Polynomial operator()(const op::Differential& d) const { return apply_operator(DiffOperator{d.symbol}, f); }
        Polynomial operator()(const op::MultiplyMonomial& m) const { return f * Polynomial::monomial(m.beta); }
        Polynomial operator()(const op::TruncateLe& t) const { return truncate_le(f, t.kappa); }
        Polynomial operator()(const op::TruncateGe& t) const { return truncate_ge(f, t.kappa); }
        Polynomial operator()(const op::Normalize&) const { return normalize(f); }
        Polynomial operator()(const op::Denormalize&) const { return denormalize(f); }
        Polynomial operator()(const op::BoxScaling& m) const {
            Polynomial r(f.nvars());
            for (const auto& [b, c] : f.terms()) {
                if (!b.is_below(m.kappa)) throw std::invalid_argument("box scaling outside its box");
                r.add_term(b, c / Rational(factorial(m.kappa - b)));
            }
            return r;
        }
    };
    return std::visit(Visitor{f}, t);
}

/// T^dual f = dual(T(wedge(f, kappa_in)), kappa_out).
inline Polynomial dual_operator_apply(const LinearOperator& t, const Polynomial& f, const ExponentVector& kappa_in,
                                      const ExponentVector& kappa_out) {
    const Polynomial image = apply_linear(t, wedge(f, kappa_in));
    if (!image.multidegree().is_below(kappa_out))
        throw std::invalid_argument("operator image leaves the output box " + kappa_out.to_string());
    return dual(image, kappa_out);
}

/// Co-symbol of T: the symbol of T^dual on R_kappa_in, in (x, u):
/// sum_{b <= kappa_in} C(kappa_in, b) T^dual(x^b) u^{kappa_in - b}.
inline Polynomial co_symbol(const LinearOperator& t, const ExponentVector& kappa_in, const ExponentVector& kappa_out) {
    const std::size_t n = kappa_in.size();
    Polynomial sym(2 * n);
    for (const auto& b : box(kappa_in)) {
        const Polynomial image = dual_operator_apply(t, Polynomial::monomial(b), kappa_in, kappa_out);
        const Rational weight(binomial(kappa_in, b));
        const auto uexp = kappa_in - b;
        for (const auto& [a, c] : image.terms()) sym.add_term(a.concat(uexp), weight * c);
    }
    return sym;
}

/// s^(j) by iterated derivatives: (1/j!) (d_1 + ... + d_n)^j s.
inline std::vector<Polynomial> derived_polys_by_derivatives(const Polynomial& s) {
    const int d = std::max(s.degree(), 0);
    const Polynomial ones = Polynomial::linear(RationalVector(s.nvars(), Rational(1)));
    std::vector<Polynomial> out;
    Polynomial cur = s;
    for (int j = 0; j <= d; ++j) {
        out.push_back(Rational(1, 1) / Rational(factorial(static_cast<unsigned>(j))) * cur);
        cur = apply_operator(DiffOperator{ones}, cur);
    }
    return out;
}

/// [s^(0), ..., s^(d)] with s(x_1+u, ..., x_n+u) = sum_j s^(j)(x) u^j. Computed
/// by substitution and collection of u-powers, then checked against the
/// iterated-derivative formula.
inline std::vector<Polynomial> derived_polys(const Polynomial& s) {
    if (!s.is_homogeneous()) throw std::invalid_argument("derived polynomials need a homogeneous polynomial");
    const std::size_t n = s.nvars();
    const int d = std::max(s.degree(), 0);
    RationalMatrix shift(n, RationalVector(n + 1, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        shift[i][i] = 1;
        shift[i][n] = 1;
    }
    const Polynomial shifted = substitute_linear(s, shift);
    std::vector<Polynomial> out(static_cast<std::size_t>(d) + 1, Polynomial(n));
    for (const auto& [a, c] : shifted.terms()) out[static_cast<std::size_t>(a[n])].add_term(a.slice(0, n), c);
    if (out != derived_polys_by_derivatives(s))
        throw std::logic_error("derived polynomials disagree between substitution and differentiation");
    return out;
}

/// f in variables (x_1..x_n, t): x^b t^k -> x^b e_k(t_1..t_k'), result in n + k' variables.
inline Polynomial polarize(const Polynomial& f, std::size_t k) {
    const std::size_t n = f.nvars() - 1;
    if (f.multidegree()[n] > static_cast<int>(k))
        throw std::invalid_argument("t-degree exceeds the polarization order");
    std::vector<Polynomial> e;
    e.push_back(Polynomial::constant(n + k, 1));
    for (std::size_t b = 1; b <= k; ++b) e.push_back(embed(elementary_symmetric(k, static_cast<int>(b)), n + k, n));
    Polynomial r(n + k);
    for (const auto& [a, c] : f.terms()) {
        const Polynomial x_part = Polynomial::monomial(ExponentVector(a.slice(0, n).concat(ExponentVector(k))), c);
        r += x_part * e[static_cast<std::size_t>(a[n])];
    }
    return r;
}

/// Factored Polya frequency data: mu_i = scale * e_i(roots).
struct PolyaSpec {
    Rational scale;
    RationalVector roots;

    PolyaSpec(Rational scale_, RationalVector roots_) : scale(std::move(scale_)), roots(std::move(roots_)) {
        if (scale <= 0) throw std::invalid_argument("Polya scale must be positive");
        for (const auto& a : roots)
            if (a < 0) throw std::invalid_argument("Polya roots must be non-negative");
    }

    Rational mu(int i) const { return scale * elementary_symmetric_value(roots, i); }
};

/// sum_i mu_i s^(i)(x) t^i in variables (x_1..x_n, t). mu_i vanishes for i
/// beyond the number of roots.
inline Polynomial polya_weighted(const Polynomial& s, const PolyaSpec& spec) {
    const std::size_t n = s.nvars();
    const auto derived = derived_polys(s);
    Polynomial r(n + 1);
    for (std::size_t i = 0; i < derived.size(); ++i) {
        const Rational mu = spec.mu(static_cast<int>(i));
        if (mu == 0) continue;
        auto tpow = ExponentVector(n + 1);
        tpow.set(n, static_cast<int>(i));
        r += mu * (embed(derived[i], n + 1) * Polynomial::monomial(tpow));
    }
    return r;
}

/// sum_i s^(i)(x) e_i(t_1..t_k)
inline Polynomial polarized_derived(const Polynomial& s, std::size_t k) {
    const std::size_t n = s.nvars();
    const auto derived = derived_polys(s);
    Polynomial in_t(n + 1);
    for (std::size_t i = 0; i < derived.size(); ++i) {
        auto tpow = ExponentVector(n + 1);
        tpow.set(n, static_cast<int>(i));
        in_t += embed(derived[i], n + 1) * Polynomial::monomial(tpow);
    }
    return polarize(in_t, k);
}

}  // namespace lorentz
