#pragma once

#include "lorentz/polynomial.hpp"
#include "lorentz/quadratic_form.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

namespace lorentz {

enum class LorentzStatus { strictly_lorentzian, lorentzian, not_lorentzian };

inline const char* to_string(LorentzStatus s) {
    switch (s) {
        case LorentzStatus::strictly_lorentzian: return "strictly_lorentzian";
        case LorentzStatus::lorentzian: return "lorentzian";
        case LorentzStatus::not_lorentzian: return "not_lorentzian";
    }
    return "?";
}

namespace witness {

struct NegativeCoefficient {
    ExponentVector exponent;
    Rational coefficient;
};

/// Two support monomials of different total degree.
struct NotHomogeneous {
    ExponentVector first;
    ExponentVector second;
};

/// alpha, beta in the support with alpha_i > beta_i and no repairing index j.
struct Exchange {
    ExponentVector alpha;
    ExponentVector beta;
    std::size_t i;
};

/// (-1)^{|I|} det M_I > 0 for the form d^alpha f.
struct Minor {
    ExponentVector alpha;
    std::vector<std::size_t> subset;
    Rational det;
};

/// d^alpha f has the wrong inertia: more than one positive eigenvalue (not
/// Lorentzian) or not exactly (+,-,...,-) (not strict).
struct Inertia {
    ExponentVector alpha;
    Signature signature;
};

/// A degree-d monomial (or variable, in degree 1) absent from the support.
struct MissingMonomial {
    ExponentVector exponent;
};

}  // namespace witness

using Witness = std::variant<witness::NegativeCoefficient, witness::NotHomogeneous, witness::Exchange, witness::Minor,
                             witness::Inertia, witness::MissingMonomial>;

/// Outcome of a Lorentzian / strictly Lorentzian check.
///
/// A not_lorentzian verdict always carries a witness. A strict check that
/// finds a Lorentzian but non-strict polynomial reports status lorentzian with
/// the strictness failure as witness.
struct LorentzVerdict {
    LorentzStatus status = LorentzStatus::lorentzian;
    std::optional<Witness> witness;

    bool is_lorentzian() const noexcept { return status != LorentzStatus::not_lorentzian; }
    bool is_strict() const noexcept { return status == LorentzStatus::strictly_lorentzian; }

    static LorentzVerdict fail(Witness w) { return {LorentzStatus::not_lorentzian, std::move(w)}; }
};

struct ExchangeCheck {
    bool holds = true;
    std::optional<witness::Exchange> violation;
};

/// M-convexity (exchange property) of a set of exponent vectors. The set is
/// scanned in graded lexicographic order; the first failing (alpha, beta, i) is
/// reported.
inline ExchangeCheck is_m_convex(std::span<const ExponentVector> set) {
    if (set.empty()) return {};
    const std::size_t n = set.front().size();
    std::unordered_set<ExponentVector, ExponentHash> lookup(set.begin(), set.end());
    for (const auto& a : set) {
        if (a.size() != n) throw std::invalid_argument("exponent vectors of different length");
    }
    std::vector<int> tmp(n);
    for (const auto& a : set) {
        for (const auto& b : set) {
            if (a == b) continue;
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i] <= b[i]) continue;
                bool repaired = false;
                for (std::size_t j = 0; j < n && !repaired; ++j) {
                    if (a[j] >= b[j]) continue;
                    tmp = a.entries();
                    tmp[i] -= 1;
                    tmp[j] += 1;
                    repaired = lookup.contains(ExponentVector(tmp));
                }
                if (!repaired) return {false, witness::Exchange{a, b, i}};
            }
        }
    }
    return {};
}

namespace detail {

inline std::optional<Witness> basic_shape_failure(const Polynomial& f) {
    for (const auto& [a, c] : f.terms())
        if (c < 0) return witness::NegativeCoefficient{a, c};
    if (!f.is_homogeneous()) return witness::NotHomogeneous{f.terms().begin()->first, f.terms().rbegin()->first};
    return std::nullopt;
}

/// Positive-eigenvalue test of d^alpha f for every |alpha| = d-2.
inline std::optional<Witness> hessian_failure(const Polynomial& f) {
    const int d = f.degree();
    const std::size_t n = f.nvars();
    for (const auto& alpha : compositions(n, d - 2)) {
        const QuadraticForm q = hessian_form(f, alpha);
        if (q.has_negative_entry()) {
            const Signature sig = signature_of(q);
            if (sig.positives > 1) return witness::Inertia{alpha, sig};
            continue;
        }
        MinorCheck mc = minor_sign_check(q);
        if (!mc.holds) return witness::Minor{alpha, std::move(mc.subset), mc.det};
    }
    return std::nullopt;
}

}  // namespace detail

/// Decides whether f is Lorentzian. Degree <= 1: non-negative coefficients.
/// Degree >= 2: non-negative coefficients, homogeneous, M-convex support and
/// every d^alpha f with |alpha| = d-2 has at most one positive eigenvalue. The
/// zero polynomial is accepted.
inline LorentzVerdict is_lorentzian(const Polynomial& f) {
    if (f.is_zero()) return {};
    if (auto w = detail::basic_shape_failure(f)) return LorentzVerdict::fail(*w);
    if (f.degree() <= 1) return {};
    const auto support = f.support();
    if (auto ex = is_m_convex(support); !ex.holds) return LorentzVerdict::fail(*ex.violation);
    if (auto w = detail::hessian_failure(f)) return LorentzVerdict::fail(*w);
    return {};
}

/// Strictly Lorentzian: full support in degree d and every d^alpha f of
/// signature exactly (+,-,...,-). Degree 0: positive constant; degree 1: every
/// variable has a positive coefficient.
inline LorentzVerdict is_strictly_lorentzian(const Polynomial& f) {
    const std::size_t n = f.nvars();
    LorentzVerdict base = is_lorentzian(f);
    if (!base.is_lorentzian()) return base;
    auto not_strict = [](Witness w) { return LorentzVerdict{LorentzStatus::lorentzian, std::move(w)}; };
    if (f.is_zero()) return not_strict(witness::MissingMonomial{ExponentVector(n)});
    const int d = f.degree();
    for (const auto& a : compositions(n, d))
        if (f.coefficient(a) == 0) return not_strict(witness::MissingMonomial{a});
    if (d >= 2) {
        for (const auto& alpha : compositions(n, d - 2)) {
            const Signature sig = signature_of(hessian_form(f, alpha));
            if (!sig.is_lorentzian_nondegenerate()) return not_strict(witness::Inertia{alpha, sig});
        }
    }
    return {LorentzStatus::strictly_lorentzian, std::nullopt};
}

/// Finitely generated cone: the open cone spanned by non-negative combinations
/// of the generators (the columns of A).
class ConeSpec {
public:
    ConeSpec(std::size_t ambient_dim, std::vector<RationalVector> generators)
        : n_(ambient_dim), gens_(std::move(generators)) {
        if (gens_.empty()) throw std::invalid_argument("cone needs at least one generator");
        for (const auto& g : gens_)
            if (g.size() != n_) throw std::invalid_argument("cone generator has wrong length");
    }
    static ConeSpec orthant(std::size_t n) {
        std::vector<RationalVector> g(n, RationalVector(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
        return ConeSpec(n, std::move(g));
    }

    std::size_t ambient_dim() const noexcept { return n_; }
    const std::vector<RationalVector>& generators() const noexcept { return gens_; }

    /// n x m matrix with the generators as columns.
    RationalMatrix matrix() const {
        RationalMatrix a(n_, RationalVector(gens_.size()));
        for (std::size_t j = 0; j < gens_.size(); ++j)
            for (std::size_t i = 0; i < n_; ++i) a[i][j] = gens_[j][i];
        return a;
    }

    /// Non-negative combination of the generators.
    RationalVector combine(std::span<const Rational> weights) const {
        if (weights.size() != gens_.size()) throw std::invalid_argument("wrong number of cone weights");
        RationalVector v(n_, Rational(0));
        for (std::size_t j = 0; j < gens_.size(); ++j)
            for (std::size_t i = 0; i < n_; ++i) v[i] += weights[j] * gens_[j][i];
        return v;
    }

private:
    std::size_t n_;
    std::vector<RationalVector> gens_;
};

/// C-Lorentzian for the cone generated by `cone`: f(Ax) is Lorentzian, with A
/// the generator matrix. Lower-dimensional generator sets are accepted and
/// decide the property for the cone they generate.
inline LorentzVerdict is_c_lorentzian(const Polynomial& f, const ConeSpec& cone) {
    if (cone.ambient_dim() != f.nvars()) throw std::invalid_argument("cone generators have wrong length");
    if (!f.is_homogeneous()) throw std::invalid_argument("C-Lorentzian check needs a homogeneous polynomial");
    return is_lorentzian(substitute_linear(f, cone.matrix()));
}

/// D_{v_1} ... D_{v_k} f
inline Polynomial contract(const Polynomial& f, std::span<const RationalVector> directions) {
    Polynomial g = f;
    for (const auto& v : directions) g = directional_derivative(g, v);
    return g;
}

struct ConeFormReport {
    /// D_{v_1} ... D_{v_{d-2}} f as a symmetric matrix.
    QuadraticForm form;
    Signature signature;
    bool exactly_one_positive;
    /// exactly one positive eigenvalue and no zero eigenvalue
    bool nondegenerate_hyperbolic;
    /// D_{g_1} ... D_{g_d} f > 0 for every multiset of d generators.
    bool generator_contractions_positive;
};

/// Hodge-Riemann type data of f along v_1..v_{d-2}.
inline ConeFormReport c_positivity_and_hr(const Polynomial& f, const ConeSpec& cone,
                                         std::span<const RationalVector> v_list) {
    const int d = f.degree();
    if (d < 2) throw std::invalid_argument("cone form report needs degree >= 2");
    if (!f.is_homogeneous()) throw std::invalid_argument("cone form report needs a homogeneous polynomial");
    if (v_list.size() != static_cast<std::size_t>(d - 2))
        throw std::invalid_argument("expected " + std::to_string(d - 2) + " directions, got " +
                                    std::to_string(v_list.size()));
    if (cone.ambient_dim() != f.nvars()) throw std::invalid_argument("cone generators have wrong length");
    QuadraticForm form = quadratic_form_of(contract(f, v_list));
    Signature sig = signature_of(form);

    // D_{g_{i_1}} ... D_{g_{i_d}} f is a positive multiple of the coefficient
    // of y^beta in f(Ay).
    const Polynomial pulled = substitute_linear(f, cone.matrix());
    bool positive = true;
    for (const auto& beta : compositions(cone.generators().size(), d))
        if (pulled.coefficient(beta) <= 0) {
            positive = false;
            break;
        }
    return {std::move(form), sig, sig.positives == 1, sig.is_lorentzian_nondegenerate(), positive};
}

/// D_{v_1} ... D_{v_d} f (a constant) for d = deg f directions.
inline Rational full_contraction(const Polynomial& f, std::span<const RationalVector> directions) {
    if (directions.size() != static_cast<std::size_t>(f.degree()))
        throw std::invalid_argument("full contraction needs deg f directions");
    return contract(f, directions).coefficient(ExponentVector(f.nvars()));
}

}  // namespace lorentz
