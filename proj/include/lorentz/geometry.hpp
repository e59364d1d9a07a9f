#pragma once

#include "lorentz/dual.hpp"
#include "lorentz/quadratic_form.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorentz {

/// n symmetric d x d forms.
class QuadFormTuple {
public:
    QuadFormTuple(std::size_t dim, std::vector<QuadraticForm> forms) : dim_(dim), forms_(std::move(forms)) {
        if (dim_ == 0) throw std::invalid_argument("form dimension must be positive");
        for (const auto& q : forms_)
            if (q.dim() != dim_) throw std::invalid_argument("forms of different dimension");
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return forms_.size(); }
    const std::vector<QuadraticForm>& forms() const noexcept { return forms_; }
    const QuadraticForm& operator[](std::size_t i) const { return forms_.at(i); }

private:
    std::size_t dim_;
    std::vector<QuadraticForm> forms_;
};

/// n axis-parallel boxes in R^d, box i with edge lengths edges[i][0..d-1].
class BoxFamily {
public:
    BoxFamily(std::size_t dim, std::vector<RationalVector> edges) : dim_(dim), edges_(std::move(edges)) {
        if (dim_ == 0) throw std::invalid_argument("box dimension must be positive");
        for (const auto& e : edges_) {
            if (e.size() != dim_) throw std::invalid_argument("box edge vector has wrong length");
            for (const auto& v : e)
                if (v < 0) throw std::invalid_argument("box edges must be non-negative");
        }
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<RationalVector>& edges() const noexcept { return edges_; }

private:
    std::size_t dim_;
    std::vector<RationalVector> edges_;
};

enum class AFVerdict { strict, equality, violated };

inline const char* to_string(AFVerdict v) {
    switch (v) {
        case AFVerdict::strict: return "strict";
        case AFVerdict::equality: return "equality";
        case AFVerdict::violated: return "violated";
    }
    return "?";
}

/// lhs = M(K,L)^2, rhs = M(K,K) M(L,L) for the mixed quantity M.
struct AFReport {
    Rational lhs;
    Rational rhs;
    Rational margin;
    AFVerdict verdict;
    /// on equality (mixed discriminants only): whether p = c q for a rational c
    std::optional<bool> proportional;
};

struct AFOptions {
    /// skip certifying s as dually Lorentzian
    bool assume_dually_lorentzian = false;
};

/// det(x_1 q_1 + ... + x_n q_n)
inline Polynomial det_polynomial(const QuadFormTuple& t) {
    if (t.size() == 0) throw std::invalid_argument("need at least one form");
    const std::size_t n = t.size();
    const std::size_t d = t.dim();
    std::vector<std::vector<Polynomial>> m(d, std::vector<Polynomial>(d, Polynomial(n)));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            RationalVector row(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = t[i](a, b);
            m[a][b] = Polynomial::linear(row);
        }
    return determinant(m, n);
}

/// alpha!/d! times the x^alpha coefficient of a degree-d polynomial: the
/// normalized mixed coefficient.
inline Rational mixed_coefficient(const Polynomial& p, const ExponentVector& alpha) {
    return p.coefficient(alpha) * Rational(factorial(alpha)) / Rational(factorial(static_cast<unsigned>(alpha.degree())));
}

/// D(q^alpha), |alpha| = d.
inline Rational mixed_discriminant(const QuadFormTuple& t, const ExponentVector& alpha) {
    if (alpha.size() != t.size()) throw std::invalid_argument("exponent length must equal the number of forms");
    if (alpha.degree() != static_cast<int>(t.dim()))
        throw std::invalid_argument("mixed discriminant needs |alpha| = " + std::to_string(t.dim()));
    return mixed_coefficient(det_polynomial(t), alpha);
}

/// D(q_1, ..., q_d) for exactly d forms.
inline Rational mixed_discriminant(const QuadFormTuple& t) {
    if (t.size() != t.dim()) throw std::invalid_argument("need exactly d forms");
    return mixed_discriminant(t, ExponentVector::filled(t.size(), 1));
}

namespace detail {

/// M(a, b, s(C)) = sum_alpha lambda_alpha M(a, b, C^alpha) from the volume-type
/// polynomial P in variables (a, b, C_1..C_n).
inline Rational mixed_pair(const Polynomial& big, const Polynomial& s, std::size_t a, std::size_t b) {
    Rational total = 0;
    for (const auto& [alpha, lambda] : s.terms()) {
        ExponentVector e = ExponentVector(2).concat(alpha);
        e.set(a, e[a] + 1);
        e.set(b, e[b] + 1);
        total += lambda * mixed_coefficient(big, e);
    }
    return total;
}

inline void check_auxiliary(const Polynomial& s, std::size_t bodies, std::size_t dim, const AFOptions& options) {
    if (s.is_zero()) throw std::invalid_argument("auxiliary polynomial must be non-zero");
    if (s.nvars() != bodies)
        throw std::invalid_argument("auxiliary polynomial has " + std::to_string(s.nvars()) + " variables but there are " +
                                    std::to_string(bodies) + " bodies");
    if (!s.is_homogeneous() || s.degree() + 2 != static_cast<int>(dim))
        throw std::invalid_argument("auxiliary polynomial must be homogeneous of degree " +
                                    std::to_string(static_cast<int>(dim) - 2));
    if (!options.assume_dually_lorentzian && !is_dually_lorentzian(s).is_lorentzian())
        throw std::invalid_argument("auxiliary polynomial is not dually Lorentzian");
}

inline AFReport af_report(const Polynomial& big, const Polynomial& s) {
    const Rational kl = mixed_pair(big, s, 0, 1);
    const Rational kk = mixed_pair(big, s, 0, 0);
    const Rational ll = mixed_pair(big, s, 1, 1);
    AFReport r{kl * kl, kk * ll, 0, AFVerdict::strict, std::nullopt};
    r.margin = r.lhs - r.rhs;
    r.verdict = r.margin > 0 ? AFVerdict::strict : r.margin == 0 ? AFVerdict::equality : AFVerdict::violated;
    return r;
}

inline RationalVector flatten(const QuadraticForm& q) {
    RationalVector v;
    for (const auto& row : q.entries()) v.insert(v.end(), row.begin(), row.end());
    return v;
}

}  // namespace detail

/// D(p, q, s(q_1..q_n))^2 against D(p, p, s(..)) D(q, q, s(..)). The variables
/// of s map to the forms positionally.
inline AFReport af_mixed_discriminant(const QuadraticForm& p, const QuadraticForm& q, const Polynomial& s,
                                      const QuadFormTuple& forms, const AFOptions& options = {}) {
    const std::size_t d = forms.dim();
    if (p.dim() != d || q.dim() != d) throw std::invalid_argument("p and q must match the form dimension");
    if (d < 2) throw std::invalid_argument("form dimension must be at least 2");
    detail::check_auxiliary(s, forms.size(), d, options);
    if (!is_positive_definite(q)) throw std::invalid_argument("q is not positive definite");
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (!is_positive_definite(forms[i]))
            throw std::invalid_argument("form " + std::to_string(i) + " is not positive definite");

    std::vector<QuadraticForm> all{p, q};
    all.insert(all.end(), forms.forms().begin(), forms.forms().end());
    AFReport r = detail::af_report(det_polynomial(QuadFormTuple(d, std::move(all))), s);
    if (r.verdict == AFVerdict::equality)
        r.proportional = proportionality_factor(detail::flatten(p), detail::flatten(q)).has_value();
    return r;
}

/// vol(x_1 B_1 + ... + x_n B_n) = prod_j (sum_i b_ij x_i)
inline Polynomial box_volume_polynomial(const BoxFamily& boxes) {
    const std::size_t n = boxes.size();
    if (n == 0) throw std::invalid_argument("need at least one box");
    Polynomial vol = Polynomial::constant(n, 1);
    for (std::size_t j = 0; j < boxes.dim(); ++j) {
        RationalVector row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = boxes.edges()[i][j];
        vol = vol * Polynomial::linear(row);
    }
    return vol;
}

/// V(K, L, s(C))^2 against V(K, K, s(C)) V(L, L, s(C)) with K, L boxes of the
/// family and the variables of s mapped to the family's boxes positionally.
/// Equality is reported as such; no equality characterization is attempted.
inline AFReport af_box_mixed_volume(std::size_t k_idx, std::size_t l_idx, const Polynomial& s, const BoxFamily& boxes,
                                    const AFOptions& options = {}) {
    const std::size_t d = boxes.dim();
    if (k_idx >= boxes.size() || l_idx >= boxes.size()) throw std::invalid_argument("box index out of range");
    if (d < 2) throw std::invalid_argument("box dimension must be at least 2");
    detail::check_auxiliary(s, boxes.size(), d, options);
    std::vector<RationalVector> edges{boxes.edges()[k_idx], boxes.edges()[l_idx]};
    edges.insert(edges.end(), boxes.edges().begin(), boxes.edges().end());
    return detail::af_report(box_volume_polynomial(BoxFamily(d, std::move(edges))), s);
}

/// V(B^alpha) for a box family, |alpha| = d.
inline Rational mixed_volume(const BoxFamily& boxes, const ExponentVector& alpha) {
    if (alpha.size() != boxes.size()) throw std::invalid_argument("exponent length must equal the number of boxes");
    if (alpha.degree() != static_cast<int>(boxes.dim()))
        throw std::invalid_argument("mixed volume needs |alpha| = " + std::to_string(boxes.dim()));
    return mixed_coefficient(box_volume_polynomial(boxes), alpha);
}

}  // namespace lorentz
