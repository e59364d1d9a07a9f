#pragma once

#include "lorentz/dual.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace lorentz {

/// Values v_0..v_d of a sequence indexed from zero.
struct ValueSequence {
    std::vector<Rational> values;
};

struct LogConcavityReport {
    bool log_concave = true;
    /// first j with v_j^2 < v_{j-1} v_{j+1}
    std::optional<std::size_t> violation;
    /// some v_j = 0 strictly between two non-zero entries
    bool internal_zeros = false;
};

namespace detail {

inline void check_nonnegative(std::span<const Rational> t) {
    for (const auto& v : t)
        if (v < 0) throw std::invalid_argument("evaluation point must be non-negative, got " + to_string(v));
}

}  // namespace detail

/// [s^(0)(t), ..., s^(d)(t)]
inline ValueSequence derived_sequence(const Polynomial& s, std::span<const Rational> t) {
    detail::check_nonnegative(t);
    if (t.size() != s.nvars()) throw std::invalid_argument("evaluation point has wrong length");
    ValueSequence seq;
    for (const auto& p : derived_polys(s)) seq.values.push_back(evaluate(p, t));
    return seq;
}

inline LogConcavityReport is_log_concave(const ValueSequence& seq) {
    LogConcavityReport r;
    const auto& v = seq.values;
    for (std::size_t j = 1; j + 1 < v.size(); ++j)
        if (v[j] * v[j] < v[j - 1] * v[j + 1]) {
            r.log_concave = false;
            r.violation = j;
            break;
        }
    std::optional<std::size_t> first, last;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) {
            if (!first) first = j;
            last = j;
        }
    if (first)
        for (std::size_t j = *first; j < *last; ++j)
            if (v[j] == 0) r.internal_zeros = true;
    return r;
}

/// sum_j C(d, j) s^(j)(t) u^j v^{d-j} in variables (u, v).
inline Polynomial binomial_weighted_bivariate(const Polynomial& s, std::span<const Rational> t) {
    const auto seq = derived_sequence(s, t);
    const int d = static_cast<int>(seq.values.size()) - 1;
    Polynomial r(2);
    for (int j = 0; j <= d; ++j)
        r.add_term(ExponentVector{j, d - j},
                   Rational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j))) *
                       seq.values[static_cast<std::size_t>(j)]);
    return r;
}

/// sum_{|alpha| = d} prod_j C(d, alpha_j) s_j^(alpha_j)(t_j) u^alpha in r = |s_list| variables.
inline Polynomial multi_derived_form(std::span<const Polynomial> s_list, std::span<const RationalVector> t_list) {
    if (s_list.empty()) throw std::invalid_argument("need at least one polynomial");
    if (s_list.size() != t_list.size()) throw std::invalid_argument("need one evaluation point per polynomial");
    const std::size_t r = s_list.size();
    int d = -1;
    for (const auto& s : s_list) {
        if (s.is_zero()) continue;
        if (d >= 0 && s.degree() != d) throw std::invalid_argument("polynomials must share one degree");
        d = s.degree();
    }
    Polynomial form(r);
    if (d < 0) return form;
    for (const auto& s : s_list)
        if (s.is_zero()) return form;

    std::vector<std::vector<Rational>> weighted(r);
    for (std::size_t j = 0; j < r; ++j) {
        const auto seq = derived_sequence(s_list[j], t_list[j]);
        for (int a = 0; a <= d; ++a)
            weighted[j].push_back(Rational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(a))) *
                                  seq.values[static_cast<std::size_t>(a)]);
    }
    for (const auto& alpha : compositions(r, d)) {
        Rational c = 1;
        for (std::size_t j = 0; j < r && c != 0; ++j) c *= weighted[j][static_cast<std::size_t>(alpha[j])];
        form.add_term(alpha, c);
    }
    return form;
}

}  // namespace lorentz
