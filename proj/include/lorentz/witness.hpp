#pragma once

// Re-verification of Lorentzian witnesses along a second code path: explicit
// derivatives, the coefficient-reading quadratic form and Leibniz determinants.

#include "lorentz/lorentzian.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>
#include <variant>
#include <vector>

namespace lorentz {

/// Determinant by the Leibniz permutation sum. Exponential; for small minors only.
inline Rational leibniz_determinant(const RationalMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational sum = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational prod = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m[i][perm[i]];
        sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

/// True iff the witness genuinely shows the failure it claims for f.
inline bool verify_witness(const Polynomial& f, const Witness& w) {
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, witness::NegativeCoefficient>) {
                return v.coefficient < 0 && f.coefficient(v.exponent) == v.coefficient;
            } else if constexpr (std::is_same_v<T, witness::NotHomogeneous>) {
                return f.coefficient(v.first) != 0 && f.coefficient(v.second) != 0 &&
                       v.first.degree() != v.second.degree();
            } else if constexpr (std::is_same_v<T, witness::Exchange>) {
                if (f.coefficient(v.alpha) == 0 || f.coefficient(v.beta) == 0) return false;
                if (v.alpha[v.i] <= v.beta[v.i]) return false;
                for (std::size_t j = 0; j < f.nvars(); ++j) {
                    if (v.alpha[j] >= v.beta[j]) continue;
                    std::vector<int> e = v.alpha.entries();
                    e[v.i] -= 1;
                    e[j] += 1;
                    if (f.coefficient(ExponentVector(e)) != 0) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, witness::Minor>) {
                if (v.alpha.degree() != f.degree() - 2) return false;
                const QuadraticForm q = quadratic_form_of(partial(f, v.alpha));
                const Rational det = leibniz_determinant(q.principal_submatrix(v.subset));
                if (det != v.det) return false;
                return (v.subset.size() % 2 ? -det : det) > 0;
            } else if constexpr (std::is_same_v<T, witness::Inertia>) {
                if (v.alpha.degree() != f.degree() - 2) return false;
                const Signature sig = signature_of(quadratic_form_of(partial(f, v.alpha)));
                return sig == v.signature && !sig.is_lorentzian_nondegenerate();
            } else {
                static_assert(std::is_same_v<T, witness::MissingMonomial>);
                if (f.is_zero()) return true;
                return f.coefficient(v.exponent) == 0 &&
                       v.exponent.degree() == f.degree();
            }
        },
        w);
}

}  // namespace lorentz
