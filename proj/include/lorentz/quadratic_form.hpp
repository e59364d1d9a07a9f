#pragma once

#include "lorentz/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorentz {

/// Symmetric matrix M representing q(x) = x^T M x.
class QuadraticForm {
public:
    explicit QuadraticForm(std::size_t dim) : m_(dim, RationalVector(dim, Rational(0))) {
        if (dim == 0) throw std::invalid_argument("quadratic form of dimension zero");
    }
    explicit QuadraticForm(RationalMatrix entries) : m_(std::move(entries)) {
        if (m_.empty()) throw std::invalid_argument("quadratic form of dimension zero");
        for (const auto& row : m_)
            if (row.size() != m_.size()) throw std::invalid_argument("quadratic form matrix is not square");
        for (std::size_t i = 0; i < m_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (m_[i][j] != m_[j][i]) throw std::invalid_argument("quadratic form matrix is not symmetric");
    }
    static QuadraticForm identity(std::size_t dim) {
        QuadraticForm q(dim);
        for (std::size_t i = 0; i < dim; ++i) q.m_[i][i] = 1;
        return q;
    }
    static QuadraticForm diagonal(std::span<const Rational> d) {
        QuadraticForm q(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) q.m_[i][i] = d[i];
        return q;
    }

    std::size_t dim() const noexcept { return m_.size(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
    const RationalMatrix& entries() const noexcept { return m_; }

    /// Sets entries (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, const Rational& v) {
        m_.at(i).at(j) = v;
        m_.at(j).at(i) = v;
    }

    /// q(x, y) = x^T M y
    Rational bilinear(std::span<const Rational> x, std::span<const Rational> y) const {
        if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("vector length does not match form");
        Rational s = 0;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i] == 0) continue;
            Rational row = 0;
            for (std::size_t j = 0; j < dim(); ++j) row += m_[i][j] * y[j];
            s += x[i] * row;
        }
        return s;
    }
    Rational value(std::span<const Rational> x) const { return bilinear(x, x); }

    RationalMatrix principal_submatrix(std::span<const std::size_t> index) const {
        RationalMatrix s(index.size(), RationalVector(index.size()));
        for (std::size_t a = 0; a < index.size(); ++a)
            for (std::size_t b = 0; b < index.size(); ++b) s[a][b] = m_[index[a]][index[b]];
        return s;
    }

    bool has_negative_entry() const {
        for (const auto& row : m_)
            for (const auto& v : row)
                if (v < 0) return true;
        return false;
    }

    QuadraticForm operator+(const QuadraticForm& o) const {
        check_dim(o);
        QuadraticForm r(*this);
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) r.m_[i][j] += o.m_[i][j];
        return r;
    }
    friend QuadraticForm operator*(const Rational& k, QuadraticForm q) {
        for (auto& row : q.m_)
            for (auto& v : row) v *= k;
        return q;
    }
    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

private:
    void check_dim(const QuadraticForm& o) const {
        if (o.dim() != dim()) throw std::invalid_argument("quadratic forms of different dimension");
    }

    RationalMatrix m_;
};

/// Inertia (counts of positive, negative and zero eigenvalues).
struct Signature {
    std::size_t positives = 0;
    std::size_t negatives = 0;
    std::size_t zeros = 0;

    std::size_t dim() const noexcept { return positives + negatives + zeros; }
    /// (+,-,...,-) with no zero eigenvalue.
    bool is_lorentzian_nondegenerate() const noexcept { return positives == 1 && zeros == 0; }
    friend bool operator==(const Signature&, const Signature&) = default;
    std::string to_string() const {
        return "(" + std::to_string(positives) + "," + std::to_string(negatives) + "," + std::to_string(zeros) + ")";
    }
};

/// Exact determinant by Gaussian elimination over the rationals.
inline Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

/// Symmetric matrix of a quadratic form f: diagonal c_{2e_i}, off-diagonal c_{e_i+e_j}/2.
inline QuadraticForm quadratic_form_of(const Polynomial& f) {
    if (!f.is_zero() && (f.degree() != 2 || !f.is_homogeneous()))
        throw std::invalid_argument("quadratic_form_of needs a homogeneous polynomial of degree 2");
    const std::size_t n = f.nvars();
    QuadraticForm q(n);
    for (const auto& [a, c] : f.terms()) {
        std::size_t i = n, j = n;
        for (std::size_t k = 0; k < n; ++k) {
            if (a[k] == 2) i = j = k;
            if (a[k] == 1) (i == n ? i : j) = k;
        }
        if (i == j)
            q.set(i, i, c);
        else
            q.set(i, j, c / 2);
    }
    return q;
}

/// quadratic_form_of(partial(f, alpha)) for |alpha| = deg f - 2, read off the
/// coefficients of f directly without forming the derivative.
inline QuadraticForm hessian_form(const Polynomial& f, const ExponentVector& alpha) {
    const std::size_t n = f.nvars();
    QuadraticForm q(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            auto gamma = ExponentVector::unit(n, i) + ExponentVector::unit(n, j);
            auto beta = alpha + gamma;
            const Rational c = f.coefficient(beta);
            if (c == 0) continue;
            // coefficient of x^gamma in d^alpha f is c * beta!/gamma!
            Rational coeff = c * Rational(falling_factorial(beta, alpha));
            q.set(i, j, i == j ? coeff : coeff / 2);
        }
    }
    return q;
}

struct MinorCheck {
    bool holds = true;
    /// First violating index set (0-based, canonical order: by size, then lexicographic).
    std::vector<std::size_t> subset;
    /// det M_I of the violating subset.
    Rational det;
};

/// Index subsets of {0..n-1} ordered by size, then lexicographically.
inline std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> cur(k);
        for (std::size_t i = 0; i < k; ++i) cur[i] = i;
        while (true) {
            out.push_back(cur);
            std::size_t i = k;
            while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++cur[i - 1];
            for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
        }
    }
    return out;
}

/// For a form with non-negative entries: true iff (-1)^{|I|} det M_I <= 0 for
/// every index set I, which is equivalent to at most one positive eigenvalue.
/// Throws std::domain_error if an entry is negative.
inline MinorCheck minor_sign_check(const QuadraticForm& m) {
    if (m.has_negative_entry()) throw std::domain_error("minor sign criterion needs non-negative entries");
    for (const auto& subset : subsets_by_size(m.dim())) {
        Rational det = determinant(m.principal_submatrix(subset));
        const bool odd = subset.size() % 2 == 1;
        if ((odd ? -det : det) > 0) return {false, subset, det};
    }
    return {};
}

/// Exact inertia by symmetric congruence diagonalization. A vanishing diagonal
/// with a non-zero off-diagonal entry a is split off as the block [[0,a],[a,0]],
/// which contributes one positive and one negative eigenvalue.
inline Signature signature_of(const QuadraticForm& form) {
    RationalMatrix m = form.entries();
    Signature sig;
    while (!m.empty()) {
        const std::size_t n = m.size();
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv < n) {
            const Rational p = m[piv][piv];
            (p > 0 ? sig.positives : sig.negatives) += 1;
            RationalMatrix next;
            next.reserve(n - 1);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == piv) continue;
                RationalVector row;
                row.reserve(n - 1);
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == piv) continue;
                    row.push_back(m[i][j] - m[i][piv] * m[piv][j] / p);
                }
                next.push_back(std::move(row));
            }
            m = std::move(next);
            continue;
        }
        std::size_t bi = n, bj = n;
        for (std::size_t i = 0; i < n && bi == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (m[i][j] != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
        if (bi == n) {
            sig.zeros += n;
            break;
        }
        // Schur complement of the hyperbolic block B = [[0,a],[a,0]]; B^{-1} = [[0,1/a],[1/a,0]].
        const Rational a = m[bi][bj];
        sig.positives += 1;
        sig.negatives += 1;
        RationalMatrix next;
        next.reserve(n - 2);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == bi || i == bj) continue;
            RationalVector row;
            row.reserve(n - 2);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == bi || j == bj) continue;
                // C B^{-1} C^T with C rows (m[i][bi], m[i][bj])
                Rational corr = (m[i][bi] * m[bj][j] + m[i][bj] * m[bi][j]) / a;
                row.push_back(m[i][j] - corr);
            }
            next.push_back(std::move(row));
        }
        m = std::move(next);
    }
    return sig;
}

/// All leading principal minors strictly positive.
inline bool is_positive_definite(const QuadraticForm& q) {
    for (std::size_t k = 1; k <= q.dim(); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        if (determinant(q.principal_submatrix(idx)) <= 0) return false;
    }
    return true;
}

/// x = c*y for some rational c (y non-zero).
inline std::optional<Rational> proportionality_factor(std::span<const Rational> x, std::span<const Rational> y) {
    if (x.size() != y.size()) throw std::invalid_argument("vectors of different length");
    std::size_t k = 0;
    while (k < y.size() && y[k] == 0) ++k;
    if (k == y.size()) return std::nullopt;
    const Rational c = x[k] / y[k];
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != c * y[i]) return std::nullopt;
    return c;
}

enum class HodgeOutcome {
    holds_strict,
    equality_proportional,
    /// Equality without proportionality; only possible for a degenerate form.
    equality_not_proportional,
    violated,
};

inline const char* to_string(HodgeOutcome o) {
    switch (o) {
        case HodgeOutcome::holds_strict: return "holds_strict";
        case HodgeOutcome::equality_proportional: return "equality_proportional";
        case HodgeOutcome::equality_not_proportional: return "equality_not_proportional";
        case HodgeOutcome::violated: return "violated";
    }
    return "?";
}

struct HodgeReport {
    HodgeOutcome outcome;
    /// q(x,y)^2 - q(x) q(y)
    Rational discriminant;
};

/// Reverse Cauchy-Schwarz q(x,y)^2 >= q(x) q(y) for q(y) > 0.
inline HodgeReport hodge_inequality(const QuadraticForm& m, std::span<const Rational> x, std::span<const Rational> y) {
    const Rational qy = m.value(y);
    if (qy <= 0) throw std::domain_error("hodge inequality needs q(y) > 0");
    const Rational qxy = m.bilinear(x, y);
    const Rational disc = qxy * qxy - m.value(x) * qy;
    if (disc > 0) return {HodgeOutcome::holds_strict, disc};
    if (disc < 0) return {HodgeOutcome::violated, disc};
    if (proportionality_factor(x, y)) return {HodgeOutcome::equality_proportional, disc};
    return {HodgeOutcome::equality_not_proportional, disc};
}

}  // namespace lorentz
