#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lorentz {

/// Exact rational; always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// k!, memoized for the lifetime of the process.
inline Integer factorial(unsigned k) {
    static std::mutex mutex;
    static std::vector<Integer> table{Integer(1)};
    std::lock_guard lock(mutex);
    while (table.size() <= k) {
        table.push_back(table.back() * static_cast<unsigned long>(table.size()));
    }
    return table[k];
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

/// Parses "p" or "p/q" with an optional leading sign. No decimals.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return Integer(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return Rational(to_int(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (to_int(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return make_rational(to_int(num), to_int(den));
}

}  // namespace lorentz
