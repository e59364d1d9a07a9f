#pragma once

// Text form of polynomials: terms separated by + or -, each term a product of
// rational numbers and variables with optional ^exponent, e.g.
// "2*x1^2 + 7*x1*x2 - 1/2*x2^2".

#include "lorentz/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lorentz {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::invalid_argument("at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

struct ParseOptions {
    /// Variable count for x1..xn input; inferred from the highest index when absent.
    std::optional<std::size_t> nvars;
    /// Explicit variable order for named input. Empty means alphabetical.
    std::vector<std::string> names;
};

namespace detail {

struct RawFactor {
    std::string name;
    int exponent;
    std::size_t offset;
};

struct RawTerm {
    Rational coefficient;
    std::vector<RawFactor> factors;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : s_(text) {}

    std::vector<RawTerm> terms() {
        std::vector<RawTerm> out;
        skip();
        if (at_end()) throw ParseError(pos_, "empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = take() == '-' ? -1 : 1;
                skip();
            } else if (!first) {
                throw ParseError(pos_, std::string("expected '+' or '-', found '") + peek() + "'");
            }
            RawTerm t = term();
            if (sign < 0) t.coefficient = -t.coefficient;
            out.push_back(std::move(t));
            first = false;
        }
        return out;
    }

private:
    RawTerm term() {
        RawTerm t{1, {}};
        while (true) {
            skip();
            if (at_end()) throw ParseError(pos_, "expected a number or variable");
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.coefficient *= number();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.factors.push_back(variable());
            } else if (c == '(') {
                throw ParseError(pos_, "parentheses are not supported");
            } else {
                throw ParseError(pos_, std::string("unexpected character '") + c + "'");
            }
            skip();
            if (!at_end() && peek() == '*') {
                take();
                continue;
            }
            return t;
        }
    }

    Rational number() {
        Integer num(digits());
        Integer den = 1;
        skip();
        if (!at_end() && peek() == '/') {
            take();
            skip();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(pos_, "expected a denominator");
            const std::size_t dpos = pos_;
            den = Integer(digits());
            if (den == 0) throw ParseError(dpos, "zero denominator");
        }
        return make_rational(num, den);
    }

    RawFactor variable() {
        const std::size_t start = pos_;
        std::string name;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += take();
        skip();
        int e = 1;
        if (!at_end() && peek() == '^') {
            take();
            skip();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(pos_, "expected a non-negative integer exponent");
            const std::size_t epos = pos_;
            const std::string d = digits();
            if (d.size() > 6) throw ParseError(epos, "exponent too large");
            e = std::stoi(d);
        }
        return {name, e, start};
    }

    std::string digits() {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += take();
        return d;
    }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char take() { return s_[pos_++]; }

    std::string_view s_;
    std::size_t pos_ = 0;
};

/// Index k of a name "xk" with k >= 1, if it has that shape.
inline std::optional<std::size_t> indexed_variable(const std::string& name) {
    if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return std::nullopt;
    std::size_t k = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        if (i > 7) return std::nullopt;
        k = k * 10 + static_cast<std::size_t>(name[i] - '0');
    }
    return k;
}

}  // namespace detail

/// Parses the text form. Throws ParseError with the byte offset of the problem.
inline Polynomial parse_polynomial(std::string_view text, const ParseOptions& options = {}) {
    const auto raw = detail::Lexer(text).terms();

    std::map<std::string, std::size_t> index;
    std::size_t nvars = 0;
    if (!options.names.empty()) {
        for (std::size_t i = 0; i < options.names.size(); ++i)
            if (!index.emplace(options.names[i], i).second)
                throw std::invalid_argument("variable name listed twice: " + options.names[i]);
        nvars = options.names.size();
        for (const auto& t : raw)
            for (const auto& f : t.factors)
                if (!index.contains(f.name)) throw ParseError(f.offset, "unknown variable '" + f.name + "'");
    } else {
        bool all_indexed = true;
        std::size_t max_index = 0;
        std::set<std::string> seen;
        for (const auto& t : raw)
            for (const auto& f : t.factors) {
                seen.insert(f.name);
                if (auto k = detail::indexed_variable(f.name))
                    max_index = std::max(max_index, *k);
                else
                    all_indexed = false;
            }
        if (all_indexed) {
            nvars = std::max<std::size_t>(max_index, 1);
            if (options.nvars) {
                if (*options.nvars < max_index)
                    throw std::invalid_argument("polynomial uses x" + std::to_string(max_index) + " but only " +
                                                std::to_string(*options.nvars) + " variables were requested");
                nvars = *options.nvars;
            }
            for (std::size_t k = 1; k <= nvars; ++k) index["x" + std::to_string(k)] = k - 1;
        } else {
            std::size_t i = 0;
            for (const auto& name : seen) index[name] = i++;
            nvars = seen.size();
            if (options.nvars && *options.nvars != nvars)
                throw std::invalid_argument("named polynomial has " + std::to_string(nvars) + " variables, not " +
                                            std::to_string(*options.nvars));
        }
    }
    if (nvars == 0) nvars = options.nvars.value_or(1);

    Polynomial p(nvars);
    for (const auto& t : raw) {
        std::vector<int> e(nvars, 0);
        for (const auto& f : t.factors) e[index.at(f.name)] += f.exponent;
        p.add_term(ExponentVector(std::move(e)), t.coefficient);
    }
    return p;
}

/// Variable names x1..xn.
inline std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

/// "2*x1^2 + 7*x1*x2 + 3*x2^2", "-1/2*x1", "0". Terms in graded lexicographic
/// order, largest first.
inline std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names = {}) {
    const auto vars = names.empty() ? default_names(p.nvars()) : names;
    if (vars.size() != p.nvars()) throw std::invalid_argument("wrong number of variable names");
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [a, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += vars[i];
            if (a[i] > 1) mono += '^' + std::to_string(a[i]);
        }
        if (mono.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + '*' + mono;
    }
    return out;
}

}  // namespace lorentz
