#pragma once

// JSON forms of polynomials, verdicts, form tuples and box families.
// Rationals travel as strings "p" or "p/q"; plain JSON integers are accepted
// on input.

#include "lorentz/geometry.hpp"
#include "lorentz/lorentzian.hpp"

#include "json.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace lorentz {

using json = nlohmann::ordered_json;

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    throw std::invalid_argument("expected a rational as a string or an integer, got " + j.dump());
}

inline json to_json(const ExponentVector& a) { return a.entries(); }

inline json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [a, c] : p.terms()) terms.push_back({{"exp", a.entries()}, {"coef", to_string(c)}});
    return {{"nvars", p.nvars()}, {"terms", terms}};
}

inline Polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON needs \"nvars\" and \"terms\"");
    const auto n = j.at("nvars").get<std::size_t>();
    Polynomial p(n);
    for (const auto& t : j.at("terms")) {
        auto e = t.at("exp").get<std::vector<int>>();
        if (e.size() != n) throw std::invalid_argument("term exponent has wrong length");
        p.add_term(ExponentVector(std::move(e)), rational_from_json(t.at("coef")));
    }
    return p;
}

/// Polynomial envelope tagged as a differential-operator symbol.
inline json operator_to_json(const Polynomial& symbol) {
    json j = polynomial_to_json(symbol);
    j["role"] = "operator";
    return j;
}

inline json witness_to_json(const Witness& w) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, witness::NegativeCoefficient>) {
                return {{"kind", "negative_coefficient"}, {"exp", to_json(v.exponent)}, {"coef", to_string(v.coefficient)}};
            } else if constexpr (std::is_same_v<T, witness::NotHomogeneous>) {
                return {{"kind", "not_homogeneous"}, {"first", to_json(v.first)}, {"second", to_json(v.second)}};
            } else if constexpr (std::is_same_v<T, witness::Exchange>) {
                return {{"kind", "exchange"}, {"alpha", to_json(v.alpha)}, {"beta", to_json(v.beta)}, {"i", v.i}};
            } else if constexpr (std::is_same_v<T, witness::Minor>) {
                return {{"kind", "minor"}, {"alpha", to_json(v.alpha)}, {"I", v.subset}, {"det", to_string(v.det)}};
            } else if constexpr (std::is_same_v<T, witness::Inertia>) {
                return {{"kind", "inertia"},
                        {"alpha", to_json(v.alpha)},
                        {"signature", {v.signature.positives, v.signature.negatives, v.signature.zeros}}};
            } else {
                return {{"kind", "missing_monomial"}, {"exp", to_json(v.exponent)}};
            }
        },
        w);
}

inline Witness witness_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    auto ev = [&](const char* key) { return ExponentVector(j.at(key).get<std::vector<int>>()); };
    if (kind == "negative_coefficient") return witness::NegativeCoefficient{ev("exp"), rational_from_json(j.at("coef"))};
    if (kind == "not_homogeneous") return witness::NotHomogeneous{ev("first"), ev("second")};
    if (kind == "exchange") return witness::Exchange{ev("alpha"), ev("beta"), j.at("i").get<std::size_t>()};
    if (kind == "minor")
        return witness::Minor{ev("alpha"), j.at("I").get<std::vector<std::size_t>>(), rational_from_json(j.at("det"))};
    if (kind == "inertia") {
        const auto s = j.at("signature").get<std::vector<std::size_t>>();
        if (s.size() != 3) throw std::invalid_argument("signature needs three counts");
        return witness::Inertia{ev("alpha"), Signature{s[0], s[1], s[2]}};
    }
    if (kind == "missing_monomial") return witness::MissingMonomial{ev("exp")};
    throw std::invalid_argument("unknown witness kind '" + kind + "'");
}

inline json verdict_to_json(const LorentzVerdict& v) {
    json j = {{"status", to_string(v.status)}};
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    return j;
}

inline json matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& v : r) row.push_back(to_string(v));
        rows.push_back(row);
    }
    return rows;
}

inline RationalMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    RationalMatrix m;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
        RationalVector r;
        for (const auto& v : row) r.push_back(rational_from_json(v));
        m.push_back(std::move(r));
    }
    for (const auto& r : m)
        if (r.size() != m.size()) throw std::invalid_argument("matrix must be square");
    return m;
}

inline QuadraticForm form_from_json(const json& j) { return QuadraticForm(matrix_from_json(j)); }

/// {"dim": d, "forms": [matrix, ...]}
inline QuadFormTuple form_tuple_from_json(const json& j) {
    const auto d = j.at("dim").get<std::size_t>();
    std::vector<QuadraticForm> forms;
    for (const auto& f : j.at("forms")) forms.push_back(form_from_json(f));
    return QuadFormTuple(d, std::move(forms));
}

/// {"dim": d, "edges": [[b_1..b_d], ...]}
inline BoxFamily box_family_from_json(const json& j) {
    const auto d = j.at("dim").get<std::size_t>();
    std::vector<RationalVector> edges;
    for (const auto& e : j.at("edges")) {
        RationalVector v;
        for (const auto& x : e) v.push_back(rational_from_json(x));
        edges.push_back(std::move(v));
    }
    return BoxFamily(d, std::move(edges));
}

inline json af_report_to_json(const AFReport& r) {
    json j = {{"lhs", to_string(r.lhs)},
              {"rhs", to_string(r.rhs)},
              {"margin", to_string(r.margin)},
              {"verdict", to_string(r.verdict)}};
    if (r.proportional) j["proportional"] = *r.proportional;
    return j;
}

}  // namespace lorentz
