#pragma once

#include "lorentz/json_io.hpp"
#include "lorentz/lorentz.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace lorentz::cli {

inline constexpr const char* version = "0.1.0";

/// Exit codes.
inline constexpr int holds = 0;
inline constexpr int fails = 1;
inline constexpr int usage_error = 2;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    return parts;
}

inline std::string trim(std::string s) {
    const auto ws = " \t\n";
    s.erase(0, s.find_first_not_of(ws));
    s.erase(s.find_last_not_of(ws) + 1);
    return s;
}

inline std::vector<int> int_list(const std::string& s, const char* what) {
    std::vector<int> v;
    for (const auto& p : split(s, ',')) {
        const auto t = trim(p);
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument(std::string(what) + ": '" + t + "' is not a non-negative integer");
        v.push_back(std::stoi(t));
    }
    if (v.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return v;
}

inline RationalVector rational_list(const std::string& s) {
    RationalVector v;
    for (const auto& p : split(s, ',')) v.push_back(parse_rational(trim(p)));
    return v;
}

/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
inline json load_json(const std::string& arg) {
    const auto t = trim(arg);
    if (!t.empty() && (t[0] == '{' || t[0] == '[')) return json::parse(t);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open '" + arg + "'");
    return json::parse(in);
}

struct PolyInput {
    std::string vars;

    ParseOptions options() const {
        ParseOptions o;
        const auto v = trim(vars);
        if (v.empty()) return o;
        if (v.find_first_not_of("0123456789") == std::string::npos) {
            o.nvars = static_cast<std::size_t>(std::stoul(v));
        } else {
            for (const auto& n : split(v, ',')) o.names.push_back(trim(n));
        }
        return o;
    }

    /// Variable names used for output: the parsed names or x1..xn.
    std::vector<std::string> names_for(const std::string& text, std::size_t n) const {
        const auto o = options();
        if (!o.names.empty()) return o.names;
        std::set<std::string> seen;
        bool indexed = true;
        std::string cur;
        for (char c : text + " ") {
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                cur += c;
                continue;
            }
            if (!cur.empty() && !std::isdigit(static_cast<unsigned char>(cur[0]))) {
                seen.insert(cur);
                if (!lorentz::detail::indexed_variable(cur)) indexed = false;
            }
            cur.clear();
        }
        if (indexed || seen.size() != n) return default_names(n);
        return {seen.begin(), seen.end()};
    }
};

inline std::string describe(const ExponentVector& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + "]";
}

inline std::string describe(const Witness& w) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, witness::NegativeCoefficient>) {
                return "negative coefficient " + to_string(v.coefficient) + " at exponent " + describe(v.exponent);
            } else if constexpr (std::is_same_v<T, witness::NotHomogeneous>) {
                return "not homogeneous: exponents " + describe(v.first) + " and " + describe(v.second);
            } else if constexpr (std::is_same_v<T, witness::Exchange>) {
                return "support not M-convex: alpha=" + describe(v.alpha) + " beta=" + describe(v.beta) +
                       " i=" + std::to_string(v.i);
            } else if constexpr (std::is_same_v<T, witness::Minor>) {
                std::string idx;
                for (std::size_t k = 0; k < v.subset.size(); ++k) idx += (k ? "," : "") + std::to_string(v.subset[k]);
                return "minor: alpha=" + describe(v.alpha) + " I=[" + idx + "] det=" + to_string(v.det);
            } else if constexpr (std::is_same_v<T, witness::Inertia>) {
                return "signature " + v.signature.to_string() + " of the form at alpha=" + describe(v.alpha);
            } else {
                return "missing monomial " + describe(v.exponent);
            }
        },
        w);
}

inline void print_polynomial(std::ostream& out, bool as_json, const Polynomial& p,
                             const std::vector<std::string>& names = {}) {
    if (as_json)
        out << polynomial_to_json(p).dump() << '\n';
    else
        out << format_polynomial(p, names) << '\n';
}

}  // namespace detail

/// Runs one command line (without the program name). Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact certification of Lorentzian and dually Lorentzian polynomials", "lorentz"};
    app.require_subcommand(0, 1);
    bool show_version = false;
    app.add_flag("--version", show_version, "Print the version and exit");

    bool as_json = false;
    detail::PolyInput input;
    auto add_common = [&](CLI::App* sub, bool with_vars = true) {
        sub->add_flag("--json", as_json, "Emit JSON");
        if (with_vars) sub->add_option("--vars", input.vars, "Variable count, or comma-separated variable names");
    };

    // check
    auto* check = app.add_subcommand("check", "Certify a property of a polynomial");
    std::string property, expr, cone_arg;
    bool normalize_first = false;
    check->add_option("property", property, "lorentzian | strictly-lorentzian | dually-lorentzian | c-lorentzian")
        ->required()
        ->check(CLI::IsMember({"lorentzian", "strictly-lorentzian", "dually-lorentzian", "c-lorentzian"}));
    check->add_option("polynomial", expr, "Polynomial text")->required();
    check->add_flag("--normalize", normalize_first, "Apply x^a -> x^a/a! before checking");
    check->add_option("--cone", cone_arg, "Cone generators, e.g. '1,0;1,1' (c-lorentzian)");
    add_common(check);

    // dual / wedge
    std::string kappa_arg;
    auto* dual_cmd = app.add_subcommand("dual", "Dual within a box (default: the multidegree)");
    dual_cmd->add_option("polynomial", expr, "Polynomial text")->required();
    dual_cmd->add_option("--kappa", kappa_arg, "Box, e.g. 2,2");
    add_common(dual_cmd);
    auto* wedge_cmd = app.add_subcommand("wedge", "Inverse of dual within a box");
    wedge_cmd->add_option("polynomial", expr, "Polynomial text")->required();
    wedge_cmd->add_option("--kappa", kappa_arg, "Box, e.g. 2,2 (default: the multidegree)");
    add_common(wedge_cmd);

    // apply
    std::string op_arg;
    bool certify = false;
    auto* apply_cmd = app.add_subcommand("apply", "Apply the differential operator s(d/dx) to f");
    apply_cmd->add_option("--op", op_arg, "Operator symbol s")->required();
    apply_cmd->add_option("polynomial", expr, "Polynomial f")->required();
    apply_cmd->add_flag("--certify", certify, "Also certify the result as Lorentzian");
    add_common(apply_cmd);

    // symbol
    std::string gamma_arg;
    auto* symbol_cmd = app.add_subcommand("symbol", "Symbol of s(d/dx) on polynomials of multidegree <= gamma");
    symbol_cmd->add_option("--op", op_arg, "Operator symbol s")->required();
    symbol_cmd->add_option("--gamma", gamma_arg, "Box gamma, e.g. 2,2")->required();
    add_common(symbol_cmd);

    // schur / schubert
    std::string partition_arg, perm_arg;
    auto* schur_cmd = app.add_subcommand("schur", "Schur polynomial");
    schur_cmd->add_option("--partition", partition_arg, "Partition, e.g. 2,1")->required();
    add_common(schur_cmd);
    auto* schubert_cmd = app.add_subcommand("schubert", "Schubert polynomial");
    schubert_cmd->add_option("--perm", perm_arg, "Permutation in one-line notation, e.g. 3,1,2")->required();
    add_common(schubert_cmd, false);

    // derived
    std::string t_arg;
    auto* derived_cmd = app.add_subcommand("derived", "Derived sequence j -> s^(j)(t) and its log-concavity");
    derived_cmd->add_option("--t", t_arg, "Evaluation point, e.g. 1,1")->required();
    derived_cmd->add_option("polynomial", expr, "Homogeneous polynomial s")->required();
    add_common(derived_cmd);

    // mixed-disc
    std::string forms_arg, p_arg, q_arg, s_arg = "1";
    bool assume = false;
    auto* md_cmd = app.add_subcommand("mixed-disc", "Generalized Alexandrov-Fenchel check for mixed discriminants");
    md_cmd->add_option("--forms", forms_arg, "Form tuple JSON (file or inline)")->required();
    md_cmd->add_option("--p", p_arg, "Form p JSON matrix (file or inline)")->required();
    md_cmd->add_option("--q", q_arg, "Form q JSON matrix (file or inline)")->required();
    md_cmd->add_option("--s", s_arg, "Dually Lorentzian s in x1..xn, one variable per form");
    md_cmd->add_flag("--assume-dually-lorentzian", assume, "Skip certifying s");
    add_common(md_cmd, false);

    // boxes
    std::string family_arg;
    std::size_t k_idx = 0, l_idx = 1;
    auto* box_cmd = app.add_subcommand("boxes", "Generalized Alexandrov-Fenchel check for box mixed volumes");
    box_cmd->add_option("--family", family_arg, "Box family JSON (file or inline)")->required();
    box_cmd->add_option("--s", s_arg, "Dually Lorentzian s in x1..xn, one variable per box");
    box_cmd->add_option("--K", k_idx, "Index of K in the family");
    box_cmd->add_option("--L", l_idx, "Index of L in the family");
    box_cmd->add_flag("--assume-dually-lorentzian", assume, "Skip certifying s");
    add_common(box_cmd, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? holds : usage_error;
    }

    if (show_version) {
        out << "lorentz " << version << '\n';
        return holds;
    }
    if (app.get_subcommands().empty()) {
        err << app.help();
        return usage_error;
    }

    try {
        const auto opts = input.options();
        auto parse = [&](const std::string& text) { return parse_polynomial(text, opts); };
        auto parse_box = [](const std::string& text) { return ExponentVector(detail::int_list(text, "box")); };

        if (check->parsed()) {
            Polynomial f = parse(expr);
            if (normalize_first) f = normalize(f);
            LorentzVerdict v;
            bool ok = false;
            if (property == "lorentzian") {
                v = is_lorentzian(f);
                ok = v.is_lorentzian();
            } else if (property == "strictly-lorentzian") {
                v = is_strictly_lorentzian(f);
                ok = v.is_strict();
            } else if (property == "dually-lorentzian") {
                v = is_dually_lorentzian(f);
                ok = v.is_lorentzian();
            } else {
                if (cone_arg.empty()) throw std::invalid_argument("c-lorentzian needs --cone");
                std::vector<RationalVector> gens;
                for (const auto& g : detail::split(cone_arg, ';')) gens.push_back(detail::rational_list(g));
                v = is_c_lorentzian(f, ConeSpec(f.nvars(), std::move(gens)));
                ok = v.is_lorentzian();
            }
            if (as_json) {
                out << verdict_to_json(v).dump() << '\n';
            } else {
                out << to_string(v.status) << '\n';
                if (v.witness) out << "witness: " << detail::describe(*v.witness) << '\n';
            }
            return ok ? holds : fails;
        }

        if (dual_cmd->parsed() || wedge_cmd->parsed()) {
            const Polynomial f = parse(expr);
            const ExponentVector kappa = kappa_arg.empty() ? f.multidegree() : parse_box(kappa_arg);
            const Polynomial r = dual_cmd->parsed() ? dual(f, kappa) : wedge(f, kappa);
            detail::print_polynomial(out, as_json, r, input.names_for(expr, f.nvars()));
            return holds;
        }

        if (apply_cmd->parsed()) {
            Polynomial f = parse(expr);
            ParseOptions op_opts = opts;
            if (op_opts.names.empty()) op_opts.nvars = f.nvars();
            const Polynomial s = parse_polynomial(op_arg, op_opts);
            const Polynomial r = apply_operator(DiffOperator{s}, f);
            const auto names = input.names_for(expr, f.nvars());
            if (!certify) {
                detail::print_polynomial(out, as_json, r, names);
                return holds;
            }
            const LorentzVerdict v = is_lorentzian(r);
            if (as_json) {
                out << json{{"result", polynomial_to_json(r)}, {"operator", operator_to_json(s)},
                            {"verdict", verdict_to_json(v)}}
                           .dump()
                    << '\n';
            } else {
                out << format_polynomial(r, names) << '\n' << to_string(v.status) << '\n';
                if (v.witness) out << "witness: " << detail::describe(*v.witness) << '\n';
            }
            return v.is_lorentzian() ? holds : fails;
        }

        if (symbol_cmd->parsed()) {
            const ExponentVector gamma = parse_box(gamma_arg);
            ParseOptions op_opts = opts;
            if (op_opts.names.empty()) op_opts.nvars = std::max<std::size_t>(op_opts.nvars.value_or(0), gamma.size());
            const Polynomial s = parse_polynomial(op_arg, op_opts);
            const Polynomial sym = symbol_of(DiffOperator{s}, gamma);
            auto names = default_names(s.nvars());
            for (std::size_t i = 1; i <= s.nvars(); ++i) names.push_back("w" + std::to_string(i));
            detail::print_polynomial(out, as_json, sym, names);
            return holds;
        }

        if (schur_cmd->parsed()) {
            const auto parts = detail::int_list(partition_arg, "partition");
            const std::size_t n = opts.nvars.value_or(Partition(parts).length() == 0 ? 1 : Partition(parts).length());
            detail::print_polynomial(out, as_json, schur(Partition(parts), n));
            return holds;
        }

        if (schubert_cmd->parsed()) {
            detail::print_polynomial(out, as_json, schubert(Permutation(detail::int_list(perm_arg, "permutation"))));
            return holds;
        }

        if (derived_cmd->parsed()) {
            const Polynomial s = parse(expr);
            const RationalVector t = detail::rational_list(t_arg);
            const ValueSequence seq = derived_sequence(s, t);
            const LogConcavityReport lc = is_log_concave(seq);
            const Polynomial bi = binomial_weighted_bivariate(s, t);
            if (as_json) {
                json values = json::array();
                for (const auto& v : seq.values) values.push_back(to_string(v));
                json j = {{"sequence", values},
                          {"log_concave", lc.log_concave},
                          {"violation", lc.violation ? json(*lc.violation) : json(nullptr)},
                          {"internal_zeros", lc.internal_zeros},
                          {"bivariate", polynomial_to_json(bi)}};
                out << j.dump() << '\n';
            } else {
                std::string line;
                for (std::size_t j = 0; j < seq.values.size(); ++j) line += (j ? " " : "") + to_string(seq.values[j]);
                out << line << "  log-concave: " << (lc.log_concave ? "yes" : "no");
                if (lc.violation) out << " (fails at j=" << *lc.violation << ")";
                if (lc.internal_zeros) out << "  internal zeros: yes";
                out << '\n' << "bivariate: " << format_polynomial(bi, {"u", "v"}) << '\n';
            }
            return lc.log_concave ? holds : fails;
        }

        if (md_cmd->parsed() || box_cmd->parsed()) {
            AFReport r;
            if (md_cmd->parsed()) {
                const QuadFormTuple forms = form_tuple_from_json(detail::load_json(forms_arg));
                ParseOptions so;
                so.nvars = forms.size();
                const Polynomial s = parse_polynomial(s_arg, so);
                r = af_mixed_discriminant(form_from_json(detail::load_json(p_arg)),
                                          form_from_json(detail::load_json(q_arg)), s, forms, {assume});
            } else {
                const BoxFamily boxes = box_family_from_json(detail::load_json(family_arg));
                ParseOptions so;
                so.nvars = boxes.size();
                const Polynomial s = parse_polynomial(s_arg, so);
                r = af_box_mixed_volume(k_idx, l_idx, s, boxes, {assume});
            }
            if (as_json) {
                out << af_report_to_json(r).dump() << '\n';
            } else {
                out << "lhs " << to_string(r.lhs) << "  rhs " << to_string(r.rhs) << "  margin " << to_string(r.margin)
                    << "  " << to_string(r.verdict);
                if (r.proportional) out << "  proportional: " << (*r.proportional ? "yes" : "no");
                out << '\n';
            }
            return r.verdict == AFVerdict::violated ? fails : holds;
        }
    } catch (const ParseError& e) {
        err << "parse error " << e.what() << '\n';
        return usage_error;
    } catch (const json::exception& e) {
        err << "JSON error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

}  // namespace lorentz::cli
