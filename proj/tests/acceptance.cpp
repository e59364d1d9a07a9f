// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "corpus.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace lorentz;

namespace {

// Wall-clock budgets in seconds. Every numeric check is exact.
constexpr double budget_example_f4 = 1.0;
constexpr double budget_example_pq = 5.0;
constexpr double budget_total = 600.0;

// Sample sizes.
constexpr std::size_t min_dually_corpus = 50;
constexpr std::size_t min_lorentz_corpus = 50;
constexpr std::size_t min_converse = 20;
constexpr std::size_t min_strict = 20;
constexpr std::size_t t_per_polynomial = 100;
constexpr std::size_t md_instances = 1000;
constexpr std::size_t md_equality_instances = 50;
constexpr std::size_t box_instances = 1000;
constexpr std::size_t sylvester_instances = 10000;

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    std::map<std::string, std::size_t> failures;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) note << "first failure: " << what << "; ";
        if (!ok) ++failures[what];
        pass = pass && ok;
    }
};

Polynomial P(const std::string& text, std::size_t n = 0) {
    ParseOptions o;
    if (n) o.nvars = n;
    return parse_polynomial(text, o);
}

// 1
void example_f4(Outcome& o) {
    ParseOptions names;
    names.names = {"w", "x", "y", "z"};
    const auto f = parse_polynomial("w^2+3*w*x+3*x^2+3*w*y+3*x*y+2*y^2+3*w*z+2*x*z+2*y*z+z^2", names);
    const auto dl = is_dually_lorentzian(f);
    o.require(dl.is_lorentzian(), "f4 not certified dually Lorentzian");
    const auto nf = normalize(f);
    const auto v = is_lorentzian(nf);
    o.require(!v.is_lorentzian(), "N(f4) certified Lorentzian");
    o.require(v.witness && verify_witness(nf, *v.witness), "witness for N(f4) does not re-verify");
    if (v.witness) o.note << "witness kind " << v.witness->index() << "; ";
}

// 2
void example_pq(Outcome& o) {
    const auto p = schur(Partition{2, 1}, 3) - schur(Partition{1, 1, 1}, 3);
    // the listed expansion, variables relabelled to x1, x2, x3
    const auto listed = P("x1^2*x2+x1*x2^2+x1^2*x3+x1*x2*x3+x2^2*x3+x1*x3^2+x2*x3^2");
    o.require(p == listed, "p differs from the listed expansion");
    o.require(p.size() == 7, "p does not have 7 terms");
    o.require(is_lorentzian(normalize(p)).is_lorentzian(), "N(p) not Lorentzian");
    const auto q = schur(Partition{3, 2, 1}, 3) - schur(Partition{2, 2, 2}, 3);
    o.require(is_dually_lorentzian(q).is_lorentzian(), "q not dually Lorentzian");
    o.require(q.coefficient(ExponentVector{2, 2, 2}) == 1, "q coefficient at x^(2,2,2) unexpected");
}

// 3
void schur_identity(Outcome& o) {
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (int m = 0; m <= 6; ++m)
            for (const auto& lambda : partitions_of(m, n)) {
                const auto [left, right] = schur_dual_identity(lambda, n);
                o.require(left == right, "identity fails for " + lambda.to_string());
                std::vector<int> kappa(n);
                for (std::size_t i = 0; i < n; ++i) kappa[i] = m - lambda[n - 1 - i];
                const auto oracle_left =
                    reverse_exponents(oracle::schur_by_tableaux(lambda, n), ExponentVector::filled(n, m));
                o.require(oracle_left == oracle::schur_by_tableaux(Partition(kappa), n),
                          "tableaux identity fails for " + lambda.to_string());
                o.require(left == oracle_left, "library and tableaux disagree for " + lambda.to_string());
                ++checked;
            }
    o.note << checked << " (lambda, n) pairs; ";
}

// 4
void operator_criterion(Outcome& o) {
    corpus::Random rng(1004);
    const auto duals = corpus::dually_lorentzian(3, 4);
    const auto lors = corpus::lorentzian(rng, 3, 25);
    o.require(duals.size() >= min_dually_corpus, "dually Lorentzian corpus too small");
    o.require(lors.size() >= min_lorentz_corpus, "Lorentzian corpus too small");
    for (const auto& s : duals) o.require(is_dually_lorentzian(s).is_lorentzian(), "corpus s " + format_polynomial(s));
    for (const auto& f : lors) o.require(is_lorentzian(f).is_lorentzian(), "corpus f " + format_polynomial(f));
    std::size_t pairs = 0;
    for (const auto& s : duals)
        for (const auto& f : lors) {
            const auto g = apply_operator(s, f);
            o.require(is_lorentzian(g).is_lorentzian(),
                      "d_s f not Lorentzian, s=" + format_polynomial(s) + " f=" + format_polynomial(f));
            ++pairs;
        }

    std::size_t converse = 0;
    for (int trial = 0; trial < 5000 && converse < 4 * min_converse; ++trial) {
        const auto s = rng.homogeneous(3, rng.integer(2, 4), 0, 4, 0.5);
        if (s.is_zero() || is_dually_lorentzian(s).is_lorentzian()) continue;
        const auto mono = Polynomial::monomial(s.multidegree());
        const auto g = apply_operator(s, mono);
        const auto v = is_lorentzian(g);
        o.require(!v.is_lorentzian(), "converse: d_s x^kappa Lorentzian for s=" + format_polynomial(s));
        o.require(!v.witness || verify_witness(g, *v.witness), "converse witness does not re-verify");
        ++converse;
    }
    o.require(converse >= min_converse, "too few non-dually-Lorentzian s");
    o.note << duals.size() << " s x " << lors.size() << " f = " << pairs << " pairs, " << converse << " converse; ";
}

// 5
void strict_criterion(Outcome& o) {
    corpus::Random rng(1005);
    std::vector<Polynomial> strict;
    for (int trial = 0; trial < 500 && strict.size() < 2 * min_strict; ++trial) {
        auto f = rng.product_of_linear_forms(3, rng.integer(2, 5), true);
        if (is_strictly_lorentzian(f).is_strict()) corpus::push_unique(strict, f);
    }
    for (int m = 2; m <= 5; ++m) {
        const auto h = normalize(complete_homogeneous(3, m));
        if (is_strictly_lorentzian(h).is_strict()) corpus::push_unique(strict, h);
    }
    o.require(strict.size() >= min_strict, "too few strictly Lorentzian f");
    const auto duals = corpus::dually_lorentzian(3, 4);
    std::size_t pairs = 0;
    for (const auto& s : duals)
        for (const auto& f : strict) {
            if (s.degree() > f.degree()) continue;
            const auto g = apply_operator(s, f);
            o.require(is_strictly_lorentzian(g).is_strict(),
                      "d_s f not strict, s=" + format_polynomial(s) + " f=" + format_polynomial(f));
            ++pairs;
        }
    o.note << strict.size() << " strict f, " << pairs << " pairs; ";
}

// 6
void derived_criterion(Outcome& o) {
    corpus::Random rng(1006);
    const auto duals = corpus::dually_lorentzian(3, 4);
    std::size_t sequences = 0;
    for (const auto& s : duals)
        for (std::size_t k = 0; k < t_per_polynomial; ++k) {
            const auto t = rng.nonneg_vector(3);
            const auto values = derived_sequence(s, t);
            o.require(values.values == oracle::derived_values(s, t), "derived values disagree with oracle");
            o.require(is_log_concave(values).log_concave, "not log-concave: s=" + format_polynomial(s));
            o.require(is_lorentzian(binomial_weighted_bivariate(s, t)).is_lorentzian(),
                      "bivariate form not Lorentzian: s=" + format_polynomial(s));
            ++sequences;
        }

    std::size_t forms = 0;
    for (int d = 1; d <= 4; ++d) {
        std::vector<Polynomial> same;
        for (const auto& s : duals)
            if (s.degree() == d) same.push_back(s);
        if (same.empty()) continue;
        for (std::size_t r = 1; r <= 3; ++r)
            for (int trial = 0; trial < 15; ++trial) {
                std::vector<Polynomial> ss;
                std::vector<RationalVector> ts;
                for (std::size_t j = 0; j < r; ++j) {
                    ss.push_back(same[static_cast<std::size_t>(rng.integer(0, static_cast<int>(same.size()) - 1))]);
                    ts.push_back(rng.nonneg_vector(3));
                }
                o.require(is_lorentzian(multi_derived_form(ss, ts)).is_lorentzian(), "multi derived form not Lorentzian");
                ++forms;
            }
    }
    o.note << sequences << " sequences, " << forms << " multi forms; ";
}

// 7
Rational oracle_mixed_pair(const std::vector<RationalMatrix>& ab, const Polynomial& s,
                           const std::vector<RationalMatrix>& aux) {
    Rational total = 0;
    for (const auto& [alpha, lambda] : s.terms()) {
        std::vector<RationalMatrix> list = ab;
        for (std::size_t i = 0; i < aux.size(); ++i)
            for (int k = 0; k < alpha[i]; ++k) list.push_back(aux[i]);
        total += lambda * oracle::mixed_discriminant_polarization(list);
    }
    return total;
}

void mixed_discriminant_criterion(Outcome& o) {
    corpus::Random rng(1007);
    struct Aux {
        Polynomial s;
        std::size_t d;
    };
    const std::vector<Aux> choices{
        {P("1", 1), 2},
        {P("1", 2), 2},
        {P("x1", 1), 3},
        {P("x1", 2), 3},
        {P("x1*x2", 2), 4},
        {schur(Partition{2}, 2), 4},
        {schur(Partition{1, 1}, 2), 4},
        {schur(Partition{2}, 3), 4},
        {schur(Partition{1, 1}, 3), 4},
    };
    std::size_t strict = 0, equality = 0;
    for (std::size_t trial = 0; trial < md_instances + md_equality_instances; ++trial) {
        const auto& aux = choices[trial % choices.size()];
        const std::size_t d = aux.d;
        std::vector<QuadraticForm> forms;
        std::vector<RationalMatrix> aux_m;
        for (std::size_t i = 0; i < aux.s.nvars(); ++i) {
            forms.push_back(rng.positive_definite(d));
            aux_m.push_back(forms.back().entries());
        }
        const QuadraticForm q = rng.positive_definite(d);
        const bool constructed = trial >= md_instances;
        QuadraticForm p(d);
        if (constructed) {
            p = rng.positive(5, 3) * q;
        } else if (rng.coin()) {
            p = rng.positive_definite(d);
        } else {
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i; j < d; ++j) p.set(i, j, make_rational(rng.integer(-4, 4), rng.integer(1, 2)));
        }
        const auto r = af_mixed_discriminant(p, q, aux.s, QuadFormTuple(d, forms));
        o.require(r.margin >= 0, "negative margin");
        const Rational kl = oracle_mixed_pair({p.entries(), q.entries()}, aux.s, aux_m);
        const Rational kk = oracle_mixed_pair({p.entries(), p.entries()}, aux.s, aux_m);
        const Rational ll = oracle_mixed_pair({q.entries(), q.entries()}, aux.s, aux_m);
        o.require(r.lhs == kl * kl && r.rhs == kk * ll, "mixed discriminants disagree with polarization oracle");
        const bool proportional = proportionality_factor(detail::flatten(p), detail::flatten(q)).has_value();
        if (r.verdict == AFVerdict::equality) {
            ++equality;
            o.require(proportional, "equality on a non-proportional instance");
            o.require(r.proportional == true, "equality not flagged proportional");
        } else {
            ++strict;
            o.require(!proportional, "proportional instance not at equality");
        }
        o.require(constructed == (r.verdict == AFVerdict::equality), "equality set differs from constructed set");
    }
    o.note << strict << " strict, " << equality << " equality; ";
}

// 8
void box_criterion(Outcome& o) {
    const BoxFamily worked(2, {{1, 2}, {3, 1}});
    const auto w = af_box_mixed_volume(0, 1, P("1", 2), worked);
    // hand expansion: (x+3y)(2x+y) = 2x^2 + 7xy + 3y^2
    o.require(w.lhs == Rational(49, 4) && w.rhs == 6, "worked instance is not 49/4 vs 6");
    o.require(oracle::box_mixed_volume_permanent({{1, 2}, {3, 1}}) == Rational(7, 2), "permanent oracle disagrees");

    corpus::Random rng(1008);
    std::size_t count = 0, equal = 0, homothetic = 0;
    for (std::size_t trial = 0; trial < box_instances; ++trial) {
        const std::size_t d = static_cast<std::size_t>(rng.integer(2, 5));
        const std::size_t m = static_cast<std::size_t>(rng.integer(2, 4));
        std::vector<RationalVector> edges;
        for (std::size_t i = 0; i < m; ++i) edges.push_back(rng.positive_vector(d));
        const int deg = static_cast<int>(d) - 2;
        const auto parts = partitions_of(deg, m);
        Polynomial s = rng.coin(0.3) && deg <= static_cast<int>(m)
                           ? elementary_symmetric(m, deg)
                           : schur(parts[static_cast<std::size_t>(rng.integer(0, static_cast<int>(parts.size()) - 1))], m);
        const std::size_t k = static_cast<std::size_t>(rng.integer(0, static_cast<int>(m) - 1));
        std::size_t l = static_cast<std::size_t>(rng.integer(0, static_cast<int>(m) - 2));
        if (l >= k) ++l;
        const auto r = af_box_mixed_volume(k, l, s, BoxFamily(d, edges));
        o.require(r.margin >= 0, "negative box margin");
        if (r.verdict == AFVerdict::equality) {
            ++equal;
            if (proportionality_factor(edges[k], edges[l])) ++homothetic;
        }
        ++count;
    }
    o.note << count << " families, " << equal << " at equality (" << homothetic << " with K, L homothetic); ";
}

// 9
void sylvester_criterion(Outcome& o) {
    corpus::Random rng(1009);
    std::size_t agree = 0;
    for (std::size_t trial = 0; trial < sylvester_instances; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 6));
        const QuadraticForm q = rng.nonneg_symmetric(n, trial % 2 ? 0.25 : 0.6);
        const std::size_t positives = oracle::positive_eigenvalues(q.entries());
        o.require(signature_of(q).positives == positives, "signature disagrees with characteristic polynomial");
        const bool ok = minor_sign_check(q).holds == (positives <= 1);
        o.require(ok, "minor criterion disagrees with the eigenvalue count");
        agree += ok;
    }
    o.note << agree << " agreements; ";
}

// 10
void closure_suite(Outcome& o) {
    corpus::Random rng(1010);
    const auto duals = corpus::dually_lorentzian(3, 4);
    const auto lors = corpus::lorentzian(rng, 3, 10);
    auto random_box = [&](const ExponentVector& cap) {
        std::vector<int> g(cap.size());
        for (std::size_t i = 0; i < cap.size(); ++i) g[i] = rng.integer(0, cap[i]);
        return ExponentVector(g);
    };

    for (const auto& f : lors) {
        const auto g = random_box(f.multidegree());
        o.require(is_lorentzian(truncate_le(f, g)).is_lorentzian(), "Lorentzian truncation <=");
        o.require(is_lorentzian(truncate_ge(f, g)).is_lorentzian(), "Lorentzian truncation >=");
        RationalVector a = rng.nonneg_vector(3);
        Polynomial anti(3);
        for (std::size_t i = 0; i < 3; ++i) anti += a[i] * antiderivative(f, ExponentVector::unit(3, i));
        o.require(is_lorentzian(anti).is_lorentzian(), "Lorentzian antiderivative sum");
        o.require(is_lorentzian(antiderivative(f, random_box(ExponentVector::filled(3, 2)))).is_lorentzian(),
                  "Lorentzian antiderivative x^alpha");
    }

    {
        const auto h2 = complete_homogeneous(3, 2);
        const auto g = antiderivative(h2, ExponentVector::unit(3, 0));
        o.require(is_dually_lorentzian(g).is_lorentzian(), "dually Lorentzian antiderivative of h2 in x1");
    }

    for (std::size_t i = 0; i < duals.size(); ++i) {
        const auto& s = duals[i];
        const auto& other = duals[static_cast<std::size_t>(rng.integer(0, static_cast<int>(duals.size()) - 1))];
        o.require(is_dually_lorentzian(s * other).is_lorentzian(), "product not dually Lorentzian");

        ExponentVector kappa = s.multidegree();
        std::vector<int> grown(3);
        for (std::size_t j = 0; j < 3; ++j) grown[j] = kappa[j] + rng.integer(0, 1);
        kappa = ExponentVector(grown);
        const auto gamma = random_box(kappa);
        const auto rest = kappa - gamma;
        o.require(dual(truncate_ge(s, gamma), kappa) == truncate_le(dual(s, kappa), rest), "dual of >= truncation");
        o.require(dual(truncate_le(s, gamma), kappa) == truncate_ge(dual(s, kappa), rest), "dual of <= truncation");
        o.require(is_dually_lorentzian(truncate_ge(s, gamma)).is_lorentzian(), "dually Lorentzian truncation >=");
        o.require(is_dually_lorentzian(truncate_le(s, gamma)).is_lorentzian(), "dually Lorentzian truncation <=");

        const auto a = rng.nonneg_matrix(3, static_cast<std::size_t>(rng.integer(2, 4)));
        o.require(is_dually_lorentzian(substitute_linear(s, a)).is_lorentzian(), "linear substitution");

        const RationalVector w = rng.nonneg_vector(3);
        Polynomial anti(3);
        for (std::size_t j = 0; j < 3; ++j) anti += w[j] * antiderivative(s, ExponentVector::unit(3, j));
        o.require(is_dually_lorentzian(anti).is_lorentzian(), "dually Lorentzian antiderivative sum");
        o.require(is_dually_lorentzian(antiderivative(s, random_box(ExponentVector::filled(3, 1)))).is_lorentzian(),
                  "dually Lorentzian antiderivative x^alpha");

        if (s.degree() <= 3) {
            const auto k = static_cast<std::size_t>(std::max(s.degree(), 1));
            o.require(is_dually_lorentzian(polarized_derived(s, k)).is_lorentzian(), "polarized derived");
            // last variable as t
            o.require(is_dually_lorentzian(polarize(s, static_cast<std::size_t>(s.multidegree()[2]))).is_lorentzian(),
                      "polarization of the last variable");
        }

        RationalVector roots;
        const int count = rng.integer(0, 3);
        for (int j = 0; j < count; ++j) roots.push_back(rng.nonneg());
        o.require(is_dually_lorentzian(polya_weighted(s, PolyaSpec(rng.positive(), roots))).is_lorentzian(),
                  "Polya weighting");
    }
    o.note << duals.size() << " dually Lorentzian, " << lors.size() << " Lorentzian; ";
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Outcome&)> run;
        double budget;
    };
    const std::vector<Criterion> criteria{
        {1, "f4 dually Lorentzian, N(f4) not Lorentzian", example_f4, budget_example_f4},
        {2, "s21 - s111 expansion, N(p) Lorentzian, q dually Lorentzian", example_pq, budget_example_pq},
        {3, "Schur reversal identity, |lambda| <= 6, n <= 4", schur_identity, budget_total},
        {4, "operator criterion, both directions", operator_criterion, budget_total},
        {5, "strictly Lorentzian preservation", strict_criterion, budget_total},
        {6, "derived sequences and forms", derived_criterion, budget_total},
        {7, "generalized AF for mixed discriminants", mixed_discriminant_criterion, budget_total},
        {8, "generalized AF for boxes", box_criterion, budget_total},
        {9, "minor criterion vs exact signature", sylvester_criterion, budget_total},
        {10, "closure suite", closure_suite, budget_total},
    };
    const auto start_all = clock::now();
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(clock::now() - start).count();
        if (secs > c.budget) o.require(false, "exceeded time budget");
        std::printf("criterion %2d: %s  %s  [%.2fs] %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs,
                    o.note.str().c_str());
        for (const auto& [what, n] : o.failures) std::printf("    failed %zu x: %s\n", n, what.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    const double total = std::chrono::duration<double>(clock::now() - start_all).count();
    std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total);
    return failed == 0 && total <= budget_total ? 0 : 1;
}
