#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lorentz;

namespace {

Polynomial P(const char* text, std::size_t n = 0) {
    ParseOptions o;
    if (n) o.nvars = n;
    return parse_polynomial(text, o);
}

}  // namespace

TEST(QuadraticForm, ReadFromCoefficients) {
    const auto q = quadratic_form_of(P("x1^2+4*x1*x2+x2^2"));
    EXPECT_EQ(q(0, 0), 1);
    EXPECT_EQ(q(0, 1), 2);
    EXPECT_THROW(quadratic_form_of(P("x1^3")), std::invalid_argument);
    EXPECT_THROW(QuadraticForm(RationalMatrix{{1, 2}, {3, 1}}), std::invalid_argument);
}

TEST(QuadraticForm, HessianFormMatchesDerivative) {
    corpus::Random rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = rng.homogeneous(3, 4);
        for (const auto& alpha : compositions(3, 2))
            EXPECT_EQ(hessian_form(f, alpha), quadratic_form_of(partial(f, alpha)));
    }
}

TEST(QuadraticForm, Signature) {
    EXPECT_EQ(signature_of(QuadraticForm(RationalMatrix{{0, 1}, {1, 0}})), (Signature{1, 1, 0}));
    EXPECT_EQ(signature_of(QuadraticForm(RationalMatrix{{1, 1}, {1, 1}})), (Signature{1, 0, 1}));
    EXPECT_EQ(signature_of(QuadraticForm(3)), (Signature{0, 0, 3}));
    EXPECT_EQ(signature_of(QuadraticForm(RationalMatrix{{1, 2, 2}, {2, 1, 2}, {2, 2, 1}})), (Signature{1, 2, 0}));
}

TEST(QuadraticForm, SignatureMatchesCharacteristicPolynomial) {
    corpus::Random rng(6);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
        QuadraticForm q(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) q.set(i, j, rng.coin(0.3) ? Rational(0) : Rational(rng.integer(-3, 3)));
        const Signature s = signature_of(q);
        EXPECT_EQ(s.positives, oracle::positive_eigenvalues(q.entries()));
        EXPECT_EQ(s.zeros, oracle::zero_eigenvalues(q.entries()));
        EXPECT_EQ(s.dim(), n);
    }
}

TEST(QuadraticForm, MinorCheck) {
    const QuadraticForm two_positive(RationalMatrix{{1, 0}, {0, 1}});
    const auto mc = minor_sign_check(two_positive);
    EXPECT_FALSE(mc.holds);
    EXPECT_EQ(mc.subset, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(mc.det, 1);
    EXPECT_TRUE(minor_sign_check(QuadraticForm(RationalMatrix{{1, 2}, {2, 1}})).holds);
    EXPECT_THROW(minor_sign_check(QuadraticForm(RationalMatrix{{1, -1}, {-1, 1}})), std::domain_error);
}

TEST(QuadraticForm, HodgeInequality) {
    const QuadraticForm m(RationalMatrix{{1, 2}, {2, 1}});
    const std::vector<Rational> y{1, 1}, x{1, 0}, x2{3, 3};
    EXPECT_EQ(hodge_inequality(m, x, y).outcome, HodgeOutcome::holds_strict);
    EXPECT_EQ(hodge_inequality(m, x2, y).outcome, HodgeOutcome::equality_proportional);
    const QuadraticForm pd = QuadraticForm::identity(2);
    EXPECT_EQ(hodge_inequality(pd, x, y).outcome, HodgeOutcome::violated);
    const std::vector<Rational> null{1, -1};
    EXPECT_THROW(hodge_inequality(m, x, null), std::domain_error);
}

TEST(QuadraticFormProperty, HodgeNeverViolatedForLorentzianSignature) {
    corpus::Random rng(7);
    int tested = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
        const QuadraticForm q = rng.nonneg_symmetric(n, 0.1);
        if (!signature_of(q).is_lorentzian_nondegenerate()) continue;
        const auto y = rng.positive_vector(n);
        if (q.value(y) <= 0) continue;
        RationalVector x(n);
        for (auto& v : x) v = make_rational(rng.integer(-4, 4), rng.integer(1, 3));
        EXPECT_NE(hodge_inequality(q, x, y).outcome, HodgeOutcome::violated);
        ++tested;
    }
    EXPECT_GT(tested, 50);
}

TEST(Lorentzian, SmallExamples) {
    EXPECT_TRUE(is_lorentzian(P("x1^2+4*x1*x2+x2^2")).is_lorentzian());
    EXPECT_TRUE(is_lorentzian(P("x1*x2")).is_lorentzian());
    EXPECT_FALSE(is_lorentzian(P("x1^2+x2^2")).is_lorentzian());
    EXPECT_FALSE(is_lorentzian(P("x1^2+x1*x2+x2^2")).is_lorentzian());
    EXPECT_TRUE(is_lorentzian(P("0", 2)).is_lorentzian());
    EXPECT_TRUE(is_lorentzian(P("3", 2)).is_lorentzian());
    EXPECT_TRUE(is_lorentzian(P("x1+2*x2")).is_lorentzian());
    EXPECT_FALSE(is_lorentzian(P("x1-x2")).is_lorentzian());
    EXPECT_FALSE(is_lorentzian(P("x1^2+x2")).is_lorentzian());
}

TEST(Lorentzian, WitnessesHaveTheRightKind) {
    auto kind = [](const LorentzVerdict& v) { return v.witness->index(); };
    EXPECT_EQ(kind(is_lorentzian(P("x1^2-x1*x2"))), 0u);
    EXPECT_EQ(kind(is_lorentzian(P("x1^2+x2"))), 1u);
    EXPECT_EQ(kind(is_lorentzian(P("x1^2+x2^2"))), 2u);
    const auto v = is_lorentzian(P("x1^2+x1*x2+x2^2"));
    ASSERT_EQ(kind(v), 3u);
    const auto& m = std::get<witness::Minor>(*v.witness);
    EXPECT_EQ(m.subset, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(m.det, Rational(3, 4));
}

TEST(Lorentzian, StrictExamples) {
    EXPECT_TRUE(is_strictly_lorentzian(P("x1^2+3*x1*x2+x2^2")).is_strict());
    const auto deg = is_strictly_lorentzian(P("x1*x2"));
    EXPECT_EQ(deg.status, LorentzStatus::lorentzian);
    EXPECT_TRUE(std::holds_alternative<witness::MissingMonomial>(*deg.witness));
    const auto rank_one = is_strictly_lorentzian(P("x1^2+2*x1*x2+x2^2"));
    EXPECT_EQ(rank_one.status, LorentzStatus::lorentzian);
    EXPECT_TRUE(std::holds_alternative<witness::Inertia>(*rank_one.witness));
    EXPECT_TRUE(is_strictly_lorentzian(P("x1+x2")).is_strict());
    EXPECT_FALSE(is_strictly_lorentzian(P("x1", 2)).is_strict());
    EXPECT_TRUE(is_strictly_lorentzian(P("2", 2)).is_strict());
}

TEST(Lorentzian, MConvexityAgreesWithDefinition) {
    corpus::Random rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const auto f = rng.homogeneous(3, rng.integer(1, 3), 1, 2, 0.5);
        if (f.is_zero()) continue;
        const auto supp = f.support();
        EXPECT_EQ(is_m_convex(supp).holds, oracle::m_convex_by_definition(supp));
    }
}

TEST(LorentzianProperty, MinorCriterionAgreesWithSignature) {
    corpus::Random rng(9);
    for (int trial = 0; trial < 1500; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
        const QuadraticForm q = rng.nonneg_symmetric(n);
        EXPECT_EQ(minor_sign_check(q).holds, signature_of(q).positives <= 1);
    }
}

TEST(LorentzianProperty, ProductsAndChangeOfVariables) {
    corpus::Random rng(10);
    const auto corpus = corpus::lorentzian(rng, 3, 8);
    for (const auto& f : corpus) {
        ASSERT_TRUE(is_lorentzian(f).is_lorentzian()) << format_polynomial(f);
        const auto a = rng.nonneg_matrix(3, static_cast<std::size_t>(rng.integer(2, 4)));
        EXPECT_TRUE(is_lorentzian(substitute_linear(f, a)).is_lorentzian());
        EXPECT_TRUE(is_lorentzian(f * rng.product_of_linear_forms(3, 1)).is_lorentzian());
        const ExponentVector kappa{rng.integer(0, 3), rng.integer(0, 3), rng.integer(0, 3)};
        EXPECT_TRUE(is_lorentzian(truncate_le(f, kappa)).is_lorentzian());
        EXPECT_TRUE(is_lorentzian(truncate_ge(f, kappa)).is_lorentzian());
    }
}

TEST(LorentzianProperty, StrictImpliesLorentzianAndWitnessesReverify) {
    corpus::Random rng(12);
    for (int trial = 0; trial < 400; ++trial) {
        const auto f = rng.homogeneous(3, rng.integer(2, 4), -1, 4, 0.8);
        const auto v = is_lorentzian(f);
        const auto s = is_strictly_lorentzian(f);
        if (s.is_strict()) {
            EXPECT_TRUE(v.is_lorentzian());
        }
        if (!v.is_lorentzian()) {
            ASSERT_TRUE(v.witness);
            EXPECT_TRUE(verify_witness(f, *v.witness)) << format_polynomial(f);
        }
        if (s.witness) {
            EXPECT_TRUE(verify_witness(f, *s.witness));
        }
    }
}

TEST(CLorentzian, OrthantMatchesPlainCheck) {
    corpus::Random rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = rng.homogeneous(3, rng.integer(2, 3), 0, 3, 0.7);
        EXPECT_EQ(is_c_lorentzian(f, ConeSpec::orthant(3)).status, is_lorentzian(f).status);
    }
}

TEST(CLorentzian, ConeExamples) {
    // x1^2 - x2^2 is Lorentzian on the cone spanned by (1,0), (1,1).
    const auto f = P("x1^2-x2^2");
    EXPECT_FALSE(is_lorentzian(f).is_lorentzian());
    const ConeSpec cone(2, {{1, 0}, {1, 1}});
    EXPECT_TRUE(is_c_lorentzian(f, cone).is_lorentzian());
    const ConeSpec ray(2, {{1, 1}});
    EXPECT_TRUE(is_c_lorentzian(f, ray).is_lorentzian());
    EXPECT_THROW(is_c_lorentzian(f, ConeSpec(3, {{1, 0, 0}})), std::invalid_argument);
}

TEST(CLorentzian, ConeFormReport) {
    // det of x1*I + x2*diag(1,2): the mixed-discriminant form.
    const auto f = P("x1^2+3*x1*x2+2*x2^2");
    const auto r = c_positivity_and_hr(f, ConeSpec::orthant(2), {});
    EXPECT_EQ(r.signature, (Signature{1, 1, 0}));
    EXPECT_TRUE(r.nondegenerate_hyperbolic);
    EXPECT_TRUE(r.generator_contractions_positive);
    const std::vector<RationalVector> dirs{{1, 0}, {0, 1}};
    EXPECT_EQ(full_contraction(f, dirs), 3);
    EXPECT_THROW(c_positivity_and_hr(P("x1^3+x2^3"), ConeSpec::orthant(2), {}), std::invalid_argument);
}
