#include <doctest.h>

#include "invkit/nilpotent.hpp"

using namespace invkit;

namespace {

const FieldDescriptor QIS = FieldDescriptor::q_adjoin_i_sqrt2();
const FieldDescriptor F17 = FieldDescriptor::f17_with_roots();

Scalar ext(long c0, long c1, long c2, long c3) {
    return {QIS, sv::ext(QIS, c0, c1, c2, c3)};
}

} // namespace

TEST_SUITE_BEGIN("nilpotent");

TEST_CASE("test matrices satisfy the advertised identities") {
    for (const auto& f : {QIS, F17}) {
        auto suite = NilpotentTestSuite::build(f);
        CHECK((suite.T1 * suite.T1).is_zero());
        CHECK((suite.T2 * suite.T2).is_zero());
        CHECK((suite.T3 * suite.T3).is_zero());
        CHECK((suite.R1 * suite.R1 * suite.R1).is_zero());
        CHECK(!(suite.R1 * suite.R1).is_zero());
        CHECK(evaluate(InvariantExpr::parse("tr(1 2 3)"), {suite.T1, suite.T2, suite.T3}) ==
              Scalar::of(f, 2));
        // nilpotency makes every single-matrix sigma vanish
        for (const auto* m : {&suite.R1, &suite.R2, &suite.R3, &suite.T1, &suite.T2, &suite.T3})
            for (int t = 1; t <= 3; ++t)
                CHECK(m->sigma(t).is_zero());
    }
    CHECK_THROWS_AS(NilpotentTestSuite::build(FieldDescriptor::rationals()), DomainError);
    CHECK_THROWS_AS(NilpotentTestSuite::build(FieldDescriptor::prime_field(7)), DomainError);
}

TEST_CASE("f1: tr(T1 T2 T3) = 2 refutes the empty ansatz") {
    auto rep = verify_indecomposability_argument(NilpotentTarget::F1, QIS);
    CHECK(rep.pass);
    CHECK(rep.refuted);
    REQUIRE(rep.residual.has_value());
    CHECK(*rep.residual == Scalar::of(QIS, 2));
}

TEST_CASE("f2: alpha = 0, residual 1 + (1 - 2 sqrt2) i") {
    auto rep = verify_indecomposability_argument(NilpotentTarget::F2, QIS);
    CHECK(rep.pass);
    REQUIRE(rep.steps.size() == 2);
    CHECK(rep.steps[0].result == "alpha = 0");
    CHECK(rep.refuted);
    REQUIRE(rep.residual.has_value());
    CHECK(*rep.residual == ext(1, 1, 0, -2)); // 1 + i - 2 i sqrt2
    // the derived shape at (2,1,1) is exactly the ansatz product
    CHECK(rep.derived_shape == std::vector<std::string>{"tr(1 2)*tr(1 3)"});
    CHECK(rep.shape_extras.empty());
}

TEST_CASE("f3: alpha = beta = gamma = 0, residual 2(i-1)(sqrt2-1)") {
    auto rep = verify_indecomposability_argument(NilpotentTarget::F3, QIS);
    CHECK(rep.pass);
    REQUIRE(rep.steps.size() == 4);
    CHECK(rep.steps[0].result == "alpha = 0");
    CHECK(rep.steps[1].result == "beta = 0");
    CHECK(rep.steps[2].result == "gamma = 0");
    CHECK(rep.refuted);
    REQUIRE(rep.residual.has_value());
    // 2(i-1)(sqrt2-1) = 2 - 2i - 2 sqrt2 + 2 i sqrt2
    CHECK(*rep.residual == ext(2, -2, -2, 2));
    // cross-check over F17: same eliminations, nonzero residual
    auto rep17 = verify_indecomposability_argument(NilpotentTarget::F3, F17);
    CHECK(rep17.pass);
    Scalar i17 = embed_special(SpecialElement::I, F17);
    Scalar s17 = embed_special(SpecialElement::Sqrt2, F17);
    Scalar two = Scalar::of(F17, 2);
    CHECK(*rep17.residual == two * (i17 - Scalar::one(F17)) * (s17 - Scalar::one(F17)));
}

TEST_CASE("f4: the eight-parameter chain ends at 6 gamma = -1") {
    auto rep = verify_indecomposability_argument(NilpotentTarget::F4, QIS);
    CHECK(rep.pass);
    REQUIRE(rep.steps.size() == 8);
    CHECK(rep.steps[0].result == "delta = (-1)*gamma");
    CHECK(rep.steps[1].result == "alpha1 = (2)*gamma");
    CHECK(rep.steps[2].result == "alpha2 = (2)*gamma");
    CHECK(rep.steps[3].result == "alpha3 = (2)*gamma");
    CHECK(rep.steps[4].result == "beta1 = (-1)*gamma");
    CHECK(rep.steps[5].result == "beta2 = (-1)*gamma");
    CHECK(rep.steps[6].result == "beta3 = (-1)*gamma");
    CHECK(rep.consistent);
    REQUIRE(rep.gamma_value.has_value());
    CHECK(*rep.gamma_value == Scalar::of(QIS, mpq_class(-1, 6)));
    REQUIRE(rep.final_equation_normalized.has_value());
    CHECK(*rep.final_equation_normalized == "6*gamma = -1");
    REQUIRE(rep.unsolvable_in_char3.has_value());
    CHECK(*rep.unsolvable_in_char3);
}

TEST_CASE("f4 over F17: consistent with gamma = -1/6 mod 17") {
    auto rep = verify_indecomposability_argument(NilpotentTarget::F4, F17);
    CHECK(rep.pass);
    CHECK(rep.consistent);
    REQUIRE(rep.gamma_value.has_value());
    // -1/6 mod 17: 6^-1 = 3, so gamma = -3 = 14
    CHECK(*rep.gamma_value == Scalar::of(F17, 14));
    // the eliminations agree with the characteristic-zero run
    CHECK(rep.steps[0].result == "delta = (16)*gamma");
    CHECK(rep.steps[1].result == "alpha1 = (2)*gamma");
}

TEST_SUITE_END();
