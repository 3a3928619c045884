#include <doctest.h>

#include <random>

#include "invkit/witness.hpp"

using namespace invkit;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

// Pfaffian of a 4x4 skew matrix: a12 a34 - a13 a24 + a14 a23
Scalar pfaffian4(const ConcreteMatrix& z) {
    REQUIRE(z.n() == 4);
    return z.at(1, 2) * z.at(3, 4) - z.at(1, 3) * z.at(2, 4) + z.at(1, 4) * z.at(2, 3);
}

ConcreteMatrix random_signed_perm(const FieldDescriptor& f, int n, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n),
                                                std::vector<std::int64_t>(n, 0));
    std::uniform_int_distribution<int> sign(0, 1);
    for (int i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[i])] = sign(rng) ? 1 : -1;
    return ConcreteMatrix::from_ints(f, MatrixKind::General, n, rows);
}

} // namespace

TEST_SUITE_BEGIN("witness");

TEST_CASE("separates is reflexively false and symmetric") {
    InvariantSet set = standard_set("o3-sym-d2", 2);
    std::mt19937_64 rng(4);
    SamplerDesc s;
    for (int iter = 0; iter < 5; ++iter) {
        MatrixTuple u = MatrixTuple::of({random_matrix_of_kind(Q, set.kind, 3, s, rng),
                                         random_matrix_of_kind(Q, set.kind, 3, s, rng)});
        MatrixTuple v = MatrixTuple::of({random_matrix_of_kind(Q, set.kind, 3, s, rng),
                                         random_matrix_of_kind(Q, set.kind, 3, s, rng)});
        CHECK(!separates(set, u, u).separated);
        CHECK(separates(set, u, v).separated == separates(set, v, u).separated);
    }
}

TEST_CASE("gl3 witness table: paper pairs") {
    auto wp = builtin_witness("gl3-d2", 2, InvariantExpr::parse("tr(1 2)"), Q);
    InvariantSet set = standard_set("gl3-d2", 2);
    auto rep = separates(set, wp.u, wp.v);
    CHECK(rep.separated);
    CHECK(rep.first_separator == InvariantExpr::parse("tr(1 2)"));
    CHECK(evaluate(wp.separator, wp.u.mats) == Scalar::one(Q));
    CHECK(evaluate(wp.separator, wp.v.mats) == Scalar::zero(Q));
    // removing the separator leaves an agreeing pair
    CHECK(!separates(set.without(wp.separator), wp.u, wp.v).separated);
}

TEST_CASE("verify_minimality gl3-d2 over Q, F3, F5, F7") {
    for (const auto& f : {Q, FieldDescriptor::prime_field(3), FieldDescriptor::prime_field(5),
                          FieldDescriptor::prime_field(7)}) {
        auto rep = verify_minimality("gl3-d2", f);
        CHECK(rep.entries.size() == 11);
        CHECK(rep.all_strict);
    }
}

TEST_CASE("verify_minimality o3-skew over Q, F3, F5, F7") {
    for (const auto& f : {Q, FieldDescriptor::prime_field(3), FieldDescriptor::prime_field(5),
                          FieldDescriptor::prime_field(7)}) {
        auto rep = verify_minimality("o3-skew", f);
        CHECK(rep.entries.size() == 3 + 7);
        CHECK(rep.all_strict);
    }
}

TEST_CASE("o3-skew d=3 triple trace values differ by a unit") {
    for (const auto& f : {Q, FieldDescriptor::prime_field(3)}) {
        auto wp = builtin_witness("o3-skew", 3, InvariantExpr::parse("tr(1 2 3)"), f);
        Scalar a = evaluate(wp.separator, wp.u.mats);
        Scalar b = evaluate(wp.separator, wp.v.mats);
        CHECK(a == Scalar::of(f, -1));
        CHECK(b == Scalar::of(f, 1));
        CHECK(!(a - b).is_zero());
    }
}

TEST_CASE("verify_minimality o4-skew-d2 over Q (and F3, F5, F7)") {
    auto rep = verify_minimality("o4-skew-d2", Q);
    CHECK(rep.entries.size() == 9);
    CHECK(rep.all_strict);
    // none of the shipped pairs degenerates modulo 3, 5 or 7
    for (const auto& f : {FieldDescriptor::prime_field(3), FieldDescriptor::prime_field(5),
                          FieldDescriptor::prime_field(7)}) {
        auto repp = verify_minimality("o4-skew-d2", f);
        CHECK(repp.all_strict);
    }
}

TEST_CASE("o4 det witness is exactly 1 vs 0 with Pfaffian cross-check") {
    auto wp = builtin_witness("o4-skew-d2", 2, InvariantExpr::parse("det(1)"), Q);
    Scalar du = evaluate(wp.separator, wp.u.mats);
    Scalar dv = evaluate(wp.separator, wp.v.mats);
    CHECK(du == Scalar::one(Q));
    CHECK(dv == Scalar::zero(Q));
    // det of an even skew matrix is the square of its Pfaffian
    CHECK(pfaffian4(wp.u.mats[0]) * pfaffian4(wp.u.mats[0]) == du);
    CHECK(pfaffian4(wp.v.mats[0]) * pfaffian4(wp.v.mats[0]) == dv);
}

TEST_CASE("o4 mixed witness for tr(1 1 1 2) is the swapped tr(1 2 2 2) pair") {
    auto w_a = builtin_witness("o4-skew-d2", 2, InvariantExpr::parse("tr(1 2 2 2)"), Q);
    auto w_b = builtin_witness("o4-skew-d2", 2, InvariantExpr::parse("tr(1 1 1 2)"), Q);
    CHECK(w_b.u.mats[0] == w_a.u.mats[1]);
    CHECK(w_b.u.mats[1] == w_a.u.mats[0]);
    CHECK(w_b.v.mats[0] == w_a.v.mats[1]);
    CHECK(w_b.v.mats[1] == w_a.v.mats[0]);
}

TEST_CASE("verify_minimality o3-sym-d2 over Q, F3, F5, F7") {
    for (const auto& f : {Q, FieldDescriptor::prime_field(3), FieldDescriptor::prime_field(5),
                          FieldDescriptor::prime_field(7)}) {
        auto rep = verify_minimality("o3-sym-d2", f);
        CHECK(rep.entries.size() == 10);
        CHECK(rep.all_strict);
    }
}

TEST_CASE("o3-sym det witness gives -2 vs 2") {
    auto wp = builtin_witness("o3-sym-d2", 2, InvariantExpr::parse("det(1)"), Q);
    CHECK(evaluate(wp.separator, wp.u.mats) == Scalar::of(Q, -2));
    CHECK(evaluate(wp.separator, wp.v.mats) == Scalar::of(Q, 2));
}

TEST_CASE("witness transport by signed-permutation conjugation") {
    std::mt19937_64 rng(100);
    InvariantSet set = standard_set("o3-sym-d2", 2);
    auto wp = builtin_witness("o3-sym-d2", 2, InvariantExpr::parse("tr(1 1 2 2)"), Q);
    for (int iter = 0; iter < 10; ++iter) {
        ConcreteMatrix g = random_signed_perm(Q, 3, rng);
        auto conj_tuple = [&](const MatrixTuple& t) {
            std::vector<ConcreteMatrix> ms;
            for (const auto& m : t.mats) {
                ConcreteMatrix c = g * m * g.transposed();
                ms.push_back(
                    ConcreteMatrix::from_values(Q, MatrixKind::Symmetric, 3, c.values()));
            }
            return MatrixTuple::of(std::move(ms));
        };
        MatrixTuple cu = conj_tuple(wp.u), cv = conj_tuple(wp.v);
        auto before = separates(set, wp.u, wp.v);
        auto after = separates(set, cu, cv);
        REQUIRE(before.rows.size() == after.rows.size());
        for (std::size_t r = 0; r < before.rows.size(); ++r) {
            CHECK(before.rows[r].value_u == after.rows[r].value_u);
            CHECK(before.rows[r].value_v == after.rows[r].value_v);
        }
    }
}

TEST_CASE("unknown witness requests throw") {
    CHECK_THROWS_AS(builtin_witness("o3-sym-d2", 2, InvariantExpr::parse("tr(2 1)"), Q),
                    DomainError);
    CHECK_THROWS_AS(builtin_witness("bogus", 2, InvariantExpr::parse("tr(1)"), Q), DomainError);
}

TEST_CASE("search_witness basics") {
    InvariantSet set = standard_set("o3-skew", 2);
    InvariantExpr f = InvariantExpr::parse("sigma_2(1)");
    CHECK(!search_witness(set, f, SamplerDesc{}, 0).has_value());
    auto found = search_witness(set, f, SamplerDesc{}, 2000);
    REQUIRE(found.has_value());
    CHECK(evaluate(f, found->u.mats) != evaluate(f, found->v.mats));
    CHECK(!separates(set.without(f), found->u, found->v).separated);
    // reproducible: same seed, same pair
    auto again = search_witness(set, f, SamplerDesc{}, 2000);
    REQUIRE(again.has_value());
    CHECK(again->u.mats[0] == found->u.mats[0]);
    CHECK(again->v.mats[1] == found->v.mats[1]);
    CHECK_THROWS_AS(search_witness(set, InvariantExpr::parse("tr(1 1)"), SamplerDesc{}, 1),
                    DomainError);
}

TEST_CASE("search_witness rediscovers a gl2 det witness") {
    InvariantSet set = standard_set("gl2", 2);
    InvariantExpr f = InvariantExpr::parse("det(2)");
    auto found = search_witness(set, f, SamplerDesc{}, 100000);
    REQUIRE(found.has_value());
    CHECK(evaluate(f, found->u.mats) != evaluate(f, found->v.mats));
    CHECK(!separates(set.without(f), found->u, found->v).separated);
}

TEST_SUITE_END();
