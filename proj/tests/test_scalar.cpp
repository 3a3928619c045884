#include <doctest.h>

#include <random>

#include "invkit/scalar.hpp"

using namespace invkit;

namespace {

Scalar q(long num, long den = 1) {
    return Scalar::of(FieldDescriptor::rationals(), mpq_class(num, den));
}

// random nonzero-ish element, small coordinates
Scalar random_element(const FieldDescriptor& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-6, 6);
    switch (f.kind()) {
    case FieldKind::Rationals: {
        long d = 0;
        while (d == 0)
            d = dist(rng);
        return Scalar::of(f, mpq_class(dist(rng), d));
    }
    case FieldKind::PrimeField:
    case FieldKind::PrimeFieldWithRoots:
        return Scalar::of(f, dist(rng));
    case FieldKind::QAdjoinISqrt2:
        return {f, sv::ext(f, dist(rng), dist(rng), dist(rng), dist(rng))};
    }
    return Scalar::zero(f);
}

} // namespace

TEST_SUITE_BEGIN("scalar");

TEST_CASE("field descriptor validation") {
    CHECK_THROWS_AS(FieldDescriptor::prime_field(2), DomainError);
    CHECK_THROWS_AS(FieldDescriptor::prime_field(9), DomainError);
    CHECK_NOTHROW(FieldDescriptor::prime_field(3));
    CHECK_NOTHROW(FieldDescriptor::prime_field(1000003));
    // 17 = 1 mod 8, 4^2 = -1, 6^2 = 2
    CHECK_NOTHROW(FieldDescriptor::prime_field_with_roots(17, 4, 6));
    CHECK_THROWS_AS(FieldDescriptor::prime_field_with_roots(17, 5, 6), DomainError);
    CHECK_THROWS_AS(FieldDescriptor::prime_field_with_roots(7, 2, 3), DomainError);
    CHECK(FieldDescriptor::prime_field(5).characteristic() == 5);
    CHECK(FieldDescriptor::rationals().characteristic() == 0);
}

TEST_CASE("field name round trip") {
    for (const auto& f :
         {FieldDescriptor::rationals(), FieldDescriptor::prime_field(7),
          FieldDescriptor::q_adjoin_i_sqrt2(), FieldDescriptor::f17_with_roots()}) {
        CHECK(FieldDescriptor::parse(f.name()) == f);
    }
    CHECK_THROWS_AS(FieldDescriptor::parse("F2"), DomainError);
    CHECK_THROWS_AS(FieldDescriptor::parse("R"), ParseError);
}

TEST_CASE("rational arithmetic") {
    CHECK(scalar_arith(q(1, 2), q(1, 3), ScalarOp::Add) == q(5, 6));
    CHECK(q(1, 2) * q(2, 3) == q(1, 3));
    CHECK((q(3, 4) / q(3, 2)) == q(1, 2));
    CHECK_THROWS_AS(q(1) / q(0), DivisionByZeroError);
    CHECK(q(2, 4).str() == "1/2");
    CHECK(q(-6, 3).str() == "-2");
}

TEST_CASE("prime field arithmetic") {
    auto f3 = FieldDescriptor::prime_field(3);
    CHECK(scalar_arith(Scalar::of(f3, 2), Scalar::of(f3, 2), ScalarOp::Mul) == Scalar::of(f3, 1));
    CHECK(Scalar::of(f3, -1) == Scalar::of(f3, 2));
    auto f7 = FieldDescriptor::prime_field(7);
    CHECK(Scalar::of(f7, 3) / Scalar::of(f7, 5) == Scalar::of(f7, 2)); // 5*2 = 10 = 3
    CHECK_THROWS_AS(Scalar::of(f7, 1) / Scalar::zero(f7), DivisionByZeroError);
    CHECK_THROWS_AS(Scalar::of(f3, 1) + Scalar::of(f7, 1), FieldMismatchError);
}

TEST_CASE("extension field basis products") {
    auto f = FieldDescriptor::q_adjoin_i_sqrt2();
    Scalar i = embed_special(SpecialElement::I, f);
    Scalar s = embed_special(SpecialElement::Sqrt2, f);
    Scalar is = i * s;
    CHECK(is == Scalar{f, sv::ext(f, 0, 0, 0, 1)});
    CHECK(i * i == Scalar::of(f, -1));
    CHECK(s * s == Scalar::of(f, 2));
    CHECK(is * is == Scalar::of(f, -2));
    CHECK((i * s).str() == "i*sqrt2");
    Scalar mixed = Scalar::of(f, mpq_class(1, 2)) + i - s;
    CHECK(mixed.str() == "1/2 + i - sqrt2");
    // inversion uses the norm down to Q
    CHECK(mixed * (Scalar::one(f) / mixed) == Scalar::one(f));
}

TEST_CASE("embed_special in F17") {
    auto f = FieldDescriptor::f17_with_roots();
    Scalar i = embed_special(SpecialElement::I, f);
    Scalar s = embed_special(SpecialElement::Sqrt2, f);
    CHECK(i == Scalar::of(f, 4));
    CHECK(s == Scalar::of(f, 6));
    CHECK(i * i + Scalar::one(f) == Scalar::zero(f));
    CHECK(s * s - Scalar::of(f, 2) == Scalar::zero(f));
    CHECK_THROWS_AS(embed_special(SpecialElement::I, FieldDescriptor::rationals()), DomainError);
    CHECK_THROWS_AS(embed_special(SpecialElement::Sqrt2, FieldDescriptor::prime_field(7)),
                    DomainError);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(20240817);
    for (const auto& f :
         {FieldDescriptor::rationals(), FieldDescriptor::prime_field(5),
          FieldDescriptor::q_adjoin_i_sqrt2(), FieldDescriptor::f17_with_roots()}) {
        for (int iter = 0; iter < 200; ++iter) {
            Scalar a = random_element(f, rng);
            Scalar b = random_element(f, rng);
            Scalar c = random_element(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero())
                CHECK(a * (Scalar::one(f) / a) == Scalar::one(f));
        }
    }
}

TEST_CASE("sqrt roots square correctly in every supporting field") {
    for (const auto& f :
         {FieldDescriptor::q_adjoin_i_sqrt2(), FieldDescriptor::f17_with_roots(),
          FieldDescriptor::prime_field_with_roots(41, 9, 17)}) {
        Scalar i = embed_special(SpecialElement::I, f);
        Scalar s = embed_special(SpecialElement::Sqrt2, f);
        CHECK((i * i + Scalar::one(f)).is_zero());
        CHECK((s * s - Scalar::of(f, 2)).is_zero());
    }
}

TEST_CASE("every nonzero extension element is invertible via 4x4 solve") {
    // independent check of the norm-based inverse: solve the linear system
    // a * x = 1 in the basis {1, i, sqrt2, i sqrt2} by Gaussian elimination
    auto f = FieldDescriptor::q_adjoin_i_sqrt2();
    std::mt19937_64 rng(91);
    auto basis_vec = [&](const Scalar& s) {
        const auto& e = *std::get<std::shared_ptr<const Ext4>>(s.value());
        return e;
    };
    for (int iter = 0; iter < 60; ++iter) {
        Scalar a = random_element(f, rng);
        if (a.is_zero())
            continue;
        // columns: a * basis_j
        Scalar bas[4] = {Scalar::one(f), embed_special(SpecialElement::I, f),
                         embed_special(SpecialElement::Sqrt2, f),
                         embed_special(SpecialElement::I, f) *
                             embed_special(SpecialElement::Sqrt2, f)};
        mpq_class M[4][5];
        for (int col = 0; col < 4; ++col) {
            Ext4 cvec = basis_vec(a * bas[col]);
            for (int row = 0; row < 4; ++row)
                M[row][col] = cvec[static_cast<std::size_t>(row)];
        }
        M[0][4] = 1;
        for (int row = 1; row < 4; ++row)
            M[row][4] = 0;
        // forward elimination with partial pivot by nonzero
        for (int col = 0; col < 4; ++col) {
            int piv = -1;
            for (int row = col; row < 4; ++row)
                if (M[row][col] != 0) {
                    piv = row;
                    break;
                }
            REQUIRE(piv >= 0); // invertibility
            for (int q2 = 0; q2 < 5; ++q2)
                std::swap(M[col][q2], M[piv][q2]);
            for (int row = 0; row < 4; ++row) {
                if (row == col || M[row][col] == 0)
                    continue;
                mpq_class factor = M[row][col] / M[col][col];
                for (int q2 = col; q2 < 5; ++q2)
                    M[row][q2] -= factor * M[col][q2];
            }
        }
        Scalar x = Scalar::zero(f);
        for (int col = 0; col < 4; ++col)
            x = x + Scalar{f, sv::ext(f, M[col][4] / M[col][col], 0, 0, 0)} * bas[col];
        CHECK(a * x == Scalar::one(f));
        CHECK(x == Scalar::one(f) / a);
    }
}

TEST_SUITE_END();
