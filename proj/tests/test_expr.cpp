#include <doctest.h>

#include <random>

#include "invkit/sets.hpp"

using namespace invkit;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

ConcreteMatrix E(int i, int j, int n = 3) {
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n),
                                                std::vector<std::int64_t>(n, 0));
    rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 1;
    return ConcreteMatrix::from_ints(Q, MatrixKind::General, n, rows);
}

} // namespace

TEST_SUITE_BEGIN("expr");

TEST_CASE("parse and print round trip") {
    for (const char* text :
         {"tr(1 2)", "sigma_2(1 2)", "tr(1 1 2 2 1 2)", "det(1)", "tr(1' 2)", "sigma_3(2 1')"}) {
        InvariantExpr e = InvariantExpr::parse(text);
        CHECK(e.str() == text);
        CHECK(InvariantExpr::parse(e.str()) == e);
    }
    CHECK(InvariantExpr::parse("tr(1 2)") == InvariantExpr::trace(Word::of({1, 2})));
    CHECK(InvariantExpr::parse("sigma_2(1 2)") ==
          InvariantExpr::sigma(2, Word::of({1, 2})));
    CHECK(InvariantExpr::parse("tr(1 1 2 2 1 2)").word().length() == 6);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(InvariantExpr::parse("foo(1)"), ParseError);
    CHECK_THROWS_AS(InvariantExpr::parse("tr()"), ParseError);
    CHECK_THROWS_AS(InvariantExpr::parse("tr(1"), ParseError);
    CHECK_THROWS_AS(InvariantExpr::parse("tr(0)"), ParseError);
    CHECK_THROWS_AS(InvariantExpr::parse("tr(1) x"), ParseError);
    CHECK_THROWS_AS(InvariantExpr::parse("sigma_(1)"), ParseError);
    try {
        InvariantExpr::parse("tr(1 a)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("evaluate basics") {
    // the two sides of the tr(X1X2) witness
    auto tr12 = InvariantExpr::parse("tr(1 2)");
    ConcreteMatrix j2 = E(1, 2) + E(2, 3);
    CHECK(evaluate(tr12, {j2, E(3, 2)}) == Scalar::one(Q));
    CHECK(evaluate(tr12, {j2, E(1, 2)}) == Scalar::zero(Q));
    CHECK_THROWS_AS(evaluate(InvariantExpr::parse("tr(3)"), {j2, j2}), DomainError);
    CHECK_THROWS_AS(evaluate(InvariantExpr::parse("sigma_4(1)"), {j2}), DomainError);
}

TEST_CASE("expand basics") {
    Polynomial t1 = expand(InvariantExpr::parse("tr(1)"), MatrixKind::Symmetric, 3, 1);
    Polynomial expected = Polynomial::variable(Q, make_var(1, 1, 1)) +
                          Polynomial::variable(Q, make_var(2, 2, 1)) +
                          Polynomial::variable(Q, make_var(3, 3, 1));
    CHECK(t1 == expected);

    CHECK(expand(InvariantExpr::parse("tr(1)"), MatrixKind::SkewSymmetric, 3, 1).is_zero());

    // tr(Z1 Z2) = -2*(x21(1)x21(2) + x31(1)x31(2) + x32(1)x32(2))
    Polynomial t12 = expand(InvariantExpr::parse("tr(1 2)"), MatrixKind::SkewSymmetric, 3, 2);
    Polynomial want = Polynomial::zero(Q);
    for (auto [i, j] : {std::pair{2, 1}, {3, 1}, {3, 2}})
        want = want + Polynomial::variable(Q, make_var(i, j, 1)) *
                          Polynomial::variable(Q, make_var(i, j, 2));
    want = want.scaled(Scalar::of(Q, -2));
    CHECK(t12 == want);

    // skew expansions only involve variables with i > j
    for (const auto& [m, c] : t12.terms())
        for (auto [v, e] : MonoTable::instance().get(m).factors)
            CHECK(var_i(v) > var_j(v));
}

TEST_CASE("expansion multidegree") {
    auto e = InvariantExpr::parse("sigma_2(1 2)");
    CHECK(expr_multidegree(e, 4, 2) == MultiDegree{{2, 2}});
    CHECK(expr_degree(e, 4) == 4);
    auto dete = InvariantExpr::parse("det(1)");
    CHECK(expr_multidegree(dete, 3, 2) == MultiDegree{{3, 0}});
    Polynomial p = expand(e, MatrixKind::SkewSymmetric, 4, 2);
    CHECK(p.homogeneous_multidegree(2) == MultiDegree{{2, 2}});
}

TEST_CASE("evaluate respects expansion (substitution compatibility)") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::int64_t> dist(-2, 2);
    for (int iter = 0; iter < 20; ++iter) {
        // random symmetric pair
        std::int64_t a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng), e = dist(rng),
                     f = dist(rng);
        ConcreteMatrix m1 = ConcreteMatrix::sym6_ints(Q, a, b, c, d, e, f);
        ConcreteMatrix m2 = ConcreteMatrix::sym6_ints(Q, dist(rng), dist(rng), dist(rng),
                                                      dist(rng), dist(rng), dist(rng));
        for (const char* text : {"tr(1 2)", "tr(1 1 2)", "sigma_2(1 2)", "det(1)"}) {
            InvariantExpr expr = InvariantExpr::parse(text);
            Polynomial expansion = expand(expr, MatrixKind::Symmetric, 3, 2);
            std::vector<ConcreteMatrix> tuple = {m1, m2};
            Scalar direct = evaluate(expr, tuple);
            Scalar via_poly = expansion.evaluate([&](VarId v) {
                return tuple[static_cast<std::size_t>(var_k(v) - 1)].at(var_i(v), var_j(v));
            });
            CHECK(direct == via_poly);
        }
    }
}

TEST_CASE("cyclic invariance of trace words") {
    // expand(tr(w)) equals expand(tr(rot w)) for all words of length <= 5 here;
    // the acceptance suite pushes this to length 6
    for (MatrixKind kind :
         {MatrixKind::General, MatrixKind::Symmetric, MatrixKind::SkewSymmetric}) {
        for (int len = 2; len <= 4; ++len) {
            std::vector<int> word(static_cast<std::size_t>(len), 1);
            while (true) {
                Word w;
                for (int k : word)
                    w.letters.push_back({k, false});
                Word rot = w;
                std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
                CHECK(expand(InvariantExpr::trace(w), kind, 3, 2) ==
                      expand(InvariantExpr::trace(rot), kind, 3, 2));
                int pos = len - 1;
                while (pos >= 0 && word[static_cast<std::size_t>(pos)] == 2)
                    --pos;
                if (pos < 0)
                    break;
                ++word[static_cast<std::size_t>(pos)];
                for (int q = pos + 1; q < len; ++q)
                    word[static_cast<std::size_t>(q)] = 1;
            }
        }
    }
}

TEST_CASE("transpose-reversal identity for symmetric generics") {
    for (const char* fwd : {"tr(1 2 3)", "tr(1 1 2 3)", "tr(1 2 1 3)"}) {
        InvariantExpr e = InvariantExpr::parse(fwd);
        Word rev = e.word();
        std::reverse(rev.letters.begin(), rev.letters.end());
        CHECK(expand(e, MatrixKind::Symmetric, 3, 3) ==
              expand(InvariantExpr::trace(rev), MatrixKind::Symmetric, 3, 3));
    }
}

TEST_CASE("canonical cyclic/reversal form") {
    Word a = Word::of({1, 1, 2});
    Word b = Word::of({1, 2, 1});
    Word c = Word::of({2, 1, 1});
    CHECK(canonical_cyclic_reversal(a) == canonical_cyclic_reversal(b));
    CHECK(canonical_cyclic_reversal(a) == canonical_cyclic_reversal(c));
    // reversal: 1 2 2 3 reversed is 3 2 2 1 ~ cyclic 1 3 2 2
    CHECK(canonical_cyclic_reversal(Word::of({1, 2, 2, 3})) ==
          canonical_cyclic_reversal(Word::of({1, 3, 2, 2})));
    // but 1 2 1 3 and 1 1 2 3 are genuinely different classes
    CHECK(!(canonical_cyclic_reversal(Word::of({1, 2, 1, 3})) ==
            canonical_cyclic_reversal(Word::of({1, 1, 2, 3}))));
}

TEST_CASE("standard sets") {
    CHECK(standard_set("o3-skew", 2).exprs.size() == 3);
    CHECK(standard_set("o3-skew", 3).exprs.size() == 7);
    CHECK(standard_set("o3-sym-d2", 2).exprs.size() == 10);
    CHECK(standard_set("gl3-d2", 2).exprs.size() == 11);
    CHECK(standard_set("o4-skew-d2", 2).exprs.size() == 9);
    CHECK(standard_set("o3-sym-d3", 3).exprs.size() == 28);
    CHECK(standard_set("o3-sym-d3", 3, 3).exprs.size() == 29);
    CHECK(standard_set("o3-sym-d3-pool-G1", 3).exprs.size() == 20);
    CHECK(standard_set("o3-sym-d3-pool-G2", 3).exprs.size() == 10);
    CHECK(standard_set("gl2", 3).exprs.size() == 2 * 3 + 3 + 1);
    CHECK_THROWS_AS(standard_set("nope", 2), DomainError);
    CHECK_THROWS_AS(standard_set("gl3-d2", 3), DomainError);

    auto s = standard_set("o3-skew", 2);
    CHECK(s.contains(InvariantExpr::parse("sigma_2(1)")));
    CHECK(s.contains(InvariantExpr::parse("tr(1 2)")));
    CHECK(!s.contains(InvariantExpr::parse("tr(1 1)")));
    CHECK(s.without(InvariantExpr::parse("tr(1 2)")).exprs.size() == 2);
    CHECK_THROWS_AS(s.without(InvariantExpr::parse("tr(1 1)")), DomainError);
}

TEST_CASE("standard set members are O(n)/GL(n) invariant under exact conjugation") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::int64_t> dist(-2, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    auto random_signed_perm = [&](int n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n),
                                                    std::vector<std::int64_t>(n, 0));
        for (int i = 0; i < n; ++i)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[i])] =
                sign(rng) ? 1 : -1;
        return ConcreteMatrix::from_ints(Q, MatrixKind::General, n, rows);
    };
    auto random_of_kind = [&](MatrixKind kind, int n) {
        std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n),
                                                    std::vector<std::int64_t>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                std::int64_t v = dist(rng);
                if (kind == MatrixKind::Symmetric)
                    rows[i][j] = rows[j][i] = v;
                else if (kind == MatrixKind::SkewSymmetric) {
                    if (i != j) {
                        rows[i][j] = v;
                        rows[j][i] = -v;
                    }
                } else {
                    rows[i][j] = v;
                    rows[j][i] = dist(rng);
                }
            }
        return ConcreteMatrix::from_ints(Q, kind, n, rows);
    };
    for (const char* cs : {"o3-skew", "o3-sym-d2", "o4-skew-d2"}) {
        InvariantSet set = standard_set(cs, 2);
        std::vector<ConcreteMatrix> tuple;
        for (int k = 0; k < set.d; ++k)
            tuple.push_back(random_of_kind(set.kind, set.n));
        for (int iter = 0; iter < 10; ++iter) {
            ConcreteMatrix g = random_signed_perm(set.n);
            std::vector<ConcreteMatrix> conj;
            for (const auto& m : tuple)
                conj.push_back(g * m * g.transposed());
            for (const auto& e : set.exprs)
                CHECK(evaluate(e, tuple) == evaluate(e, conj));
        }
    }
}

TEST_SUITE_END();
