#include <doctest.h>

#include <random>

#include "invkit/span.hpp"

using namespace invkit;

namespace {

QVec qv(std::vector<std::pair<std::int64_t, long>> entries) {
    QVec v;
    for (auto [c, x] : entries)
        v.e.emplace_back(c, mpz_class(x));
    return v;
}

FpVec fv(std::vector<std::pair<std::int64_t, std::int64_t>> entries) {
    FpVec v;
    v.e = std::move(entries);
    return v;
}

} // namespace

TEST_SUITE_BEGIN("span");

TEST_CASE("rational membership with certificate") {
    // candidates: (1,2,0), (0,1,1); target (2,5,1) = 2*c0 + 1*c1
    std::vector<QVec> cands = {qv({{0, 1}, {1, 2}}), qv({{1, 1}, {2, 1}})};
    auto m = q_span_membership(cands, qv({{0, 2}, {1, 5}, {2, 1}}));
    REQUIRE(m.in_span);
    REQUIRE(m.combination.size() == 2);
    CHECK(m.combination[0].first == 0);
    CHECK(m.combination[0].second == 2);
    CHECK(m.combination[1].first == 1);
    CHECK(m.combination[1].second == 1);

    // not in span
    auto m2 = q_span_membership(cands, qv({{2, 1}, {3, 1}}));
    CHECK(!m2.in_span);

    // fractional combination
    auto m4 = q_span_membership({qv({{0, 2}, {1, 4}})}, qv({{0, 1}, {1, 2}}));
    REQUIRE(m4.in_span);
    REQUIRE(m4.combination.size() == 1);
    CHECK(m4.combination[0].second == mpq_class(1, 2));
}

TEST_CASE("zero target is trivially in span") {
    auto m = q_span_membership({}, QVec{});
    CHECK(m.in_span);
    CHECK(m.combination.empty());
}

TEST_CASE("dependent candidates are tolerated") {
    std::vector<QVec> cands = {qv({{0, 1}, {1, 1}}), qv({{0, 2}, {1, 2}}),
                               qv({{0, -3}, {1, -3}})};
    QSpanBasis basis;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cands.size(); ++j) {
        QVec v = cands[j];
        v.e.emplace_back(QSpanBasis::kBookkeepingBase + static_cast<std::int64_t>(j), 1);
        if (basis.insert(std::move(v)))
            ++rank;
    }
    CHECK(rank == 1);
    auto m = q_span_membership(cands, qv({{0, 5}, {1, 5}}));
    CHECK(m.in_span);
}

TEST_CASE("random rational consistency against direct recomputation") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> dim_d(3, 8), nc_d(2, 6), coeff(-3, 3);
    for (int iter = 0; iter < 200; ++iter) {
        int dim = dim_d(rng), nc = nc_d(rng);
        std::vector<QVec> cands;
        for (int j = 0; j < nc; ++j) {
            QVec v;
            for (int r = 0; r < dim; ++r) {
                int x = coeff(rng);
                if (x)
                    v.e.emplace_back(r, mpz_class(x));
            }
            cands.push_back(std::move(v));
        }
        // half the time the target is a known combination, half random
        QVec target;
        if (iter % 2 == 0) {
            std::vector<mpz_class> dense(static_cast<std::size_t>(dim), 0);
            for (const auto& c : cands) {
                int mult = coeff(rng);
                for (const auto& [r, x] : c.e)
                    dense[static_cast<std::size_t>(r)] += mult * x;
            }
            for (int r = 0; r < dim; ++r)
                if (dense[static_cast<std::size_t>(r)] != 0)
                    target.e.emplace_back(r, dense[static_cast<std::size_t>(r)]);
        } else {
            for (int r = 0; r < dim; ++r) {
                int x = coeff(rng);
                if (x)
                    target.e.emplace_back(r, mpz_class(x));
            }
        }
        auto m = q_span_membership(cands, target);
        if (iter % 2 == 0)
            CHECK(m.in_span);
        if (m.in_span) {
            std::vector<mpq_class> dense(static_cast<std::size_t>(dim), 0);
            for (const auto& [j, c] : m.combination)
                for (const auto& [r, x] : cands[j].e)
                    dense[static_cast<std::size_t>(r)] += c * mpq_class(x);
            for (const auto& [r, x] : target.e)
                dense[static_cast<std::size_t>(r)] -= mpq_class(x);
            for (const auto& v : dense)
                CHECK(v == 0);
        }
    }
}

TEST_CASE("prime field membership") {
    std::int64_t p = 5;
    std::vector<FpVec> cands = {fv({{0, 1}, {1, 2}}), fv({{1, 1}, {2, 1}})};
    auto m = fp_span_membership(p, cands, fv({{0, 2}, {1, 0}, {2, 1}}));
    REQUIRE(m.in_span); // 2*c0 + 1*c1 = (2, 4+1=5=0, 1)
    std::vector<std::int64_t> dense(3, 0);
    for (const auto& [j, c] : m.combination)
        for (const auto& [r, x] : cands[j].e)
            dense[static_cast<std::size_t>(r)] = (dense[static_cast<std::size_t>(r)] + c * x) % p;
    CHECK(dense[0] == 2);
    CHECK(dense[1] == 0);
    CHECK(dense[2] == 1);
    CHECK(!fp_span_membership(p, cands, fv({{3, 1}})).in_span);
}

TEST_CASE("rational solvability implies modular solvability") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<QVec> qc;
        std::vector<FpVec> fc;
        std::int64_t p = 1009;
        for (int j = 0; j < 4; ++j) {
            QVec v;
            FpVec w;
            for (int r = 0; r < 6; ++r) {
                int x = coeff(rng);
                if (x) {
                    v.e.emplace_back(r, mpz_class(x));
                    w.e.emplace_back(r, ((x % p) + p) % p);
                }
            }
            qc.push_back(std::move(v));
            fc.push_back(std::move(w));
        }
        QVec qt;
        FpVec ft;
        for (int r = 0; r < 6; ++r) {
            int x = coeff(rng);
            if (x) {
                qt.e.emplace_back(r, mpz_class(x));
                ft.e.emplace_back(r, ((x % p) + p) % p);
            }
        }
        auto mq = q_span_membership(qc, qt);
        auto mf = fp_span_membership(p, fc, ft);
        if (mq.in_span)
            CHECK(mf.in_span);
    }
}

TEST_SUITE_END();
