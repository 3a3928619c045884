#include <doctest.h>

#include <fstream>
#include <random>

#include "invkit/json_io.hpp"

using namespace invkit;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F7 = FieldDescriptor::prime_field(7);
const FieldDescriptor QIS = FieldDescriptor::q_adjoin_i_sqrt2();

} // namespace

TEST_SUITE_BEGIN("json_io");

TEST_CASE("scalar encodings") {
    CHECK(scalar_to_json(Scalar::of(Q, mpq_class(1, 2))) == Json("1/2"));
    CHECK(scalar_to_json(Scalar::of(Q, -3)) == Json("-3"));
    CHECK(scalar_to_json(Scalar::of(F7, 5)) == Json(5));
    Scalar i = embed_special(SpecialElement::I, QIS);
    Scalar s = embed_special(SpecialElement::Sqrt2, QIS);
    Json j = scalar_to_json(Scalar::of(QIS, mpq_class(1, 2)) + i - s);
    CHECK(j == Json::array({"1/2", "1", "-1", "0"}));
}

TEST_CASE("scalar round trips") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int iter = 0; iter < 50; ++iter) {
        Scalar a = Scalar::of(Q, mpq_class(dist(rng), 7));
        CHECK(scalar_from_json(Q, scalar_to_json(a)) == a);
        Scalar b = Scalar::of(F7, dist(rng));
        CHECK(scalar_from_json(F7, scalar_to_json(b)) == b);
        Scalar c{QIS, sv::ext(QIS, mpq_class(dist(rng), 3), dist(rng), dist(rng), dist(rng))};
        CHECK(scalar_from_json(QIS, scalar_to_json(c)) == c);
    }
    CHECK_THROWS_AS(scalar_from_json(Q, Json("1/0")), Error);
}

TEST_CASE("matrix round trip validates kind") {
    ConcreteMatrix m = ConcreteMatrix::sym6_ints(Q, 1, 2, 0, -1, 3, 5);
    Json j = matrix_to_json(m);
    CHECK(j["kind"] == "symmetric");
    CHECK(matrix_from_json(Q, j) == m);
    // tampering with one mirror entry must be rejected, not symmetrized
    j["entries"][1] = "99";
    CHECK_THROWS_AS(matrix_from_json(Q, j), DomainError);
}

TEST_CASE("polynomial round trip") {
    Polynomial p = expand(InvariantExpr::parse("tr(1 2)"), MatrixKind::SkewSymmetric, 3, 2);
    Json j = polynomial_to_json(p);
    CHECK(polynomial_from_json(Q, j) == p);
    Polynomial z = Polynomial::zero(Q);
    CHECK(polynomial_from_json(Q, polynomial_to_json(z)) == z);
}

TEST_CASE("tuple file round trip") {
    TupleFile f;
    f.field = Q;
    f.n = 3;
    f.d = 2;
    f.kind = MatrixKind::Symmetric;
    f.tuples.push_back(MatrixTuple::of({ConcreteMatrix::sym6_ints(Q, 0, 1, 0, 0, 0, 0),
                                        ConcreteMatrix::sym6_ints(Q, 0, 0, 0, 0, 1, 0)}));
    Json j = tuple_file_to_json(f);
    TupleFile g = tuple_file_from_json(j);
    CHECK(g.field == f.field);
    CHECK(g.tuples.size() == 1);
    CHECK(g.tuples[0].mats[0] == f.tuples[0].mats[0]);
    CHECK(g.tuples[0].mats[1] == f.tuples[0].mats[1]);

    // header mismatch is a parse error
    j["tuples"][0][0]["kind"] = "general";
    CHECK_THROWS_AS(tuple_file_from_json(j), Error);
}

TEST_CASE("set serialization") {
    Json j = set_to_json(standard_set("o3-skew", 2));
    CHECK(j["case"] == "o3-skew");
    CHECK(j["exprs"].size() == 3);
    CHECK(j["exprs"][0] == "sigma_2(1)");
}

TEST_CASE("minimality report schema") {
    MinimalityReport rep = verify_minimality("o3-skew", Q);
    Json j = report_to_json(rep);
    CHECK(j["case"] == "o3-skew");
    CHECK(j["entries"].size() == 10);
    for (const auto& e : j["entries"]) {
        CHECK(e.contains("f"));
        CHECK(e.contains("pass"));
        CHECK(e.contains("separator_u"));
    }
    CHECK(j["all_pass"] == true);
}

TEST_CASE("reports serialize deterministically") {
    MinimalityReport rep1 = verify_minimality("o3-sym-d2", Q);
    MinimalityReport rep2 = verify_minimality("o3-sym-d2", Q);
    CHECK(report_to_json(rep1).dump() == report_to_json(rep2).dump());
}

TEST_CASE("shipped witness fixtures match the built-in tables") {
    struct CaseSpec {
        const char* name;
        std::vector<int> ds;
    };
    for (const CaseSpec& cs :
         {CaseSpec{"gl3-d2", {2}}, CaseSpec{"o3-skew", {2, 3}}, CaseSpec{"o4-skew-d2", {2}},
          CaseSpec{"o3-sym-d2", {2}}}) {
        std::ifstream in(std::string(INVKIT_SOURCE_DIR) + "/data/witnesses/" + cs.name +
                         ".json");
        REQUIRE(in);
        Json j = Json::parse(in);
        Json expected;
        expected["case"] = cs.name;
        expected["field"] = "Q";
        Json arr = Json::array();
        for (int d : cs.ds) {
            InvariantSet set = standard_set(cs.name, d);
            for (const auto& f : set.exprs)
                arr.push_back(witness_to_json(builtin_witness(cs.name, d, f, Q)));
        }
        expected["witnesses"] = std::move(arr);
        CHECK(j == expected);
    }
}

TEST_SUITE_END();
