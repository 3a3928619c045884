#include "invkit/sets.hpp"

#include <algorithm>

namespace invkit {

bool InvariantSet::contains(const InvariantExpr& e) const {
    return std::find(exprs.begin(), exprs.end(), e) != exprs.end();
}

InvariantSet InvariantSet::without(const InvariantExpr& e) const {
    InvariantSet s = *this;
    auto it = std::find(s.exprs.begin(), s.exprs.end(), e);
    if (it == s.exprs.end())
        throw DomainError("expression " + e.str() + " is not a member of set " + case_name);
    s.exprs.erase(it);
    return s;
}

namespace {

Word w(std::initializer_list<int> ks) { return Word::of(ks); }

InvariantExpr tr(std::initializer_list<int> ks) { return InvariantExpr::trace(w(ks)); }
InvariantExpr s2(std::initializer_list<int> ks) { return InvariantExpr::sigma(2, w(ks)); }
InvariantExpr det(std::initializer_list<int> ks) { return InvariantExpr::det(w(ks)); }

} // namespace

InvariantSet standard_set(const std::string& case_name, int d, std::int64_t characteristic) {
    InvariantSet s;
    s.case_name = case_name;

    if (case_name == "gl2") {
        if (d < 1)
            throw DomainError("gl2 requires d >= 1");
        s.n = 2;
        s.d = d;
        s.kind = MatrixKind::General;
        for (int i = 1; i <= d; ++i) {
            s.exprs.push_back(tr({i}));
            s.exprs.push_back(det({i}));
        }
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                s.exprs.push_back(tr({i, j}));
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                for (int k = j + 1; k <= d; ++k)
                    s.exprs.push_back(tr({i, j, k}));
        return s;
    }

    if (case_name == "gl3-d2") {
        if (d != 2)
            throw DomainError("gl3-d2 requires d = 2");
        s.n = 3;
        s.d = 2;
        s.kind = MatrixKind::General;
        for (int i = 1; i <= 2; ++i) {
            s.exprs.push_back(tr({i}));
            s.exprs.push_back(s2({i}));
            s.exprs.push_back(det({i}));
        }
        s.exprs.push_back(tr({1, 2}));
        s.exprs.push_back(tr({1, 1, 2}));
        s.exprs.push_back(tr({1, 2, 2}));
        s.exprs.push_back(tr({1, 1, 2, 2}));
        s.exprs.push_back(tr({1, 1, 2, 2, 1, 2}));
        return s;
    }

    if (case_name == "o3-skew") {
        if (d < 1)
            throw DomainError("o3-skew requires d >= 1");
        s.n = 3;
        s.d = d;
        s.kind = MatrixKind::SkewSymmetric;
        for (int i = 1; i <= d; ++i)
            s.exprs.push_back(s2({i}));
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                s.exprs.push_back(tr({i, j}));
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                for (int k = j + 1; k <= d; ++k)
                    s.exprs.push_back(tr({i, j, k}));
        return s;
    }

    if (case_name == "o4-skew-d2") {
        if (d != 2)
            throw DomainError("o4-skew-d2 requires d = 2");
        s.n = 4;
        s.d = 2;
        s.kind = MatrixKind::SkewSymmetric;
        for (int i = 1; i <= 2; ++i) {
            s.exprs.push_back(s2({i}));
            s.exprs.push_back(det({i}));
        }
        s.exprs.push_back(tr({1, 2}));
        s.exprs.push_back(s2({1, 2}));
        s.exprs.push_back(tr({1, 1, 2, 2}));
        s.exprs.push_back(tr({1, 1, 1, 2}));
        s.exprs.push_back(tr({1, 2, 2, 2}));
        return s;
    }

    if (case_name == "o3-sym-d2") {
        if (d != 2)
            throw DomainError("o3-sym-d2 requires d = 2");
        s.n = 3;
        s.d = 2;
        s.kind = MatrixKind::Symmetric;
        for (int i = 1; i <= 2; ++i) {
            s.exprs.push_back(tr({i}));
            s.exprs.push_back(s2({i}));
            s.exprs.push_back(det({i}));
        }
        s.exprs.push_back(tr({1, 2}));
        s.exprs.push_back(tr({1, 1, 2}));
        s.exprs.push_back(tr({1, 2, 2}));
        s.exprs.push_back(tr({1, 1, 2, 2}));
        return s;
    }

    if (case_name == "o3-sym-d3") {
        if (d != 3)
            throw DomainError("o3-sym-d3 requires d = 3");
        s.n = 3;
        s.d = 3;
        s.kind = MatrixKind::Symmetric;
        for (int i = 1; i <= 3; ++i) {
            s.exprs.push_back(tr({i}));
            s.exprs.push_back(s2({i}));
            s.exprs.push_back(det({i}));
        }
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) {
                s.exprs.push_back(tr({i, j}));
                s.exprs.push_back(tr({i, i, j}));
                s.exprs.push_back(tr({i, j, j}));
                s.exprs.push_back(tr({i, i, j, j}));
            }
        s.exprs.push_back(tr({1, 2, 3}));
        s.exprs.push_back(tr({1, 1, 2, 3}));
        s.exprs.push_back(tr({2, 2, 1, 3}));
        s.exprs.push_back(tr({3, 3, 1, 2}));
        s.exprs.push_back(tr({1, 1, 2, 2, 3}));
        s.exprs.push_back(tr({1, 1, 3, 3, 2}));
        s.exprs.push_back(tr({2, 2, 3, 3, 1}));
        if (characteristic == 3)
            s.exprs.push_back(tr({1, 1, 2, 2, 3, 3}));
        return s;
    }

    if (case_name == "o3-sym-d3-pool-G1") {
        if (d != 3)
            throw DomainError("o3-sym-d3-pool-G1 requires d = 3");
        s.n = 3;
        s.d = 3;
        s.kind = MatrixKind::Symmetric;
        // f_ij, i < j
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                s.exprs.push_back(tr({i, i, j, j, i, j}));
        s.exprs.push_back(tr({1, 3, 2}));
        s.exprs.push_back(tr({1, 1, 2, 2, 3, 3})); // h1
        // tr(Y_i^2 Y_j Y_k) with j > k, i, j, k pairwise different
        s.exprs.push_back(tr({1, 1, 3, 2}));
        s.exprs.push_back(tr({2, 2, 3, 1}));
        s.exprs.push_back(tr({3, 3, 2, 1}));
        // tr(Y_i^2 Y_j^2 Y_k) with i > j
        s.exprs.push_back(tr({2, 2, 1, 1, 3}));
        s.exprs.push_back(tr({3, 3, 1, 1, 2}));
        s.exprs.push_back(tr({3, 3, 2, 2, 1}));
        // r_ijk = tr(Y_i^2 Y_j Y_i Y_k), j < k
        s.exprs.push_back(tr({1, 1, 2, 1, 3}));
        s.exprs.push_back(tr({2, 2, 1, 2, 3}));
        s.exprs.push_back(tr({3, 3, 1, 3, 2}));
        // s_ijk = tr(Y_i^2 Y_j^2 Y_i Y_k), i, j, k pairwise different
        s.exprs.push_back(tr({1, 1, 2, 2, 1, 3}));
        s.exprs.push_back(tr({1, 1, 3, 3, 1, 2}));
        s.exprs.push_back(tr({2, 2, 1, 1, 2, 3}));
        s.exprs.push_back(tr({2, 2, 3, 3, 2, 1}));
        s.exprs.push_back(tr({3, 3, 1, 1, 3, 2}));
        s.exprs.push_back(tr({3, 3, 2, 2, 3, 1}));
        return s;
    }

    if (case_name == "o3-sym-d3-pool-G2") {
        if (d != 3)
            throw DomainError("o3-sym-d3-pool-G2 requires d = 3");
        s.n = 3;
        s.d = 3;
        s.kind = MatrixKind::Symmetric;
        s.exprs.push_back(tr({1, 1, 3, 3, 2, 2})); // h2
        // a_ijk = tr(Y_i Y_j^2 Y_k^2 Y_j Y_k), j < k
        s.exprs.push_back(tr({1, 2, 2, 3, 3, 2, 3}));
        s.exprs.push_back(tr({2, 1, 1, 3, 3, 1, 3}));
        s.exprs.push_back(tr({3, 1, 1, 2, 2, 1, 2}));
        // b_ijk = tr(Y_i^2 Y_j^2 Y_i Y_k^2), j < k
        s.exprs.push_back(tr({1, 1, 2, 2, 1, 3, 3}));
        s.exprs.push_back(tr({2, 2, 1, 1, 2, 3, 3}));
        s.exprs.push_back(tr({3, 3, 1, 1, 3, 2, 2}));
        // c_ijk = tr(Y_i^2 Y_j^2 Y_k^2 Y_j Y_k), j < k
        s.exprs.push_back(tr({1, 1, 2, 2, 3, 3, 2, 3}));
        s.exprs.push_back(tr({2, 2, 1, 1, 3, 3, 1, 3}));
        s.exprs.push_back(tr({3, 3, 1, 1, 2, 2, 1, 2}));
        return s;
    }

    throw DomainError("unknown case '" + case_name + "'");
}

std::vector<std::string> standard_case_names() {
    return {"gl2",        "gl3-d2",     "o3-skew",          "o4-skew-d2",
            "o3-sym-d2",  "o3-sym-d3",  "o3-sym-d3-pool-G1", "o3-sym-d3-pool-G2"};
}

} // namespace invkit
