#include "invkit/witness.hpp"

#include <algorithm>

namespace invkit {

MatrixTuple MatrixTuple::of(std::vector<ConcreteMatrix> mats) {
    if (mats.empty())
        throw DomainError("empty tuple");
    MatrixTuple t;
    t.field = mats.front().field();
    t.n = mats.front().n();
    t.kind = mats.front().kind();
    for (const auto& m : mats) {
        if (m.field() != t.field)
            throw FieldMismatchError("tuple members live in different fields");
        if (m.n() != t.n)
            throw DomainError("tuple members have different sizes");
        if (m.kind() != t.kind)
            throw DomainError("tuple members have different kinds");
    }
    t.mats = std::move(mats);
    return t;
}

void MatrixTuple::check_compatible(const InvariantSet& set) const {
    if (n != set.n)
        throw DomainError("tuple size n = " + std::to_string(n) + " does not match set n = " +
                          std::to_string(set.n));
    if (d() < set.d)
        throw DomainError("tuple is shorter than the set's d");
    if (kind != set.kind)
        throw DomainError("tuple kind does not match the set's kind");
}

SeparationReport separates(const InvariantSet& set, const MatrixTuple& u, const MatrixTuple& v) {
    u.check_compatible(set);
    v.check_compatible(set);
    if (u.field != v.field)
        throw FieldMismatchError("tuples live in different fields");
    SeparationReport rep;
    for (const auto& e : set.exprs) {
        SeparationRow row{e, evaluate(e, u.mats), evaluate(e, v.mats), false};
        row.equal = row.value_u == row.value_v;
        if (!row.equal && !rep.separated) {
            rep.separated = true;
            rep.first_separator = e;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

Rows zero_rows(int n) { return Rows(static_cast<std::size_t>(n), std::vector<std::int64_t>(n, 0)); }

Rows eij(int n, int i, int j, std::int64_t v = 1) {
    Rows r = zero_rows(n);
    r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
    return r;
}

Rows add(Rows a, const Rows& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            a[i][j] += b[i][j];
    return a;
}

Rows negated(Rows a) {
    for (auto& row : a)
        for (auto& x : row)
            x = -x;
    return a;
}

// rows {{a,b,c},{b,d,e},{c,e,f}}
Rows sym(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
         std::int64_t f) {
    return {{a, b, c}, {b, d, e}, {c, e, f}};
}

struct WitnessData {
    MatrixKind kind;
    int n;
    std::vector<Rows> u;
    std::vector<Rows> v;
};

Rows J2() { return add(eij(3, 1, 2), eij(3, 2, 3)); }
Rows z12(int n = 3) { return add(eij(n, 1, 2), eij(n, 2, 1, -1)); }
Rows z13() { return add(eij(3, 1, 3), eij(3, 3, 1, -1)); }

// gl3 single-sigma realizations: sigma = (1,0,0), (0,1,0), (0,0,1)
Rows gl3_sigma1() { return eij(3, 1, 1); }
Rows gl3_sigma2() { return {{0, 0, 0}, {1, 0, -1}, {0, 1, 0}}; }
Rows gl3_sigma3() { return {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}; }

std::optional<WitnessData> find_witness(const std::string& case_name, int d,
                                        const std::string& f) {
    const MatrixKind G = MatrixKind::General;
    const MatrixKind S = MatrixKind::Symmetric;
    const MatrixKind K = MatrixKind::SkewSymmetric;

    if (case_name == "gl3-d2" && d == 2) {
        Rows Z = zero_rows(3);
        if (f == "tr(1)") return WitnessData{G, 3, {gl3_sigma1(), Z}, {Z, Z}};
        if (f == "sigma_2(1)") return WitnessData{G, 3, {gl3_sigma2(), Z}, {Z, Z}};
        if (f == "det(1)") return WitnessData{G, 3, {gl3_sigma3(), Z}, {Z, Z}};
        if (f == "tr(2)") return WitnessData{G, 3, {Z, gl3_sigma1()}, {Z, Z}};
        if (f == "sigma_2(2)") return WitnessData{G, 3, {Z, gl3_sigma2()}, {Z, Z}};
        if (f == "det(2)") return WitnessData{G, 3, {Z, gl3_sigma3()}, {Z, Z}};
        if (f == "tr(1 2)")
            return WitnessData{G, 3, {J2(), eij(3, 3, 2)}, {J2(), eij(3, 1, 2)}};
        Rows A112 = {{0, 1, 1}, {0, 1, -1}, {0, 1, -1}};
        Rows B112 = {{0, 0, 0}, {1, 0, 0}, {-1, 0, 0}};
        if (f == "tr(1 1 2)") return WitnessData{G, 3, {J2(), A112}, {J2(), B112}};
        // mirror case: slot-swapped tr(1 1 2) pair; the swapped 6-letter
        // word's agreement is not automatic and is pinned in tests
        if (f == "tr(1 2 2)") return WitnessData{G, 3, {A112, J2()}, {B112, J2()}};
        if (f == "tr(1 1 2 2)")
            return WitnessData{G, 3,
                               {J2(), {{0, 1, 0}, {0, -1, 0}, {1, 1, 1}}},
                               {J2(), {{0, 1, 0}, {1, 0, 0}, {1, 0, 0}}}};
        if (f == "tr(1 1 2 2 1 2)")
            return WitnessData{G, 3,
                               {J2(), {{1, 0, 0}, {1, -1, 0}, {1, -1, 0}}},
                               {J2(), {{-1, 0, 0}, {0, 0, 1}, {1, 0, 1}}}};
        return std::nullopt;
    }

    if (case_name == "o3-skew" && d == 2) {
        Rows Z = zero_rows(3);
        if (f == "sigma_2(1)") return WitnessData{K, 3, {z12(), Z}, {Z, Z}};
        if (f == "sigma_2(2)") return WitnessData{K, 3, {Z, z12()}, {Z, Z}};
        if (f == "tr(1 2)")
            return WitnessData{K, 3, {z12(), z12()}, {z12(), negated(z12())}};
        return std::nullopt;
    }

    if (case_name == "o3-skew" && d == 3) {
        Rows Z = zero_rows(3);
        if (f == "sigma_2(1)") return WitnessData{K, 3, {z12(), Z, Z}, {Z, Z, Z}};
        if (f == "sigma_2(2)") return WitnessData{K, 3, {Z, z12(), Z}, {Z, Z, Z}};
        if (f == "sigma_2(3)") return WitnessData{K, 3, {Z, Z, z12()}, {Z, Z, Z}};
        if (f == "tr(1 2)")
            return WitnessData{K, 3, {z12(), z12(), Z}, {z12(), negated(z12()), Z}};
        if (f == "tr(1 3)")
            return WitnessData{K, 3, {z12(), Z, z12()}, {z12(), Z, negated(z12())}};
        if (f == "tr(2 3)")
            return WitnessData{K, 3, {Z, z12(), z12()}, {Z, z12(), negated(z12())}};
        if (f == "tr(1 2 3)") {
            Rows A2 = {{0, 0, 1}, {0, 0, 1}, {-1, -1, 0}};
            // the printed B2 is not skew-symmetric; this is the unique
            // sign-consistent repair (full value table pinned in tests)
            Rows B2 = {{0, 0, 1}, {0, 0, -1}, {-1, 1, 0}};
            return WitnessData{K, 3, {z12(), A2, z13()}, {z12(), B2, z13()}};
        }
        return std::nullopt;
    }

    if (case_name == "o4-skew-d2" && d == 2) {
        Rows Z = zero_rows(4);
        if (f == "sigma_2(1)") return WitnessData{K, 4, {z12(4), Z}, {Z, Z}};
        if (f == "sigma_2(2)") return WitnessData{K, 4, {Z, z12(4)}, {Z, Z}};
        Rows Adet = {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};
        Rows Bdet = {{0, 1, 0, 1}, {-1, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}};
        if (f == "det(1)") return WitnessData{K, 4, {Adet, Z}, {Bdet, Z}};
        if (f == "det(2)") return WitnessData{K, 4, {Z, Adet}, {Z, Bdet}};
        if (f == "tr(1 2)") {
            // derived pair (Z1, Z2) vs (Z1, -Z2): the odd mixed traces
            // tr(Z1^3Z2) and tr(Z1Z2^3) vanish for it, every other set member
            // is even under negating one slot, and tr(Z1Z2) = -8 vs 8
            Rows W1 = {{0, 2, 1, 0}, {-2, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}};
            Rows W2 = {{0, -1, 3, 5}, {1, 0, 5, -3}, {-3, -5, 0, 9}, {-5, 3, -9, 0}};
            return WitnessData{K, 4, {W1, W2}, {W1, negated(W2)}};
        }
        if (f == "sigma_2(1 2)") {
            Rows A1 = {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
            Rows A2 = {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
            Rows B1 = {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
            return WitnessData{K, 4, {A1, A2}, {B1, A2}};
        }
        if (f == "tr(1 1 2 2)") {
            Rows A1 = {{0, 1, 1, 1}, {-1, 0, -1, -2}, {-1, 1, 0, -1}, {-1, 2, 1, 0}};
            Rows A2 = {{0, -1, 0, 1}, {1, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}};
            Rows B1 = {{0, -2, 0, -1}, {2, 0, 0, 2}, {0, 0, 0, 0}, {1, -2, 0, 0}};
            Rows B2 = {{0, 0, 1, 0}, {0, 0, 0, 0}, {-1, 0, 0, 1}, {0, 0, -1, 0}};
            return WitnessData{K, 4, {A1, A2}, {B1, B2}};
        }
        Rows A1m = {{0, 0, 1, 1}, {0, 0, 1, 1}, {-1, -1, 0, 0}, {-1, -1, 0, 0}};
        Rows A2m = {{0, 1, 0, 1}, {-1, 0, 0, -1}, {0, 0, 0, 1}, {-1, 1, -1, 0}};
        Rows B2m = {{0, 1, 0, -1}, {-1, 0, 0, 1}, {0, 0, 0, 1}, {1, -1, -1, 0}};
        if (f == "tr(1 2 2 2)") return WitnessData{K, 4, {A1m, A2m}, {A1m, B2m}};
        // swapped-slot construction (the set is stable under slot swap)
        if (f == "tr(1 1 1 2)") return WitnessData{K, 4, {A2m, A1m}, {B2m, A1m}};
        return std::nullopt;
    }

    if (case_name == "o3-sym-d2" && d == 2) {
        Rows Z = zero_rows(3);
        Rows s1 = sym(1, 0, 0, 0, 0, 0);   // sigma = (1,0,0)
        Rows s2m = sym(1, 0, 0, -1, 0, 0); // diag(1,-1,0), sigma = (0,-1,0)
        Rows s3m = sym(1, 0, 0, 1, 0, -2); // diag(1,1,-2), det = -2
        if (f == "tr(1)") return WitnessData{S, 3, {s1, Z}, {Z, Z}};
        if (f == "sigma_2(1)") return WitnessData{S, 3, {s2m, Z}, {Z, Z}};
        if (f == "det(1)") return WitnessData{S, 3, {s3m, Z}, {negated(s3m), Z}};
        if (f == "tr(2)") return WitnessData{S, 3, {Z, s1}, {Z, Z}};
        if (f == "sigma_2(2)") return WitnessData{S, 3, {Z, s2m}, {Z, Z}};
        if (f == "det(2)") return WitnessData{S, 3, {Z, s3m}, {Z, negated(s3m)}};
        if (f == "tr(1 2)")
            return WitnessData{S, 3,
                               {sym(0, 0, 1, 1, 0, 0), sym(0, 0, 0, 0, 1, 0)},
                               {sym(0, 0, 1, 1, 0, 0), sym(1, 0, 0, -1, 0, 0)}};
        if (f == "tr(1 1 2)")
            return WitnessData{S, 3,
                               {sym(0, 0, 0, 0, 1, 0), sym(0, 1, 0, 0, 0, 0)},
                               {sym(0, 0, 0, 0, 1, 0), sym(1, 0, 0, -1, 0, 0)}};
        if (f == "tr(1 2 2)") // slot-swapped tr(1 1 2) pair
            return WitnessData{S, 3,
                               {sym(0, 1, 0, 0, 0, 0), sym(0, 0, 0, 0, 1, 0)},
                               {sym(1, 0, 0, -1, 0, 0), sym(0, 0, 0, 0, 1, 0)}};
        if (f == "tr(1 1 2 2)")
            return WitnessData{S, 3,
                               {sym(0, 1, 0, 0, 0, 0), sym(0, 0, 0, 0, 1, 0)},
                               {sym(0, 0, 0, 0, 1, 0), sym(0, 0, 0, 1, 0, -1)}};
        return std::nullopt;
    }

    return std::nullopt;
}

MatrixTuple instantiate(const FieldDescriptor& field, MatrixKind kind, int n,
                        const std::vector<Rows>& rows) {
    std::vector<ConcreteMatrix> mats;
    mats.reserve(rows.size());
    for (const auto& r : rows)
        mats.push_back(ConcreteMatrix::from_ints(field, kind, n, r));
    return MatrixTuple::of(std::move(mats));
}

} // namespace

WitnessPair builtin_witness(const std::string& case_name, int d, const InvariantExpr& f,
                            const FieldDescriptor& field) {
    auto data = find_witness(case_name, d, f.str());
    if (!data)
        throw DomainError("no built-in witness for " + f.str() + " in case " + case_name +
                          " with d = " + std::to_string(d));
    return WitnessPair{case_name, d, f, instantiate(field, data->kind, data->n, data->u),
                       instantiate(field, data->kind, data->n, data->v)};
}

namespace {

MinimalityEntry check_entry(const InvariantSet& set, int d, const InvariantExpr& f,
                            const FieldDescriptor& field) {
    WitnessPair wp = builtin_witness(set.case_name, d, f, field);
    MinimalityEntry entry{d, f, WitnessStatus::Fail, Scalar::zero(field), Scalar::zero(field),
                          {}, ""};
    entry.separator_u = evaluate(f, wp.u.mats);
    entry.separator_v = evaluate(f, wp.v.mats);
    SeparationReport rest = separates(set.without(f), wp.u, wp.v);
    entry.agreement = rest.rows;
    if (rest.separated) {
        entry.status = WitnessStatus::Fail;
        entry.note = "pair is separated by " + rest.first_separator->str() +
                     ", which remains in the set";
    } else if (entry.separator_u == entry.separator_v) {
        entry.status = WitnessStatus::DegenerateInChar;
        entry.note = "separator values collide over " + field.name();
    } else {
        entry.status = WitnessStatus::Pass;
    }
    return entry;
}

} // namespace

MinimalityReport verify_minimality(const std::string& case_name, const FieldDescriptor& field) {
    MinimalityReport rep;
    rep.case_name = case_name;
    rep.field_name = field.name();
    std::vector<int> ds;
    if (case_name == "o3-skew")
        ds = {2, 3}; // the d = 2 table plus the d = 3 triple trace, which
                     // together cover every d
    else if (case_name == "gl3-d2" || case_name == "o4-skew-d2" || case_name == "o3-sym-d2")
        ds = {2};
    else
        throw DomainError("no witness table for case '" + case_name + "'");

    for (int d : ds) {
        InvariantSet set = standard_set(case_name, d, field.characteristic());
        for (const auto& f : set.exprs)
            rep.entries.push_back(check_entry(set, d, f, field));
    }
    rep.all_strict = std::all_of(rep.entries.begin(), rep.entries.end(), [](const auto& e) {
        return e.status == WitnessStatus::Pass;
    });
    rep.all_pass = std::all_of(rep.entries.begin(), rep.entries.end(), [](const auto& e) {
        return e.status != WitnessStatus::Fail;
    });
    return rep;
}

ConcreteMatrix random_matrix_of_kind(const FieldDescriptor& field, MatrixKind kind, int n,
                                     const SamplerDesc& sampler, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(sampler.lo, sampler.hi);
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n),
                                                std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            std::int64_t x = dist(rng);
            switch (kind) {
            case MatrixKind::General:
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
                if (i != j)
                    rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = dist(rng);
                break;
            case MatrixKind::Symmetric:
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
                rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = x;
                break;
            case MatrixKind::SkewSymmetric:
                if (i != j) {
                    rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
                    rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -x;
                }
                break;
            }
        }
    }
    return ConcreteMatrix::from_ints(field, kind, n, rows);
}

std::optional<WitnessPair> search_witness(const InvariantSet& set, const InvariantExpr& f,
                                          const SamplerDesc& sampler, long budget,
                                          std::uint64_t seed) {
    if (!set.contains(f))
        throw DomainError("expression " + f.str() + " is not a member of the set");
    InvariantSet rest = set.without(f);
    std::mt19937_64 rng(seed);
    FieldDescriptor field = FieldDescriptor::rationals();
    for (long attempt = 0; attempt < budget; ++attempt) {
        std::vector<ConcreteMatrix> mu, mv;
        for (int k = 0; k < set.d; ++k) {
            mu.push_back(random_matrix_of_kind(field, set.kind, set.n, sampler, rng));
            mv.push_back(random_matrix_of_kind(field, set.kind, set.n, sampler, rng));
        }
        MatrixTuple u = MatrixTuple::of(std::move(mu));
        MatrixTuple v = MatrixTuple::of(std::move(mv));
        if (evaluate(f, u.mats) == evaluate(f, v.mats))
            continue;
        if (separates(rest, u, v).separated)
            continue;
        return WitnessPair{set.case_name, set.d, f, std::move(u), std::move(v)};
    }
    return std::nullopt;
}

} // namespace invkit
