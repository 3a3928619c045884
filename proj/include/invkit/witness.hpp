#ifndef INVKIT_WITNESS_HPP
#define INVKIT_WITNESS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "invkit/sets.hpp"

namespace invkit {

/// Tuple of same-size, same-kind matrices over one field; the points the
/// separation machinery works on.
struct MatrixTuple {
    FieldDescriptor field = FieldDescriptor::rationals();
    int n = 0;
    MatrixKind kind = MatrixKind::General;
    std::vector<ConcreteMatrix> mats;

    static MatrixTuple of(std::vector<ConcreteMatrix> mats);
    int d() const { return static_cast<int>(mats.size()); }
    void check_compatible(const InvariantSet& set) const;
};

struct SeparationRow {
    InvariantExpr expr;
    Scalar value_u;
    Scalar value_v;
    bool equal = false;
};

struct SeparationReport {
    bool separated = false;
    std::optional<InvariantExpr> first_separator;
    std::vector<SeparationRow> rows;
};

/// Evaluates every set member on both tuples; separated iff some member
/// evaluates differently. The full value table is kept for reporting.
SeparationReport separates(const InvariantSet& set, const MatrixTuple& u, const MatrixTuple& v);

struct WitnessPair {
    std::string case_name;
    int d = 0;
    InvariantExpr separator;
    MatrixTuple u;
    MatrixTuple v;
};

/// The stored minimality witness for (case, d, f), instantiated over `field`.
/// The matrices are the ones printed in the source proofs where available;
/// the remaining entries (single-sigma witnesses, the tr(X1X2^2) mirror and
/// the O(4) tr(Z1Z2) pair) are fixed derived fixtures. Throws DomainError
/// when no witness is stored or the characteristic is inadmissible.
WitnessPair builtin_witness(const std::string& case_name, int d, const InvariantExpr& f,
                            const FieldDescriptor& field);

enum class WitnessStatus {
    Pass,                 ///< agrees on S \ {f}, differs on f
    DegenerateInChar,     ///< separator values collide in this characteristic
    Fail                  ///< agreement on S \ {f} is violated
};

struct MinimalityEntry {
    int d = 0;
    InvariantExpr f;
    WitnessStatus status = WitnessStatus::Fail;
    Scalar separator_u;
    Scalar separator_v;
    std::vector<SeparationRow> agreement; // value table over S \ {f}
    std::string note;
};

struct MinimalityReport {
    std::string case_name;
    std::string field_name;
    std::vector<MinimalityEntry> entries;
    bool all_pass = false; // Pass or DegenerateInChar everywhere, no Fail
    bool all_strict = false; // Pass everywhere
};

/// Checks, for every f in the case's standard set, that the stored witness
/// pair agrees on S \ {f} and differs on f. The o3-skew case runs both the
/// d = 2 table and the d = 3 one (which extends it to all d).
MinimalityReport verify_minimality(const std::string& case_name, const FieldDescriptor& field);

/// Entry distribution for search_witness: independent uniform integers in
/// [lo, hi] respecting the kind constraint.
struct SamplerDesc {
    std::int64_t lo = -2;
    std::int64_t hi = 2;
};

/// Seeded random search for a pair agreeing on set \ {f} and differing on f.
/// Absence within the budget is a normal outcome (nullopt).
std::optional<WitnessPair> search_witness(const InvariantSet& set, const InvariantExpr& f,
                                          const SamplerDesc& sampler, long budget,
                                          std::uint64_t seed = 20240801);

ConcreteMatrix random_matrix_of_kind(const FieldDescriptor& field, MatrixKind kind, int n,
                                     const SamplerDesc& sampler, std::mt19937_64& rng);

} // namespace invkit

#endif
