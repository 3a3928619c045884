#ifndef INVKIT_JSON_IO_HPP
#define INVKIT_JSON_IO_HPP

#include <json.hpp>

#include "invkit/decomp.hpp"
#include "invkit/nilpotent.hpp"
#include "invkit/witness.hpp"

namespace invkit {

/// Ordered JSON keeps report bytes stable across runs.
using Json = nlohmann::ordered_json;

// scalars encode as "p/q" strings (rationals), plain integers (prime fields)
// or 4-element arrays of rational strings (the i/sqrt2 extension)
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldDescriptor& field, const Json& j);

Json matrix_to_json(const ConcreteMatrix& m);
ConcreteMatrix matrix_from_json(const FieldDescriptor& field, const Json& j);

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const FieldDescriptor& field, const Json& j);

Json set_to_json(const InvariantSet& s);

/// Input file for tuple commands: {n, d, kind, field, tuples: [[matrix...]...]}.
struct TupleFile {
    FieldDescriptor field = FieldDescriptor::rationals();
    int n = 0;
    int d = 0;
    MatrixKind kind = MatrixKind::General;
    std::vector<MatrixTuple> tuples;
};
TupleFile tuple_file_from_json(const Json& j);
Json tuple_file_to_json(const TupleFile& f);

Json witness_to_json(const WitnessPair& wp);

Json report_to_json(const SeparationReport& rep);
Json report_to_json(const MinimalityReport& rep);
Json report_to_json(const DecompositionReport& rep, bool include_certificate = true);
Json report_to_json(const LemmaReport& rep);
Json report_to_json(const ReductionReport& rep);
Json report_to_json(const NilpotentArgReport& rep);
Json report_to_json(const IndecompReport& rep);

} // namespace invkit

#endif
