#ifndef INVKIT_VERIFY_HPP
#define INVKIT_VERIFY_HPP

#include "invkit/json_io.hpp"

namespace invkit {

struct VerifyAllResult {
    Json report;
    bool all_pass = false;
};

/// The full verification suite over one field: every witness table, the
/// decomposability formulas a-f, the span-based indecomposability checks, the
/// degree-bounded reduction of the auxiliary generators, and the nilpotent
/// substitution arguments (run over Q(i,sqrt2) when the requested field is Q,
/// over the field itself when it carries the roots, skipped otherwise).
/// Deterministic: two runs produce byte-identical JSON.
VerifyAllResult verify_all(const FieldDescriptor& field);

} // namespace invkit

#endif
