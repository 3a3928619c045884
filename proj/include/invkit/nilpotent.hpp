#ifndef INVKIT_NILPOTENT_HPP
#define INVKIT_NILPOTENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "invkit/expr.hpp"

namespace invkit {

/// The six symmetric nilpotent test matrices over a field containing i and
/// sqrt2. Construction asserts T_i^2 = 0, R_i^3 = 0 and the vanishing of
/// every sigma_t of each matrix.
struct NilpotentTestSuite {
    ConcreteMatrix R1, R2, R3, T1, T2, T3;

    static NilpotentTestSuite build(const FieldDescriptor& field);
    const ConcreteMatrix& by_name(const std::string& name) const;
};

struct EliminationStep {
    std::string tuple_desc; // e.g. "(R1, R2, T1)"
    std::string equation;   // the instantiated linear equation
    std::string action;     // "solve alpha" or "check"
    std::string result;     // "alpha = 2*gamma" or "residual = ..."
    bool degenerate = false; // the pivot coefficient vanished in this field
    bool pass = false;
};

/// Reproduction of one nilpotent-substitution argument: the ansatz equates
/// the target invariant with a linear combination of products of lower-degree
/// invariants on nilpotent symmetric triples; the scheduled substitutions
/// determine the coefficients one by one and the final substitution either
/// refutes the ansatz (f1, f2, f3) or pins the last coefficient (f4).
struct NilpotentArgReport {
    std::string target; // f1, f2, f3, f4
    std::string field_name;
    std::vector<EliminationStep> steps;

    // f1-f3: a nonzero residual refutes the ansatz
    bool refuted = false;
    std::optional<Scalar> residual;

    // f4: the final equation c * gamma = -k, its integer normal form, and
    // the solved value when c is invertible
    std::optional<std::string> final_equation;
    std::optional<std::string> final_equation_normalized;
    std::optional<Scalar> gamma_value;
    bool consistent = false;
    /// The normalized integer equation is unsolvable exactly in
    /// characteristic 3 (set for f4 runs over characteristic-zero fields).
    std::optional<bool> unsolvable_in_char3;

    // mechanically derived shape of the nilpotent-restricted decomposables at
    // the target's multidegree (f2 only), and any products beyond the ansatz
    std::vector<std::string> derived_shape;
    std::vector<std::string> shape_extras;

    bool pass = false;
};

enum class NilpotentTarget { F1, F2, F3, F4 };

NilpotentArgReport verify_indecomposability_argument(NilpotentTarget target,
                                                     const FieldDescriptor& field);

} // namespace invkit

#endif
