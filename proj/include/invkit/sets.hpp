#ifndef INVKIT_SETS_HPP
#define INVKIT_SETS_HPP

#include <string>
#include <vector>

#include "invkit/expr.hpp"

namespace invkit {

struct InvariantSet {
    std::string case_name;
    int n = 0;
    int d = 0;
    MatrixKind kind = MatrixKind::General;
    std::vector<InvariantExpr> exprs;

    bool contains(const InvariantExpr& e) const;
    /// Copy with one expression removed.
    InvariantSet without(const InvariantExpr& e) const;
};

/// The named separating/generating sets:
///   gl2          tr, det of each X_i; tr(X_iX_j) i<j; tr(X_iX_jX_k) i<j<k (any d >= 1)
///   gl3-d2       sigma_t(X_i) plus the four mixed traces and tr(X1^2X2^2X1X2)
///   o3-skew      sigma_2(Z_i); tr(Z_iZ_j) i<j; tr(Z_iZ_jZ_k) i<j<k (any d >= 1)
///   o4-skew-d2   sigma_2, det of each Z_i; tr(Z1Z2), sigma_2(Z1Z2), tr(Z1^2Z2^2),
///                tr(Z1^3Z2), tr(Z1Z2^3)
///   o3-sym-d2    sigma_t(Y_i); tr(Y1Y2), tr(Y1^2Y2), tr(Y1Y2^2), tr(Y1^2Y2^2)
///   o3-sym-d3    the 28-element generating set; characteristic 3 adds
///                tr(Y1^2Y2^2Y3^2)
///   o3-sym-d3-pool-G1 / -G2   the auxiliary reduction pools
/// `characteristic` only affects o3-sym-d3 (the p = 3 extension).
InvariantSet standard_set(const std::string& case_name, int d, std::int64_t characteristic = 0);

std::vector<std::string> standard_case_names();

} // namespace invkit

#endif
