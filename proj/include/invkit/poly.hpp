#ifndef INVKIT_POLY_HPP
#define INVKIT_POLY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "invkit/monomial.hpp"
#include "invkit/scalar.hpp"

namespace invkit {

enum class PolyOp { Add, Sub, Mul, Scale };

/// Sparse multivariate polynomial over one of the exact coefficient fields.
/// Terms are kept sorted in the canonical graded-lex monomial order with no
/// zero coefficients, so equality is plain term-list equality.
class Polynomial {
public:
    using Term = std::pair<MonoId, ScalarValue>;

    explicit Polynomial(FieldDescriptor f) : field_(std::move(f)) {}
    static Polynomial zero(const FieldDescriptor& f) { return Polynomial(f); }
    static Polynomial constant(const FieldDescriptor& f, std::int64_t c);
    static Polynomial constant(const Scalar& c);
    static Polynomial variable(const FieldDescriptor& f, VarId v);
    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs,
    /// combining duplicates and dropping zeros.
    static Polynomial from_terms(const FieldDescriptor& f, std::vector<Term> terms);
    /// sum of coeff * poly over the list, accumulated in one pass.
    static Polynomial linear_combination(
        const FieldDescriptor& f,
        const std::vector<std::pair<Scalar, const Polynomial*>>& parts);

    const FieldDescriptor& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coeff(MonoId m) const;
    /// Total degree of the highest term; -1 for the zero polynomial.
    int degree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// The sum of the terms of multidegree exactly t (d = t.size()).
    Polynomial graded_component(const MultiDegree& t) const;
    /// All multidegrees occurring in this polynomial, sorted.
    std::vector<MultiDegree> occurring_multidegrees(int d) const;
    /// When every term shares one multidegree, returns it.
    std::optional<MultiDegree> homogeneous_multidegree(int d) const;

    /// Substitution x_{ij}(k) -> x_{ji}(k) for i < j (the fold from the
    /// general-matrix ring onto the symmetric one).
    Polynomial psi_image() const;

    /// Evaluates at the scalar assignment `at(v)` for every variable.
    Scalar evaluate(const std::function<Scalar(VarId)>& at) const;

    /// "2*x21(1)^2*x32(3) - x11(1)" style rendering; "0" when zero.
    std::string str() const;

private:
    FieldDescriptor field_;
    std::vector<Term> terms_; // sorted by MonoTable::less, no zero coeffs
};

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op);
MultiDegree mdeg_of(MonoId m, int d);

/// Variable universe selectors for the three rings: all x_{ij}(k), the i >= j
/// half, or the strict i > j triangle.
enum class RingVars { General, Symmetric, Skew };

std::vector<VarId> ring_variables(RingVars kind, int n, int k);
/// Count of monomials of multidegree t, as a product of multiset
/// coefficients; exact (bignum) so it can back resource-cap checks.
mpz_class count_monomials_of_multidegree(RingVars kind, int n, const MultiDegree& t);
/// Deterministic enumeration (lexicographic in the per-matrix exponent
/// vectors, matrices in index order) of the monomials of multidegree t.
std::vector<MonoId> monomials_of_multidegree(RingVars kind, int n, const MultiDegree& t);

} // namespace invkit

#endif
