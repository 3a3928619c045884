#ifndef INVKIT_MATRIX_HPP
#define INVKIT_MATRIX_HPP

#include <string>
#include <vector>

#include "invkit/poly.hpp"
#include "invkit/scalar.hpp"

namespace invkit {

enum class MatrixKind { General, Symmetric, SkewSymmetric };

std::string kind_name(MatrixKind k);
MatrixKind kind_from_name(const std::string& s);
RingVars ring_vars_of(MatrixKind k);

/// n x n matrix of exact scalars. Symmetric and skew-symmetric inputs are
/// validated on construction, never silently symmetrized; skew requires a
/// zero diagonal (so the type is meaningful in every odd characteristic).
class ConcreteMatrix {
public:
    static ConcreteMatrix zero(const FieldDescriptor& f, MatrixKind kind, int n);
    static ConcreteMatrix identity(const FieldDescriptor& f, int n);
    static ConcreteMatrix from_values(const FieldDescriptor& f, MatrixKind kind, int n,
                                      std::vector<ScalarValue> entries);
    static ConcreteMatrix from_ints(const FieldDescriptor& f, MatrixKind kind, int n,
                                    const std::vector<std::vector<std::int64_t>>& rows);
    /// Symmetric 3x3 from the six free entries: rows {{a,b,c},{b,d,e},{c,e,f}}.
    static ConcreteMatrix sym6(const Scalar& a, const Scalar& b, const Scalar& c,
                               const Scalar& d, const Scalar& e, const Scalar& f);
    static ConcreteMatrix sym6_ints(const FieldDescriptor& fld, std::int64_t a, std::int64_t b,
                                    std::int64_t c, std::int64_t d, std::int64_t e,
                                    std::int64_t f);

    int n() const { return n_; }
    MatrixKind kind() const { return kind_; }
    const FieldDescriptor& field() const { return field_; }
    Scalar at(int i, int j) const; // 1-based
    const std::vector<ScalarValue>& values() const { return e_; }

    ConcreteMatrix operator*(const ConcreteMatrix& o) const;
    ConcreteMatrix operator+(const ConcreteMatrix& o) const;
    ConcreteMatrix operator-() const;
    ConcreteMatrix transposed() const;
    ConcreteMatrix scaled(const Scalar& c) const;
    bool operator==(const ConcreteMatrix& o) const;
    bool is_zero() const;

    Scalar trace() const;
    /// t-th characteristic-polynomial coefficient as the sum of all principal
    /// t x t minors; works in every characteristic.
    Scalar sigma(int t) const;
    Scalar det() const { return sigma(n_); }

    std::string str() const;

private:
    ConcreteMatrix(FieldDescriptor f, MatrixKind k, int n)
        : n_(n), kind_(k), field_(std::move(f)) {}
    void validate() const;

    int n_;
    MatrixKind kind_;
    FieldDescriptor field_;
    std::vector<ScalarValue> e_; // row-major
};

/// n x n matrix of polynomials; product results are General even when the
/// factors are symmetric.
class GenericMatrix {
public:
    /// The generic matrix of the given kind with variables x_{ij}(k):
    /// General has independent entries, Symmetric identifies mirror entries
    /// (variables with i >= j), SkewSymmetric negates them and zeroes the
    /// diagonal (variables with i > j).
    static GenericMatrix generic(MatrixKind kind, int n, int k,
                                 const FieldDescriptor& f = FieldDescriptor::rationals());
    static GenericMatrix zero(const FieldDescriptor& f, MatrixKind kind, int n);
    static GenericMatrix from_entries(MatrixKind kind, int n, std::vector<Polynomial> entries);

    int n() const { return n_; }
    MatrixKind kind() const { return kind_; }
    const FieldDescriptor& field() const { return field_; }
    const Polynomial& at(int i, int j) const; // 1-based

    GenericMatrix operator*(const GenericMatrix& o) const;
    GenericMatrix operator+(const GenericMatrix& o) const;
    GenericMatrix operator-() const;
    GenericMatrix transposed() const;

    Polynomial trace() const;
    Polynomial sigma(int t) const;
    Polynomial det() const { return sigma(n_); }

private:
    GenericMatrix(FieldDescriptor f, MatrixKind k, int n)
        : n_(n), kind_(k), field_(std::move(f)) {}

    int n_;
    MatrixKind kind_;
    FieldDescriptor field_;
    std::vector<Polynomial> e_;
};

/// One letter of a matrix word: tuple slot k (1-based), optionally transposed.
struct WordLetter {
    int k = 1;
    bool transpose = false;
    bool operator==(const WordLetter&) const = default;
};

/// Product of the designated matrices, transposes applied where flagged.
ConcreteMatrix word_value(const std::vector<WordLetter>& word,
                          const std::vector<ConcreteMatrix>& tuple);
GenericMatrix word_value(const std::vector<WordLetter>& word,
                         const std::vector<GenericMatrix>& tuple);

/// The fold of the general-matrix ring onto the symmetric one:
/// x_{ij}(k) -> x_{ji}(k) for i < j, identity otherwise.
Polynomial psi_substitution(const Polynomial& f);

} // namespace invkit

#endif
