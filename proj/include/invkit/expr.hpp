#ifndef INVKIT_EXPR_HPP
#define INVKIT_EXPR_HPP

#include <string>
#include <vector>

#include "invkit/matrix.hpp"

namespace invkit {

/// Nonempty word in the generator matrices, letters optionally transposed.
struct Word {
    std::vector<WordLetter> letters;

    static Word of(std::initializer_list<int> ks);
    int length() const { return static_cast<int>(letters.size()); }
    int max_letter() const;
    /// Occurrence counts per generator index 1..d.
    std::vector<int> content(int d) const;
    bool has_transpose() const;
    bool operator==(const Word&) const = default;
};

/// sigma_t applied to a word. t == kDet is the "determinant of the ambient
/// size" marker so that "det(...)" can be parsed before n is known.
class InvariantExpr {
public:
    static constexpr int kDet = 0;

    static InvariantExpr trace(Word w) { return InvariantExpr(1, std::move(w)); }
    static InvariantExpr sigma(int t, Word w);
    static InvariantExpr det(Word w) { return InvariantExpr(kDet, std::move(w)); }

    const Word& word() const { return word_; }
    bool is_det() const { return t_ == kDet; }
    int sigma_index() const { return t_; } // kDet for det
    /// Concrete sigma index against ambient size n (det resolves to n).
    int resolve_t(int n) const;

    /// Grammar: ("tr" | "det" | "sigma_"<t>) "(" letter+ ")",
    /// letter = generator index with optional trailing ' for transpose.
    static InvariantExpr parse(const std::string& text);
    std::string str() const;

    bool operator==(const InvariantExpr&) const = default;

private:
    InvariantExpr(int t, Word w) : t_(t), word_(std::move(w)) {}
    int t_;
    Word word_;
};

/// sigma_t of the word product, evaluated on a concrete tuple.
Scalar evaluate(const InvariantExpr& expr, const std::vector<ConcreteMatrix>& tuple);

/// Symbolic expansion of the invariant over generic matrices of the given
/// kind. The result is checked to be multihomogeneous of multidegree
/// t * content(word); a violation is a library bug and throws.
Polynomial expand(const InvariantExpr& expr, MatrixKind kind, int n, int d,
                  const FieldDescriptor& field = FieldDescriptor::rationals());

/// Multidegree t * content(word).
MultiDegree expr_multidegree(const InvariantExpr& expr, int n, int d);
int expr_degree(const InvariantExpr& expr, int n);

/// Canonical representative of the word under cyclic shifts and reversal
/// (the symmetries of trace invariants of symmetric matrices); used for pool
/// deduplication only. Transposed letters are not supported here.
Word canonical_cyclic_reversal(const Word& w);

} // namespace invkit

#endif
