#ifndef INVKIT_DECOMP_HPP
#define INVKIT_DECOMP_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "invkit/sets.hpp"
#include "invkit/span.hpp"

namespace invkit {

struct CaseDesc {
    MatrixKind kind = MatrixKind::Symmetric;
    int n = 3;
    int d = 3;
    FieldDescriptor field = FieldDescriptor::rationals();
};

struct PoolItem {
    InvariantExpr expr; // word is the canonical cyclic/reversal representative
    int degree = 0;
    MultiDegree mdeg;
    Polynomial expansion;
};

/// Reads INVKIT_RESOURCE_CAP (monomials per graded component), default 2e5.
std::size_t resource_cap_from_env();

/// All sigma_t(w), 1 <= t <= n, w a word in the generators with
/// t * |w| <= max_degree, expanded over the case field and deduplicated up to
/// cyclic shifts and reversal. Deterministic order: (degree, t, word).
class InvariantPool {
public:
    static InvariantPool build(const CaseDesc& desc, int max_degree,
                               std::size_t monomial_cap = resource_cap_from_env());

    const CaseDesc& desc() const { return desc_; }
    int max_degree() const { return max_degree_; }
    const std::vector<PoolItem>& items() const { return items_; }

private:
    CaseDesc desc_;
    int max_degree_ = 0;
    std::vector<PoolItem> items_;
};

struct CertTerm {
    Scalar coeff;
    std::vector<InvariantExpr> factors; // product of pool expressions
};

struct ResidualInfo {
    std::size_t candidate_count = 0;
    std::size_t span_rank = 0;
    std::size_t rows_considered = 0;
    mpz_class component_dimension = 0; // full monomial count of the component
};

struct DecompositionReport {
    std::string target_label;
    std::string field_name;
    int degree = 0;
    MultiDegree mdeg;
    bool decomposable = false;
    bool certificate_verified = false; // always true when decomposable
    std::vector<CertTerm> certificate;
    ResidualInfo residual;
};

/// Decomposability service: decides whether a multihomogeneous invariant is a
/// polynomial in invariants of strictly lower degree, by exact span
/// membership of the target's expansion in the space spanned by products of
/// two or more lower-degree pool items of matching multidegree.
///
/// Components are cached per multidegree up to a permutation of the
/// generators (relabeling is an algebra automorphism that maps the pool onto
/// itself), so repeated targets in heavy components share one elimination.
class DecompService {
public:
    explicit DecompService(const CaseDesc& desc, int max_degree = 8,
                           std::size_t monomial_cap = resource_cap_from_env());
    ~DecompService();
    DecompService(DecompService&&) noexcept;
    DecompService& operator=(DecompService&&) noexcept;

    const InvariantPool& pool() const { return pool_; }
    const CaseDesc& desc() const { return desc_; }

    DecompositionReport is_decomposable(const InvariantExpr& target);
    DecompositionReport is_decomposable(const Polynomial& target_expansion,
                                        const std::string& label);

    /// Multisets (as sorted pool-index lists, size >= 2) of pool items whose
    /// multidegrees sum to t.
    std::vector<std::vector<std::size_t>> candidate_products(const MultiDegree& t) const;

private:
    struct Component;

    Component& component_for(const MultiDegree& canonical);
    DecompositionReport decide(const Polynomial& target, const std::string& label);
    Polynomial verify_certificate(const std::vector<CertTerm>& cert,
                                  const FieldDescriptor& f) const;

    CaseDesc desc_;
    std::size_t monomial_cap_;
    InvariantPool pool_;
    std::map<std::vector<int>, std::unique_ptr<Component>> components_;
};

struct LemmaInstance {
    std::string label;
    MultiDegree mdeg;
    int degree = 0;
    bool expect_decomposable = true;
    bool decomposable = false;
    bool pass = false;
    /// Number of scheduled instances this one proves: instances that agree up
    /// to relabeling the generators (an algebra automorphism fixing the pool)
    /// are verified through one representative.
    int covers = 1;
    std::string note; // e.g. the expected characteristic-3 exception
};

struct LemmaReport {
    char part = '?';
    std::string field_name;
    std::vector<LemmaInstance> instances;
    int scheduled_instances = 0;
    bool all_pass = false;
};

struct LemmaSchedule {
    int max_word_len = 2;    // bound for the universally quantified x, y, q
    int max_total_degree = 8;
};

/// Machine verification of the decomposability formulas, parts a-f. Parts a
/// and e run over the bounded instantiation schedule; part d expects the
/// characteristic-3 exception.
LemmaReport verify_lemma_dec(char part, const FieldDescriptor& field,
                             const LemmaSchedule& schedule = {},
                             DecompService* shared_service = nullptr);

struct ReductionEntry {
    std::string name;  // e.g. "s_123"
    InvariantExpr expr;
    enum class How { EqualsSetMember, Decomposable } how;
    std::string detail; // the set member it equals, or certificate size
    bool pass = false;
};

struct ReductionReport {
    std::string field_name;
    std::vector<ReductionEntry> entries;
    bool h1_equals_h2 = false;
    bool all_pass = false;
};

/// Certifies that every auxiliary generator of the degree-bounded reduction
/// pool (G1; G2 too in characteristic 3) is either equal to a member of the
/// shipped generating set as a polynomial or decomposable, and that the two
/// six-letter words h1, h2 expand to the same polynomial.
ReductionReport verify_generating_set_reduction(const FieldDescriptor& field,
                                         DecompService* shared_service = nullptr);

struct IndecompEntry {
    std::string target; // f1..f4, or the characteristic-3 six-letter trace
    bool expect_decomposable = false;
    bool decomposable = false;
    bool pass = false;
};

struct IndecompReport {
    std::string field_name;
    std::vector<IndecompEntry> entries;
    bool all_pass = false;
};

/// Span-based indecomposability of the genuinely new generators: f1, f2, f3
/// indecomposable over every admissible field; tr(Y1^2Y2^2Y3^2) decomposable
/// exactly when the characteristic is not 3.
IndecompReport verify_indecomposability(const FieldDescriptor& field,
                                        DecompService* shared_service = nullptr);

/// Derives the general shape of a decomposable invariant restricted to
/// nilpotent tuples at one multidegree: enumerates the candidate products and
/// keeps those with no single-generator factor (single-generator invariants
/// vanish on nilpotent matrices). Returns the surviving products as strings.
std::vector<std::string> nilpotent_ansatz_shape(DecompService& service, const MultiDegree& t);

} // namespace invkit

#endif
