#ifndef INVKIT_SPAN_HPP
#define INVKIT_SPAN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace invkit {

/// Sparse integer vector, entries sorted by coordinate, no zeros. Coordinates
/// below kBookkeepingBase are "payload" (monomial rows); coordinates at or
/// above it are bookkeeping columns recording how a vector was combined from
/// the inserted originals. Pivoting only ever happens on payload coordinates.
template <typename C>
struct SparseVec {
    std::vector<std::pair<std::int64_t, C>> e;

    bool payload_empty(std::int64_t book_base) const {
        return e.empty() || e.front().first >= book_base;
    }
};

using QVec = SparseVec<mpz_class>;
using FpVec = SparseVec<std::int64_t>;

/// Row-echelon basis over Q maintained with fraction-free integer arithmetic:
/// the elimination step is v <- lead(p) * v - lead(v) * p followed by content
/// stripping, so entries stay integral with controlled growth. The leading
/// coordinate of a vector is its smallest payload coordinate.
class QSpanBasis {
public:
    static constexpr std::int64_t kBookkeepingBase = std::int64_t{1} << 40;

    /// Reduces v against the basis and installs it as a new pivot when its
    /// payload does not vanish. Returns true when v became a pivot.
    bool insert(QVec v);
    /// Fully reduces a copy of v (payload part) against the basis.
    QVec reduce(QVec v) const;
    std::size_t rank() const { return pivots_.size(); }

private:
    std::map<std::int64_t, QVec> pivots_; // leading payload coord -> pivot
};

/// Same structure over F_p with monic pivots.
class FpSpanBasis {
public:
    static constexpr std::int64_t kBookkeepingBase = std::int64_t{1} << 40;

    explicit FpSpanBasis(std::int64_t p) : p_(p) {}
    bool insert(FpVec v);
    FpVec reduce(FpVec v) const;
    std::size_t rank() const { return pivots_.size(); }
    std::int64_t modulus() const { return p_; }

private:
    std::int64_t p_;
    std::map<std::int64_t, FpVec> pivots_;
};

/// Outcome of a span-membership question posed through bookkeeping columns:
/// when the target's payload reduces to zero, `combination[j]` is the
/// coefficient of inserted vector j in an exact representation of the target.
struct QMembership {
    bool in_span = false;
    std::vector<std::pair<std::size_t, mpq_class>> combination;
};

struct FpMembership {
    bool in_span = false;
    std::vector<std::pair<std::size_t, std::int64_t>> combination;
};

/// Solves "target in span of candidates" where every vector is given by its
/// payload part only; bookkeeping columns are attached internally. The
/// candidate list order defines the bookkeeping indices.
QMembership q_span_membership(const std::vector<QVec>& candidates, const QVec& target);
FpMembership fp_span_membership(std::int64_t p, const std::vector<FpVec>& candidates,
                                const FpVec& target);

} // namespace invkit

#endif
