#ifndef INVKIT_MONOMIAL_HPP
#define INVKIT_MONOMIAL_HPP

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace invkit {

/// Packed identifier of the variable x_{ij}(k). The packing puts k in the
/// high bits so that the natural integer order on VarId is the (k, i, j)
/// lexicographic order used throughout.
using VarId = std::uint32_t;

constexpr VarId make_var(int i, int j, int k) {
    return (static_cast<VarId>(k) << 16) | (static_cast<VarId>(i) << 8) |
           static_cast<VarId>(j);
}
constexpr int var_i(VarId v) { return static_cast<int>((v >> 8) & 0xff); }
constexpr int var_j(VarId v) { return static_cast<int>(v & 0xff); }
constexpr int var_k(VarId v) { return static_cast<int>(v >> 16); }

/// "x21(1)" style rendering.
std::string var_name(VarId v);

/// Exponent vector with no zero entries; the empty vector is the monomial 1.
struct Monomial {
    std::vector<std::pair<VarId, std::uint32_t>> factors; // sorted by VarId
    std::uint32_t degree = 0;
};

using MonoId = std::uint32_t;

struct MultiDegree {
    std::vector<int> t;

    int total() const {
        int s = 0;
        for (int x : t) s += x;
        return s;
    }
    bool operator==(const MultiDegree& o) const { return t == o.t; }
    bool operator<(const MultiDegree& o) const { return t < o.t; }
    std::string str() const;
};

/// Process-wide monomial interner. Ids are stable for the lifetime of the
/// process; all entry points are safe for concurrent use.
class MonoTable {
public:
    static MonoTable& instance();

    MonoId one();
    /// Interns the product of the given (variable, exponent) pairs; the input
    /// need not be sorted and may contain repeats or zero exponents.
    MonoId intern(std::vector<std::pair<VarId, std::uint32_t>> factors);
    MonoId var(VarId v) { return intern({{v, 1}}); }
    MonoId mul(MonoId a, MonoId b);

    Monomial get(MonoId id) const;
    std::uint32_t degree(MonoId id) const;
    /// Graded-lex comparison: by total degree, then lexicographically on the
    /// sparse factor lists (variables ordered by (k, i, j)).
    bool less(MonoId a, MonoId b) const;

    MultiDegree multidegree(MonoId id, int d) const;
    /// Rendering like "x21(1)^2*x32(3)"; "1" for the empty monomial.
    std::string str(MonoId id) const;

private:
    MonoTable() = default;
    MonoId intern_sorted(Monomial&& m);
    static std::string key_of(const Monomial& m);

    mutable std::shared_mutex mu_;
    std::deque<Monomial> store_;
    std::unordered_map<std::string, MonoId> ids_;
};

} // namespace invkit

#endif
