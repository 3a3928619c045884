#ifndef INVKIT_FIELD_HPP
#define INVKIT_FIELD_HPP

#include <cstdint>
#include <string>

#include "invkit/errors.hpp"

namespace invkit {

enum class FieldKind {
    Rationals,          ///< exact fractions
    PrimeField,         ///< F_p, p an odd prime
    QAdjoinISqrt2,      ///< the 4-dimensional field Q(i, sqrt2)
    PrimeFieldWithRoots ///< F_p with designated square roots of -1 and 2
};

/// Value-type description of one of the supported exact coefficient fields.
///
/// Characteristic 2 is impossible by construction: prime-field descriptors
/// require an odd prime, which is the standing hypothesis for all the
/// orthogonal-group computations in this library.
class FieldDescriptor {
public:
    static FieldDescriptor rationals();
    static FieldDescriptor prime_field(std::int64_t p);
    static FieldDescriptor q_adjoin_i_sqrt2();
    /// p must be a prime with p % 8 == 1 (so that -1 and 2 are both squares);
    /// i_rep and sqrt2_rep are validated against i_rep^2 = -1, sqrt2_rep^2 = 2.
    static FieldDescriptor prime_field_with_roots(std::int64_t p, std::int64_t i_rep,
                                                  std::int64_t sqrt2_rep);

    /// Default F_17 stand-in (i = 4, sqrt2 = 6) for characteristic-p
    /// cross-checks of the nilpotent-matrix computations.
    static FieldDescriptor f17_with_roots() { return prime_field_with_roots(17, 4, 6); }

    FieldKind kind() const { return kind_; }
    /// 0 for the characteristic-zero fields, p otherwise.
    std::int64_t characteristic() const;
    std::int64_t prime() const { return p_; }
    std::int64_t i_rep() const { return i_rep_; }
    std::int64_t sqrt2_rep() const { return sqrt2_rep_; }

    bool is_prime_based() const {
        return kind_ == FieldKind::PrimeField || kind_ == FieldKind::PrimeFieldWithRoots;
    }
    /// True when the field contains designated square roots of -1 and 2.
    bool has_i_sqrt2() const {
        return kind_ == FieldKind::QAdjoinISqrt2 || kind_ == FieldKind::PrimeFieldWithRoots;
    }

    bool operator==(const FieldDescriptor& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && i_rep_ == o.i_rep_ && sqrt2_rep_ == o.sqrt2_rep_;
    }
    bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

    /// Short printable name: "Q", "F5", "QiS2", "F17iS2:4,6".
    std::string name() const;
    /// Inverse of name(); accepts the CLI --field syntax.
    static FieldDescriptor parse(const std::string& text);

private:
    FieldDescriptor(FieldKind k, std::int64_t p, std::int64_t i, std::int64_t s)
        : kind_(k), p_(p), i_rep_(i), sqrt2_rep_(s) {}

    FieldKind kind_;
    std::int64_t p_;
    std::int64_t i_rep_;
    std::int64_t sqrt2_rep_;
};

bool is_prime(std::int64_t n);

} // namespace invkit

#endif
