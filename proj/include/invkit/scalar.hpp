#ifndef INVKIT_SCALAR_HPP
#define INVKIT_SCALAR_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "invkit/field.hpp"

namespace invkit {

/// Element of Q(i, sqrt2) in the basis {1, i, sqrt2, i*sqrt2}.
using Ext4 = std::array<mpq_class, 4>;

/// Field element payload; the owning field is supplied by context (a Scalar,
/// a Polynomial or a ConcreteMatrix). Rationals are kept canonical by GMP,
/// prime-field values are residues in [0, p), extension elements are shared
/// immutable 4-tuples.
using ScalarValue = std::variant<mpq_class, std::int64_t, std::shared_ptr<const Ext4>>;

enum class ScalarOp { Add, Sub, Mul, Div };
enum class SpecialElement { I, Sqrt2 };

/// Low-level arithmetic on payloads. All functions assume both operands
/// belong to `f`; the Scalar wrappers check that before delegating here.
namespace sv {

ScalarValue zero(const FieldDescriptor& f);
ScalarValue one(const FieldDescriptor& f);
ScalarValue from_int(const FieldDescriptor& f, std::int64_t v);
ScalarValue from_mpq(const FieldDescriptor& f, const mpq_class& q);
ScalarValue ext(const FieldDescriptor& f, const mpq_class& c0, const mpq_class& c1,
                const mpq_class& c2, const mpq_class& c3);

bool is_zero(const FieldDescriptor& f, const ScalarValue& a);
bool equal(const FieldDescriptor& f, const ScalarValue& a, const ScalarValue& b);

ScalarValue add(const FieldDescriptor& f, const ScalarValue& a, const ScalarValue& b);
ScalarValue sub(const FieldDescriptor& f, const ScalarValue& a, const ScalarValue& b);
ScalarValue mul(const FieldDescriptor& f, const ScalarValue& a, const ScalarValue& b);
ScalarValue div(const FieldDescriptor& f, const ScalarValue& a, const ScalarValue& b);
ScalarValue neg(const FieldDescriptor& f, const ScalarValue& a);
ScalarValue inverse(const FieldDescriptor& f, const ScalarValue& a);
ScalarValue pow(const FieldDescriptor& f, const ScalarValue& a, unsigned e);

std::string to_string(const FieldDescriptor& f, const ScalarValue& a);

/// The designated square root of -1 or of 2. Throws DomainError when the
/// field has no such designated root.
ScalarValue special(const FieldDescriptor& f, SpecialElement which);

std::int64_t fp_inverse(std::int64_t a, std::int64_t p);

} // namespace sv

/// An exact field element together with its field.
class Scalar {
public:
    Scalar(FieldDescriptor f, ScalarValue v) : field_(std::move(f)), v_(std::move(v)) {}
    static Scalar zero(const FieldDescriptor& f) { return {f, sv::zero(f)}; }
    static Scalar one(const FieldDescriptor& f) { return {f, sv::one(f)}; }
    static Scalar of(const FieldDescriptor& f, std::int64_t v) { return {f, sv::from_int(f, v)}; }
    static Scalar of(const FieldDescriptor& f, const mpq_class& q) {
        return {f, sv::from_mpq(f, q)};
    }

    const FieldDescriptor& field() const { return field_; }
    const ScalarValue& value() const { return v_; }

    bool is_zero() const { return sv::is_zero(field_, v_); }
    std::string str() const { return sv::to_string(field_, v_); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && sv::equal(a.field_, a.v_, b.v_);
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    FieldDescriptor field_;
    ScalarValue v_;
};

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);
Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);

Scalar embed_special(SpecialElement which, const FieldDescriptor& f);

} // namespace invkit

#endif
