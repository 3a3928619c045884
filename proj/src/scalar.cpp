#include "invkit/scalar.hpp"

#include <sstream>

namespace invkit {
namespace sv {

namespace {

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t fp_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

const mpq_class& as_q(const ScalarValue& v) { return std::get<mpq_class>(v); }
std::int64_t as_p(const ScalarValue& v) { return std::get<std::int64_t>(v); }
const Ext4& as_e(const ScalarValue& v) { return *std::get<std::shared_ptr<const Ext4>>(v); }

ScalarValue make_ext(Ext4&& e) { return std::make_shared<const Ext4>(std::move(e)); }

Ext4 ext_mul(const Ext4& a, const Ext4& b) {
    // basis products: i*i = -1, s*s = 2, (i s)*(i s) = -2, i*s = is,
    // i*(is) = -s, s*(is) = 2i
    Ext4 c;
    c[0] = a[0] * b[0] - a[1] * b[1] + 2 * a[2] * b[2] - 2 * a[3] * b[3];
    c[1] = a[0] * b[1] + a[1] * b[0] + 2 * a[2] * b[3] + 2 * a[3] * b[2];
    c[2] = a[0] * b[2] + a[2] * b[0] - a[1] * b[3] - a[3] * b[1];
    c[3] = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
    return c;
}

Ext4 ext_conj_i(const Ext4& a) { return {a[0], -a[1], a[2], -a[3]}; }
Ext4 ext_conj_s(const Ext4& a) { return {a[0], a[1], -a[2], -a[3]}; }

bool ext_is_zero(const Ext4& a) {
    return a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0;
}

} // namespace

std::int64_t fp_inverse(std::int64_t a, std::int64_t p) {
    a = mod_p(a, p);
    if (a == 0)
        throw DivisionByZeroError("inverse of zero in F" + std::to_string(p));
    // extended Euclid
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    return mod_p(s0, p);
}

ScalarValue zero(const FieldDescriptor& f) { return from_int(f, 0); }
ScalarValue one(const FieldDescriptor& f) { return from_int(f, 1); }

ScalarValue from_int(const FieldDescriptor& f, std::int64_t v) {
    switch (f.kind()) {
    case FieldKind::Rationals:
        return mpq_class(static_cast<long>(v));
    case FieldKind::PrimeField:
    case FieldKind::PrimeFieldWithRoots:
        return mod_p(v, f.prime());
    case FieldKind::QAdjoinISqrt2:
        return make_ext({mpq_class(static_cast<long>(v)), 0, 0, 0});
    }
    throw DomainError("bad field kind");
}

ScalarValue from_mpq(const FieldDescriptor& f, const mpq_class& q) {
    if (q.get_den() == 0)
        throw DomainError("zero denominator");
    mpq_class canonical = q;
    canonical.canonicalize();
    switch (f.kind()) {
    case FieldKind::Rationals:
        return canonical;
    case FieldKind::PrimeField:
    case FieldKind::PrimeFieldWithRoots: {
        std::int64_t p = f.prime();
        mpz_class num = canonical.get_num() % p;
        mpz_class den = canonical.get_den() % p;
        std::int64_t n = mod_p(num.get_si(), p);
        std::int64_t d = mod_p(den.get_si(), p);
        if (d == 0)
            throw DomainError("denominator divisible by " + std::to_string(p));
        return fp_mul(n, fp_inverse(d, p), p);
    }
    case FieldKind::QAdjoinISqrt2:
        return make_ext({canonical, 0, 0, 0});
    }
    throw DomainError("bad field kind");
}

ScalarValue ext(const FieldDescriptor& f, const mpq_class& c0, const mpq_class& c1,
                const mpq_class& c2, const mpq_class& c3) {
    if (f.kind() != FieldKind::QAdjoinISqrt2)
        throw DomainError("extension coordinates only exist in QiS2");
    Ext4 e{c0, c1, c2, c3};
    for (auto& c : e) {
        if (c.get_den() == 0)
            throw DomainError("zero denominator");
        c.canonicalize();
    }
    return make_ext(std::move(e));
}

bool is_zero(const FieldDescriptor& f, const ScalarValue& a) {
    switch (f.kind()) {
    case FieldKind::Rationals:
        return as_q(a) == 0;
    case FieldKind::PrimeField:
    case FieldKind::PrimeFieldWithRoots:
        return as_p(a) == 0;
    case FieldKind::QAdjoinISqrt2:
        return ext_is_zero(as_e(a));
    }
    return false;
}

bool equal(const FieldDescriptor& f, const ScalarValue& a, const ScalarValue& b) {
    switch (f.kind()) {
    case FieldKind::Rationals:
        return as_q(a) == as_q(b);
    case FieldKind::PrimeField:
    case FieldKind::PrimeFieldWithRoots:
        return as_p(a) == as_p(b);
    case FieldKind::QAdjoinISqrt2:
        return as_e(a) == as_e(b);
    }
    return false;
}

ScalarValue add(const FieldDescriptor& f, const ScalarValue& a, const ScalarValue& b) {
    switch (f.kind()) {
    case FieldKind::Rationals:
        return mpq_class(as_q(a) + as_q(b));
    case FieldKind::PrimeField:
    case FieldKind::PrimeFieldWithRoots:
        return mod_p(as_p(a) + as_p(b), f.prime());
    case FieldKind::QAdjoinISqrt2: {
        const Ext4 &x = as_e(a), &y = as_e(b);
        return make_ext({x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]});
    }
    }
    throw DomainError("bad field kind");
}

ScalarValue sub(const FieldDescriptor& f, const ScalarValue& a, const ScalarValue& b) {
    return add(f, a, neg(f, b));
}

ScalarValue neg(const FieldDescriptor& f, const ScalarValue& a) {
    switch (f.kind()) {
    case FieldKind::Rationals:
        return mpq_class(-as_q(a));
    case FieldKind::PrimeField:
    case FieldKind::PrimeFieldWithRoots:
        return mod_p(-as_p(a), f.prime());
    case FieldKind::QAdjoinISqrt2: {
        const Ext4& x = as_e(a);
        return make_ext({-x[0], -x[1], -x[2], -x[3]});
    }
    }
    throw DomainError("bad field kind");
}

ScalarValue mul(const FieldDescriptor& f, const ScalarValue& a, const ScalarValue& b) {
    switch (f.kind()) {
    case FieldKind::Rationals:
        return mpq_class(as_q(a) * as_q(b));
    case FieldKind::PrimeField:
    case FieldKind::PrimeFieldWithRoots:
        return fp_mul(as_p(a), as_p(b), f.prime());
    case FieldKind::QAdjoinISqrt2:
        return make_ext(ext_mul(as_e(a), as_e(b)));
    }
    throw DomainError("bad field kind");
}

ScalarValue inverse(const FieldDescriptor& f, const ScalarValue& a) {
    if (is_zero(f, a))
        throw DivisionByZeroError("division by zero in " + f.name());
    switch (f.kind()) {
    case FieldKind::Rationals:
        return mpq_class(1 / as_q(a));
    case FieldKind::PrimeField:
    case FieldKind::PrimeFieldWithRoots:
        return fp_inverse(as_p(a), f.prime());
    case FieldKind::QAdjoinISqrt2: {
        // norm down to Q through the two conjugations: first kill the
        // i-components, then the sqrt2-components.
        const Ext4& x = as_e(a);
        Ext4 ci = ext_conj_i(x);
        Ext4 b = ext_mul(x, ci);      // lies in Q(sqrt2)
        Ext4 cs = ext_conj_s(b);
        Ext4 nrm = ext_mul(b, cs);    // lies in Q
        // nrm = (n, 0, 0, 0) with n != 0 because the algebra is a field
        const mpq_class& n = nrm[0];
        if (n == 0)
            throw DivisionByZeroError("vanishing norm in QiS2");
        Ext4 inv = ext_mul(ci, cs);
        for (auto& c : inv)
            c /= n;
        return make_ext(std::move(inv));
    }
    }
    throw DomainError("bad field kind");
}

ScalarValue div(const FieldDescriptor& f, const ScalarValue& a, const ScalarValue& b) {
    return mul(f, a, inverse(f, b));
}

ScalarValue pow(const FieldDescriptor& f, const ScalarValue& a, unsigned e) {
    ScalarValue r = one(f);
    ScalarValue base = a;
    while (e) {
        if (e & 1)
            r = mul(f, r, base);
        e >>= 1;
        if (e)
            base = mul(f, base, base);
    }
    return r;
}

ScalarValue special(const FieldDescriptor& f, SpecialElement which) {
    switch (f.kind()) {
    case FieldKind::QAdjoinISqrt2:
        return which == SpecialElement::I ? make_ext({0, 1, 0, 0}) : make_ext({0, 0, 1, 0});
    case FieldKind::PrimeFieldWithRoots:
        return which == SpecialElement::I ? f.i_rep() : f.sqrt2_rep();
    default:
        throw DomainError("field " + f.name() + " does not contain the requested root");
    }
}

std::string to_string(const FieldDescriptor& f, const ScalarValue& a) {
    switch (f.kind()) {
    case FieldKind::Rationals:
        return as_q(a).get_str();
    case FieldKind::PrimeField:
    case FieldKind::PrimeFieldWithRoots:
        return std::to_string(as_p(a));
    case FieldKind::QAdjoinISqrt2: {
        const Ext4& x = as_e(a);
        if (ext_is_zero(x))
            return "0";
        static const char* names[4] = {"", "i", "sqrt2", "i*sqrt2"};
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k < 4; ++k) {
            if (x[k] == 0)
                continue;
            mpq_class c = x[k];
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            if (k == 0 || c != 1)
                os << c.get_str() << (k == 0 ? "" : "*");
            if (k > 0)
                os << names[k];
            first = false;
        }
        return os.str();
    }
    }
    return "?";
}

} // namespace sv

namespace {
void require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw FieldMismatchError("scalar fields differ: " + a.field().name() + " vs " +
                                 b.field().name());
}
} // namespace

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
    require_same_field(a, b);
    const FieldDescriptor& f = a.field();
    switch (op) {
    case ScalarOp::Add: return {f, sv::add(f, a.value(), b.value())};
    case ScalarOp::Sub: return {f, sv::sub(f, a.value(), b.value())};
    case ScalarOp::Mul: return {f, sv::mul(f, a.value(), b.value())};
    case ScalarOp::Div: return {f, sv::div(f, a.value(), b.value())};
    }
    throw DomainError("bad scalar op");
}

Scalar operator+(const Scalar& a, const Scalar& b) { return scalar_arith(a, b, ScalarOp::Add); }
Scalar operator-(const Scalar& a, const Scalar& b) { return scalar_arith(a, b, ScalarOp::Sub); }
Scalar operator*(const Scalar& a, const Scalar& b) { return scalar_arith(a, b, ScalarOp::Mul); }
Scalar operator/(const Scalar& a, const Scalar& b) { return scalar_arith(a, b, ScalarOp::Div); }
Scalar operator-(const Scalar& a) { return {a.field(), sv::neg(a.field(), a.value())}; }

Scalar embed_special(SpecialElement which, const FieldDescriptor& f) {
    return {f, sv::special(f, which)};
}

} // namespace invkit
