#include "invkit/field.hpp"

#include <sstream>

namespace invkit {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

} // namespace

FieldDescriptor FieldDescriptor::rationals() {
    return FieldDescriptor(FieldKind::Rationals, 0, 0, 0);
}

FieldDescriptor FieldDescriptor::prime_field(std::int64_t p) {
    if (p == 2)
        throw DomainError("characteristic 2 is not supported (odd prime required)");
    if (!is_prime(p))
        throw DomainError("prime field modulus must be an odd prime, got " + std::to_string(p));
    if (p >= (std::int64_t{1} << 31))
        throw DomainError("prime field modulus too large (must fit in 31 bits)");
    return FieldDescriptor(FieldKind::PrimeField, p, 0, 0);
}

FieldDescriptor FieldDescriptor::q_adjoin_i_sqrt2() {
    return FieldDescriptor(FieldKind::QAdjoinISqrt2, 0, 0, 0);
}

FieldDescriptor FieldDescriptor::prime_field_with_roots(std::int64_t p, std::int64_t i_rep,
                                                        std::int64_t sqrt2_rep) {
    if (!is_prime(p) || p == 2)
        throw DomainError("modulus must be an odd prime, got " + std::to_string(p));
    if (p % 8 != 1)
        throw DomainError("p = " + std::to_string(p) +
                          " does not satisfy p = 1 (mod 8); -1 and 2 are not both squares");
    if (p >= (std::int64_t{1} << 31))
        throw DomainError("prime field modulus too large (must fit in 31 bits)");
    i_rep = mod_reduce(i_rep, p);
    sqrt2_rep = mod_reduce(sqrt2_rep, p);
    if (mul_mod(i_rep, i_rep, p) != p - 1)
        throw DomainError("i_rep^2 != -1 (mod " + std::to_string(p) + ")");
    if (mul_mod(sqrt2_rep, sqrt2_rep, p) != 2)
        throw DomainError("sqrt2_rep^2 != 2 (mod " + std::to_string(p) + ")");
    return FieldDescriptor(FieldKind::PrimeFieldWithRoots, p, i_rep, sqrt2_rep);
}

std::int64_t FieldDescriptor::characteristic() const {
    return is_prime_based() ? p_ : 0;
}

std::string FieldDescriptor::name() const {
    switch (kind_) {
    case FieldKind::Rationals:
        return "Q";
    case FieldKind::PrimeField:
        return "F" + std::to_string(p_);
    case FieldKind::QAdjoinISqrt2:
        return "QiS2";
    case FieldKind::PrimeFieldWithRoots: {
        std::ostringstream os;
        os << "F" << p_ << "iS2:" << i_rep_ << "," << sqrt2_rep_;
        return os.str();
    }
    }
    return "?";
}

FieldDescriptor FieldDescriptor::parse(const std::string& text) {
    if (text == "Q")
        return rationals();
    if (text == "QiS2")
        return q_adjoin_i_sqrt2();
    if (!text.empty() && text[0] == 'F') {
        auto is2 = text.find("iS2:");
        try {
            if (is2 == std::string::npos) {
                std::size_t used = 0;
                std::int64_t p = std::stoll(text.substr(1), &used);
                if (used + 1 != text.size())
                    throw ParseError("trailing characters in field name '" + text + "'");
                return prime_field(p);
            }
            std::int64_t p = std::stoll(text.substr(1, is2 - 1));
            std::string rest = text.substr(is2 + 4);
            auto comma = rest.find(',');
            if (comma == std::string::npos)
                throw ParseError("expected F<p>iS2:<i>,<sqrt2>, got '" + text + "'");
            std::int64_t i_rep = std::stoll(rest.substr(0, comma));
            std::int64_t s_rep = std::stoll(rest.substr(comma + 1));
            return prime_field_with_roots(p, i_rep, s_rep);
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed field name '" + text + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("field modulus out of range in '" + text + "'");
        }
    }
    throw ParseError("unknown field '" + text + "' (expected Q, F<p>, QiS2 or F<p>iS2:<i>,<s>)");
}

} // namespace invkit
