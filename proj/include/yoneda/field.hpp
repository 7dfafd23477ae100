#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "yoneda/errors.hpp"

namespace yoneda {

using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::int64_t p = 0; // prime characteristic, 0 for the rationals

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
    static FieldSpec prime_field(std::int64_t p); // validates primality

    bool operator==(const FieldSpec&) const = default;
    std::string describe() const;
};

// All scalar arithmetic funnels through Field so prime-field values stay canonical
// (representatives 0..p-1, denominator 1). Rational values are kept normalized by the
// underlying representation (lowest terms, positive denominator).
class Field {
public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    bool is_prime_field() const { return spec_.kind == FieldKind::PrimeField; }
    std::int64_t characteristic() const { return spec_.p; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long long v) const;

    // Canonical representative of x in this field. For prime fields the denominator is
    // inverted mod p; a denominator divisible by p is invalid input.
    Scalar canon(const Scalar& x) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const; // throws ValidationError on zero

    bool is_zero(const Scalar& a) const { return a.is_zero(); }
    bool is_one(const Scalar& a) const { return a == 1; }

    // "n" or "n/d" in lowest terms with d > 0; prime-field values print as 0..p-1.
    std::string to_string(const Scalar& a) const;
    Scalar parse(const std::string& text) const;

private:
    FieldSpec spec_;
    std::int64_t mod_reduce(const Int& v) const;   // representative in 0..p-1
    std::int64_t mod_inv(std::int64_t a) const;    // extended Euclid, a != 0 mod p
};

bool is_prime(std::int64_t p);

} // namespace yoneda
