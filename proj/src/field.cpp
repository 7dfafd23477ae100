#include "yoneda/field.hpp"

#include <boost/multiprecision/integer.hpp>

namespace yoneda {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    require_input(is_prime(p), "field: characteristic " + std::to_string(p) + " is not prime");
    require_input(p <= (std::int64_t(1) << 31), "field: characteristic too large");
    return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::describe() const {
    return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(p);
}

Field::Field(FieldSpec spec) : spec_(spec) {
    if (spec_.kind == FieldKind::PrimeField)
        require_input(is_prime(spec_.p), "field: characteristic is not prime");
    else
        require_input(spec_.p == 0, "field: rationals must have characteristic 0");
}

std::int64_t Field::mod_reduce(const Int& v) const {
    Int r = v % spec_.p;
    if (r < 0) r += spec_.p;
    return r.convert_to<std::int64_t>();
}

std::int64_t Field::mod_inv(std::int64_t a) const {
    // extended Euclid; a is nonzero mod p and p is prime
    std::int64_t t = 0, new_t = 1, r = spec_.p, new_r = a % spec_.p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    internal_check(r == 1, "field: inverse of non-unit requested");
    if (t < 0) t += spec_.p;
    return t;
}

Scalar Field::from_int(long long v) const { return canon(Scalar(v)); }

Scalar Field::canon(const Scalar& x) const {
    if (spec_.kind == FieldKind::Rationals) return x;
    std::int64_t num = mod_reduce(numerator(x));
    std::int64_t den = mod_reduce(denominator(x));
    require_input(den != 0, "field: denominator divisible by " + std::to_string(spec_.p));
    if (den != 1) num = (__int128(num) * mod_inv(den)) % spec_.p;
    return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (spec_.kind == FieldKind::Rationals) return a + b;
    std::int64_t v = a.convert_to<std::int64_t>() + b.convert_to<std::int64_t>();
    if (v >= spec_.p) v -= spec_.p;
    return Scalar(v);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (spec_.kind == FieldKind::Rationals) return a - b;
    std::int64_t v = a.convert_to<std::int64_t>() - b.convert_to<std::int64_t>();
    if (v < 0) v += spec_.p;
    return Scalar(v);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (spec_.kind == FieldKind::Rationals) return a * b;
    __int128 v = __int128(a.convert_to<std::int64_t>()) * b.convert_to<std::int64_t>();
    return Scalar(std::int64_t(v % spec_.p));
}

Scalar Field::neg(const Scalar& a) const {
    if (spec_.kind == FieldKind::Rationals) return -a;
    std::int64_t v = a.convert_to<std::int64_t>();
    return Scalar(v == 0 ? 0 : spec_.p - v);
}

Scalar Field::inv(const Scalar& a) const {
    require_input(!a.is_zero(), "field: division by zero");
    if (spec_.kind == FieldKind::Rationals) return 1 / a;
    return Scalar(mod_inv(a.convert_to<std::int64_t>()));
}

std::string Field::to_string(const Scalar& a) const { return a.str(); }

Scalar Field::parse(const std::string& text) const {
    try {
        Scalar v(text);
        return canon(v);
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationError("field: cannot parse scalar '" + text + "'");
    }
}

} // namespace yoneda
