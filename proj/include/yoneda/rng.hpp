#pragma once

#include <cstdint>
#include <random>

#include "yoneda/matrix.hpp"

namespace yoneda {

// Seeded generator for everything randomized. No wall-clock entropy anywhere: repeat a
// command with the same seed and you get the same stream. Rational entries are drawn
// uniformly from {-2..2}; prime-field entries uniformly from 0..p-1.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t next() { return eng(); }

    std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : eng() % n; }

    long long range(long long lo, long long hi) {
        return lo + (long long)below(std::uint64_t(hi - lo + 1));
    }

    bool coin() { return (eng() & 1) != 0; }

    Scalar scalar(const Field& k) {
        if (k.is_prime_field()) return Scalar((long long)below(std::uint64_t(k.characteristic())));
        return Scalar(range(-2, 2));
    }

    Vec vector(const Field& k, int n) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = scalar(k);
        return v;
    }

    Matrix matrix(const Field& k, int r, int c) {
        Matrix m(r, c);
        for (auto& x : m.a) x = scalar(k);
        return m;
    }
};

} // namespace yoneda
