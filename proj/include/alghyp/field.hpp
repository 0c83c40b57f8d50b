#pragma once

#include <cstdint>
#include <vector>

#include "alghyp/errors.hpp"

namespace alghyp {

/// Arithmetic in Z/pZ for a prime p < 2^32. Elements are canonical
/// representatives in [0, p).
class PrimeField {
  public:
    static constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

    explicit PrimeField(std::uint64_t p = kDefaultPrime);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t reduce_int(long long v) const;  // signed integer -> [0, p)
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;  // a != 0

    /// Lift to the signed integer of smallest absolute value (ties to +).
    long long symmetric_lift(std::uint64_t a) const {
        return a <= p_ / 2 ? static_cast<long long>(a)
                           : static_cast<long long>(a) - static_cast<long long>(p_);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  private:
    std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

/// Deterministic splitmix64 generator; fully specified so seeded results are
/// reproducible across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, bound), bound >= 1, rejection sampled (no modulo bias).
    std::uint64_t uniform(std::uint64_t bound);
    std::uint64_t field_element(const PrimeField& f) { return uniform(f.modulus()); }

    /// Independent stream for trial `index` of a scenario seeded with `seed`.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

  private:
    std::uint64_t state_;
};

}  // namespace alghyp
