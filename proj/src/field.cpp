#include "alghyp/field.hpp"

namespace alghyp {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin bases for n < 3*10^18.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ull << 32))
        throw std::invalid_argument("field modulus must fit in 32 bits");
    if (!is_prime_u64(p))
        throw std::invalid_argument("field modulus " + std::to_string(p) +
                                    " is not prime");
}

std::uint64_t PrimeField::reduce_int(long long v) const {
    long long m = static_cast<long long>(p_);
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    return powmod_u64(a % p_, e, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    // Extended Euclid on (a, p).
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a % p_);
    while (new_r != 0) {
        long long qq = r / new_r;
        long long tmp = t - qq * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - qq * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(t);
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}
}  // namespace

std::uint64_t Rng::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform(0)");
    std::uint64_t threshold = (-bound) % bound;
    for (;;) {
        std::uint64_t x = next();
        if (x >= threshold) return x % bound;
    }
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(0xA0761D6478BD642Full + index));
}

}  // namespace alghyp
