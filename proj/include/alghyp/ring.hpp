#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "alghyp/field.hpp"

namespace alghyp {

struct PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

/// A polynomial ring is a coefficient field plus an ordered list of variable
/// names. Rings compare structurally, so independently built rings with the
/// same shape are interchangeable.
struct PolynomialRing {
    PrimeField field;
    std::vector<std::string> vars;

    std::size_t arity() const { return vars.size(); }
    int var_index(const std::string& name) const;  // -1 if absent

    bool same_as(const PolynomialRing& o) const {
        return field == o.field && vars == o.vars;
    }
};

RingPtr make_ring(const PrimeField& field, std::vector<std::string> vars);

/// Ring with variables v<1>..v<arity> for a given stem, e.g. y1..yk.
RingPtr make_ring(const PrimeField& field, const std::string& stem, std::size_t arity);

/// Ring with t blocks of n variables named <stem><i>_<j>, i in [t], j in [n].
RingPtr make_block_ring(const PrimeField& field, std::size_t t, std::size_t n,
                        const std::string& stem = "x");

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

/// Exponent vector, one entry per ring variable.
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t arity) : e(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

    std::size_t arity() const { return e.size(); }
    std::uint64_t degree() const;
    std::uint64_t degree_in(std::size_t lo, std::size_t hi) const;  // [lo, hi)
    bool is_one() const { return degree() == 0; }
    bool divides(const Monomial& m) const;
    Monomial lcm(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    Monomial quotient(const Monomial& m) const;  // *this / m, assumes m divides
    std::uint64_t support_mask() const;          // bit i set iff e[i] > 0

    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
    /// Storage order only (plain lexicographic on exponent vectors).
    bool operator<(const Monomial& m) const { return e < m.e; }
};

struct MonomialOrder {
    enum class Kind { lex, grevlex, block_elim };

    Kind kind = Kind::grevlex;
    std::size_t split = 0;  // block_elim: variables [0, split) are eliminated first

    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder block_elim(std::size_t split) { return {Kind::block_elim, split}; }

    /// Strict a < b in this order.
    bool less(const Monomial& a, const Monomial& b) const;

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != Kind::block_elim || split == o.split);
    }
};

/// All exponent vectors of total degree <= d in a fixed deterministic order
/// (by degree, then lexicographic). Size is C(arity + d, d).
std::vector<Monomial> monomials_up_to_degree(std::size_t arity, std::uint32_t d);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace alghyp
