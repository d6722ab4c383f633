#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pisano/errors.hpp"
#include "pisano/integers.hpp"

namespace pisano {

struct FactorEntry {
    Int prime;
    unsigned exponent;
};

// Prime factorization, entries sorted by ascending prime. When complete is
// false an iteration cap was hit and `unfactored` holds the composite
// cofactor that resisted; entries * unfactored still reassembles the input.
struct Factorization {
    std::vector<FactorEntry> entries;
    Int unfactored = 1;
    bool complete = true;

    Int reassemble() const;
    // Merge two factorizations (of a product's factors).
    static Factorization merge(const Factorization& a, const Factorization& b);
    // Multiply in a known prime power.
    void push_prime_power(const Int& p, unsigned e);
};

// Miller-Rabin. Deterministic for inputs below 3.3e24 (fixed witness set),
// 64 rounds in total beyond that.
bool is_probable_prime(const Int& m);

// Trial division up to 1e6, then Brent's variant of Pollard rho with a
// shared iteration cap of 1e7 steps. Never returns an unproved "prime":
// every listed factor passes is_probable_prime. m >= 1.
Factorization factor(const Int& m);

Int lcm(const Int& a, const Int& b);

// True iff a is a nonzero square mod odd prime p (Euler criterion).
bool is_quadratic_residue(const Int& a, const Int& p);

// Square root of a mod an odd prime p with gcd(a, p) = 1, by Tonelli-Shanks.
// Returns the canonical representative y with y <= p - y, or nullopt when a
// is a non-residue. Throws std::invalid_argument for p = 2, p not prime, or
// a not a unit.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

// Square root of a mod p^e, lifted step by step from the mod-p root.
// Same canonicalization and errors; nullopt propagates from the base case.
std::optional<Int> sqrt_mod_prime_power(const Int& a, const Int& p, unsigned e);

struct OrderResult {
    Int order;
    Int exponent_multiple_used;
};

// The exact order of a group element given a verified exponent multiple:
// checks identity_at(multiple) first (NotAnExponentMultiple otherwise),
// then divides out one prime of the multiple at a time while the power
// map stays at the identity. identity_at(k) must answer "element^k == 1".
OrderResult order_from_multiple(const std::function<bool(const Int&)>& identity_at,
                                const Int& multiple);

// Same, with the multiple's factorization precomputed by the caller.
// Refuses (IncompleteFactorization) unless the factorization is complete.
OrderResult order_from_multiple(const std::function<bool(const Int&)>& identity_at,
                                const Int& multiple, const Factorization& multiple_factors);

}  // namespace pisano
