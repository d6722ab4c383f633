#pragma once

#include <stdexcept>
#include <string>

#include "pisano/integers.hpp"

namespace pisano {

// Mixing residues over different moduli is a caller bug.
class ModulusMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Inversion of a non-unit. Carries the nontrivial gcd so callers can see
// which factor of the modulus blocks the inverse.
class NotAUnit : public std::domain_error {
public:
    NotAUnit(const std::string& what, Int witness_gcd)
        : std::domain_error(what), gcd_(std::move(witness_gcd)) {}

    const Int& witness_gcd() const noexcept { return gcd_; }

private:
    Int gcd_;
};

// The root method requires 5 to be a unit in Z/nZ, i.e. gcd(n, 5) = 1.
class HypothesisViolated : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Factoring hit its iteration cap; orders derived from the partial
// factorization would be uncertified, so callers must refuse.
class IncompleteFactorization : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// order_from_multiple was handed a multiple M with powfn(M) != identity.
class NotAnExponentMultiple : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A state the classification argument rules out. Either an implementation
// bug or a genuine counterexample; certificates must abort, never guess.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Brute-force cycle search exceeded its iteration cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pisano
