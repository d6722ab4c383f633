#pragma once

#include <iosfwd>

#include "pisano/errors.hpp"
#include "pisano/integers.hpp"

namespace pisano {

// A modulus n >= 2. n = 1 would make the ring null (1 = 0), which every
// statement here excludes.
class Modulus {
public:
    explicit Modulus(Int n);

    const Int& value() const noexcept { return n_; }

    friend bool operator==(const Modulus& a, const Modulus& b) { return a.n_ == b.n_; }
    friend bool operator!=(const Modulus& a, const Modulus& b) { return !(a == b); }

private:
    Int n_;
};

// An element of Z/nZ, canonicalized to [0, n) at construction so that
// equality is structural. All operations are pure; values are immutable.
class Residue {
public:
    Residue(Int value, Modulus m);

    static Residue zero(const Modulus& m) { return Residue(0, m); }
    static Residue one(const Modulus& m) { return Residue(1, m); }

    const Int& value() const noexcept { return value_; }
    const Modulus& modulus() const noexcept { return mod_; }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator-() const;
    Residue operator*(const Residue& o) const;

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.value_ == b.value_ && a.mod_ == b.mod_;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

    // Multiplicative inverse by extended gcd. Throws NotAUnit (carrying the
    // nontrivial gcd) when gcd(value, n) != 1.
    Residue inverse() const;

    // a^k mod n for k >= 0, square-and-multiply. a^0 = 1.
    Residue pow(const Int& k) const;

private:
    Int value_;
    Modulus mod_;

    void require_same_modulus(const Residue& o) const;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

}  // namespace pisano
