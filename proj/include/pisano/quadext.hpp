#pragma once

#include <iosfwd>

#include "pisano/residue.hpp"

namespace pisano {

// An element a + b*w of (Z/nZ)[x]/(x^2 - x - 1), with w the class of x,
// so w^2 = w + 1. This ring contains a root of x^2 - x - 1 even when
// Z/nZ has none; it is constructed for every n >= 2, whether or not the
// quotient is a domain.
class QuadElem {
public:
    QuadElem(Residue a, Residue b);

    static QuadElem embed(const Residue& a) { return QuadElem(a, Residue::zero(a.modulus())); }
    static QuadElem omega(const Modulus& m) { return QuadElem(Residue::zero(m), Residue::one(m)); }
    static QuadElem zero(const Modulus& m) { return embed(Residue::zero(m)); }
    static QuadElem one(const Modulus& m) { return embed(Residue::one(m)); }

    const Residue& a() const noexcept { return a_; }
    const Residue& b() const noexcept { return b_; }
    const Modulus& modulus() const noexcept { return a_.modulus(); }

    // True when the element lies in the embedded copy of Z/nZ.
    bool in_base() const { return b_.is_zero(); }

    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator-() const;
    // (a + bw)(c + dw) = (ac + bd) + (ad + bc + bd)w, forced by w^2 = w + 1.
    QuadElem operator*(const QuadElem& o) const;

    friend bool operator==(const QuadElem& u, const QuadElem& v) {
        return u.a_ == v.a_ && u.b_ == v.b_;
    }
    friend bool operator!=(const QuadElem& u, const QuadElem& v) { return !(u == v); }

    // The involutive ring automorphism induced by x -> 1 - x:
    // sigma(a + bw) = (a + b) - bw. Swaps the two roots of x^2 - x - 1.
    QuadElem sigma() const;

    // u * sigma(u) lies in the base ring; this returns that base element,
    // a^2 + ab - b^2. Multiplicative, and u is a unit iff norm(u) is.
    Residue norm() const;

    // Inverse via sigma(u) / norm(u). Throws NotAUnit when the norm is not
    // a unit in Z/nZ.
    QuadElem inverse() const;

    // u^k for k >= 0, square-and-multiply.
    QuadElem pow(const Int& k) const;

private:
    Residue a_;
    Residue b_;
};

std::ostream& operator<<(std::ostream& os, const QuadElem& u);

}  // namespace pisano
