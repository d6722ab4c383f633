#pragma once

#include <iosfwd>

#include "pisano/residue.hpp"

namespace pisano {

// A dense 2x2 matrix over Z/nZ. Only what the period computation needs:
// the Fibonacci matrix Q = [[0,1],[1,1]], the change-of-basis matrix
// [[1,1],[r,s]], products, powers, determinants and adjugate inverses.
class Mat2 {
public:
    Mat2(Residue m00, Residue m01, Residue m10, Residue m11);

    static Mat2 identity(const Modulus& m);
    // Q = [[0,1],[1,1]]; the period of the Fibonacci sequence mod n is the
    // order of this matrix in GL(2, Z/nZ).
    static Mat2 fibonacci(const Modulus& m);
    // P = [[1,1],[r,s]] for roots r, s of x^2 - x - 1. det(P) = s - r.
    // Does not itself validate that r, s are roots; the period engine
    // validates once per modulus.
    static Mat2 change_of_basis(const Residue& r, const Residue& s);
    static Mat2 diagonal(const Residue& r, const Residue& s);

    const Residue& m00() const noexcept { return m00_; }
    const Residue& m01() const noexcept { return m01_; }
    const Residue& m10() const noexcept { return m10_; }
    const Residue& m11() const noexcept { return m11_; }
    const Modulus& modulus() const noexcept { return m00_.modulus(); }

    Mat2 operator*(const Mat2& o) const;

    friend bool operator==(const Mat2& a, const Mat2& b) {
        return a.m00_ == b.m00_ && a.m01_ == b.m01_ && a.m10_ == b.m10_ && a.m11_ == b.m11_;
    }
    friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

    bool is_identity() const;

    Residue det() const;

    // A^k for k >= 0 by left-to-right binary exponentiation; A^0 = I.
    Mat2 pow(const Int& k) const;

    // Adjugate over the inverse determinant. Throws NotAUnit when det is
    // not a unit mod n.
    Mat2 inverse() const;

private:
    Residue m00_, m01_, m10_, m11_;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace pisano
