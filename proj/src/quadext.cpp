#include "pisano/quadext.hpp"

#include <ostream>
#include <utility>

namespace pisano {

QuadElem::QuadElem(Residue a, Residue b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.modulus() != b_.modulus()) {
        throw ModulusMismatch("QuadElem: coefficients have different moduli");
    }
}

QuadElem QuadElem::operator+(const QuadElem& o) const {
    return QuadElem(a_ + o.a_, b_ + o.b_);
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
    return QuadElem(a_ - o.a_, b_ - o.b_);
}

QuadElem QuadElem::operator-() const {
    return QuadElem(-a_, -b_);
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
    const Residue& c = o.a_;
    const Residue& d = o.b_;
    Residue bd = b_ * d;
    return QuadElem(a_ * c + bd, a_ * d + b_ * c + bd);
}

QuadElem QuadElem::sigma() const {
    return QuadElem(a_ + b_, -b_);
}

Residue QuadElem::norm() const {
    return a_ * a_ + a_ * b_ - b_ * b_;
}

QuadElem QuadElem::inverse() const {
    Residue n = norm();
    Residue ninv = n.inverse();  // NotAUnit propagates with its gcd
    QuadElem s = sigma();
    return QuadElem(s.a_ * ninv, s.b_ * ninv);
}

QuadElem QuadElem::pow(const Int& k) const {
    if (k < 0) {
        throw std::domain_error("QuadElem::pow: negative exponent");
    }
    QuadElem result = one(modulus());
    if (k == 0) {
        return result;
    }
    QuadElem base = *this;
    Int e = k;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const QuadElem& u) {
    return os << u.a().value() << " + " << u.b().value() << "*w mod " << u.modulus().value();
}

}  // namespace pisano
