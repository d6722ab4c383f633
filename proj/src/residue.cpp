#include "pisano/residue.hpp"

#include <ostream>
#include <utility>

namespace pisano {

Modulus::Modulus(Int n) : n_(std::move(n)) {
    if (n_ < 2) {
        throw std::domain_error("Modulus: n must be >= 2");
    }
}

Residue::Residue(Int value, Modulus m) : value_(std::move(value)), mod_(std::move(m)) {
    value_ %= mod_.value();
    if (value_ < 0) {
        value_ += mod_.value();
    }
}

void Residue::require_same_modulus(const Residue& o) const {
    if (mod_ != o.mod_) {
        throw ModulusMismatch("Residue: operands have different moduli");
    }
}

Residue Residue::operator+(const Residue& o) const {
    require_same_modulus(o);
    Int v = value_ + o.value_;
    if (v >= mod_.value()) {
        v -= mod_.value();
    }
    return Residue(std::move(v), mod_);
}

Residue Residue::operator-(const Residue& o) const {
    require_same_modulus(o);
    Int v = value_ - o.value_;
    if (v < 0) {
        v += mod_.value();
    }
    return Residue(std::move(v), mod_);
}

Residue Residue::operator-() const {
    return Residue(value_ == 0 ? Int(0) : mod_.value() - value_, mod_);
}

Residue Residue::operator*(const Residue& o) const {
    require_same_modulus(o);
    return Residue(value_ * o.value_, mod_);
}

Residue Residue::inverse() const {
    ExtendedGcd e = extended_gcd(value_, mod_.value());
    if (e.g != 1) {
        throw NotAUnit("Residue: not a unit mod n", e.g);
    }
    return Residue(std::move(e.x), mod_);
}

Residue Residue::pow(const Int& k) const {
    if (k < 0) {
        throw std::domain_error("Residue::pow: negative exponent");
    }
    if (k == 0) {
        return one(mod_);
    }
    return Residue(boost::multiprecision::powm(value_, k, mod_.value()), mod_);
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
    return os << r.value() << " mod " << r.modulus().value();
}

}  // namespace pisano
