#include "pisano/mat2.hpp"

#include <ostream>
#include <utility>

namespace pisano {

namespace {

void require_same_modulus(const Residue& a, const Residue& b) {
    if (a.modulus() != b.modulus()) {
        throw ModulusMismatch("Mat2: entries have different moduli");
    }
}

}  // namespace

Mat2::Mat2(Residue m00, Residue m01, Residue m10, Residue m11)
    : m00_(std::move(m00)), m01_(std::move(m01)), m10_(std::move(m10)), m11_(std::move(m11)) {
    require_same_modulus(m00_, m01_);
    require_same_modulus(m00_, m10_);
    require_same_modulus(m00_, m11_);
}

Mat2 Mat2::identity(const Modulus& m) {
    Residue zero = Residue::zero(m);
    Residue one = Residue::one(m);
    return Mat2(one, zero, zero, one);
}

Mat2 Mat2::fibonacci(const Modulus& m) {
    Residue zero = Residue::zero(m);
    Residue one = Residue::one(m);
    return Mat2(zero, one, one, one);
}

Mat2 Mat2::change_of_basis(const Residue& r, const Residue& s) {
    require_same_modulus(r, s);
    Residue one = Residue::one(r.modulus());
    return Mat2(one, one, r, s);
}

Mat2 Mat2::diagonal(const Residue& r, const Residue& s) {
    require_same_modulus(r, s);
    Residue zero = Residue::zero(r.modulus());
    return Mat2(r, zero, zero, s);
}

Mat2 Mat2::operator*(const Mat2& o) const {
    if (modulus() != o.modulus()) {
        throw ModulusMismatch("Mat2: operands have different moduli");
    }
    return Mat2(m00_ * o.m00_ + m01_ * o.m10_, m00_ * o.m01_ + m01_ * o.m11_,
                m10_ * o.m00_ + m11_ * o.m10_, m10_ * o.m01_ + m11_ * o.m11_);
}

bool Mat2::is_identity() const {
    return *this == identity(modulus());
}

Residue Mat2::det() const {
    return m00_ * m11_ - m01_ * m10_;
}

Mat2 Mat2::pow(const Int& k) const {
    if (k < 0) {
        throw std::domain_error("Mat2::pow: negative exponent");
    }
    if (k == 0) {
        return identity(modulus());
    }
    // Left-to-right binary exponentiation: deterministic operation count.
    Mat2 result = *this;
    for (int bit = static_cast<int>(boost::multiprecision::msb(k)) - 1; bit >= 0; --bit) {
        result = result * result;
        if (boost::multiprecision::bit_test(k, static_cast<unsigned>(bit))) {
            result = result * *this;
        }
    }
    return result;
}

Mat2 Mat2::inverse() const {
    Residue dinv = det().inverse();  // NotAUnit propagates
    return Mat2(m11_ * dinv, -m01_ * dinv, -m10_ * dinv, m00_ * dinv);
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.m00().value() << "," << m.m01().value() << "],[" << m.m10().value()
              << "," << m.m11().value() << "]] mod " << m.modulus().value();
}

}  // namespace pisano
