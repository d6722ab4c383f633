#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pisano/residue.hpp"

using namespace pisano;

namespace {

Int random_int(std::mt19937_64& rng, uint64_t lo, uint64_t hi) {
    return Int(std::uniform_int_distribution<uint64_t>(lo, hi)(rng));
}

}  // namespace

TEST_CASE("modulus rejects degenerate values") {
    CHECK_THROWS_AS(Modulus(1), std::domain_error);
    CHECK_THROWS_AS(Modulus(0), std::domain_error);
    CHECK_THROWS_AS(Modulus(-3), std::domain_error);
    CHECK(Modulus(2).value() == 2);
}

TEST_CASE("construction canonicalizes to [0, n)") {
    Modulus m(7);
    CHECK(Residue(10, m).value() == 3);
    CHECK(Residue(-1, m).value() == 6);
    CHECK(Residue(-7, m).value() == 0);
    CHECK(Residue(0, m).is_zero());
    CHECK(Residue(1, m).is_one());
}

TEST_CASE("addition examples") {
    Modulus m7(7), m11(11);
    CHECK((Residue(3, m7) + Residue(5, m7)).value() == 1);
    CHECK((Residue(6, m11) + Residue(5, m11)).value() == 0);
    Residue x(4, m7);
    CHECK(Residue::zero(m7) + x == x);
    CHECK((x - x).is_zero());
    CHECK((-Residue(2, m7)).value() == 5);
}

TEST_CASE("multiplication examples") {
    Modulus m11(11);
    CHECK((Residue(8, m11) * Residue(4, m11)).value() == 10);
    Residue x(9, m11);
    CHECK(Residue::one(m11) * x == x);
    CHECK((Residue::zero(m11) * x).is_zero());
}

TEST_CASE("operands must share the modulus") {
    Residue a(1, Modulus(7));
    Residue b(1, Modulus(11));
    CHECK_THROWS_AS(a + b, ModulusMismatch);
    CHECK_THROWS_AS(a * b, ModulusMismatch);
    CHECK_THROWS_AS(a - b, ModulusMismatch);
}

TEST_CASE("inverse examples") {
    Modulus m11(11);
    CHECK(Residue(2, m11).inverse().value() == 6);

    // 7 is the unique y with 8y = 1 mod 11; the scan below rederives it.
    CHECK(Residue(8, m11).inverse().value() == 7);
    Int found = -1;
    for (uint64_t y = 0; y < 11; ++y) {
        if (8 * y % 11 == 1) found = y;
    }
    CHECK(found == 7);
}

TEST_CASE("inverse of a non-unit reports the blocking gcd") {
    Modulus m10(10);
    CHECK_THROWS_AS(Residue(5, m10).inverse(), NotAUnit);
    try {
        Residue(5, m10).inverse();
        FAIL("expected NotAUnit");
    } catch (const NotAUnit& e) {
        CHECK(e.witness_gcd() == 5);
    }
    CHECK_THROWS_AS(Residue::zero(m10).inverse(), NotAUnit);
}

TEST_CASE("pow examples") {
    Modulus m11(11);
    Residue a(8, m11);
    CHECK(a.pow(0).is_one());
    CHECK(a.pow(1) == a);
    CHECK(a.pow(10).is_one());
    CHECK(oracle::order(8, 11) == 10);

    Modulus big(Int(1000000007));
    CHECK(Residue(2, big).pow(10).value() == 1024);
    CHECK_THROWS_AS(a.pow(-1), std::domain_error);
}

TEST_CASE("ring axioms hold on random samples") {
    std::mt19937_64 rng(20240501);
    for (int i = 0; i < 200; ++i) {
        Modulus m(random_int(rng, 2, 1000000));
        Residue a(random_int(rng, 0, 2000000), m);
        Residue b(random_int(rng, 0, 2000000), m);
        Residue c(random_int(rng, 0, 2000000), m);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Residue::zero(m) == a);
        CHECK(a * Residue::one(m) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("random units invert and pow is additive in the exponent") {
    std::mt19937_64 rng(20240502);
    int units_seen = 0;
    for (int i = 0; i < 300; ++i) {
        Modulus m(random_int(rng, 2, 1000000));
        Residue a(random_int(rng, 1, 2000000), m);
        Int j = random_int(rng, 0, 1000000);
        Int k = random_int(rng, 0, 1000000);
        CHECK(a.pow(j + k) == a.pow(j) * a.pow(k));
        if (boost::multiprecision::gcd(a.value(), m.value()) == 1) {
            ++units_seen;
            CHECK((a * a.inverse()).is_one());
        }
    }
    CHECK(units_seen > 100);
}
