#include "pisano/numtheory.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace pisano {

using boost::multiprecision::gcd;
using boost::multiprecision::powm;

Int Factorization::reassemble() const {
    Int product = unfactored;
    for (const FactorEntry& f : entries) {
        product *= int_pow(f.prime, f.exponent);
    }
    return product;
}

Factorization Factorization::merge(const Factorization& a, const Factorization& b) {
    std::map<Int, unsigned> exps;
    for (const FactorEntry& f : a.entries) exps[f.prime] += f.exponent;
    for (const FactorEntry& f : b.entries) exps[f.prime] += f.exponent;
    Factorization out;
    out.complete = a.complete && b.complete;
    out.unfactored = a.unfactored * b.unfactored;
    for (const auto& [p, e] : exps) out.entries.push_back({p, e});
    return out;
}

void Factorization::push_prime_power(const Int& p, unsigned e) {
    if (e == 0) return;
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const FactorEntry& f) { return f.prime == p; });
    if (it != entries.end()) {
        it->exponent += e;
        return;
    }
    it = std::lower_bound(entries.begin(), entries.end(), p,
                          [](const FactorEntry& f, const Int& v) { return f.prime < v; });
    entries.insert(it, {p, e});
}

namespace {

// Strong probable-prime test to base a; m odd, m > 2, m - 1 = d * 2^s.
bool strong_probable_prime(const Int& m, const Int& a, const Int& d, unsigned s) {
    Int x = powm(a, d, m);
    if (x == 1 || x == m - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % m;
        if (x == m - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

// The fixed witness set is deterministic for m < 3.3e24.
const Int kDeterministicBound("3317044064679887385961981");

}  // namespace

bool is_probable_prime(const Int& m) {
    if (m < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (m == p) return true;
        if (m % p == 0) return false;
    }
    Int d = m - 1;
    unsigned s = 0;
    while (boost::multiprecision::bit_test(d, 0) == false) {
        d >>= 1;
        ++s;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!strong_probable_prime(m, a, d, s)) return false;
    }
    if (m < kDeterministicBound) return true;
    // Top up to 64 rounds with pseudorandom bases; seeded from the input so
    // repeated calls stay consistent.
    std::mt19937_64 rng(static_cast<uint64_t>(m % 0xffffffffffffffffULL));
    for (int round = 12; round < 64; ++round) {
        Int a = 2 + Int(rng()) % (m - 3);
        if (!strong_probable_prime(m, a, d, s)) return false;
    }
    return true;
}

namespace {

constexpr int64_t kTrialDivisionBound = 1000000;
constexpr int64_t kRhoIterationCap = 10000000;

// Brent's cycle-finding variant of Pollard rho. Deterministic: fixed start,
// the polynomial offset steps through c = 1, 2, ... on failure. Returns a
// nontrivial factor of m (composite, odd, no factors <= trial bound), or 0
// if the iteration budget ran out.
Int brent_rho(const Int& m, int64_t& budget) {
    for (Int c = 1; budget > 0; ++c) {
        Int y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
        const int64_t batch = 128;
        while (g == 1 && budget > 0) {
            x = y;
            for (Int i = 0; i < r; ++i) {
                y = (y * y + c) % m;
            }
            Int k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                Int rem = r - k;
                Int limit = rem < batch ? rem : Int(batch);
                for (Int i = 0; i < limit; ++i) {
                    y = (y * y + c) % m;
                    Int diff = x > y ? x - y : y - x;
                    q = (q * diff) % m;
                }
                budget -= static_cast<int64_t>(limit);
                g = gcd(q, m);
                k += batch;
            }
            r *= 2;
        }
        if (g == m) {
            // Backtrack one step at a time to find the factor the batch
            // jumped over.
            g = 1;
            while (g == 1 && budget > 0) {
                ys = (ys * ys + c) % m;
                Int diff = x > ys ? x - ys : ys - x;
                g = gcd(diff, m);
                --budget;
            }
        }
        if (g != 1 && g != m) return g;
        // g == m: cycle degenerated for this c, retry with the next offset.
    }
    return 0;
}

void factor_recursive(Int m, Factorization& out, int64_t& budget) {
    if (m == 1) return;
    if (is_probable_prime(m)) {
        out.push_prime_power(m, 1);
        return;
    }
    Int f = brent_rho(m, budget);
    if (f == 0) {
        out.complete = false;
        out.unfactored *= m;
        return;
    }
    factor_recursive(f, out, budget);
    factor_recursive(m / f, out, budget);
}

}  // namespace

Factorization factor(const Int& m) {
    if (m < 1) {
        throw std::invalid_argument("factor: argument must be >= 1");
    }
    Factorization out;
    Int rest = m;
    unsigned twos = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    if (twos > 0) out.push_prime_power(2, twos);
    for (Int d = 3; d <= kTrialDivisionBound && d * d <= rest; d += 2) {
        if (rest % d == 0) {
            unsigned e = 0;
            do {
                rest /= d;
                ++e;
            } while (rest % d == 0);
            out.push_prime_power(d, e);
        }
    }
    if (rest > 1) {
        if (rest <= kTrialDivisionBound * kTrialDivisionBound || is_probable_prime(rest)) {
            // No factor <= 1e6 survives, so a cofactor below 1e12 is prime.
            out.push_prime_power(rest, 1);
        } else {
            int64_t budget = kRhoIterationCap;
            factor_recursive(rest, out, budget);
        }
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const FactorEntry& a, const FactorEntry& b) { return a.prime < b.prime; });
    return out;
}

Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) {
        throw std::invalid_argument("lcm: arguments must be positive");
    }
    return (a / gcd(a, b)) * b;
}

bool is_quadratic_residue(const Int& a, const Int& p) {
    return powm(a % p, (p - 1) / 2, p) == 1;
}

namespace {

void check_sqrt_preconditions(const Int& a, const Int& p) {
    if (p == 2 || !is_probable_prime(p)) {
        throw std::invalid_argument("sqrt_mod_prime: modulus must be an odd prime");
    }
    if (gcd(a, p) != 1) {
        throw std::invalid_argument("sqrt_mod_prime: value must be a unit mod p");
    }
}

Int canonical_root(const Int& y, const Int& n) {
    return y <= n - y ? y : n - y;
}

}  // namespace

std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p) {
    check_sqrt_preconditions(a, p);
    Int v = a % p;
    if (v < 0) v += p;
    if (!is_quadratic_residue(v, p)) {
        return std::nullopt;
    }
    Int y;
    if (p % 4 == 3) {
        y = powm(v, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks. p - 1 = q * 2^s with q odd.
        Int q = p - 1;
        unsigned s = 0;
        while (!boost::multiprecision::bit_test(q, 0)) {
            q >>= 1;
            ++s;
        }
        // Deterministic scan for a non-residue.
        Int z = 2;
        while (is_quadratic_residue(z, p)) ++z;
        Int c = powm(z, q, p);
        y = powm(v, (q + 1) / 2, p);
        Int t = powm(v, q, p);
        unsigned m = s;
        while (t != 1) {
            Int t2 = t;
            unsigned i = 0;
            while (t2 != 1) {
                t2 = (t2 * t2) % p;
                ++i;
            }
            Int b = c;
            for (unsigned j = 0; j + i + 1 < m; ++j) {
                b = (b * b) % p;
            }
            y = (y * b) % p;
            c = (b * b) % p;
            t = (t * c) % p;
            m = i;
        }
    }
    if ((y * y) % p != v) {
        throw InternalInconsistency("sqrt_mod_prime: result fails its defining equation");
    }
    return canonical_root(y, p);
}

std::optional<Int> sqrt_mod_prime_power(const Int& a, const Int& p, unsigned e) {
    if (e < 1) {
        throw std::invalid_argument("sqrt_mod_prime_power: exponent must be >= 1");
    }
    std::optional<Int> base = sqrt_mod_prime(a, p);
    if (!base) {
        return std::nullopt;
    }
    Int y = *base;
    Int pk = p;
    for (unsigned j = 2; j <= e; ++j) {
        pk *= p;
        // One Hensel step: y <- y - (y^2 - a) / (2y) mod p^j. 2y is a unit
        // since p is odd and gcd(a, p) = 1.
        Int f = (y * y - a) % pk;
        if (f < 0) f += pk;
        ExtendedGcd inv = extended_gcd((2 * y) % pk, pk);
        Int correction = (f * inv.x) % pk;
        y = (y - correction) % pk;
        if (y < 0) y += pk;
    }
    if ((y * y) % pk != ((a % pk) + pk) % pk) {
        throw InternalInconsistency("sqrt_mod_prime_power: lift fails its defining equation");
    }
    return canonical_root(y, pk);
}

OrderResult order_from_multiple(const std::function<bool(const Int&)>& identity_at,
                                const Int& multiple) {
    return order_from_multiple(identity_at, multiple, factor(multiple));
}

OrderResult order_from_multiple(const std::function<bool(const Int&)>& identity_at,
                                const Int& multiple, const Factorization& multiple_factors) {
    if (multiple < 1) {
        throw std::invalid_argument("order_from_multiple: multiple must be >= 1");
    }
    if (!multiple_factors.complete) {
        throw IncompleteFactorization(
            "order_from_multiple: refusing to certify an order from a partial factorization");
    }
    if (!identity_at(multiple)) {
        throw NotAnExponentMultiple("order_from_multiple: element^multiple != identity");
    }
    Int order = multiple;
    for (const FactorEntry& f : multiple_factors.entries) {
        while (order % f.prime == 0 && identity_at(order / f.prime)) {
            order /= f.prime;
        }
    }
    return {order, multiple};
}

}  // namespace pisano
