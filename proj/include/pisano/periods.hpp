#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pisano/mat2.hpp"
#include "pisano/numtheory.hpp"
#include "pisano/quadext.hpp"
#include "pisano/residue.hpp"

namespace pisano {

enum class RootLocation { Base, Extension };

std::string_view to_string(RootLocation loc);

// The two roots r, s of x^2 - x - 1, either in Z/nZ (embedded) or in the
// quadratic extension. Always satisfies r + s = 1, r*s = -1, and
// (r - s)^2 = 5.
struct RootPair {
    RootLocation location;
    QuadElem r;
    QuadElem s;

    QuadElem sqrt5() const { return r - s; }

    // Base-ring projections; only valid when location == Base.
    Residue base_r() const;
    Residue base_s() const;
};

// Which branch of the case analysis a prime-power component falls in.
//   CharTwo       2 = 0 in the base ring (n = 2); both orders are 3.
//   OddDouble     one root order odd, the other exactly its double.
//   BothEven      both orders even and equal.
//   ExtensionOnly roots live only in the extension; equal even orders.
//   Fallback      outside the 5-is-a-unit hypothesis, or certification of
//                 an order/factorization failed.
enum class CaseTag { CharTwo, OddDouble, BothEven, ExtensionOnly, Fallback };

std::string_view to_string(CaseTag tag);

enum class Method { Roots, MatrixOrder, BruteForce };

std::string_view to_string(Method m);

// Roots of x^2 - x - 1 over Z/nZ for a prime power n = p^e with p != 5.
// Base-ring roots when 5 is a square mod odd p: r = (1 + sqrt5)/2 with the
// canonical (smaller) square root, s = 1 - r. Powers of 2 and non-residue
// primes route through the extension: r = w, s = sigma(w) = 1 - w.
// Throws HypothesisViolated for p = 5.
RootPair solve_characteristic(const Modulus& n);

// The extension-ring pair (w, 1 - w) over any modulus. Used directly for
// composite moduli where no per-prime decomposition is wanted.
RootPair extension_roots(const Modulus& n);

// Roots for a general modulus: solve_characteristic when n is a prime
// power, the extension pair over Z/nZ otherwise. Binet and the roots CLI
// both use this; callers needing r - s to be a unit must hold gcd(n,5)=1.
RootPair characteristic_roots(const Modulus& n);

// Match the unique case branch. Orders must be certified (exact).
// Throws InternalInconsistency when no branch fits: that signals either an
// implementation bug or a counterexample to the classification, and any
// certificate in flight must abort rather than guess.
CaseTag classify(const RootPair& pair, const Int& ord_r, const Int& ord_s);

// One prime-power component of a period computation.
struct LocalPeriod {
    Int prime;
    unsigned exponent = 1;
    Int period;
    RootPair roots;
    CaseTag tag;
    Int ord_r;
    Int ord_s;
};

// Period of the Fibonacci sequence mod p^e for p != 5, via root orders.
// For e = 1 the period is lcm(ord r, ord s); for e > 1 it is the order of
// Q mod p^e extracted from the candidate multiple pi(p) * p^(e-1), which
// is verified before use (brute-force fallback, tagged Fallback, if that
// verification ever failed). Throws HypothesisViolated for p = 5.
LocalPeriod local_period(const Int& p, unsigned e);

// Per-component report inside a certificate. Root data is only present on
// components that went through the root analysis; the coefficient pairs
// are (a, b) with b = 0 for base-ring roots.
struct CertComponent {
    Int prime;
    unsigned exponent = 1;
    Int local_period;
    std::optional<CaseTag> case_tag;
    std::optional<Int> ord_r;
    std::optional<Int> ord_s;
    std::optional<RootLocation> root_location;
    std::optional<std::pair<Int, Int>> r;
    std::optional<std::pair<Int, Int>> s;
};

struct PeriodCertificate {
    Int n;
    Int period;
    Method method = Method::Roots;
    bool verified = false;
    std::vector<CertComponent> components;

    // Components exist and every one sits outside the root method (5-part
    // or failed certification). False for component-free brute
    // certificates: those make no hypothesis claim at all.
    bool fallback_only() const;
};

// Checks Q^period == I mod n together with minimality over the maximal
// proper divisors period/q. False when the period's factorization cannot
// be completed.
bool verify_matrix_order(const Modulus& n, const Int& period);

// pi(n) by the root method, composed over prime powers by lcm. Components
// with p = 5 violate the hypothesis and are brute-forced, tagged Fallback,
// and the certificate method degrades to BruteForce. Throws
// IncompleteFactorization when n cannot be fully factored: no certificate
// is emitted on an unproved factorization.
PeriodCertificate pisano_period(const Modulus& n);

// pi(n) as the order of Q mod p^e per component, using classical exponent
// multiples that are verified at run time. No root analysis is performed
// (5-parts still carry the Fallback tag).
PeriodCertificate pisano_period_matrix(const Modulus& n);

// pi(n) by forward cycle detection, wrapped in a certificate with no
// components.
PeriodCertificate pisano_period_brute(const Modulus& n, const Int& cap);

// Smallest k >= 1 with (F_k, F_{k+1}) == (0, 1) mod n, by forward
// iteration; this is the sequence period since the recurrence is
// invertible. Throws CapExceeded when k is not found within cap steps.
// The default cap 6n is a safe bound on pi(n).
Int pisano_brute(const Modulus& n, const Int& cap);
Int pisano_brute(const Modulus& n);

enum class FibMethod { Iterative, MatrixPower, Binet };

std::string_view to_string(FibMethod m);

// F_k mod n. Iterative walks the recurrence, MatrixPower reads Q^k, and
// Binet evaluates (r^k - s^k) / (r - s) in the ring where the roots live
// (base ring for prime powers with base roots, the extension otherwise;
// composite moduli use the extension over Z/nZ directly). Binet requires
// gcd(n, 5) = 1 so that r - s is a unit, and always lands in the embedded
// base ring.
Residue fib(const Int& k, const Modulus& n, FibMethod method);

// Mechanical verification of the root identities for a prime power n
// coprime to 5. Reports per-item pass/fail/skip, never throws.
struct RootIdentityReport {
    enum class Status { Pass, Fail, Skipped };

    struct Check {
        std::string name;
        Status status = Status::Pass;
        std::string detail;
    };

    std::vector<Check> checks;

    bool all_passed() const;
    const Check* find(std::string_view name) const;
};

RootIdentityReport verify_root_identities(const Modulus& n);

}  // namespace pisano
