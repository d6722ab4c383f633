#include "pisano/periods.hpp"

namespace pisano {

using boost::multiprecision::bit_test;
using boost::multiprecision::gcd;

std::string_view to_string(RootLocation loc) {
    return loc == RootLocation::Base ? "base" : "extension";
}

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::CharTwo: return "CharTwo";
        case CaseTag::OddDouble: return "OddDouble";
        case CaseTag::BothEven: return "BothEven";
        case CaseTag::ExtensionOnly: return "ExtensionOnly";
        case CaseTag::Fallback: return "Fallback";
    }
    throw InternalInconsistency("to_string: unhandled CaseTag");
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::Roots: return "Roots";
        case Method::MatrixOrder: return "MatrixOrder";
        case Method::BruteForce: return "BruteForce";
    }
    throw InternalInconsistency("to_string: unhandled Method");
}

std::string_view to_string(FibMethod m) {
    switch (m) {
        case FibMethod::Iterative: return "iterative";
        case FibMethod::MatrixPower: return "matrix";
        case FibMethod::Binet: return "binet";
    }
    throw InternalInconsistency("to_string: unhandled FibMethod");
}

Residue RootPair::base_r() const {
    if (location != RootLocation::Base) {
        throw InternalInconsistency("RootPair: base projection of extension roots");
    }
    return r.a();
}

Residue RootPair::base_s() const {
    if (location != RootLocation::Base) {
        throw InternalInconsistency("RootPair: base projection of extension roots");
    }
    return s.a();
}

RootPair extension_roots(const Modulus& n) {
    QuadElem w = QuadElem::omega(n);
    return {RootLocation::Extension, w, w.sigma()};
}

namespace {

// (p, e) for n = p^e, or nullopt when n is not a certified prime power.
std::optional<std::pair<Int, unsigned>> prime_power_split(const Int& n) {
    Factorization f = factor(n);
    if (!f.complete || f.entries.size() != 1) return std::nullopt;
    return std::make_pair(f.entries[0].prime, f.entries[0].exponent);
}

RootPair solve_characteristic_pe(const Modulus& n, const Int& p, unsigned e) {
    if (p == 5) {
        throw HypothesisViolated("solve_characteristic: 5 is not a unit mod " + n.value().str());
    }
    if (p == 2 || !is_quadratic_residue(5, p)) {
        return extension_roots(n);
    }
    std::optional<Int> y = sqrt_mod_prime_power(5, p, e);
    if (!y) {
        throw InternalInconsistency("solve_characteristic: residue status lost in the lift");
    }
    Residue r = (Residue::one(n) + Residue(*y, n)) * Residue(2, n).inverse();
    Residue s = Residue::one(n) - r;
    return {RootLocation::Base, QuadElem::embed(r), QuadElem::embed(s)};
}

struct RootOrders {
    Int ord_r;
    Int ord_s;
};

// Orders of both roots mod p^e, certified against the unit-group order:
// (p-1)*p^(e-1) in the base ring, (p^2-1)*p^(2(e-1)) in the extension
// (where x^2 - x - 1 stays irreducible mod p, so the quotient mod p is the
// field with p^2 elements).
RootOrders root_orders(const RootPair& roots, const Int& p, unsigned e) {
    Factorization mf;
    Int multiple;
    unsigned lift;
    if (roots.location == RootLocation::Base) {
        mf = factor(p - 1);
        multiple = p - 1;
        lift = e - 1;
    } else {
        mf = Factorization::merge(factor(p - 1), factor(p + 1));
        multiple = (p - 1) * (p + 1);
        lift = 2 * (e - 1);
    }
    if (lift > 0) {
        mf.push_prime_power(p, lift);
        multiple *= int_pow(p, lift);
    }
    QuadElem one = QuadElem::one(roots.r.modulus());
    auto order_of = [&](const QuadElem& u) {
        auto identity_at = [&](const Int& k) { return u.pow(k) == one; };
        return order_from_multiple(identity_at, multiple, mf).order;
    };
    return {order_of(roots.r), order_of(roots.s)};
}

}  // namespace

RootPair solve_characteristic(const Modulus& n) {
    auto pe = prime_power_split(n.value());
    if (!pe) {
        throw std::invalid_argument("solve_characteristic: modulus must be a prime power");
    }
    return solve_characteristic_pe(n, pe->first, pe->second);
}

RootPair characteristic_roots(const Modulus& n) {
    auto pe = prime_power_split(n.value());
    if (pe) {
        return solve_characteristic_pe(n, pe->first, pe->second);
    }
    return extension_roots(n);
}

CaseTag classify(const RootPair& pair, const Int& ord_r, const Int& ord_s) {
    if (pair.r.modulus().value() == 2) {
        if (ord_r == 3 && ord_s == 3) return CaseTag::CharTwo;
        throw InternalInconsistency("classify: 2 = 0 in the base ring but root orders are not 3");
    }
    bool r_odd = bit_test(ord_r, 0);
    bool s_odd = bit_test(ord_s, 0);
    if (pair.location == RootLocation::Base) {
        if (r_odd != s_odd) {
            const Int& odd = r_odd ? ord_r : ord_s;
            const Int& even = r_odd ? ord_s : ord_r;
            if (even == 2 * odd) return CaseTag::OddDouble;
        } else if (!r_odd && ord_r == ord_s) {
            return CaseTag::BothEven;
        }
    } else if (!r_odd && ord_r == ord_s) {
        return CaseTag::ExtensionOnly;
    }
    throw InternalInconsistency("classify: no case matches (ord_r = " + ord_r.str() +
                                ", ord_s = " + ord_s.str() + ", location = " +
                                std::string(to_string(pair.location)) + ")");
}

LocalPeriod local_period(const Int& p, unsigned e) {
    if (e < 1) {
        throw std::invalid_argument("local_period: exponent must be >= 1");
    }
    if (p == 5) {
        throw HypothesisViolated("local_period: 5 is not a unit mod any power of 5");
    }
    Int pe = int_pow(p, e);
    Modulus n(pe);
    RootPair roots = solve_characteristic_pe(n, p, e);
    RootOrders ords = root_orders(roots, p, e);
    LocalPeriod out{p, e, Int(0), roots, classify(roots, ords.ord_r, ords.ord_s),
                    ords.ord_r, ords.ord_s};
    if (e == 1) {
        out.period = lcm(out.ord_r, out.ord_s);
        return out;
    }
    // The candidate multiple pi(p) * p^(e-1) is classical; it is checked
    // here before any order is extracted from it.
    Int candidate = local_period(p, 1).period * int_pow(p, e - 1);
    Mat2 q = Mat2::fibonacci(n);
    auto identity_at = [&](const Int& k) { return q.pow(k).is_identity(); };
    if (identity_at(candidate)) {
        out.period = order_from_multiple(identity_at, candidate, factor(candidate)).order;
    } else {
        out.period = pisano_brute(n);
        out.tag = CaseTag::Fallback;
    }
    return out;
}

bool PeriodCertificate::fallback_only() const {
    if (components.empty()) return false;
    for (const CertComponent& c : components) {
        if (c.case_tag != CaseTag::Fallback) return false;
    }
    return true;
}

bool verify_matrix_order(const Modulus& n, const Int& period) {
    if (period < 1) return false;
    Mat2 q = Mat2::fibonacci(n);
    if (!q.pow(period).is_identity()) return false;
    Factorization f = factor(period);
    if (!f.complete) return false;
    for (const FactorEntry& fe : f.entries) {
        if (q.pow(period / fe.prime).is_identity()) return false;
    }
    return true;
}

namespace {

CertComponent component_from(const LocalPeriod& lp) {
    CertComponent c;
    c.prime = lp.prime;
    c.exponent = lp.exponent;
    c.local_period = lp.period;
    c.case_tag = lp.tag;
    c.ord_r = lp.ord_r;
    c.ord_s = lp.ord_s;
    c.root_location = lp.roots.location;
    c.r = std::make_pair(lp.roots.r.a().value(), lp.roots.r.b().value());
    c.s = std::make_pair(lp.roots.s.a().value(), lp.roots.s.b().value());
    return c;
}

CertComponent fallback_component(const Int& p, unsigned e, const Int& local) {
    CertComponent c;
    c.prime = p;
    c.exponent = e;
    c.local_period = local;
    c.case_tag = CaseTag::Fallback;
    return c;
}

Factorization factor_or_refuse(const Int& n, const char* who) {
    Factorization f = factor(n);
    if (!f.complete) {
        throw IncompleteFactorization(std::string(who) + ": cannot certify a factorization of " +
                                      n.str());
    }
    return f;
}

}  // namespace

PeriodCertificate pisano_period(const Modulus& n) {
    Factorization f = factor_or_refuse(n.value(), "pisano_period");
    PeriodCertificate cert;
    cert.n = n.value();
    cert.method = Method::Roots;
    cert.period = 1;
    for (const FactorEntry& fe : f.entries) {
        if (fe.prime == 5) {
            Int pe = int_pow(fe.prime, fe.exponent);
            Int local = pisano_brute(Modulus(pe));
            cert.components.push_back(fallback_component(fe.prime, fe.exponent, local));
            cert.period = lcm(cert.period, local);
        } else {
            LocalPeriod lp = local_period(fe.prime, fe.exponent);
            cert.components.push_back(component_from(lp));
            cert.period = lcm(cert.period, lp.period);
        }
    }
    for (const CertComponent& c : cert.components) {
        if (c.case_tag == CaseTag::Fallback) cert.method = Method::BruteForce;
    }
    cert.verified = verify_matrix_order(n, cert.period);
    return cert;
}

PeriodCertificate pisano_period_matrix(const Modulus& n) {
    Factorization f = factor_or_refuse(n.value(), "pisano_period_matrix");
    PeriodCertificate cert;
    cert.n = n.value();
    cert.method = Method::MatrixOrder;
    cert.period = 1;
    for (const FactorEntry& fe : f.entries) {
        const Int& p = fe.prime;
        Int pe = int_pow(p, fe.exponent);
        Modulus m(pe);
        // Classical multiples of ord(Q mod p^e), checked before use: the
        // unit-group order when Q diagonalizes over the base, 2(p+1)p^(e-1)
        // otherwise, 4*5^e for the excluded prime.
        Int candidate;
        if (p == 5) {
            candidate = 4 * pe;
        } else if (p != 2 && is_quadratic_residue(5, p)) {
            candidate = (p - 1) * int_pow(p, fe.exponent - 1);
        } else {
            candidate = 2 * (p + 1) * int_pow(p, fe.exponent - 1);
        }
        Mat2 q = Mat2::fibonacci(m);
        auto identity_at = [&](const Int& k) { return q.pow(k).is_identity(); };
        CertComponent c;
        c.prime = p;
        c.exponent = fe.exponent;
        if (identity_at(candidate)) {
            c.local_period = order_from_multiple(identity_at, candidate, factor(candidate)).order;
            if (p == 5) c.case_tag = CaseTag::Fallback;
        } else {
            c.local_period = pisano_brute(m);
            c.case_tag = CaseTag::Fallback;
        }
        cert.components.push_back(c);
        cert.period = lcm(cert.period, c.local_period);
    }
    cert.verified = verify_matrix_order(n, cert.period);
    return cert;
}

PeriodCertificate pisano_period_brute(const Modulus& n, const Int& cap) {
    PeriodCertificate cert;
    cert.n = n.value();
    cert.method = Method::BruteForce;
    cert.period = pisano_brute(n, cap);
    cert.verified = verify_matrix_order(n, cert.period);
    return cert;
}

Int pisano_brute(const Modulus& n, const Int& cap) {
    if (cap < 1) {
        throw std::invalid_argument("pisano_brute: cap must be positive");
    }
    const Int& m = n.value();
    Int a = 0, b = 1;
    for (Int k = 1; k <= cap; ++k) {
        Int next = (a + b) % m;
        a = b;
        b = next;
        if (a == 0 && b == 1) return k;
    }
    throw CapExceeded("pisano_brute: no period within " + cap.str() + " steps mod " + m.str());
}

Int pisano_brute(const Modulus& n) { return pisano_brute(n, 6 * n.value()); }

namespace {

Residue fib_iterative(const Int& k, const Modulus& n) {
    Residue a = Residue::zero(n);
    Residue b = Residue::one(n);
    for (Int i = 0; i < k; ++i) {
        Residue next = a + b;
        a = b;
        b = next;
    }
    return a;
}

Residue fib_binet(const Int& k, const Modulus& n) {
    if (gcd(n.value(), Int(5)) != 1) {
        throw HypothesisViolated("fib: Binet requires 5 to be a unit mod " + n.value().str());
    }
    RootPair roots = characteristic_roots(n);
    QuadElem diff = roots.r.pow(k) - roots.s.pow(k);
    QuadElem result = diff * roots.sqrt5().inverse();
    if (!result.in_base()) {
        throw InternalInconsistency("fib: Binet value left the embedded base ring");
    }
    return result.a();
}

}  // namespace

Residue fib(const Int& k, const Modulus& n, FibMethod method) {
    if (k < 0) {
        throw std::invalid_argument("fib: index must be nonnegative");
    }
    switch (method) {
        case FibMethod::Iterative: return fib_iterative(k, n);
        case FibMethod::MatrixPower: return Mat2::fibonacci(n).pow(k).m01();
        case FibMethod::Binet: return fib_binet(k, n);
    }
    throw InternalInconsistency("fib: unhandled method");
}

bool RootIdentityReport::all_passed() const {
    for (const Check& c : checks) {
        if (c.status == Status::Fail) return false;
    }
    return true;
}

const RootIdentityReport::Check* RootIdentityReport::find(std::string_view name) const {
    for (const Check& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

RootIdentityReport verify_root_identities(const Modulus& n) {
    using Status = RootIdentityReport::Status;
    RootIdentityReport report;
    auto add = [&](std::string name, Status st, std::string detail) {
        report.checks.push_back({std::move(name), st, std::move(detail)});
    };
    auto check = [&](std::string name, bool ok, std::string detail) {
        add(std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail));
    };

    if (gcd(n.value(), Int(5)) != 1) {
        add("hypothesis_five_unit", Status::Skipped,
            "5 shares a factor with the modulus; the root analysis does not apply");
        return report;
    }
    auto pe = prime_power_split(n.value());
    if (!pe) {
        add("prime_power_input", Status::Skipped,
            "modulus is not a prime power; identities are checked per component");
        return report;
    }
    const auto& [p, e] = *pe;

    std::optional<RootPair> solved;
    try {
        solved = solve_characteristic_pe(n, p, e);
    } catch (const std::exception& ex) {
        add("conjugate_root", Status::Fail, std::string("root solver failed: ") + ex.what());
        return report;
    }
    const RootPair& roots = *solved;
    const QuadElem& r = roots.r;
    const QuadElem& s = roots.s;
    QuadElem one = QuadElem::one(n);
    QuadElem five = QuadElem::embed(Residue(5, n));

    check("conjugate_root", s == one - r && s * s == s + one && r * r == r + one,
          "s = 1 - r and both r, s solve x^2 = x + 1");
    check("roots_are_units", r * (-s) == one, "r * (-s) = 1, so r and s are units");
    QuadElem d = roots.sqrt5();
    check("sqrt5_squares_to_5", d * d == five, "(r - s)^2 = 5");

    {
        bool ok = true;
        std::string detail = "Binet equals iteration for 0 <= k <= 64";
        Residue a = Residue::zero(n);
        Residue b = Residue::one(n);
        for (int k = 0; k <= 64; ++k) {
            if (fib(k, n, FibMethod::Binet) != a) {
                ok = false;
                detail = "first mismatch at k = " + std::to_string(k);
                break;
            }
            Residue next = a + b;
            a = b;
            b = next;
        }
        check("binet_matches_iteration", ok, std::move(detail));
    }

    if (roots.location == RootLocation::Base) {
        Mat2 basis = Mat2::change_of_basis(roots.base_r(), roots.base_s());
        try {
            Mat2 basis_inv = basis.inverse();
            check("basis_matrix_invertible", true, "det [[1,1],[r,s]] = s - r is a unit");
            check("diagonalization",
                  basis_inv * Mat2::fibonacci(n) * basis ==
                      Mat2::diagonal(roots.base_r(), roots.base_s()),
                  "P^-1 Q P = diag(r, s)");
        } catch (const NotAUnit& ex) {
            check("basis_matrix_invertible", false,
                  "s - r is not a unit (gcd witness " + ex.witness_gcd().str() + ")");
            add("diagonalization", Status::Skipped, "no inverse basis to conjugate with");
        }
    } else {
        add("basis_matrix_invertible", Status::Skipped, "roots live in the extension");
        add("diagonalization", Status::Skipped, "roots live in the extension");
    }

    {
        RootOrders ords = root_orders(roots, p, e);
        Int period = lcm(ords.ord_r, ords.ord_s);
        check("period_equals_order_lcm", verify_matrix_order(n, period),
              "lcm(ord r, ord s) = " + period.str() + " is exactly ord(Q) (ord r = " +
                  ords.ord_r.str() + ", ord s = " + ords.ord_s.str() + ")");
    }
    return report;
}

}  // namespace pisano
