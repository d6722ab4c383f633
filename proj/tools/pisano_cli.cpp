#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pisano/certificate.hpp"
#include "pisano/periods.hpp"

namespace {

using namespace pisano;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUnverified = 2;
constexpr int kExitUsage = 64;

int usage_error(const std::string& msg) {
    std::cerr << "usage error: " << msg << "\n";
    return kExitUsage;
}

std::optional<Int> parse_int(const std::string& text) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string quad_text(const QuadElem& u, RootLocation loc) {
    if (loc == RootLocation::Base) return u.a().value().str();
    return u.a().value().str() + " + " + u.b().value().str() + "*w";
}

ordered_json quad_json(const QuadElem& u, RootLocation loc) {
    if (loc == RootLocation::Base) return int_to_json(u.a().value());
    return ordered_json::array({int_to_json(u.a().value()), int_to_json(u.b().value())});
}

// Re-derives the order relations a component's tag promises. Fallback
// components promise nothing.
bool component_case_consistent(const CertComponent& c) {
    if (!c.case_tag || *c.case_tag == CaseTag::Fallback) return true;
    if (!c.ord_r || !c.ord_s) return false;
    const Int& a = *c.ord_r;
    const Int& b = *c.ord_s;
    bool a_odd = boost::multiprecision::bit_test(a, 0);
    bool b_odd = boost::multiprecision::bit_test(b, 0);
    switch (*c.case_tag) {
        case CaseTag::CharTwo:
            return a == 3 && b == 3;
        case CaseTag::OddDouble: {
            if (a_odd == b_odd) return false;
            const Int& odd = a_odd ? a : b;
            const Int& even = a_odd ? b : a;
            return even == 2 * odd;
        }
        case CaseTag::BothEven:
            return a == b && !a_odd;
        case CaseTag::ExtensionOnly:
            return a == b && !a_odd && c.root_location == RootLocation::Extension;
        case CaseTag::Fallback:
            return true;
    }
    return false;
}

int run_period(const std::string& n_str, const std::string& method, const std::string& cap_str,
               bool json) {
    std::optional<Int> n = parse_int(n_str);
    if (!n || *n < 2) return usage_error("period: n must be an integer >= 2");
    Modulus m(*n);
    Int cap = 6 * *n;
    if (!cap_str.empty()) {
        std::optional<Int> c = parse_int(cap_str);
        if (!c || *c < 1) return usage_error("period: --cap must be a positive integer");
        cap = *c;
    }
    PeriodCertificate cert;
    if (method == "brute") {
        cert = pisano_period_brute(m, cap);
    } else if (method == "matrix") {
        cert = pisano_period_matrix(m);
    } else {
        cert = pisano_period(m);
    }
    if (json) {
        std::cout << certificate_to_json_line(cert) << "\n";
    } else {
        std::cout << certificate_to_text(cert);
    }
    return (cert.verified && !cert.fallback_only()) ? kExitOk : kExitUnverified;
}

int run_roots(const std::string& n_str, bool json) {
    std::optional<Int> n = parse_int(n_str);
    if (!n || *n < 2) return usage_error("roots: n must be an integer >= 2");
    Int g = boost::multiprecision::gcd(*n, Int(5));
    if (g != 1) {
        std::string detail = "5 is not a unit mod " + n->str();
        if (json) {
            ordered_json out;
            out["n"] = int_to_json(*n);
            out["error"] = "hypothesis_violated";
            out["detail"] = detail;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "hypothesis violation: " << detail << "\n";
        }
        return kExitUnverified;
    }
    Modulus m(*n);
    RootPair roots = characteristic_roots(m);
    QuadElem one = QuadElem::one(m);
    QuadElem d = roots.sqrt5();
    bool conjugate_root = roots.s == one - roots.r && roots.r * roots.r == roots.r + one &&
                          roots.s * roots.s == roots.s + one;
    bool roots_are_units = roots.r * (-roots.s) == one;
    bool sqrt5_squares_to_5 = d * d == QuadElem::embed(Residue(5, m));
    bool all = conjugate_root && roots_are_units && sqrt5_squares_to_5;
    if (json) {
        ordered_json out;
        out["n"] = int_to_json(*n);
        out["location"] = std::string(to_string(roots.location));
        out["r"] = quad_json(roots.r, roots.location);
        out["s"] = quad_json(roots.s, roots.location);
        out["sqrt5"] = quad_json(d, roots.location);
        out["checks"] = {{"conjugate_root", conjugate_root},
                         {"roots_are_units", roots_are_units},
                         {"sqrt5_squares_to_5", sqrt5_squares_to_5}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "n = " << *n << ", roots in " << to_string(roots.location) << " ring\n";
        std::cout << "r = " << quad_text(roots.r, roots.location) << "\n";
        std::cout << "s = " << quad_text(roots.s, roots.location) << "\n";
        std::cout << "sqrt5 = " << quad_text(d, roots.location) << "\n";
        std::cout << "conjugate_root: " << (conjugate_root ? "pass" : "FAIL") << "\n";
        std::cout << "roots_are_units: " << (roots_are_units ? "pass" : "FAIL") << "\n";
        std::cout << "sqrt5_squares_to_5: " << (sqrt5_squares_to_5 ? "pass" : "FAIL") << "\n";
    }
    return all ? kExitOk : kExitMismatch;
}

int run_fib(const std::string& k_str, const std::string& mod_str, const std::string& method,
            bool json) {
    std::optional<Int> k = parse_int(k_str);
    if (!k || *k < 0) return usage_error("fib: k must be an integer >= 0");
    if (mod_str.empty()) return usage_error("fib: --mod is required");
    std::optional<Int> n = parse_int(mod_str);
    if (!n || *n < 2) return usage_error("fib: --mod must be an integer >= 2");
    Modulus m(*n);
    if (method == "all") {
        Residue it = fib(*k, m, FibMethod::Iterative);
        Residue mx = fib(*k, m, FibMethod::MatrixPower);
        Residue bi = fib(*k, m, FibMethod::Binet);
        bool agree = it == mx && mx == bi;
        if (json) {
            ordered_json out;
            out["k"] = int_to_json(*k);
            out["mod"] = int_to_json(*n);
            out["values"] = {{"iterative", int_to_json(it.value())},
                             {"matrix", int_to_json(mx.value())},
                             {"binet", int_to_json(bi.value())}};
            out["agree"] = agree;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "F(" << *k << ") mod " << *n << " = " << it.value() << " (iterative)\n";
            std::cout << "F(" << *k << ") mod " << *n << " = " << mx.value() << " (matrix)\n";
            std::cout << "F(" << *k << ") mod " << *n << " = " << bi.value() << " (binet)\n";
            std::cout << (agree ? "all methods agree" : "METHODS DISAGREE") << "\n";
        }
        return agree ? kExitOk : kExitMismatch;
    }
    FibMethod fm = FibMethod::MatrixPower;
    if (method == "iterative") fm = FibMethod::Iterative;
    if (method == "binet") fm = FibMethod::Binet;
    Residue v = fib(*k, m, fm);
    if (json) {
        ordered_json out;
        out["k"] = int_to_json(*k);
        out["mod"] = int_to_json(*n);
        out["method"] = std::string(to_string(fm));
        out["value"] = int_to_json(v.value());
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "F(" << *k << ") mod " << *n << " = " << v.value() << " ("
                  << to_string(fm) << ")\n";
    }
    return kExitOk;
}

int run_verify(const std::string& max_str, bool json) {
    std::optional<Int> max = parse_int(max_str);
    if (!max || *max < 2) return usage_error("verify: --max must be an integer >= 2");
    Int checked = 0;
    Int mismatches = 0;
    for (Int n = 2; n <= *max; ++n) {
        Modulus m(n);
        PeriodCertificate cert = pisano_period(m);
        Int brute = pisano_brute(m);
        bool match = cert.period == brute;
        bool identities = verify_root_identities(m).all_passed();
        bool cases_ok = true;
        std::vector<std::string> cases;
        for (const CertComponent& c : cert.components) {
            cases_ok = cases_ok && component_case_consistent(c);
            cases.push_back(c.case_tag ? std::string(to_string(*c.case_tag)) : "none");
        }
        bool ok = match && identities && cases_ok;
        ++checked;
        if (!ok) ++mismatches;
        if (json) {
            ordered_json out;
            out["n"] = int_to_json(n);
            out["period"] = int_to_json(cert.period);
            out["brute"] = int_to_json(brute);
            out["match"] = match;
            out["identities"] = identities;
            out["cases"] = cases;
            out["ok"] = ok;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "n=" << n << " period=" << cert.period << " brute=" << brute
                      << " cases=";
            for (size_t i = 0; i < cases.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << cases[i];
            }
            std::cout << " " << (ok ? "ok" : "MISMATCH") << "\n";
        }
    }
    if (json) {
        ordered_json out;
        out["checked"] = int_to_json(checked);
        out["mismatches"] = int_to_json(mismatches);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << checked << " moduli checked, " << mismatches << " mismatches\n";
    }
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

int run_classify(const std::string& limit_str, bool json) {
    std::optional<Int> limit = parse_int(limit_str);
    if (!limit || *limit < 2) return usage_error("classify: --primes-up-to must be an integer >= 2");
    if (*limit > 100000000) {
        return usage_error("classify: sweeps above 1e8 are not supported; use `period` per n");
    }
    uint64_t lim = limit->convert_to<uint64_t>();
    std::vector<bool> composite(lim + 1, false);
    for (uint64_t p = 2; p * p <= lim; ++p) {
        if (composite[p]) continue;
        for (uint64_t q = p * p; q <= lim; q += p) composite[q] = true;
    }
    uint64_t char_two = 0, odd_double = 0, both_even = 0, extension_only = 0;
    for (uint64_t p = 2; p <= lim; ++p) {
        if (composite[p] || p == 5) continue;
        LocalPeriod lp = local_period(Int(p), 1);
        switch (lp.tag) {
            case CaseTag::CharTwo: ++char_two; break;
            case CaseTag::OddDouble: ++odd_double; break;
            case CaseTag::BothEven: ++both_even; break;
            case CaseTag::ExtensionOnly: ++extension_only; break;
            case CaseTag::Fallback: break;
        }
        if (json) {
            ordered_json out;
            out["p"] = int_to_json(lp.prime);
            out["case"] = std::string(to_string(lp.tag));
            out["ord_r"] = int_to_json(lp.ord_r);
            out["ord_s"] = int_to_json(lp.ord_s);
            out["period"] = int_to_json(lp.period);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "p=" << lp.prime << " case=" << to_string(lp.tag)
                      << " ord(r)=" << lp.ord_r << " ord(s)=" << lp.ord_s << " pi=" << lp.period
                      << "\n";
        }
    }
    if (json) {
        ordered_json out;
        out["counts"] = {{"CharTwo", char_two},
                         {"OddDouble", odd_double},
                         {"BothEven", both_even},
                         {"ExtensionOnly", extension_only}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "counts: CharTwo=" << char_two << " OddDouble=" << odd_double
                  << " BothEven=" << both_even << " ExtensionOnly=" << extension_only << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pisano periods via roots of x^2 - x - 1 in Z/nZ and its quadratic extension"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "line-delimited JSON output, one record per result");

    auto* period_cmd = app.add_subcommand("period", "compute pi(n) with a verifiable certificate");
    std::string period_n, period_method = "auto", period_cap;
    period_cmd->add_option("n", period_n, "modulus, n >= 2")->required();
    period_cmd->add_option("--method", period_method, "auto|roots|matrix|brute (default auto)")
        ->check(CLI::IsMember({"auto", "roots", "matrix", "brute"}));
    period_cmd->add_option("--cap", period_cap, "brute-force iteration cap (default 6n)");
    period_cmd->add_flag("--json", json, "line-delimited JSON output");

    auto* roots_cmd = app.add_subcommand("roots", "solve x^2 - x - 1 = 0 mod n");
    std::string roots_n;
    roots_cmd->add_option("n", roots_n, "modulus, n >= 2")->required();
    roots_cmd->add_flag("--json", json, "line-delimited JSON output");

    auto* fib_cmd = app.add_subcommand("fib", "compute F(k) mod n");
    std::string fib_k, fib_mod, fib_method = "matrix";
    fib_cmd->add_option("k", fib_k, "index, k >= 0")->required();
    fib_cmd->add_option("--mod", fib_mod, "modulus, n >= 2")->required();
    fib_cmd
        ->add_option("--method", fib_method,
                     "iterative|matrix|binet|all (default matrix; iterative walks all k steps)")
        ->check(CLI::IsMember({"iterative", "matrix", "binet", "all"}));
    fib_cmd->add_flag("--json", json, "line-delimited JSON output");

    auto* verify_cmd = app.add_subcommand("verify", "sweep n in [2, N]: root method vs brute force");
    std::string verify_max;
    verify_cmd->add_option("--max", verify_max, "upper bound N >= 2")->required();
    verify_cmd->add_flag("--json", json, "line-delimited JSON output");

    auto* classify_cmd = app.add_subcommand("classify", "case table over primes p <= P, p != 5");
    std::string classify_limit;
    classify_cmd->add_option("--primes-up-to", classify_limit, "upper bound P >= 2")->required();
    classify_cmd->add_flag("--json", json, "line-delimited JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (period_cmd->parsed()) return run_period(period_n, period_method, period_cap, json);
        if (roots_cmd->parsed()) return run_roots(roots_n, json);
        if (fib_cmd->parsed()) return run_fib(fib_k, fib_mod, fib_method, json);
        if (verify_cmd->parsed()) return run_verify(verify_max, json);
        if (classify_cmd->parsed()) return run_classify(classify_limit, json);
    } catch (const HypothesisViolated& ex) {
        std::cerr << "hypothesis violation: " << ex.what() << "\n";
        return kExitUnverified;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
