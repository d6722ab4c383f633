#include "pisano/certificate.hpp"

#include <limits>
#include <sstream>

namespace pisano {

using nlohmann::ordered_json;

ordered_json int_to_json(const Int& v) {
    static const Int kMax = std::numeric_limits<int64_t>::max();
    static const Int kMin = std::numeric_limits<int64_t>::min();
    if (v >= kMin && v <= kMax) return v.convert_to<int64_t>();
    return v.str();
}

namespace {

ordered_json root_to_json(const CertComponent& c, const std::optional<std::pair<Int, Int>>& coeffs) {
    if (!coeffs || !c.root_location) return nullptr;
    if (*c.root_location == RootLocation::Base) return int_to_json(coeffs->first);
    return ordered_json::array({int_to_json(coeffs->first), int_to_json(coeffs->second)});
}

std::string coeff_pair_to_text(const std::pair<Int, Int>& coeffs) {
    return coeffs.first.str() + " + " + coeffs.second.str() + "*w";
}

}  // namespace

ordered_json certificate_to_json(const PeriodCertificate& cert) {
    ordered_json out;
    out["n"] = int_to_json(cert.n);
    out["period"] = int_to_json(cert.period);
    out["method"] = std::string(to_string(cert.method));
    out["verified"] = cert.verified;
    ordered_json components = ordered_json::array();
    for (const CertComponent& c : cert.components) {
        ordered_json jc;
        jc["prime"] = int_to_json(c.prime);
        jc["exponent"] = c.exponent;
        jc["local_period"] = int_to_json(c.local_period);
        jc["case"] =
            c.case_tag ? ordered_json(std::string(to_string(*c.case_tag))) : ordered_json(nullptr);
        jc["ord_r"] = c.ord_r ? int_to_json(*c.ord_r) : ordered_json(nullptr);
        jc["ord_s"] = c.ord_s ? int_to_json(*c.ord_s) : ordered_json(nullptr);
        jc["root_location"] = c.root_location
                                  ? ordered_json(std::string(to_string(*c.root_location)))
                                  : ordered_json(nullptr);
        jc["r"] = root_to_json(c, c.r);
        jc["s"] = root_to_json(c, c.s);
        components.push_back(std::move(jc));
    }
    out["components"] = std::move(components);
    return out;
}

std::string certificate_to_json_line(const PeriodCertificate& cert) {
    return certificate_to_json(cert).dump();
}

std::string certificate_to_text(const PeriodCertificate& cert) {
    std::ostringstream os;
    os << "pi(" << cert.n << ") = " << cert.period << "\n";
    os << "method " << to_string(cert.method) << ", "
       << (cert.verified ? "verified" : "NOT verified") << "\n";
    for (const CertComponent& c : cert.components) {
        os << "component " << c.prime << "^" << c.exponent << ": period " << c.local_period;
        if (c.case_tag) {
            os << ", case " << to_string(*c.case_tag);
        }
        if (c.ord_r && c.ord_s) {
            os << ", ord(r)=" << *c.ord_r << ", ord(s)=" << *c.ord_s;
        }
        if (c.root_location && c.r && c.s) {
            if (*c.root_location == RootLocation::Base) {
                os << ", base roots r=" << c.r->first << ", s=" << c.s->first;
            } else {
                os << ", extension roots r=" << coeff_pair_to_text(*c.r)
                   << ", s=" << coeff_pair_to_text(*c.s);
            }
        }
        if (c.case_tag == CaseTag::Fallback && c.prime == 5) {
            os << " (5 is not a unit mod " << c.prime << "^" << c.exponent
               << "; root analysis does not apply)";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace pisano
