#pragma once

#include <string>

#include <json.hpp>

#include "pisano/periods.hpp"

namespace pisano {

// Integers that fit in 64 bits serialize as JSON numbers; anything larger
// becomes a decimal string so that no consumer silently rounds it. Shared
// by every JSON emitter in the project.
nlohmann::ordered_json int_to_json(const Int& v);

// One flat record per certificate. Key order is fixed: n, period, method,
// verified, components; each component carries prime, exponent,
// local_period, case, ord_r, ord_s, root_location, r, s. Base-ring roots
// serialize as integers, extension roots as [a, b] coefficient pairs.
nlohmann::ordered_json certificate_to_json(const PeriodCertificate& cert);

// Single line, as emitted by the CLI's JSON mode.
std::string certificate_to_json_line(const PeriodCertificate& cert);

// Human-readable rendering with the same numeric content as the JSON form.
std::string certificate_to_text(const PeriodCertificate& cert);

}  // namespace pisano
