#pragma once

#include <string>

#include <json.hpp>

#include "ts/series.hpp"

namespace ts
{

using Json = nlohmann::ordered_json;

// {"log":["r0","r1",...],"exp":<series>|null}
Json monomial_to_json(const Transmonomial &m);
Transmonomial monomial_from_json(const Json &j);

// {"terms":[{"coeff":"p/q","monomial":{...}},...],"tail":"exact"|{"below":<monomial>}}
Json series_to_json(const Transseries &f);
Transseries series_from_json(const Json &j);

std::string dump_series(const Transseries &f);
Transseries parse_series_json(const std::string &text);

} // namespace ts
