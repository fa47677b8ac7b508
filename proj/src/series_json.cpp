#include "ts/series_json.hpp"

#include "ts/error.hpp"

namespace ts
{

namespace
{

Rat rat_from_json(const Json &j)
{
    if (!j.is_string()) {
        throw InvalidArgument("expected a rational string such as \"-3/4\"");
    }
    return Rat::parse(j.get<std::string>());
}

} // namespace

Json monomial_to_json(const Transmonomial &m)
{
    Json logs = Json::array();
    for (const auto &r : m.logpart().exponents()) {
        logs.push_back(r.str());
    }
    Json j;
    j["log"] = std::move(logs);
    j["exp"] = m.has_exppart() ? series_to_json(m.exppart()) : Json(nullptr);
    return j;
}

Transmonomial monomial_from_json(const Json &j)
{
    if (!j.is_object() || !j.contains("log") || !j["log"].is_array()) {
        throw InvalidArgument("monomial must be an object with a \"log\" array");
    }
    std::vector<Rat> exps;
    for (const auto &e : j["log"]) {
        exps.push_back(rat_from_json(e));
    }
    Transmonomial m{LogMonomial(std::move(exps))};
    if (j.contains("exp") && !j["exp"].is_null()) {
        m = m * Transmonomial::exp_of(series_from_json(j["exp"]));
    }
    return m;
}

Json series_to_json(const Transseries &f)
{
    Json terms = Json::array();
    for (const auto &t : f.terms()) {
        Json term;
        term["coeff"] = t.coeff.str();
        term["monomial"] = monomial_to_json(t.monomial);
        terms.push_back(std::move(term));
    }
    Json j;
    j["terms"] = std::move(terms);
    if (f.bound()) {
        Json tail;
        tail["below"] = monomial_to_json(*f.bound());
        j["tail"] = std::move(tail);
    } else {
        j["tail"] = "exact";
    }
    return j;
}

Transseries series_from_json(const Json &j)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw InvalidArgument("series must be an object with a \"terms\" array");
    }
    std::vector<Term> terms;
    for (const auto &t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("monomial")) {
            throw InvalidArgument("term must carry \"coeff\" and \"monomial\"");
        }
        terms.push_back(Term{monomial_from_json(t["monomial"]), rat_from_json(t["coeff"])});
    }
    std::optional<Transmonomial> bound;
    if (j.contains("tail")) {
        const Json &tail = j["tail"];
        if (tail.is_object() && tail.contains("below")) {
            bound = monomial_from_json(tail["below"]);
        } else if (!(tail.is_string() && tail.get<std::string>() == "exact")) {
            throw InvalidArgument("tail must be \"exact\" or {\"below\": <monomial>}");
        }
    }
    return Transseries(std::move(terms), std::move(bound));
}

std::string dump_series(const Transseries &f)
{
    return series_to_json(f).dump();
}

Transseries parse_series_json(const std::string &text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
    return series_from_json(j);
}

} // namespace ts
