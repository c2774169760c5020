#include "fqsym/json.hpp"

namespace fqsym {

Json to_json(const HomogeneousElement& x) {
    Json terms = Json::array();
    for (const auto& [p, c] : x.terms())
        terms.push_back(Json{{"perm", to_string(p)}, {"coeff", c.str()}});
    return Json{{"basis", to_string(x.basis())}, {"degree", x.degree()}, {"terms", std::move(terms)}};
}

Json to_json(const RibbonElement& x) {
    Json terms = Json::array();
    for (const auto& [I, c] : x.terms())
        terms.push_back(Json{{"comp", to_string(I)}, {"coeff", c.str()}});
    return Json{{"basis", "R"}, {"degree", x.degree()}, {"terms", std::move(terms)}};
}

Json to_json(const VerificationReport& report, bool include_timing) {
    Json parameters{{"parts", report.parts}, {"max_degree", report.max_degree}};
    for (const auto& [key, value] : report.details)
        parameters[key] = value;

    Json per_degree = Json::array();
    for (const auto& d : report.per_degree) {
        Json sample = Json::array();
        for (const auto& t : d.sample)
            sample.push_back(Json{{t.kind, t.key}, {"coeff", t.coeff.str()}});
        per_degree.push_back(Json{{"degree", d.degree}, {"nonzero_terms", d.nonzero_terms}, {"sample", sample}});
    }

    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"failures", c.failures}});

    Json out{{"identity", report.identity},
             {"parameters", std::move(parameters)},
             {"ok", report.ok},
             {"per_degree", std::move(per_degree)},
             {"checks", std::move(checks)}};
    if (include_timing)
        out["elapsed_ms"] = report.elapsed.count();
    return out;
}

HomogeneousElement element_from_json(const Json& j) {
    HomogeneousElement x(parse_basis(j.at("basis").get<std::string>()), j.at("degree").get<std::size_t>());
    for (const auto& t : j.at("terms"))
        x.add_term(parse_permutation(t.at("perm").get<std::string>()), Coeff(t.at("coeff").get<std::string>()));
    return x;
}

RibbonElement ribbon_from_json(const Json& j) {
    if (j.at("basis").get<std::string>() != "R")
        throw std::invalid_argument("ribbon element must have basis \"R\"");
    RibbonElement x(j.at("degree").get<std::size_t>());
    for (const auto& t : j.at("terms"))
        x.add_term(parse_composition(t.at("comp").get<std::string>()), Coeff(t.at("coeff").get<std::string>()));
    return x;
}

} // namespace fqsym
