#include "jackpoly/json_io.hpp"

namespace jackpoly {

using nlohmann::json;

namespace {

json coeffs_to_json(const ThetaPoly& p) {
    json arr = json::array();
    if (p.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(rational_to_string(p.coeff(k)));
    return arr;
}

ThetaPoly coeffs_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("coefficient list must be an array");
    std::vector<BigRational> c;
    for (const auto& s : j) c.push_back(parse_rational(s.get<std::string>()));
    return ThetaPoly(std::move(c));
}

} // namespace

json ratfun_to_json(const RatFun& f) {
    return json{{"num", coeffs_to_json(f.num())}, {"den", coeffs_to_json(f.den())}};
}

RatFun ratfun_from_json(const json& j) {
    return RatFun(coeffs_from_json(j.at("num")), coeffs_from_json(j.at("den")));
}

json partition_to_json(const Partition& p) {
    json arr = json::array();
    for (int v : p.parts()) arr.push_back(v);
    return arr;
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("partition must be an array");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

json symfn_to_json(const SymFn& f) {
    json terms = json::array();
    for (const auto& [lambda, c] : f.terms())
        terms.push_back(json{{"partition", partition_to_json(lambda)}, {"coeff", ratfun_to_json(c)}});
    return json{{"basis", basis_name(f.basis())},
                {"degree", f.truncation_degree()},
                {"terms", terms}};
}

SymFn symfn_from_json(const json& j) {
    SymFn f(parse_basis(j.at("basis").get<std::string>()), j.at("degree").get<int>());
    for (const auto& t : j.at("terms"))
        f.add_term(partition_from_json(t.at("partition")), ratfun_from_json(t.at("coeff")));
    return f;
}

json multipoly_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json{{"monomial", e}, {"coeff", ratfun_to_json(c)}});
    return json{{"variables", p.vars()}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const json& j) {
    MultiPoly p(j.at("variables").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("monomial").get<std::vector<int>>(), ratfun_from_json(t.at("coeff")));
    return p;
}

json filter_to_json(const Filter& f) {
    json gens = json::array();
    for (const auto& g : f.generators()) gens.push_back(partition_to_json(g));
    return json{{"generators", gens}};
}

Filter filter_from_json(const json& j) {
    const json& list = j.is_array() ? j : j.at("generators");
    std::vector<Partition> gens;
    for (const auto& g : list) gens.push_back(partition_from_json(g));
    return Filter(gens);
}

} // namespace jackpoly
