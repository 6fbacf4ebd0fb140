#include "pqsym/json_io.hpp"

namespace pqsym {

using nlohmann::json;

namespace {

json composition_to_json(const Composition& alpha) {
    json arr = json::array();
    for (int p : alpha.parts()) arr.push_back(p);
    return arr;
}

Composition composition_from_json(const json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Composition(std::move(parts));
}

template <class Element>
json terms_to_json(const Element& f) {
    json arr = json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        arr.push_back(json{{"index", composition_to_json(it->first)},
                           {"coef", rat_to_string(it->second)}});
    }
    return arr;
}

}  // namespace

json element_to_json(const QSymElement& f) {
    return json{{"ring", "qsym"},
                {"basis", f.basis() == QBasis::M ? "M" : "F"},
                {"terms", terms_to_json(f)}};
}

json element_to_json(const PQSymElement& f) {
    return json{{"ring", "pqsym"},
                {"basis", f.basis() == PBasis::L ? "L" : "K"},
                {"terms", terms_to_json(f)}};
}

QSymElement qsym_from_json(const json& j) {
    if (j.at("ring").get<std::string>() != "qsym")
        throw std::invalid_argument("expected ring \"qsym\"");
    std::string basis = j.at("basis").get<std::string>();
    if (basis != "M" && basis != "F") throw std::invalid_argument("bad qsym basis " + basis);
    QSymElement f(basis == "M" ? QBasis::M : QBasis::F);
    for (const auto& term : j.at("terms"))
        f.add_term(composition_from_json(term.at("index")),
                   rat_from_string(term.at("coef").get<std::string>()));
    return f;
}

PQSymElement pqsym_from_json(const json& j) {
    if (j.at("ring").get<std::string>() != "pqsym")
        throw std::invalid_argument("expected ring \"pqsym\"");
    std::string basis = j.at("basis").get<std::string>();
    if (basis != "L" && basis != "K") throw std::invalid_argument("bad pqsym basis " + basis);
    PQSymElement f(basis == "L" ? PBasis::L : PBasis::K);
    for (const auto& term : j.at("terms"))
        f.add_term(composition_from_json(term.at("index")),
                   rat_from_string(term.at("coef").get<std::string>()));
    return f;
}

json generator_to_json(const GeneratorPolynomial& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json mono = json::array();
        for (auto f = it->first.factors().rbegin(); f != it->first.factors().rend(); ++f) {
            json lam = json::array();
            for (int d : f->second) lam.push_back(d);
            mono.push_back(json{{"alpha", composition_to_json(f->first)}, {"lambda", lam}});
        }
        terms.push_back(json{{"monomial", mono}, {"coef", rat_to_string(it->second)}});
    }
    return json{{"terms", terms}};
}

GeneratorPolynomial generator_from_json(const json& j) {
    GeneratorPolynomial p;
    for (const auto& term : j.at("terms")) {
        GeneratorMonomial::Factors factors;
        for (const auto& f : term.at("monomial")) {
            Partition lam;
            for (const auto& d : f.at("lambda")) lam.push_back(d.get<int>());
            factors.emplace_back(composition_from_json(f.at("alpha")), std::move(lam));
        }
        p.add_term(GeneratorMonomial::from_factors(std::move(factors)),
                   rat_from_string(term.at("coef").get<std::string>()));
    }
    return p;
}

}  // namespace pqsym
