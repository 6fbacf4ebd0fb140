#ifndef PQSYM_JSON_IO_HPP
#define PQSYM_JSON_IO_HPP

#include "pqsym/structure.hpp"

#include <json.hpp>

namespace pqsym {

// {"ring":"qsym","basis":"M","terms":[{"index":[1,2],"coef":"3/2"}]}
// with terms in descending wll order and exact rational coefficient
// strings.
nlohmann::json element_to_json(const QSymElement& f);
nlohmann::json element_to_json(const PQSymElement& f);

QSymElement qsym_from_json(const nlohmann::json& j);
PQSymElement pqsym_from_json(const nlohmann::json& j);

// {"terms":[{"monomial":[{"alpha":[1],"lambda":[2,1]}],"coef":"1"}]}
nlohmann::json generator_to_json(const GeneratorPolynomial& p);
GeneratorPolynomial generator_from_json(const nlohmann::json& j);

}  // namespace pqsym

#endif
