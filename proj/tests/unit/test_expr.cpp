#include "pqsym/expr.hpp"

#include "pqsym/json_io.hpp"

#include <doctest.h>

#include <random>

using namespace pqsym;

namespace {

Composition c(std::vector<int> parts) { return Composition(std::move(parts)); }

std::string eval_l(const std::string& text) { return eval_to_string(text, TargetBasis::L); }
std::string eval_m(const std::string& text) { return eval_to_string(text, TargetBasis::M); }

}  // namespace

TEST_CASE("parsing accepts the documented grammar") {
    CHECK_NOTHROW(parse_expression("L[3]*L[1] + 2*K[1,3]"));
    CHECK_NOTHROW(parse_expression("Q[2; 1,3]^2 - q[4]"));
    CHECK_NOTHROW(parse_expression("theta(M[2,1]) - 3/2*F[1,2]"));
    CHECK_NOTHROW(parse_expression("((p[3]))^2"));
    CHECK_NOTHROW(parse_expression("-L[3]"));
}

TEST_CASE("parse errors carry positions and domain hints") {
    CHECK_THROWS_WITH_AS(parse_expression("L[2]"), doctest::Contains("odd parts"), ParseError);
    CHECK_THROWS_WITH_AS(parse_expression("Q[2; 3,3]"), doctest::Contains("elementary"),
                         ParseError);
    CHECK_THROWS_AS(parse_expression("M[1,]"), ParseError);
    CHECK_THROWS_AS(parse_expression("L[3] +"), ParseError);
    CHECK_THROWS_AS(parse_expression("W[1]"), ParseError);
    CHECK_THROWS_AS(parse_expression("L[3] L[1]"), ParseError);
    try {
        parse_expression("L[3] + \nM[0]");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("evaluation matches the worked products") {
    CHECK(eval_l("L[1]*L[1]") == "2*L[1,1]");
    CHECK(eval_l("theta(M[2,1])") == "-L[3]");
    CHECK(eval_m("q[2]") == "4*M[1,1] + 2*M[2]");
    CHECK(eval_l("L[3]*L[1] + 2*K[1,3]") == "2*L[1,1,1,1] + L[3,1] - L[1,3]");
    CHECK(eval_l("Q[2; 1]") == "L[1,1]");
    CHECK(eval_l("q[4]") == "L[1,1,1,1]");
}

TEST_CASE("implicit coercion into the peak ring is refused") {
    CHECK_THROWS_WITH_AS(eval_l("M[2,1]"), doctest::Contains("theta"), EvalError);
    CHECK_THROWS_WITH_AS(eval_l("h[3]"), doctest::Contains("theta"), EvalError);
    CHECK_THROWS_WITH_AS(eval_l("p[2]"), doctest::Contains("odd"), EvalError);
    CHECK_NOTHROW(eval_l("p[3]"));
    CHECK(eval_l("2*p[3]") == "L[3]");
    // PQSym atoms embed into QSym targets.
    CHECK(eval_m("L[1]") == "2*M[1]");
}

TEST_CASE("power and unary minus") {
    CHECK(eval_l("L[1]^2") == "2*L[1,1]");
    CHECK(eval_l("L[1]^0") == "1");
    CHECK(eval_l("-L[3] + L[3]") == "0");
    CHECK(eval_m("3/2") == "3/2");
}

TEST_CASE("print-parse round trip on randomized elements") {
    std::mt19937 rng(97);
    std::vector<Composition> odd;
    for (int n = 1; n <= 6; ++n) {
        auto batch = enumerate_odd_compositions(n);
        odd.insert(odd.end(), batch.begin(), batch.end());
    }
    for (int trial = 0; trial < 30; ++trial) {
        PQSymElement f(PBasis::L);
        for (int t = 0; t < 4; ++t) {
            Rat coef(static_cast<int>(rng() % 13) - 6, 1 + static_cast<int>(rng() % 4));
            f.add_term(odd[rng() % odd.size()], coef);
        }
        std::string text = format_element(f);
        PQSymElement back = eval_pqsym(parse_expression(text), TargetBasis::L);
        CHECK(back == f);
        // Deterministic canonical output.
        CHECK(format_element(back) == text);
    }
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Composition> comps;
        for (int n = 1; n <= 5; ++n) {
            auto batch = enumerate_compositions(n);
            comps.insert(comps.end(), batch.begin(), batch.end());
        }
        QSymElement f(QBasis::M);
        for (int t = 0; t < 4; ++t)
            f.add_term(comps[rng() % comps.size()], static_cast<int>(rng() % 9) - 4);
        std::string text = format_element(f);
        CHECK(format_element(eval_qsym(parse_expression(text), TargetBasis::M)) == text);
    }
}

TEST_CASE("generator polynomial formatting") {
    GeneratorPolynomial p;
    p.add_term(GeneratorMonomial::from_factors({{c({1}), {3}}}), 3);
    p.add_term(GeneratorMonomial::from_factors({{c({1}), {2, 1}}}), -1);
    CHECK(format_generator(p) == "3*Q[3; 1] - Q[2; 1]*Q[1; 1]");

    GeneratorPolynomial q;
    q.add_term(GeneratorMonomial::from_factors({{c({1}), {3, 3}}, {c({1, 3}), {1}}}), Rat(1, 2));
    CHECK(format_generator(q) == "1/2*Q[1; 1,3]*Q[3; 1]^2");
    CHECK(format_generator(GeneratorPolynomial{}) == "0");
    CHECK(format_generator(GeneratorPolynomial::unit()) == "1");
}

TEST_CASE("json round trips") {
    QSymElement f = QSymElement::monomial(c({1, 2}), Rat(3, 2)) +
                    QSymElement::monomial(c({3}), -2);
    nlohmann::json j = element_to_json(f);
    CHECK(j["ring"] == "qsym");
    CHECK(j["basis"] == "M");
    CHECK(qsym_from_json(j) == f);

    PQSymElement g = PQSymElement::monomial(c({1, 3}), Rat(-7, 3), PBasis::K);
    CHECK(pqsym_from_json(element_to_json(g)) == g);

    GeneratorPolynomial p = decompose_zb(PQSymElement::monomial(c({3})));
    CHECK(generator_from_json(generator_to_json(p)) == p);

    // Term order in JSON is descending wll, mirroring the text form.
    QSymElement two = QSymElement::monomial(c({1, 1}), 4) + QSymElement::monomial(c({2}), 2);
    nlohmann::json jj = element_to_json(two);
    CHECK(jj["terms"][0]["index"] == nlohmann::json::array({1, 1}));
    CHECK(jj["terms"][1]["index"] == nlohmann::json::array({2}));
}
