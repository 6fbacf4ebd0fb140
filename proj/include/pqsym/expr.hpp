#ifndef PQSYM_EXPR_HPP
#define PQSYM_EXPR_HPP

#include "pqsym/structure.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pqsym {

struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + what),
          line(line),
          col(col) {}
    int line;
    int col;
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)? | rational | '(' expr ')' | theta '(' expr ')'
//   atom   := M[..] | F[..] | K[..] | L[..] | p[n] | q[n] | e[n] | h[n]
//           | Q[n; a1,a2,...]
struct Expr {
    enum class Kind { Literal, Atom, Add, Sub, Mul, Neg, Pow, Theta };
    enum class AtomKind { M, F, K, L, SymP, SymQ, SymE, SymH, Gen };

    Kind kind = Kind::Literal;
    Rat literal;                  // Literal
    AtomKind atom = AtomKind::M;  // Atom
    Composition index;            // M/F/K/L index or Gen base
    int degree = 0;               // p/q/e/h degree or Gen degree
    int exponent = 0;             // Pow
    std::vector<Expr> children;
};

Expr parse_expression(const std::string& text);

enum class TargetBasis { M, F, K, L };

TargetBasis target_basis_from_string(const std::string& name);

// Evaluate in the ring of the target basis. PQSym atoms embed into QSym
// targets; QSym atoms never cross into PQSym implicitly: that path
// demands an explicit theta(...).
QSymElement eval_qsym(const Expr& e, TargetBasis target);
PQSymElement eval_pqsym(const Expr& e, TargetBasis target);

// Canonical text: terms in descending wll order, "coef*Atom" factors,
// exact rational coefficients. parse/format round-trips.
std::string format_element(const QSymElement& f);
std::string format_element(const PQSymElement& f);
std::string format_generator(const GeneratorPolynomial& p);

// Convenience: parse, evaluate, format.
std::string eval_to_string(const std::string& text, TargetBasis target);

}  // namespace pqsym

#endif
