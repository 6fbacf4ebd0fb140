#include "pqsym/expr.hpp"

#include <cctype>
#include <sstream>

namespace pqsym {

namespace {

struct Token {
    enum class Type { Number, Name, Punct, End };
    Type type = Type::End;
    std::string text;
    Int number;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(tok_.line, tok_.col, what);
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.type = Token::Type::End;
            tok_.text.clear();
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_];
                bump();
            }
            tok_.type = Token::Type::Number;
            tok_.text = digits;
            tok_.number = Int(digits);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                name += text_[pos_];
                bump();
            }
            tok_.type = Token::Type::Name;
            tok_.text = name;
            return;
        }
        static const std::string punct = "[];,+-*^()/";
        if (punct.find(c) != std::string::npos) {
            tok_.type = Token::Type::Punct;
            tok_.text = std::string(1, c);
            bump();
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Expr parse() {
        Expr e = parse_expr();
        if (lex_.peek().type != Token::Type::End)
            lex_.fail("trailing input after expression");
        return e;
    }

private:
    bool is_punct(const char* p) const {
        return lex_.peek().type == Token::Type::Punct && lex_.peek().text == p;
    }

    void expect_punct(const char* p, const std::string& what) {
        if (!is_punct(p)) lex_.fail(what);
        lex_.next();
    }

    Expr parse_expr() {
        bool negate = false;
        if (is_punct("-")) {
            lex_.next();
            negate = true;
        }
        Expr acc = parse_term();
        if (negate) {
            Expr neg;
            neg.kind = Expr::Kind::Neg;
            neg.children.push_back(std::move(acc));
            acc = std::move(neg);
        }
        while (is_punct("+") || is_punct("-")) {
            bool plus = lex_.peek().text == "+";
            lex_.next();
            Expr rhs = parse_term();
            Expr node;
            node.kind = plus ? Expr::Kind::Add : Expr::Kind::Sub;
            node.children.push_back(std::move(acc));
            node.children.push_back(std::move(rhs));
            acc = std::move(node);
        }
        return acc;
    }

    Expr parse_term() {
        Expr acc = parse_factor();
        while (is_punct("*")) {
            lex_.next();
            Expr rhs = parse_factor();
            Expr node;
            node.kind = Expr::Kind::Mul;
            node.children.push_back(std::move(acc));
            node.children.push_back(std::move(rhs));
            acc = std::move(node);
        }
        return acc;
    }

    Expr parse_factor() {
        const Token& t = lex_.peek();
        if (t.type == Token::Type::Number) return parse_rational();
        if (is_punct("(")) {
            lex_.next();
            Expr inner = parse_expr();
            expect_punct(")", "expected ')'");
            return maybe_pow(std::move(inner));
        }
        if (t.type == Token::Type::Name) {
            if (t.text == "theta") {
                lex_.next();
                expect_punct("(", "expected '(' after theta");
                Expr inner = parse_expr();
                expect_punct(")", "expected ')'");
                Expr node;
                node.kind = Expr::Kind::Theta;
                node.children.push_back(std::move(inner));
                return maybe_pow(std::move(node));
            }
            return maybe_pow(parse_atom());
        }
        lex_.fail("expected an atom, number, or '('");
    }

    Expr parse_rational() {
        Token num = lex_.next();
        Rat value(num.number);
        if (is_punct("/")) {
            lex_.next();
            if (lex_.peek().type != Token::Type::Number) lex_.fail("expected denominator");
            Token den = lex_.next();
            if (den.number == 0) lex_.fail("zero denominator");
            value = Rat(num.number, den.number);
        }
        Expr node;
        node.kind = Expr::Kind::Literal;
        node.literal = value;
        return node;
    }

    Expr maybe_pow(Expr base) {
        if (!is_punct("^")) return base;
        lex_.next();
        if (lex_.peek().type != Token::Type::Number) lex_.fail("expected an exponent");
        Token t = lex_.next();
        if (t.number < 0 || t.number > 64) lex_.fail("exponent out of range");
        Expr node;
        node.kind = Expr::Kind::Pow;
        node.exponent = static_cast<int>(t.number);
        node.children.push_back(std::move(base));
        return node;
    }

    int parse_nat(const char* what) {
        if (lex_.peek().type != Token::Type::Number) lex_.fail(what);
        Token t = lex_.next();
        if (t.number < 1 || t.number > 1000000) lex_.fail("index out of range");
        return static_cast<int>(t.number);
    }

    Composition parse_index_list() {
        std::vector<int> parts;
        parts.push_back(parse_nat("expected a composition part"));
        while (is_punct(",")) {
            lex_.next();
            parts.push_back(parse_nat("expected a composition part"));
        }
        return Composition(std::move(parts));
    }

    Expr parse_atom() {
        Token name = lex_.next();
        Expr node;
        node.kind = Expr::Kind::Atom;
        const std::string& s = name.text;
        auto bad_letter = [&]() -> Expr::AtomKind {
            throw ParseError(name.line, name.col, "unknown atom '" + s + "'");
        };
        Expr::AtomKind kind = s == "M"   ? Expr::AtomKind::M
                              : s == "F" ? Expr::AtomKind::F
                              : s == "K" ? Expr::AtomKind::K
                              : s == "L" ? Expr::AtomKind::L
                              : s == "p" ? Expr::AtomKind::SymP
                              : s == "q" ? Expr::AtomKind::SymQ
                              : s == "e" ? Expr::AtomKind::SymE
                              : s == "h" ? Expr::AtomKind::SymH
                              : s == "Q" ? Expr::AtomKind::Gen
                                         : bad_letter();
        node.atom = kind;
        expect_punct("[", "expected '[' after atom name");
        switch (kind) {
            case Expr::AtomKind::M:
            case Expr::AtomKind::F:
                node.index = parse_index_list();
                break;
            case Expr::AtomKind::K:
            case Expr::AtomKind::L: {
                Token open = name;
                node.index = parse_index_list();
                if (!node.index.all_odd())
                    throw ParseError(open.line, open.col,
                                     s + " indices must have odd parts, got " + node.index.str());
                break;
            }
            case Expr::AtomKind::SymP:
            case Expr::AtomKind::SymQ:
            case Expr::AtomKind::SymE:
            case Expr::AtomKind::SymH:
                node.degree = parse_nat("expected a degree");
                break;
            case Expr::AtomKind::Gen: {
                Token open = name;
                node.degree = parse_nat("expected a degree");
                expect_punct(";", "expected ';' in Q[n; parts]");
                node.index = parse_index_list();
                if (!node.index.all_odd() || !is_elementary(node.index))
                    throw ParseError(open.line, open.col,
                                     "Q bases must be elementary odd compositions, got " +
                                         node.index.str());
                break;
            }
        }
        expect_punct("]", "expected ']'");
        return node;
    }

    Lexer lex_;
};

}  // namespace

Expr parse_expression(const std::string& text) {
    return Parser(text).parse();
}

TargetBasis target_basis_from_string(const std::string& name) {
    if (name == "M") return TargetBasis::M;
    if (name == "F") return TargetBasis::F;
    if (name == "K") return TargetBasis::K;
    if (name == "L") return TargetBasis::L;
    throw EvalError("unknown basis '" + name + "' (expected M, F, K, or L)");
}

namespace {

QSymElement eval_q(const Expr& e);

PQSymElement eval_p(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Literal:
            return e.literal * PQSymElement::unit();
        case Expr::Kind::Atom:
            switch (e.atom) {
                case Expr::AtomKind::K:
                    return PQSymElement::monomial(e.index, 1, PBasis::K);
                case Expr::AtomKind::L:
                    return PQSymElement::monomial(e.index, 1, PBasis::L);
                case Expr::AtomKind::SymQ:
                    // q_n = K_{∅} = L_{(1^n)} lives in both rings.
                    return PQSymElement::monomial(
                        Composition(std::vector<int>(static_cast<size_t>(e.degree), 1)));
                case Expr::AtomKind::SymP:
                    if (e.degree % 2 == 0)
                        throw EvalError("p[" + std::to_string(e.degree) +
                                        "] is not an element of PQSym over Q; only odd power "
                                        "sums lie in the peak subring");
                    return Rat(1, 2) * PQSymElement::monomial(Composition({e.degree}));
                case Expr::AtomKind::Gen:
                    return qn_generator(e.index, e.degree);
                case Expr::AtomKind::M:
                case Expr::AtomKind::F:
                case Expr::AtomKind::SymE:
                case Expr::AtomKind::SymH:
                    throw EvalError(
                        "QSym atoms do not coerce into a peak basis implicitly; wrap the "
                        "expression in theta(...) to apply the descent-to-peak map");
            }
            break;
        case Expr::Kind::Add:
            return eval_p(e.children[0]) + eval_p(e.children[1]);
        case Expr::Kind::Sub:
            return eval_p(e.children[0]) - eval_p(e.children[1]);
        case Expr::Kind::Mul:
            return eval_p(e.children[0]) * eval_p(e.children[1]);
        case Expr::Kind::Neg:
            return Rat(-1) * eval_p(e.children[0]);
        case Expr::Kind::Pow: {
            PQSymElement base = eval_p(e.children[0]);
            PQSymElement acc = PQSymElement::unit();
            for (int i = 0; i < e.exponent; ++i) acc = acc * base;
            return acc;
        }
        case Expr::Kind::Theta:
            return theta(eval_q(e.children[0]));
    }
    throw EvalError("malformed expression tree");
}

QSymElement eval_q(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Literal:
            return e.literal * QSymElement::unit();
        case Expr::Kind::Atom:
            switch (e.atom) {
                case Expr::AtomKind::M:
                    return QSymElement::monomial(e.index, 1, QBasis::M);
                case Expr::AtomKind::F:
                    return QSymElement::monomial(e.index, 1, QBasis::F);
                case Expr::AtomKind::K:
                    return embed_to_qsym(PQSymElement::monomial(e.index, 1, PBasis::K));
                case Expr::AtomKind::L:
                    return embed_to_qsym(PQSymElement::monomial(e.index, 1, PBasis::L));
                case Expr::AtomKind::SymP:
                    return sym_p(e.degree);
                case Expr::AtomKind::SymQ:
                    return sym_q(e.degree);
                case Expr::AtomKind::SymE:
                    return sym_e(e.degree);
                case Expr::AtomKind::SymH:
                    return sym_h(e.degree);
                case Expr::AtomKind::Gen:
                    return embed_to_qsym(qn_generator(e.index, e.degree));
            }
            break;
        case Expr::Kind::Add:
            return eval_q(e.children[0]) + eval_q(e.children[1]);
        case Expr::Kind::Sub:
            return eval_q(e.children[0]) - eval_q(e.children[1]);
        case Expr::Kind::Mul:
            return eval_q(e.children[0]) * eval_q(e.children[1]);
        case Expr::Kind::Neg:
            return Rat(-1) * eval_q(e.children[0]);
        case Expr::Kind::Pow: {
            QSymElement base = eval_q(e.children[0]);
            QSymElement acc = QSymElement::unit();
            for (int i = 0; i < e.exponent; ++i) acc = acc * base;
            return acc;
        }
        case Expr::Kind::Theta:
            return embed_to_qsym(theta(eval_q(e.children[0])));
    }
    throw EvalError("malformed expression tree");
}

}  // namespace

QSymElement eval_qsym(const Expr& e, TargetBasis target) {
    if (target != TargetBasis::M && target != TargetBasis::F)
        throw EvalError("eval_qsym requires an M or F target");
    return eval_q(e).to_basis(target == TargetBasis::M ? QBasis::M : QBasis::F);
}

PQSymElement eval_pqsym(const Expr& e, TargetBasis target) {
    if (target != TargetBasis::K && target != TargetBasis::L)
        throw EvalError("eval_pqsym requires a K or L target");
    return eval_p(e).to_basis(target == TargetBasis::K ? PBasis::K : PBasis::L);
}

namespace {

std::string format_terms(const std::vector<std::pair<std::string, Rat>>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [atom, coef] : terms) {
        Rat c = coef;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (atom.empty()) {
            out << rat_to_string(c);
        } else if (c == 1) {
            out << atom;
        } else {
            out << rat_to_string(c) << "*" << atom;
        }
        first = false;
    }
    return out.str();
}

std::string index_atom(char letter, const Composition& alpha) {
    if (alpha.empty()) return {};
    std::string s(1, letter);
    s += '[';
    for (int i = 0; i < alpha.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(alpha.parts()[static_cast<size_t>(i)]);
    }
    s += ']';
    return s;
}

}  // namespace

std::string format_element(const QSymElement& f) {
    char letter = f.basis() == QBasis::M ? 'M' : 'F';
    std::vector<std::pair<std::string, Rat>> terms;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.emplace_back(index_atom(letter, it->first), it->second);
    return format_terms(terms);
}

std::string format_element(const PQSymElement& f) {
    char letter = f.basis() == PBasis::L ? 'L' : 'K';
    std::vector<std::pair<std::string, Rat>> terms;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.emplace_back(index_atom(letter, it->first), it->second);
    return format_terms(terms);
}

std::string format_generator(const GeneratorPolynomial& p) {
    std::vector<std::pair<std::string, Rat>> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const GeneratorMonomial& mono = it->first;
        std::string s;
        // Factors with wll-larger bases first, degrees descending.
        for (auto f = mono.factors().rbegin(); f != mono.factors().rend(); ++f) {
            const auto& [alpha, lam] = *f;
            size_t i = 0;
            while (i < lam.size()) {
                size_t j = i;
                while (j < lam.size() && lam[j] == lam[i]) ++j;
                if (!s.empty()) s += '*';
                s += "Q[" + std::to_string(lam[i]) + "; ";
                for (int t = 0; t < alpha.length(); ++t) {
                    if (t) s += ',';
                    s += std::to_string(alpha.parts()[static_cast<size_t>(t)]);
                }
                s += ']';
                if (j - i > 1) s += "^" + std::to_string(j - i);
                i = j;
            }
        }
        terms.emplace_back(std::move(s), it->second);
    }
    return format_terms(terms);
}

std::string eval_to_string(const std::string& text, TargetBasis target) {
    Expr e = parse_expression(text);
    if (target == TargetBasis::M || target == TargetBasis::F)
        return format_element(eval_qsym(e, target));
    return format_element(eval_pqsym(e, target));
}

}  // namespace pqsym
