#include "condgeo/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace condgeo {

PropPtr mkLetter(std::string name) {
    return std::make_shared<PropNode>(PropNode{PropKind::Letter, std::move(name), nullptr, nullptr});
}
PropPtr mkTop() { return std::make_shared<PropNode>(PropNode{PropKind::Top, {}, nullptr, nullptr}); }
PropPtr mkBot() { return std::make_shared<PropNode>(PropNode{PropKind::Bot, {}, nullptr, nullptr}); }
PropPtr mkNot(PropPtr f) {
    return std::make_shared<PropNode>(PropNode{PropKind::Not, {}, std::move(f), nullptr});
}
static PropPtr mkBin(PropKind k, PropPtr a, PropPtr b) {
    return std::make_shared<PropNode>(PropNode{k, {}, std::move(a), std::move(b)});
}
PropPtr mkAnd(PropPtr a, PropPtr b) { return mkBin(PropKind::And, std::move(a), std::move(b)); }
PropPtr mkOr(PropPtr a, PropPtr b) { return mkBin(PropKind::Or, std::move(a), std::move(b)); }
PropPtr mkImplies(PropPtr a, PropPtr b) { return mkBin(PropKind::Implies, std::move(a), std::move(b)); }
PropPtr mkIff(PropPtr a, PropPtr b) { return mkBin(PropKind::Iff, std::move(a), std::move(b)); }

StepPtr mkCond(PropPtr ant, PropPtr cons) {
    return std::make_shared<StepNode>(StepNode{StepKind::Cond, std::move(ant), std::move(cons), nullptr, nullptr});
}
StepPtr mkNot(StepPtr f) {
    return std::make_shared<StepNode>(StepNode{StepKind::Not, nullptr, nullptr, std::move(f), nullptr});
}
static StepPtr mkBin(StepKind k, StepPtr a, StepPtr b) {
    return std::make_shared<StepNode>(StepNode{k, nullptr, nullptr, std::move(a), std::move(b)});
}
StepPtr mkAnd(StepPtr a, StepPtr b) { return mkBin(StepKind::And, std::move(a), std::move(b)); }
StepPtr mkOr(StepPtr a, StepPtr b) { return mkBin(StepKind::Or, std::move(a), std::move(b)); }
StepPtr mkImplies(StepPtr a, StepPtr b) { return mkBin(StepKind::Implies, std::move(a), std::move(b)); }
StepPtr mkIff(StepPtr a, StepPtr b) { return mkBin(StepKind::Iff, std::move(a), std::move(b)); }

bool equal(const PropPtr& a, const PropPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case PropKind::Letter: return a->letter == b->letter;
        case PropKind::Top:
        case PropKind::Bot: return true;
        case PropKind::Not: return equal(a->lhs, b->lhs);
        default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

bool equal(const StepPtr& a, const StepPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case StepKind::Cond: return equal(a->ant, b->ant) && equal(a->cons, b->cons);
        case StepKind::Not: return equal(a->lhs, b->lhs);
        default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

PropPtr substitute(const PropPtr& f, const std::map<std::string, PropPtr>& sigma) {
    switch (f->kind) {
        case PropKind::Letter: {
            auto it = sigma.find(f->letter);
            return it != sigma.end() ? it->second : f;
        }
        case PropKind::Top:
        case PropKind::Bot: return f;
        case PropKind::Not: return mkNot(substitute(f->lhs, sigma));
        default: return mkBin(f->kind, substitute(f->lhs, sigma), substitute(f->rhs, sigma));
    }
}

StepPtr substitute(const StepPtr& f, const std::map<std::string, PropPtr>& sigma) {
    switch (f->kind) {
        case StepKind::Cond: return mkCond(substitute(f->ant, sigma), substitute(f->cons, sigma));
        case StepKind::Not: return mkNot(substitute(f->lhs, sigma));
        default: return mkBin(f->kind, substitute(f->lhs, sigma), substitute(f->rhs, sigma));
    }
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Letter, Top, Bot, Not, And, Or, Implies, Iff, Cond, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;
    std::vector<Token> tokens;

    [[noreturn]] void fail(std::size_t at, const std::string& msg) {
        throw FormulaError(FormulaError::Kind::Syntax, at, msg);
    }

    bool eat(std::string_view s) {
        if (src.substr(pos, s.size()) == s) {
            pos += s.size();
            return true;
        }
        return false;
    }

    void run() {
        while (pos < src.size()) {
            std::size_t start = pos;
            char c = src[pos];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                ++pos;
                continue;
            }
            if (c == '(') { ++pos; tokens.push_back({Tok::LParen, "(", start}); continue; }
            if (c == ')') { ++pos; tokens.push_back({Tok::RParen, ")", start}); continue; }
            if (eat("~>")) { tokens.push_back({Tok::Cond, "~>", start}); continue; }
            if (eat("~")) { tokens.push_back({Tok::Not, "~", start}); continue; }
            if (eat("&")) { tokens.push_back({Tok::And, "&", start}); continue; }
            if (eat("|")) { tokens.push_back({Tok::Or, "|", start}); continue; }
            if (eat("<->")) { tokens.push_back({Tok::Iff, "<->", start}); continue; }
            if (eat("->")) { tokens.push_back({Tok::Implies, "->", start}); continue; }
            // Unicode aliases.
            if (eat("¬")) { tokens.push_back({Tok::Not, "~", start}); continue; }      // ¬
            if (eat("∧")) { tokens.push_back({Tok::And, "&", start}); continue; }      // ∧
            if (eat("∨")) { tokens.push_back({Tok::Or, "|", start}); continue; }       // ∨
            if (eat("→")) { tokens.push_back({Tok::Implies, "->", start}); continue; } // →
            if (eat("↔")) { tokens.push_back({Tok::Iff, "<->", start}); continue; }    // ↔
            if (eat("⇝")) { tokens.push_back({Tok::Cond, "~>", start}); continue; }    // ⇝
            if (eat("⊤")) { tokens.push_back({Tok::Top, "T", start}); continue; }      // ⊤
            if (eat("⊥")) { tokens.push_back({Tok::Bot, "F", start}); continue; }      // ⊥
            if (c == 'T') { ++pos; tokens.push_back({Tok::Top, "T", start}); continue; }
            if (c == 'F') { ++pos; tokens.push_back({Tok::Bot, "F", start}); continue; }
            if (c >= 'a' && c <= 'z') {
                std::size_t end = pos + 1;
                while (end < src.size() && (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
                    ++end;
                tokens.push_back({Tok::Letter, std::string(src.substr(pos, end - pos)), start});
                pos = end;
                continue;
            }
            fail(start, "unexpected character '" + std::string(1, c) + "'");
        }
        tokens.push_back({Tok::End, "", pos});
    }
};

// Level-agnostic parse tree; split into the two ASTs after parsing.
enum class RawKind { Letter, Top, Bot, Not, And, Or, Implies, Iff, Cond };

struct RawNode;
using RawPtr = std::shared_ptr<RawNode>;

struct RawNode {
    RawKind kind;
    std::string letter;
    RawPtr lhs, rhs;
    std::size_t pos;
};

struct Parser {
    const std::vector<Token>& toks;
    std::size_t i = 0;

    const Token& peek() const { return toks[i]; }
    Token next() { return toks[i++]; }

    [[noreturn]] void fail(const std::string& expected) {
        throw FormulaError(FormulaError::Kind::Syntax, peek().pos,
                           "expected " + expected +
                               (peek().kind == Tok::End ? ", found end of input"
                                                        : ", found '" + peek().text + "'"));
    }

    RawPtr mk(RawKind k, std::size_t pos, RawPtr a = nullptr, RawPtr b = nullptr) {
        return std::make_shared<RawNode>(RawNode{k, {}, std::move(a), std::move(b), pos});
    }

    RawPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Letter: {
                auto n = mk(RawKind::Letter, t.pos);
                n->letter = t.text;
                next();
                return n;
            }
            case Tok::Top: next(); return mk(RawKind::Top, t.pos);
            case Tok::Bot: next(); return mk(RawKind::Bot, t.pos);
            case Tok::LParen: {
                next();
                RawPtr inner = bottom();
                if (peek().kind != Tok::RParen) fail("')'");
                next();
                return inner;
            }
            default: fail("a formula");
        }
    }

    RawPtr unary() {
        if (peek().kind == Tok::Not) {
            std::size_t p = next().pos;
            return mk(RawKind::Not, p, unary());
        }
        return atom();
    }

    RawPtr conj() {
        RawPtr lhs = unary();
        while (peek().kind == Tok::And) {
            std::size_t p = next().pos;
            lhs = mk(RawKind::And, p, lhs, unary());
        }
        return lhs;
    }

    RawPtr disj() {
        RawPtr lhs = conj();
        while (peek().kind == Tok::Or) {
            std::size_t p = next().pos;
            lhs = mk(RawKind::Or, p, lhs, conj());
        }
        return lhs;
    }

    // The bottom tier (~>, ->, <->) is non-associative: chains need parens.
    RawPtr bottom() {
        RawPtr lhs = disj();
        Tok k = peek().kind;
        if (k != Tok::Cond && k != Tok::Implies && k != Tok::Iff) return lhs;
        std::size_t p = next().pos;
        RawPtr rhs = disj();
        Tok k2 = peek().kind;
        if (k2 == Tok::Cond || k2 == Tok::Implies || k2 == Tok::Iff)
            throw FormulaError(FormulaError::Kind::Syntax, peek().pos,
                               "'" + peek().text + "' cannot be chained; use parentheses");
        RawKind rk = k == Tok::Cond ? RawKind::Cond : k == Tok::Implies ? RawKind::Implies : RawKind::Iff;
        return mk(rk, p, std::move(lhs), std::move(rhs));
    }
};

bool containsCond(const RawPtr& n) {
    if (!n) return false;
    if (n->kind == RawKind::Cond) return true;
    return containsCond(n->lhs) || containsCond(n->rhs);
}

PropPtr toProp(const RawPtr& n) {
    switch (n->kind) {
        case RawKind::Letter: return mkLetter(n->letter);
        case RawKind::Top: return mkTop();
        case RawKind::Bot: return mkBot();
        case RawKind::Not: return mkNot(toProp(n->lhs));
        case RawKind::And: return mkAnd(toProp(n->lhs), toProp(n->rhs));
        case RawKind::Or: return mkOr(toProp(n->lhs), toProp(n->rhs));
        case RawKind::Implies: return mkImplies(toProp(n->lhs), toProp(n->rhs));
        case RawKind::Iff: return mkIff(toProp(n->lhs), toProp(n->rhs));
        case RawKind::Cond:
            throw FormulaError(FormulaError::Kind::Nesting, n->pos,
                               "'~>' may not occur inside a conditional operand");
    }
    throw InternalError("unreachable");
}

StepPtr toStep(const RawPtr& n) {
    switch (n->kind) {
        case RawKind::Cond: return mkCond(toProp(n->lhs), toProp(n->rhs));
        case RawKind::Not: return mkNot(toStep(n->lhs));
        case RawKind::And: return mkAnd(toStep(n->lhs), toStep(n->rhs));
        case RawKind::Or: return mkOr(toStep(n->lhs), toStep(n->rhs));
        case RawKind::Implies: return mkImplies(toStep(n->lhs), toStep(n->rhs));
        case RawKind::Iff: return mkIff(toStep(n->lhs), toStep(n->rhs));
        case RawKind::Letter:
            throw FormulaError(FormulaError::Kind::MixedLevel, n->pos,
                               "letter '" + n->letter + "' occurs outside every conditional");
        case RawKind::Top:
        case RawKind::Bot:
            throw FormulaError(FormulaError::Kind::MixedLevel, n->pos,
                               "propositional constant occurs outside every conditional");
    }
    throw InternalError("unreachable");
}

void collectLetters(const PropPtr& f, std::set<std::string>& out) {
    if (!f) return;
    if (f->kind == PropKind::Letter) out.insert(f->letter);
    collectLetters(f->lhs, out);
    collectLetters(f->rhs, out);
}

void collectLetters(const StepPtr& f, std::set<std::string>& out) {
    if (!f) return;
    if (f->kind == StepKind::Cond) {
        collectLetters(f->ant, out);
        collectLetters(f->cons, out);
    }
    collectLetters(f->lhs, out);
    collectLetters(f->rhs, out);
}

}  // namespace

std::vector<std::string> lettersOf(const PropPtr& f) {
    std::set<std::string> s;
    collectLetters(f, s);
    return {s.begin(), s.end()};
}

std::vector<std::string> lettersOf(const StepPtr& f) {
    std::set<std::string> s;
    collectLetters(f, s);
    return {s.begin(), s.end()};
}

ParsedFormula parse(std::string_view text) {
    Lexer lex{text, 0, {}};
    lex.run();
    Parser parser{lex.tokens};
    RawPtr raw = parser.bottom();
    if (parser.peek().kind != Tok::End) parser.fail("end of input");

    ParsedFormula out;
    if (containsCond(raw)) {
        StepPtr s = toStep(raw);
        out.tree = s;
        out.letters = lettersOf(s);
    } else {
        PropPtr p = toProp(raw);
        out.tree = p;
        out.letters = lettersOf(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Printer. Operands of the bottom tier are parenthesized unless they are
// atoms or negations; & and | chains print left-associatively.
// ---------------------------------------------------------------------------

namespace {

// 0 = bottom tier, 1 = or, 2 = and, 3 = not, 4 = atom
int level(const PropPtr& f) {
    switch (f->kind) {
        case PropKind::Implies:
        case PropKind::Iff: return 0;
        case PropKind::Or: return 1;
        case PropKind::And: return 2;
        case PropKind::Not: return 3;
        default: return 4;
    }
}

int level(const StepPtr& f) {
    switch (f->kind) {
        case StepKind::Cond:
        case StepKind::Implies:
        case StepKind::Iff: return 0;
        case StepKind::Or: return 1;
        case StepKind::And: return 2;
        case StepKind::Not: return 3;
    }
    return 4;
}

std::string wrap(const std::string& s) { return "(" + s + ")"; }

std::string renderProp(const PropPtr& f);

std::string propOperand(const PropPtr& f, int ctx, bool rightOfSame) {
    std::string s = renderProp(f);
    int l = level(f);
    if (l < ctx) return wrap(s);
    if (l == ctx && rightOfSame) return wrap(s);
    return s;
}

// Bottom-tier operands: bare only for atoms and negations.
std::string bottomOperand(const PropPtr& f) {
    std::string s = renderProp(f);
    return level(f) >= 3 ? s : wrap(s);
}

std::string renderProp(const PropPtr& f) {
    switch (f->kind) {
        case PropKind::Letter: return f->letter;
        case PropKind::Top: return "T";
        case PropKind::Bot: return "F";
        case PropKind::Not: {
            std::string s = renderProp(f->lhs);
            return "~" + (level(f->lhs) >= 3 ? s : wrap(s));
        }
        case PropKind::And:
            return propOperand(f->lhs, 2, false) + " & " + propOperand(f->rhs, 2, true);
        case PropKind::Or:
            return propOperand(f->lhs, 1, false) + " | " + propOperand(f->rhs, 1, true);
        case PropKind::Implies:
            return bottomOperand(f->lhs) + " -> " + bottomOperand(f->rhs);
        case PropKind::Iff:
            return bottomOperand(f->lhs) + " <-> " + bottomOperand(f->rhs);
    }
    throw InternalError("unreachable");
}

std::string renderStep(const StepPtr& f);

std::string stepOperand(const StepPtr& f, int ctx, bool rightOfSame) {
    std::string s = renderStep(f);
    int l = level(f);
    if (l < ctx) return wrap(s);
    if (l == ctx && rightOfSame) return wrap(s);
    return s;
}

std::string stepBottomOperand(const StepPtr& f) {
    std::string s = renderStep(f);
    return level(f) >= 3 ? s : wrap(s);
}

std::string renderStep(const StepPtr& f) {
    switch (f->kind) {
        case StepKind::Cond:
            return bottomOperand(f->ant) + " ~> " + bottomOperand(f->cons);
        case StepKind::Not: {
            std::string s = renderStep(f->lhs);
            return "~" + (level(f->lhs) >= 3 ? s : wrap(s));
        }
        case StepKind::And:
            return stepOperand(f->lhs, 2, false) + " & " + stepOperand(f->rhs, 2, true);
        case StepKind::Or:
            return stepOperand(f->lhs, 1, false) + " | " + stepOperand(f->rhs, 1, true);
        case StepKind::Implies:
            return stepBottomOperand(f->lhs) + " -> " + stepBottomOperand(f->rhs);
        case StepKind::Iff:
            return stepBottomOperand(f->lhs) + " <-> " + stepBottomOperand(f->rhs);
    }
    throw InternalError("unreachable");
}

}  // namespace

std::string render(const PropPtr& f) { return renderProp(f); }
std::string render(const StepPtr& f) { return renderStep(f); }

std::string render(const ParsedFormula& f) {
    return f.isLevel1() ? renderStep(f.level1()) : renderProp(f.level0());
}

WorldSet extension(const PropPtr& f, int width, const Valuation& valuation) {
    switch (f->kind) {
        case PropKind::Letter: {
            auto it = valuation.find(f->letter);
            if (it == valuation.end()) throw UnknownLetterError(f->letter);
            return it->second;
        }
        case PropKind::Top: return WorldSet::full(width);
        case PropKind::Bot: return WorldSet::empty(width);
        case PropKind::Not: return extension(f->lhs, width, valuation).complement();
        case PropKind::And: return extension(f->lhs, width, valuation) & extension(f->rhs, width, valuation);
        case PropKind::Or: return extension(f->lhs, width, valuation) | extension(f->rhs, width, valuation);
        case PropKind::Implies:
            return extension(f->lhs, width, valuation).complement() | extension(f->rhs, width, valuation);
        case PropKind::Iff: {
            WorldSet a = extension(f->lhs, width, valuation);
            WorldSet b = extension(f->rhs, width, valuation);
            return (a ^ b).complement();
        }
    }
    throw InternalError("unreachable");
}

}  // namespace condgeo
