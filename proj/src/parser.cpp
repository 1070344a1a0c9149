#include "boolsolve/errors.hpp"
#include "boolsolve/formula.hpp"

#include <string>
#include <vector>

namespace boolsolve {

namespace {

enum class Tok {
    Ident,
    True,
    False,
    Exists,
    Forall,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Dot,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        const std::size_t l = line;
        const std::size_t cl = col;
        auto punct = [&](Tok kind, std::size_t len) {
            out.push_back({kind, std::string(src.substr(i, len)), l, cl});
            advance(len);
        };
        if (c == '~') {
            punct(Tok::Not, 1);
        } else if (c == '&') {
            punct(Tok::And, 1);
        } else if (c == '|') {
            punct(Tok::Or, 1);
        } else if (c == '(') {
            punct(Tok::LParen, 1);
        } else if (c == ')') {
            punct(Tok::RParen, 1);
        } else if (c == '.') {
            punct(Tok::Dot, 1);
        } else if (src.substr(i, 3) == "<->") {
            punct(Tok::Iff, 3);
        } else if (src.substr(i, 2) == "->") {
            punct(Tok::Implies, 2);
        } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= 'A' && src[j] <= 'Z') ||
                    (src[j] >= '0' && src[j] <= '9') || src[j] == '_')) {
                ++j;
            }
            std::string word(src.substr(i, j - i));
            Tok kind = Tok::Ident;
            if (word == "true") kind = Tok::True;
            else if (word == "false") kind = Tok::False;
            else if (word == "exists") kind = Tok::Exists;
            else if (word == "forall") kind = Tok::Forall;
            else if (!is_identifier(word))
                throw ParseError("invalid identifier '" + word + "'", l, cl);
            out.push_back({kind, std::move(word), l, cl});
            advance(j - i);
        } else {
            // Report the full UTF-8 sequence rather than a lone lead byte.
            std::size_t len = 1;
            const auto u = static_cast<unsigned char>(c);
            if (u >= 0xF0) len = 4;
            else if (u >= 0xE0) len = 3;
            else if (u >= 0xC0) len = 2;
            throw ParseError("unexpected character '" + std::string(src.substr(i, len)) + "'", l,
                             cl);
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Formula parse_all() {
        Formula f = parse_iff();
        if (peek().kind != Tok::End) fail("expected end of input");
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    Token take() { return tokens_[pos_++]; }

    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        throw ParseError(what + ", found " + describe(t), t.line, t.column);
    }

    // <-> is left associative
    Formula parse_iff() {
        Formula lhs = parse_implies();
        while (accept(Tok::Iff)) lhs = Formula::iff(lhs, parse_implies());
        return lhs;
    }

    // -> is right associative
    Formula parse_implies() {
        Formula lhs = parse_or();
        if (accept(Tok::Implies)) return Formula::implies(lhs, parse_implies());
        return lhs;
    }

    Formula parse_or() {
        Formula lhs = parse_and();
        while (accept(Tok::Or)) lhs = Formula::disj(lhs, parse_and());
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_unary();
        while (accept(Tok::And)) lhs = Formula::conj(lhs, parse_unary());
        return lhs;
    }

    Formula parse_unary() {
        if (accept(Tok::Not)) return Formula::negation(parse_unary());
        if (peek().kind == Tok::Exists || peek().kind == Tok::Forall) {
            const bool existential = take().kind == Tok::Exists;
            if (peek().kind != Tok::Ident) {
                if (peek().kind == Tok::True || peek().kind == Tok::False ||
                    peek().kind == Tok::Exists || peek().kind == Tok::Forall) {
                    fail("reserved word used as quantified atom");
                }
                fail("expected identifier after quantifier");
            }
            std::string name = take().text;
            if (!accept(Tok::Dot)) fail("expected '.' after quantified atom");
            Formula body = parse_iff();
            return existential ? Formula::exists(std::move(name), std::move(body))
                               : Formula::forall(std::move(name), std::move(body));
        }
        return parse_primary();
    }

    Formula parse_primary() {
        switch (peek().kind) {
            case Tok::Ident:
                return Formula::atom(take().text);
            case Tok::True:
                take();
                return Formula::top();
            case Tok::False:
                take();
                return Formula::bot();
            case Tok::LParen: {
                take();
                Formula inner = parse_iff();
                if (!accept(Tok::RParen)) fail("expected ')'");
                return inner;
            }
            default:
                fail("expected formula");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

}  // namespace boolsolve
