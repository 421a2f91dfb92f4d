#include <cctype>
#include <cstdlib>

#include "cremona/textio.hpp"

namespace cremona {

namespace {

constexpr unsigned long kMaxExponent = 1u << 20;

struct Token {
    enum Kind { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::size_t pos;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, start, ""};
            return;
        }
        char c = s_[i_];
        auto single = [&](Token::Kind k) {
            ++i_;
            tok_ = {k, start, std::string(1, c)};
        };
        switch (c) {
            case '+': return single(Token::Plus);
            case '-': return single(Token::Minus);
            case '*': return single(Token::Star);
            case '/': return single(Token::Slash);
            case '^': return single(Token::Caret);
            case '(': return single(Token::LParen);
            case ')': return single(Token::RParen);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            tok_ = {Token::Int, start, s_.substr(start, i_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            tok_ = {Token::Name, start, s_.substr(start, i_ - start)};
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", start);
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& text, RingPtr ring, const NameResolver& names)
        : lex_(text), ring_(std::move(ring)), names_(names) {}

    RationalFunction parse() {
        RationalFunction v = sum();
        if (lex_.peek().kind != Token::End)
            throw parse_error("trailing input after expression", lex_.peek().pos);
        return v;
    }

private:
    RationalFunction sum() {
        RationalFunction v = product();
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            Token op = lex_.take();
            RationalFunction rhs = product();
            v = op.kind == Token::Plus ? v + rhs : v - rhs;
        }
        return v;
    }

    RationalFunction product() {
        RationalFunction v = signed_power();
        while (lex_.peek().kind == Token::Star || lex_.peek().kind == Token::Slash) {
            Token op = lex_.take();
            RationalFunction rhs = signed_power();
            if (op.kind == Token::Star) {
                v = v * rhs;
            } else {
                if (rhs.is_zero())
                    throw parse_error("division by zero", op.pos);
                v = v / rhs;
            }
        }
        return v;
    }

    RationalFunction signed_power() {
        bool negate = false;
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            if (lex_.take().kind == Token::Minus) negate = !negate;
        }
        RationalFunction v = power();
        return negate ? -v : v;
    }

    RationalFunction power() {
        RationalFunction base = atom();
        if (lex_.peek().kind != Token::Caret) return base;
        Token op = lex_.take();
        long e = exponent();
        if (e < 0 && base.is_zero())
            throw parse_error("zero raised to a negative power", op.pos);
        return base.pow(e);
    }

    /* Exponents are literal integers (never reduced into the field), with
     * optional sign, parentheses, and right-associative '^' towers. */
    long exponent() {
        bool neg = false;
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            if (lex_.take().kind == Token::Minus) neg = !neg;
        }
        Token t = lex_.take();
        long v;
        if (t.kind == Token::Int) {
            mpz_class z(t.text);
            if (mpz_cmpabs_ui(z.get_mpz_t(), kMaxExponent) > 0)
                throw parse_error("exponent out of range", t.pos);
            v = z.get_si();
        } else if (t.kind == Token::LParen) {
            v = exponent();
            Token close = lex_.take();
            if (close.kind != Token::RParen)
                throw parse_error("expected ')'", close.pos);
        } else {
            throw parse_error("expected a constant integer exponent", t.pos);
        }
        if (lex_.peek().kind == Token::Caret) {
            Token op = lex_.take();
            long r = exponent();
            if (r < 0) throw parse_error("negative exponent inside an exponent", op.pos);
            long acc = 1;
            for (long i = 0; i < r; ++i) {
                acc *= v;
                if (std::labs(acc) > static_cast<long>(kMaxExponent))
                    throw parse_error("exponent out of range", op.pos);
            }
            v = acc;
        }
        return neg ? -v : v;
    }

    RationalFunction atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Int:
                return RationalFunction::constant(ring_, mpq_class(mpz_class(t.text)));
            case Token::Name: {
                if (ring_->index_of(t.text) >= 0)
                    return RationalFunction::variable(ring_, t.text);
                if (names_) {
                    if (auto v = names_(t.text)) {
                        if (!(*v->ring() == *ring_))
                            throw parse_error("name '" + t.text +
                                              "' belongs to a different ring", t.pos);
                        return *v;
                    }
                }
                throw parse_error("unknown name '" + t.text + "'", t.pos);
            }
            case Token::LParen: {
                RationalFunction v = sum();
                Token close = lex_.take();
                if (close.kind != Token::RParen)
                    throw parse_error("expected ')'", close.pos);
                return v;
            }
            default:
                throw parse_error("expected a number, name, or '('", t.pos);
        }
    }

    Lexer lex_;
    RingPtr ring_;
    const NameResolver& names_;
};

} // namespace

RationalFunction parse_expression(const std::string& text, RingPtr ring,
                                  const NameResolver& names) {
    return Parser(text, std::move(ring), names).parse();
}

} // namespace cremona
