#include "findet/parser.hpp"

#include <cctype>

#include "findet/ring.hpp"

namespace findet {

namespace {

// expr   := ['-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := base ('^' uint)?
// base   := number | ident | '(' expr ')'
// number := uint ('/' uint)?
class Parser {
public:
    Parser(const std::string& s, const RingSpec* ring)
        : s_(s), ring_(ring) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    const std::string& s_;
    const RingSpec* ring_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, pos_);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    unsigned long parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        if (digits.empty()) {
            pos_ = start;
            fail("expected integer");
        }
        try {
            return std::stoul(digits);
        } catch (const std::out_of_range&) {
            pos_ = start;
            fail("integer literal too large");
        }
    }

    Poly expr() {
        bool neg = eat('-');
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (eat('^')) {
            unsigned long e = parse_uint();
            if (e > 512) fail("exponent too large");
            b = b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Poly base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            skip_ws();
            std::size_t numpos = pos_;
            unsigned long num = parse_uint();
            unsigned long den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                den = parse_uint();
                if (den == 0) {
                    pos_ = numpos;
                    fail("zero denominator");
                }
            }
            mpq_class q(mpz_class(static_cast<unsigned long>(num)),
                        mpz_class(static_cast<unsigned long>(den)));
            Scalar v = Scalar::from_mpq(q);
            if (!ring_->rational_mode()) v = v.to_fp(ring_->prime());
            return Poly::constant(ring_, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            skip_ws();
            std::size_t start = pos_;
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                    s_[pos_] == '_'))
                name += s_[pos_++];
            int idx = ring_->var_index(name);
            if (idx < 0) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Poly::variable(ring_, static_cast<std::size_t>(idx));
        }
        fail("expected integer, variable or '('");
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const RingSpec* ring) {
    return Parser(text, ring).run();
}

}  // namespace findet
