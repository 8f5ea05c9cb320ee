#include "lattes/text.hpp"

#include <cctype>
#include <string_view>

namespace lattes {

namespace {

std::string sqrt_token(RingId ring) {
    return ring == RingId::gaussian ? "sqrt(-1)" : "sqrt(-3)";
}

std::string power_of_x(long k) {
    if (k == 1) return "x";
    return "x^" + std::to_string(k);
}

// One printed term of a polynomial, sign split out so terms join with
// " + " / " - ".
struct TermText {
    std::string text;
    bool negative = false;
};

TermText render_term(const KNum& cf, long k) {
    if (k == 0) {
        // Constants join additively, so a two-component value like
        // "-1 + sqrt(-3)" may be inlined without parentheses.
        std::string s = to_string(cf);
        if (!s.empty() && s[0] == '-') return {s.substr(1), true};
        return {s, false};
    }
    std::string xs = power_of_x(k);
    if (cf.v == 0) {
        if (cf.u == 1) return {xs, false};
        if (cf.u == -1) return {xs, true};
        mpq_class au = abs(cf.u);
        return {au.get_str() + "*" + xs, cf.u < 0};
    }
    if (cf.u == 0) {
        std::string root = sqrt_token(cf.ring);
        if (cf.v == 1) return {root + "*" + xs, false};
        if (cf.v == -1) return {root + "*" + xs, true};
        mpq_class av = abs(cf.v);
        return {av.get_str() + "*" + root + "*" + xs, cf.v < 0};
    }
    return {"(" + to_string(cf) + ")*" + xs, false};
}

}  // namespace

std::string to_string(const QuadInt& v) {
    if (v.b == 0) return v.a.get_str();
    const char* sym = v.ring == RingId::gaussian ? "i" : "w";
    mpz_class ab = abs(v.b);
    return v.a.get_str() + (v.b < 0 ? "-" : "+") + ab.get_str() + "*" + sym;
}

std::string to_string(const KNum& v) {
    if (v.v == 0) return v.u.get_str();
    std::string root = sqrt_token(v.ring);
    mpq_class av = abs(v.v);
    std::string vpart = av == 1 ? root : av.get_str() + "*" + root;
    if (v.u == 0) return v.v < 0 ? "-" + vpart : vpart;
    return v.u.get_str() + (v.v < 0 ? " - " : " + ") + vpart;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        KNum cf = p.coeff(k);
        if (cf.is_zero()) continue;
        TermText t = render_term(cf, k);
        if (out.empty()) {
            out = t.negative ? "-" + t.text : t.text;
        } else {
            out += t.negative ? " - " : " + ";
            out += t.text;
        }
    }
    return out;
}

std::string to_string(const RatFunc& f) {
    if (f.den().degree() == 0 && f.den().coeff(0) == KNum::one(f.ring())) {
        return to_string(f.num());
    }
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::string to_string(const Point& p) {
    if (p.infinite) return "inf";
    return to_string(p.x) + "," + to_string(p.y);
}

std::string to_string(const Curve& c) {
    return "y^2 = " + to_string(curve_rhs(c));
}

namespace {

// Recursive-descent evaluator over rational functions.  The narrower
// element grammars run it with the variable or division switched off and
// convert the constant result.
class Parser {
public:
    Parser(RingId ring, std::string_view text, bool allow_x, bool allow_div)
        : ring_(ring), text_(text), allow_x_(allow_x), allow_div_(allow_div) {}

    RatFunc run() {
        RatFunc v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing characters");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse \"" + std::string(text_) + "\": " +
                         what);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    RatFunc expr() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (text_[pos_] == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        RatFunc acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            RatFunc t = term();
            acc = c == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    RatFunc term() {
        RatFunc acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/' && allow_div_) {
                ++pos_;
                RatFunc d = factor();
                if (d.is_zero()) fail("division by zero");
                acc = acc / d;
            } else {
                break;
            }
        }
        return acc;
    }

    RatFunc factor() {
        RatFunc b = base();
        skip_ws();
        if (peek() != '^') return b;
        ++pos_;
        skip_ws();
        mpz_class e = integer_literal();
        if (e < 0 || e > 4096) fail("exponent out of range");
        RatFunc acc = RatFunc::constant(KNum::one(ring_));
        for (long i = 0, n = e.get_si(); i < n; ++i) acc = acc * b;
        return acc;
    }

    RatFunc base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            skip_ws();
            expect(')');
            return v;
        }
        if (c == 'x') {
            if (!allow_x_) fail("a variable is not allowed here");
            ++pos_;
            return RatFunc::x(ring_);
        }
        if (c == 'i') {
            require_ring(RingId::gaussian, "i");
            ++pos_;
            return RatFunc::constant(KNum{ring_, 0, 1});
        }
        if (c == 'w') {
            require_ring(RingId::eisenstein, "w");
            ++pos_;
            return RatFunc::constant(
                KNum{ring_, mpq_class(-1, 2), mpq_class(1, 2)});
        }
        if (c == 's') return sqrt_atom();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RatFunc::constant(KNum{ring_, mpq_class(integer_literal()), 0});
        }
        fail("expected a value");
    }

    // sqrt-3 | sqrt(-1) | sqrt(-3)
    RatFunc sqrt_atom() {
        static constexpr std::string_view kWord = "sqrt";
        if (text_.substr(pos_, kWord.size()) != kWord) fail("expected a value");
        pos_ += kWord.size();
        if (peek() == '-') {
            ++pos_;
            expect('3');
            require_ring(RingId::eisenstein, "sqrt-3");
            return RatFunc::constant(KNum{ring_, 0, 1});
        }
        expect('(');
        expect('-');
        char d = peek();
        ++pos_;
        expect(')');
        if (d == '1') {
            require_ring(RingId::gaussian, "sqrt(-1)");
        } else if (d == '3') {
            require_ring(RingId::eisenstein, "sqrt(-3)");
        } else {
            fail("only sqrt(-1) and sqrt(-3) exist here");
        }
        return RatFunc::constant(KNum{ring_, 0, 1});
    }

    mpz_class integer_literal() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) fail("expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void require_ring(RingId wanted, const char* atom) const {
        if (ring_ != wanted) {
            fail(std::string("'") + atom + "' is not an element of the " +
                 ring_name(ring_) + " ring");
        }
    }

    RingId ring_;
    std::string_view text_;
    size_t pos_ = 0;
    bool allow_x_;
    bool allow_div_;
};

KNum constant_value(const RatFunc& f, const std::string& text) {
    if (!f.is_constant()) {
        throw ParseError("cannot parse \"" + text + "\": expected a constant");
    }
    return f.num().coeff(0);
}

}  // namespace

KNum parse_knum(RingId ring, const std::string& text) {
    Parser p(ring, text, /*allow_x=*/false, /*allow_div=*/true);
    return constant_value(p.run(), text);
}

QuadInt parse_quadint(RingId ring, const std::string& text) {
    Parser p(ring, text, /*allow_x=*/false, /*allow_div=*/false);
    KNum v = constant_value(p.run(), text);
    mpq_class aq, bq;
    if (ring == RingId::gaussian) {
        aq = v.u;
        bq = v.v;
    } else {
        bq = 2 * v.v;
        aq = v.u + v.v;
    }
    if (aq.get_den() != 1 || bq.get_den() != 1) {
        throw ParseError("cannot parse \"" + text +
                         "\": value is not an integer of the " +
                         ring_name(ring) + " ring");
    }
    return QuadInt{ring, aq.get_num(), bq.get_num()};
}

RatFunc parse_ratfunc(RingId ring, const std::string& text) {
    Parser p(ring, text, /*allow_x=*/true, /*allow_div=*/true);
    return p.run();
}

Point parse_point(RingId ring, const std::string& text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    std::string body =
        begin == std::string::npos ? "" : text.substr(begin, end - begin + 1);
    if (body == "inf") return Point::infinity(ring);
    int depth = 0;
    size_t split = std::string::npos;
    for (size_t idx = 0; idx < body.size(); ++idx) {
        char c = body[idx];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            split = idx;
            break;
        }
    }
    if (split == std::string::npos) {
        throw ParseError("cannot parse \"" + text +
                         "\": expected \"inf\" or \"x,y\"");
    }
    return Point::affine(parse_knum(ring, body.substr(0, split)),
                         parse_knum(ring, body.substr(split + 1)));
}

}  // namespace lattes
