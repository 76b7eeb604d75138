#ifndef SRS_IO_EXPRESSION_HPP
#define SRS_IO_EXPRESSION_HPP

#include <cctype>
#include <optional>
#include <string>

#include "srs/errors.hpp"
#include "srs/scalar/rational_function.hpp"

namespace srs {

// Recursive-descent parser for coefficient expressions.
//
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := integer | 'i' | identifier | '(' expr ')'
//
// A single variable symbol is allowed per expression. When `expectedVar`
// is given, any identifier must match it; otherwise the first identifier
// seen fixes the variable. 'i' is the imaginary unit, never a variable.
class ExpressionParser {
  public:
    explicit ExpressionParser(std::string src, std::optional<std::string> expectedVar = {})
        : src_(std::move(src)), var_(std::move(expectedVar)) {}

    RationalFunction parse() {
        RationalFunction r = parseExpr();
        skipSpace();
        if (pos_ != src_.size())
            throw SyntaxError("unexpected trailing input", pos_);
        if (var_) return retag(r, *var_);
        return r;
    }

  private:
    RationalFunction parseExpr() {
        RationalFunction acc = parseTerm();
        for (;;) {
            skipSpace();
            if (consume('+')) acc = acc + parseTerm();
            else if (consume('-')) acc = acc - parseTerm();
            else return acc;
        }
    }

    RationalFunction parseTerm() {
        RationalFunction acc = parseUnary();
        for (;;) {
            skipSpace();
            if (consume('*')) {
                acc = acc * parseUnary();
            } else if (consume('/')) {
                RationalFunction d = parseUnary();
                if (d.isZero()) throw DivisionByZeroExpression("division by zero in expression");
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction parseUnary() {
        skipSpace();
        if (consume('-')) return -parseUnary();
        return parsePower();
    }

    RationalFunction parsePower() {
        RationalFunction base = parseAtom();
        skipSpace();
        if (!consume('^')) return base;
        skipSpace();
        bool neg = consume('-');
        skipSpace();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw SyntaxError("expected integer exponent after '^'", pos_);
        long e = parseInt();
        if (neg) e = -e;
        if (e < 0 && base.isZero())
            throw DivisionByZeroExpression("zero raised to a negative power");
        return base.pow(e);
    }

    RationalFunction parseAtom() {
        skipSpace();
        if (pos_ >= src_.size()) throw SyntaxError("unexpected end of expression", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction inner = parseExpr();
            skipSpace();
            if (!consume(')')) throw SyntaxError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long n = parseInt();
            return RationalFunction::constant(GaussianRational(n), varOr("x"));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id = parseIdent();
            if (id == "i")
                return RationalFunction::constant(GaussianRational::i(), varOr("x"));
            if (var_ && id != *var_)
                throw SyntaxError("unknown symbol '" + id + "', expected variable '" + *var_ + "'",
                                  pos_ - id.size());
            if (!var_) var_ = id;
            return RationalFunction::variable(id);
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    long parseInt() {
        std::size_t start = pos_;
        unsigned long long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + static_cast<unsigned long long>(src_[pos_] - '0');
            if (v > (1ull << 62)) throw SyntaxError("integer literal too large", start);
            ++pos_;
        }
        return static_cast<long>(v);
    }

    std::string parseIdent() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        return src_.substr(start, pos_ - start);
    }

    void skipSpace() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool consume(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string varOr(const std::string& fallback) const { return var_ ? *var_ : fallback; }

    // Constants parsed before any variable was seen carry a placeholder
    // name; rebuild them under the final variable.
    static RationalFunction retag(const RationalFunction& r, const std::string& var) {
        return RationalFunction(var, r.numerator(), r.denominator());
    }

    std::string src_;
    std::size_t pos_ = 0;
    std::optional<std::string> var_;
};

inline RationalFunction parse_expression(const std::string& src,
                                         std::optional<std::string> expectedVar = {}) {
    return ExpressionParser(src, std::move(expectedVar)).parse();
}

} // namespace srs

#endif
