#ifndef SRS_SCALAR_RATIONAL_FUNCTION_HPP
#define SRS_SCALAR_RATIONAL_FUNCTION_HPP

#include <string>
#include <utility>

#include "srs/errors.hpp"
#include "srs/scalar/polynomial.hpp"

namespace srs {

// Univariate rational function over Q(i) in canonical form:
//   - denominator nonzero and monic,
//   - gcd(numerator, denominator) = 1,
//   - the zero function is 0/1.
// Structural equality of canonical forms is semantic equality. Values are
// ring elements; they are never evaluated at points, so poles need no
// special handling here.
class RationalFunction {
  public:
    RationalFunction() : var_("x"), den_(Polynomial::constant(1)) {}

    RationalFunction(std::string var, Polynomial num, Polynomial den)
        : var_(std::move(var)), num_(std::move(num)), den_(std::move(den)) {
        if (den_.isZero()) throw DivisionByZeroExpression("zero denominator");
        canonicalize();
    }

    static RationalFunction variable(const std::string& var) {
        return RationalFunction(var, Polynomial::x(), Polynomial::constant(1));
    }
    static RationalFunction constant(GaussianRational c, const std::string& var = "x") {
        return RationalFunction(var, Polynomial(std::move(c)), Polynomial::constant(1));
    }
    static RationalFunction fromPolynomial(Polynomial p, const std::string& var) {
        return RationalFunction(var, std::move(p), Polynomial::constant(1));
    }

    const std::string& variableName() const { return var_; }
    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isConstant() const { return num_.isConstant() && den_.isConstant(); }
    bool isPolynomial() const { return den_ == Polynomial::constant(1); }
    GaussianRational constantValue() const {
        return num_.coeff(0) / den_.coeff(0);
    }

    RationalFunction operator-() const {
        return RationalFunction(var_, -num_, den_);
    }
    RationalFunction operator+(const RationalFunction& o) const {
        const std::string& v = joinVar(o);
        return RationalFunction(v, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }
    RationalFunction operator*(const RationalFunction& o) const {
        const std::string& v = joinVar(o);
        return RationalFunction(v, num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.isZero()) throw DivisionByZeroExpression("division by the zero function");
        const std::string& v = joinVar(o);
        return RationalFunction(v, num_ * o.den_, den_ * o.num_);
    }
    RationalFunction operator*(const GaussianRational& s) const {
        return RationalFunction(var_, num_ * s, den_);
    }

    RationalFunction inverse() const {
        if (isZero()) throw DivisionByZeroExpression("inverse of the zero function");
        return RationalFunction(var_, den_, num_);
    }

    RationalFunction pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RationalFunction acc = constant(GaussianRational(1), var_);
        RationalFunction base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Quotient-rule derivative, re-canonicalised.
    RationalFunction derivative() const {
        return RationalFunction(
            var_, num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Substitution f(g): Horner over rational functions. Throws
    // PoleAtCompositionPoint when g is a constant value at which the
    // denominator of f vanishes.
    RationalFunction compose(const RationalFunction& g) const {
        RationalFunction n = evalPoly(num_, g);
        RationalFunction d = evalPoly(den_, g);
        if (d.isZero())
            throw PoleAtCompositionPoint("composition lands on a pole of the outer function");
        return n / d;
    }

    bool operator==(const RationalFunction& o) const {
        if (var_ != o.var_ && !isConstant() && !o.isConstant())
            throw VariableMismatch("comparing functions of " + var_ + " and " + o.var_);
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // Renders to a string the expression parser accepts.
    std::string str() const {
        if (isPolynomial()) return num_.str(var_);
        std::string n = num_.isConstant() ? num_.str(var_) : "(" + num_.str(var_) + ")";
        return n + "/(" + den_.str(var_) + ")";
    }

  private:
    void canonicalize() {
        if (num_.isZero()) {
            den_ = Polynomial::constant(1);
            return;
        }
        Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial::divRem(num_, g).first;
            den_ = Polynomial::divRem(den_, g).first;
        }
        GaussianRational lcInv = den_.leading().inverse();
        num_ = num_ * lcInv;
        den_ = den_ * lcInv;
    }

    // Variables must agree unless one operand is constant; the result keeps
    // the non-constant operand's variable.
    const std::string& joinVar(const RationalFunction& o) const {
        if (var_ == o.var_) return var_;
        if (isConstant()) return o.var_;
        if (o.isConstant()) return var_;
        throw VariableMismatch("mixing functions of " + var_ + " and " + o.var_);
    }

    static RationalFunction evalPoly(const Polynomial& p, const RationalFunction& at) {
        RationalFunction acc = constant(GaussianRational(0), at.variableName());
        for (std::size_t k = p.coeffs().size(); k-- > 0;)
            acc = acc * at + constant(p.coeff(k), at.variableName());
        return acc;
    }

    std::string var_;
    Polynomial num_;
    Polynomial den_;
};

inline RationalFunction rf_derivative(const RationalFunction& f) { return f.derivative(); }
inline RationalFunction rf_compose(const RationalFunction& f, const RationalFunction& g) {
    return f.compose(g);
}
inline bool rf_equal(const RationalFunction& f, const RationalFunction& g) { return f == g; }

} // namespace srs

#endif
