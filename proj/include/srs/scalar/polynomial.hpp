#ifndef SRS_SCALAR_POLYNOMIAL_HPP
#define SRS_SCALAR_POLYNOMIAL_HPP

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "srs/scalar/gaussian_rational.hpp"

namespace srs {

// Dense univariate polynomial over Q(i), coefficients in ascending degree.
// The zero polynomial has an empty coefficient vector; otherwise the
// leading coefficient is nonzero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(GaussianRational c) {
        if (!c.isZero()) coeffs_.push_back(std::move(c));
    }
    explicit Polynomial(std::vector<GaussianRational> coeffs)
        : coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial x() {
        return Polynomial({GaussianRational(0), GaussianRational(1)});
    }
    static Polynomial constant(long n) { return Polynomial(GaussianRational(n)); }
    static Polynomial monomial(GaussianRational c, std::size_t deg) {
        if (c.isZero()) return {};
        std::vector<GaussianRational> v(deg + 1);
        v[deg] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool isZero() const { return coeffs_.empty(); }
    bool isConstant() const { return coeffs_.size() <= 1; }
    // Degree of the zero polynomial is -1 by convention here.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const GaussianRational& leading() const {
        assert(!coeffs_.empty());
        return coeffs_.back();
    }
    GaussianRational coeff(std::size_t deg) const {
        return deg < coeffs_.size() ? coeffs_[deg] : GaussianRational(0);
    }
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

    Polynomial operator-() const {
        auto v = coeffs_;
        for (auto& c : v) c = -c;
        return Polynomial(std::move(v));
    }
    Polynomial operator+(const Polynomial& o) const {
        std::vector<GaussianRational> v(std::max(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) + o.coeff(k);
        return Polynomial(std::move(v));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial operator*(const Polynomial& o) const {
        if (isZero() || o.isZero()) return {};
        std::vector<GaussianRational> v(coeffs_.size() + o.coeffs_.size() - 1);
        for (std::size_t a = 0; a < coeffs_.size(); ++a)
            for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
                v[a + b] += coeffs_[a] * o.coeffs_[b];
        return Polynomial(std::move(v));
    }
    Polynomial operator*(const GaussianRational& s) const {
        if (s.isZero()) return {};
        auto v = coeffs_;
        for (auto& c : v) c *= s;
        return Polynomial(std::move(v));
    }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Euclidean division; the divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divRem(Polynomial num, const Polynomial& den) {
        assert(!den.isZero());
        Polynomial quot;
        GaussianRational lcInv = den.leading().inverse();
        while (!num.isZero() && num.degree() >= den.degree()) {
            std::size_t shift = static_cast<std::size_t>(num.degree() - den.degree());
            GaussianRational f = num.leading() * lcInv;
            Polynomial t = monomial(f, shift);
            quot = quot + t;
            num = num - t * den;
        }
        return {quot, num};
    }

    // Monic gcd via the Euclidean algorithm. gcd(0, 0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.isZero()) {
            Polynomial r = divRem(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.isZero() ? a : a.monic();
    }

    Polynomial monic() const {
        assert(!isZero());
        return *this * leading().inverse();
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<GaussianRational> v(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            v[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
        return Polynomial(std::move(v));
    }

    // Horner evaluation over any ring with +, * and construction from
    // GaussianRational by explicit scalar multiply.
    GaussianRational evaluate(const GaussianRational& at) const {
        GaussianRational acc(0);
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * at + coeffs_[k];
        return acc;
    }

    std::string str(const std::string& var) const {
        if (isZero()) return "0";
        std::string s;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            if (coeffs_[k].isZero()) continue;
            if (!s.empty()) s += " + ";
            std::string c = coeffs_[k].str();
            if (k == 0) {
                s += c;
            } else {
                std::string xp = (k == 1) ? var : var + "^" + std::to_string(k);
                s += (coeffs_[k].isOne()) ? xp : c + "*" + xp;
            }
        }
        return s;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
    }

    std::vector<GaussianRational> coeffs_;
};

} // namespace srs

#endif
