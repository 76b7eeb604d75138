#ifndef SRS_SCALAR_GAUSSIAN_RATIONAL_HPP
#define SRS_SCALAR_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "srs/errors.hpp"

namespace srs {

// Element of Q(i): re + im*i with i^2 = -1. Components are arbitrary
// precision rationals kept in lowest terms with positive denominator
// (mpq_class canonicalisation). All arithmetic is exact.
class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) { canon(); }
    GaussianRational(mpq_class re, mpq_class im)
        : re_(std::move(re)), im_(std::move(im)) {
        canon();
    }

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }
    static GaussianRational fromLong(long n, long d = 1) {
        mpq_class q(n, d);
        q.canonicalize();
        return GaussianRational(q);
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool isZero() const { return re_ == 0 && im_ == 0; }
    bool isOne() const { return re_ == 1 && im_ == 0; }
    bool isReal() const { return im_ == 0; }

    GaussianRational operator-() const {
        return GaussianRational(mpq_class(-re_), mpq_class(-im_));
    }
    GaussianRational operator+(const GaussianRational& o) const {
        return GaussianRational(re_ + o.re_, im_ + o.im_);
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return GaussianRational(re_ - o.re_, im_ - o.im_);
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return GaussianRational(re_ * o.re_ - im_ * o.im_,
                                re_ * o.im_ + im_ * o.re_);
    }
    GaussianRational inverse() const {
        if (isZero()) throw DivisionByZeroExpression("inverse of zero");
        mpq_class n = re_ * re_ + im_ * im_;
        return GaussianRational(re_ / n, mpq_class(-im_) / n);
    }
    GaussianRational operator/(const GaussianRational& o) const {
        return *this * o.inverse();
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const {
        return re_ == o.re_ && im_ == o.im_;
    }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    // Total order for canonical term sorting (not a numeric order).
    bool operator<(const GaussianRational& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

    // Renders in a form the expression grammar accepts: "2", "-1/3", "i",
    // "-i", "2*i", "(1+2*i)". Pure values stay unparenthesised.
    std::string str() const {
        if (im_ == 0) return re_.get_str();
        std::string imPart;
        if (im_ == 1) imPart = "i";
        else if (im_ == -1) imPart = "-i";
        else imPart = im_.get_str() + "*i";
        if (re_ == 0) return imPart;
        std::string s = "(" + re_.get_str();
        if (im_ > 0) s += "+" + imPart;
        else s += "-" + (im_ == -1 ? std::string("i") : mpq_class(-im_).get_str() + "*i");
        return s + ")";
    }

  private:
    void canon() {
        re_.canonicalize();
        im_.canonicalize();
    }

    mpq_class re_;
    mpq_class im_;
};

inline GaussianRational operator*(long n, const GaussianRational& g) {
    return GaussianRational(n) * g;
}

} // namespace srs

#endif
