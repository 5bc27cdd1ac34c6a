#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace opadj {

/// Exact Gaussian rational a + b*i with rational real and imaginary parts.
/// All arithmetic is exact; there is no rounding anywhere in this type.
class GaussQ {
 public:
  GaussQ() : re_(0), im_(0) {}
  GaussQ(long n) : re_(n), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussQ(mpq_class re) : re_(std::move(re)), im_(0) {}  // NOLINT
  GaussQ(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}
  static GaussQ rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("GaussQ: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussQ(q);
  }
  static GaussQ i() { return GaussQ(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussQ conj() const { return GaussQ(re_, -im_); }

  GaussQ operator-() const { return GaussQ(-re_, -im_); }
  GaussQ& operator+=(const GaussQ& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussQ& operator-=(const GaussQ& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussQ& operator*=(const GaussQ& o) {
    if (im_ == 0 && o.im_ == 0) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }

  /// Exact division; throws on division by zero.
  GaussQ operator/(const GaussQ& o) const {
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    if (n == 0) throw std::domain_error("GaussQ: division by zero");
    GaussQ t = *this * o.conj();
    return GaussQ(t.re_ / n, t.im_ / n);
  }

  friend bool operator==(const GaussQ& a, const GaussQ& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }

  /// |z| as a double, for reports only; never feeds back into arithmetic.
  double abs_approx() const {
    double r = re_.get_d();
    double i = im_.get_d();
    return std::sqrt(r * r + i * i);
  }

  std::string str() const {
    std::ostringstream os;
    if (im_ == 0) {
      os << re_;
    } else if (re_ == 0) {
      os << im_ << "i";
    } else {
      os << re_ << (im_ > 0 ? "+" : "") << im_ << "i";
    }
    return os.str();
  }

 private:
  mpq_class re_, im_;
};

}  // namespace opadj
