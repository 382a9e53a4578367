// SPDX-License-Identifier: MIT
//
// Exact arithmetic in Q(i): Gaussian rationals with arbitrary-precision
// rational real and imaginary parts (GMP mpq under the hood).

#ifndef FRZ_GAUSS_RATIONAL_HPP
#define FRZ_GAUSS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace frz {

// Raised when an inverse of zero (scalar) or a singular matrix is requested.
struct SingularError : std::domain_error {
  using std::domain_error::domain_error;
};

// Raised on malformed textual input (numbers, JSON payloads, ...).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An element of Q(i).  Both parts are kept in canonical form (reduced,
// positive denominator), which mpq_class maintains for us; equality is
// exact structural equality.
class GaussRational {
 public:
  GaussRational() : re_(0), im_(0) {}
  GaussRational(long n) : re_(n), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussRational(const mpq_class& re) : re_(re), im_(0) { canonicalize(); }
  GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    canonicalize();
  }
  GaussRational(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw SingularError("zero denominator");
    canonicalize();
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussRational operator-() const { return GaussRational(-re_, -im_); }
  GaussRational conj() const { return GaussRational(re_, -im_); }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    canonicalize();
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
  // Lexicographic order; used only for canonical container ordering.
  friend bool operator<(const GaussRational& a, const GaussRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  GaussRational inverse() const {
    if (is_zero()) throw SingularError("inverse of zero in Q(i)");
    mpq_class n = re_ * re_ + im_ * im_;
    return GaussRational(re_ / n, -im_ / n);
  }

  // Canonical text form.  Pure rationals render as "p" or "p/q"; a nonzero
  // imaginary part appends "+r i" / "-r i" (e.g. "1/2-3/4i", "0+1i").
  std::string str() const;

  // Parses the grammar produced by str(); also accepts leading '+'.
  static GaussRational parse(const std::string& text);

 private:
  void canonicalize() {
    re_.canonicalize();
    im_.canonicalize();
  }

  mpq_class re_, im_;
};

}  // namespace frz

#endif  // FRZ_GAUSS_RATIONAL_HPP
