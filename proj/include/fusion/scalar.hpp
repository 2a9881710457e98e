#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace fusion {

using Rat = boost::multiprecision::mpq_rational;

// Element of the ordered field Q(sqrt 2), stored as a + b*sqrt(2) with exact
// rational coefficients.  All comparisons are exact (no floating point).
class Scalar {
public:
  Scalar() : a_(0), b_(0) {}
  Scalar(int n) : a_(n), b_(0) {}
  Scalar(long n) : a_(n), b_(0) {}
  Scalar(Rat a) : a_(std::move(a)), b_(0) {}
  Scalar(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar sqrt2() { return Scalar(Rat(0), Rat(1)); }
  static Scalar frac(long num, long den) { return Scalar(Rat(num, den)); }

  const Rat& rational() const { return a_; }   // coefficient of 1
  const Rat& radical() const { return b_; }    // coefficient of sqrt(2)
  bool isRational() const { return b_ == 0; }

  // sign of a + b*sqrt(2), computed exactly
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Scalar& operator-=(const Scalar& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return (x - y).sign() >= 0; }

  double toDouble() const;
  std::string str() const;

  // Nearest element of Q(sqrt 2) with both denominators bounded by maxDen,
  // if one lies within tol of x.  Used to lift numerically computed Born-rule
  // probabilities back to the exact field.
  static std::optional<Scalar> snap(double x, long maxDen = 128, double tol = 1e-9);

private:
  Rat a_, b_;
};

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Scalar abs(const Scalar& s);

} // namespace fusion
