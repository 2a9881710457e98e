#include "fusion/scalar.hpp"

#include <cmath>
#include <sstream>

namespace fusion {

int Scalar::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare |a| against |b*sqrt(2)| via a^2 vs 2*b^2
  Rat lhs = a_ * a_;
  Rat rhs = 2 * b_ * b_;
  if (lhs == rhs) return 0; // only possible for a = b = 0, kept for safety
  return lhs > rhs ? sa : sb;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rat a = a_ * o.a_ + 2 * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  // multiply by the conjugate: (c + d*sqrt2)^{-1} = (c - d*sqrt2)/(c^2 - 2 d^2)
  Rat norm = o.a_ * o.a_ - 2 * o.b_ * o.b_;
  if (norm == 0)
    throw ScalarError("division by zero in Q(sqrt 2)");
  *this *= Scalar(o.a_ / norm, -o.b_ / norm);
  return *this;
}

double Scalar::toDouble() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(2.0);
}

std::string Scalar::str() const {
  std::ostringstream out;
  if (b_ == 0) {
    out << a_;
  } else if (a_ == 0) {
    out << b_ << "*sqrt2";
  } else {
    out << a_ << (b_ > 0 ? " + " : " - ");
    Rat babs = b_ > 0 ? b_ : Rat(-b_);
    out << babs << "*sqrt2";
  }
  return out.str();
}

std::optional<Scalar> Scalar::snap(double x, long maxDen, double tol) {
  static const double kSqrt2 = std::sqrt(2.0);
  // bound on |b| for the magnitudes that arise here (probabilities and small
  // linear combinations of them)
  double bBound = (std::abs(x) + 4.0) / kSqrt2;
  for (long den = 1; den <= maxDen; ++den) {
    double scaled = x * static_cast<double>(den);
    long nMax = static_cast<long>(std::ceil(bBound * static_cast<double>(den)));
    for (long n = -nMax; n <= nMax; ++n) {
      double rest = scaled - static_cast<double>(n) * kSqrt2;
      double mReal = std::round(rest);
      if (std::abs(rest - mReal) > tol * static_cast<double>(den)) continue;
      long m = static_cast<long>(mReal);
      Scalar cand(Rat(m, den), Rat(n, den));
      if (std::abs(cand.toDouble() - x) <= tol) return cand;
    }
  }
  return std::nullopt;
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

} // namespace fusion
