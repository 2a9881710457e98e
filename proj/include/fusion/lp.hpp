#pragma once

#include "fusion/scalar.hpp"

#include <vector>

namespace fusion {

struct LpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : LpError {
  using LpError::LpError;
};

// minimize c.x  subject to  A x = b, x >= 0
struct LpProblem {
  std::vector<std::vector<Scalar>> A;
  std::vector<Scalar> b;
  std::vector<Scalar> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Scalar objective;
  std::vector<Scalar> x;  // primal point (Optimal)
  // Optimal: dual vector y with y.b = objective and A^T y <= c.
  // Infeasible: Farkas vector y with A^T y <= 0 and y.b > 0.
  std::vector<Scalar> y;
};

// exact two-phase dense simplex with Bland's rule (no cycling); every
// verdict carries an exactly checkable certificate
LpSolution solveLp(const LpProblem& p);

// feasibility of {A x = b, x >= 0} as a zero-objective program
LpSolution solveFeasibility(const std::vector<std::vector<Scalar>>& A,
                            const std::vector<Scalar>& b);

}  // namespace fusion
