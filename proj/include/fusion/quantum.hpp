#pragma once

#include "fusion/graph.hpp"
#include "fusion/table.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace fusion {

using Complex = std::complex<double>;

struct QuantumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dense square complex matrix, sized for the small systems handled here
class Mat {
public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  static Mat identity(int n);
  static Mat zero(int n) { return Mat(n); }
  // rank-one projector |v><v| (v need not be normalized)
  static Mat projector(const std::vector<Complex>& v);

  int dim() const { return n_; }
  Complex& operator()(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
  const Complex& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(Complex s) const;
  Mat dagger() const;
  Complex trace() const;

  friend Mat kron(const Mat& x, const Mat& y);

  bool approxEqual(const Mat& o, double tol = 1e-9) const;

private:
  int n_ = 0;
  std::vector<Complex> a_;
};

Mat pauliX();
Mat pauliY();
Mat pauliZ();
// two projective effects of a +/-1 qubit observable; outcome 0 is the +1 eigenspace
std::vector<Mat> qubitEffects(const Mat& observable);
// effects of the observable cos(theta) Z + sin(theta) X
std::vector<Mat> rotatedZX(double theta);
// maximally entangled |phi+> density matrix on 2x2
Mat phiPlus();
// |psi> = sqrt(v)|phi+> + noise: Werner-like state v|phi+><phi+| + (1-v) I/4
Mat wernerState(double v);
// diagonal density matrix from classical weights
Mat classicalDiag(const std::vector<double>& weights);
// perfectly correlated classical pair sum_i w_i |ii><ii| on d x d
Mat classicalCopy(const std::vector<double>& weights);

struct Source {
  std::string latent;            // latent node this source realizes
  Mat rho;                       // density matrix on the tensor of `factorDims`
  std::vector<int> factorDims;   // one factor per wiring slot
};

// Measurement family of one observed node: a POVM per assignment of its
// observed parents (parent order fixed by `parentOrder`).
struct Response {
  std::vector<std::string> parentOrder;
  std::map<std::vector<int>, std::vector<Mat>> povms; // parent values -> effects by outcome
};

struct NetworkStrategy {
  std::vector<Source> sources;
  // node -> list of (source index, factor index) giving its measured subsystem
  std::map<std::string, std::vector<std::pair<int, int>>> wiring;
  std::map<std::string, Response> responses;
};

// observational Born-rule table over the observed variables of `g`
DataTable bornTable(const CausalGraph& g, const NetworkStrategy& st);

// table over the remaining observed variables after cutting `target` and
// feeding `value` to its children (the target itself is left unmeasured)
DataTable doTable(const CausalGraph& g, const NetworkStrategy& st,
                  const std::string& target, int value);

HybridDataset hybridFromStrategy(const CausalGraph& g, const NetworkStrategy& st,
                                 const std::vector<std::string>& targets);

} // namespace fusion
