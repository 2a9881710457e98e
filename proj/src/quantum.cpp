#include "fusion/quantum.hpp"

#include <algorithm>
#include <cmath>

namespace fusion {

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::projector(const std::vector<Complex>& v) {
  double nrm2 = 0;
  for (auto& x : v) nrm2 += std::norm(x);
  Mat m(static_cast<int>(v.size()));
  for (size_t r = 0; r < v.size(); ++r)
    for (size_t c = 0; c < v.size(); ++c)
      m(static_cast<int>(r), static_cast<int>(c)) = v[r] * std::conj(v[c]) / nrm2;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      Complex x = (*this)(i, k);
      if (x == 0.0) continue;
      for (int j = 0; j < n_; ++j) out(i, j) += x * o(k, j);
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  Mat out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  Mat out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

Mat Mat::scaled(Complex s) const {
  Mat out = *this;
  for (auto& x : out.a_) x *= s;
  return out;
}

Mat Mat::dagger() const {
  Mat out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(i, j) = std::conj((*this)(j, i));
  return out;
}

Complex Mat::trace() const {
  Complex t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Mat kron(const Mat& x, const Mat& y) {
  Mat out(x.n_ * y.n_);
  for (int i = 0; i < x.n_; ++i)
    for (int j = 0; j < x.n_; ++j) {
      if (x(i, j) == 0.0) continue;
      for (int k = 0; k < y.n_; ++k)
        for (int l = 0; l < y.n_; ++l)
          out(i * y.n_ + k, j * y.n_ + l) = x(i, j) * y(k, l);
    }
  return out;
}

bool Mat::approxEqual(const Mat& o, double tol) const {
  if (n_ != o.n_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (std::abs(a_[i] - o.a_[i]) > tol) return false;
  return true;
}

Mat pauliX() {
  Mat m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Mat pauliY() {
  Mat m(2);
  m(0, 1) = Complex(0, -1);
  m(1, 0) = Complex(0, 1);
  return m;
}

Mat pauliZ() {
  Mat m(2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

std::vector<Mat> qubitEffects(const Mat& observable) {
  Mat id = Mat::identity(2);
  return {(id + observable).scaled(0.5), (id - observable).scaled(0.5)};
}

std::vector<Mat> rotatedZX(double theta) {
  Mat o = pauliZ().scaled(std::cos(theta)) + pauliX().scaled(std::sin(theta));
  return qubitEffects(o);
}

Mat phiPlus() {
  return Mat::projector({1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0)});
}

Mat wernerState(double v) {
  return phiPlus().scaled(v) + Mat::identity(4).scaled((1.0 - v) / 4.0);
}

Mat classicalDiag(const std::vector<double>& weights) {
  Mat m(static_cast<int>(weights.size()));
  for (size_t i = 0; i < weights.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = weights[i];
  return m;
}

Mat classicalCopy(const std::vector<double>& weights) {
  int d = static_cast<int>(weights.size());
  Mat m(d * d);
  for (int i = 0; i < d; ++i) m(i * d + i, i * d + i) = weights[i];
  return m;
}

namespace {

constexpr int kMaxTotalDim = 4096;

struct Evaluator {
  const CausalGraph& g;
  const NetworkStrategy& st;

  std::vector<int> dims;                       // global factor dims
  std::vector<std::vector<int>> digits;        // digits[f][globalIndex]
  std::map<std::pair<int, int>, int> slotOf;   // (source, factor) -> global slot
  Mat rho;
  int D = 1;

  explicit Evaluator(const CausalGraph& g_, const NetworkStrategy& st_) : g(g_), st(st_) {
    for (size_t s = 0; s < st.sources.size(); ++s) {
      const Source& src = st.sources[s];
      int sdim = 1;
      for (size_t f = 0; f < src.factorDims.size(); ++f) {
        slotOf[{static_cast<int>(s), static_cast<int>(f)}] = static_cast<int>(dims.size());
        dims.push_back(src.factorDims[f]);
        sdim *= src.factorDims[f];
      }
      if (src.rho.dim() != sdim)
        throw QuantumError("source " + src.latent + ": state dimension mismatch");
      if (std::abs(src.rho.trace() - Complex(1.0)) > 1e-9)
        throw QuantumError("source " + src.latent + ": state is not normalized");
      D *= sdim;
      if (D > kMaxTotalDim) throw QuantumError("total Hilbert space dimension too large");
      rho = s == 0 ? src.rho : kron(rho, src.rho);
    }
    if (st.sources.empty()) rho = Mat::identity(1);
    digits.assign(dims.size(), std::vector<int>(D));
    for (int i = 0; i < D; ++i) {
      int rem = i;
      for (size_t f = dims.size(); f-- > 0;) {
        digits[f][i] = rem % dims[f];
        rem /= dims[f];
      }
    }
  }

  std::vector<int> nodeSlots(const std::string& node) const {
    auto it = st.wiring.find(node);
    if (it == st.wiring.end()) throw QuantumError("no wiring for node " + node);
    std::vector<int> slots;
    for (auto& [s, f] : it->second) {
      auto jt = slotOf.find({s, f});
      if (jt == slotOf.end()) throw QuantumError("bad wiring for node " + node);
      slots.push_back(jt->second);
    }
    return slots;
  }

  const std::vector<Mat>& povmFor(const std::string& node,
                                  const std::map<std::string, int>& parentValues) const {
    auto it = st.responses.find(node);
    if (it == st.responses.end()) throw QuantumError("no response for node " + node);
    std::vector<int> key;
    for (auto& p : it->second.parentOrder) {
      auto v = parentValues.find(p);
      if (v == parentValues.end())
        throw QuantumError("missing parent value " + p + " for node " + node);
      key.push_back(v->second);
    }
    auto jt = it->second.povms.find(key);
    if (jt == it->second.povms.end())
      throw QuantumError("no POVM registered for node " + node + " at this parent assignment");
    return jt->second;
  }

  // probability of `outcome` for the measured nodes, with each node's POVM
  // chosen through `parentValues`
  double probability(const std::vector<std::string>& measured,
                     const std::vector<int>& outcome,
                     const std::map<std::string, int>& parentValues) const {
    std::vector<std::vector<int>> slots;
    std::vector<const Mat*> effects;
    std::vector<bool> slotMeasured(dims.size(), false);
    for (size_t n = 0; n < measured.size(); ++n) {
      auto sl = nodeSlots(measured[n]);
      const auto& povm = povmFor(measured[n], parentValues);
      if (outcome[n] < 0 || outcome[n] >= static_cast<int>(povm.size()))
        throw QuantumError("outcome out of range for node " + measured[n]);
      int edim = 1;
      for (int s : sl) {
        if (slotMeasured[s]) throw QuantumError("wiring overlap at node " + measured[n]);
        slotMeasured[s] = true;
        edim *= dims[s];
      }
      if (povm[outcome[n]].dim() != edim)
        throw QuantumError("effect dimension mismatch at node " + measured[n]);
      slots.push_back(std::move(sl));
      effects.push_back(&povm[outcome[n]]);
    }

    auto subIndex = [&](const std::vector<int>& sl, int global) {
      int idx = 0;
      for (int s : sl) idx = idx * dims[s] + digits[s][global];
      return idx;
    };

    // Tr(rho * O) with O = tensor of effects on their slots, identity elsewhere
    Complex total = 0;
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) {
        Complex r = rho(i, j);
        if (r == 0.0) continue;
        bool ok = true;
        for (size_t f = 0; f < dims.size(); ++f)
          if (!slotMeasured[f] && digits[f][i] != digits[f][j]) { ok = false; break; }
        if (!ok) continue;
        Complex o = 1.0;
        for (size_t n = 0; n < effects.size() && o != 0.0; ++n)
          o *= (*effects[n])(subIndex(slots[n], j), subIndex(slots[n], i));
        total += r * o;
      }
    if (std::abs(total.imag()) > 1e-8)
      throw QuantumError("Born probability came out non-real");
    return total.real();
  }
};

// snap every entry into Q(sqrt 2); on failure fall back to float entries
void fillSnapped(DataTable& t, const std::vector<double>& values) {
  std::vector<Scalar> snapped;
  bool exact = true;
  for (double v : values) {
    auto s = Scalar::snap(v);
    if (!s) { exact = false; break; }
    snapped.push_back(*s);
  }
  if (exact) {
    t.raw() = std::move(snapped);
  } else {
    t.raw().clear();
    for (double v : values) t.raw().push_back(Scalar(Rat(v)));
    t.markInexact();
  }
}

DataTable tableFor(const CausalGraph& g, const NetworkStrategy& st,
                   const std::string& cutTarget, int cutValue) {
  Evaluator ev(g, st);
  std::vector<Var> vars;
  for (auto& name : g.observed())
    if (name != cutTarget) vars.push_back(Var{name, g.node(name).card});
  std::vector<std::string> measured;
  for (auto& v : vars) measured.push_back(v.name);

  DataTable out(vars);
  std::vector<double> values;
  std::vector<int> o(vars.size(), 0);
  while (true) {
    std::map<std::string, int> parentValues;
    for (size_t i = 0; i < vars.size(); ++i) parentValues[vars[i].name] = o[i];
    if (!cutTarget.empty()) parentValues[cutTarget] = cutValue;
    values.push_back(ev.probability(measured, o, parentValues));
    size_t i = o.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++o[i] < vars[i].card) { done = false; break; }
      o[i] = 0;
    }
    if (done) break;
  }
  double sum = 0;
  for (double v : values) sum += v;
  if (std::abs(sum - 1.0) > 1e-8) throw QuantumError("strategy table does not normalize");
  fillSnapped(out, values);
  return out;
}

} // namespace

DataTable bornTable(const CausalGraph& g, const NetworkStrategy& st) {
  return tableFor(g, st, "", 0);
}

DataTable doTable(const CausalGraph& g, const NetworkStrategy& st,
                  const std::string& target, int value) {
  if (g.node(target).kind != NodeKind::Observed)
    throw QuantumError("cut target must be an observed node: " + target);
  return tableFor(g, st, target, value);
}

HybridDataset hybridFromStrategy(const CausalGraph& g, const NetworkStrategy& st,
                                 const std::vector<std::string>& targets) {
  HybridDataset out;
  out.observational = bornTable(g, st);
  for (auto& t : targets)
    for (int v = 0; v < g.node(t).card; ++v)
      out.interventions[doKey(t, v)] = doTable(g, st, t, v);
  return out;
}

} // namespace fusion
