#include "fusion/strategies.hpp"

#include <cmath>

namespace fusion {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double param(const std::map<std::string, double>& params, const std::string& key,
             double fallback) {
  auto it = params.find(key);
  double val = it == params.end() ? fallback : it->second;
  if (val < 0.0 || val > 1.0)
    throw ParamOutOfRange("parameter " + key + " must lie in [0,1]");
  return val;
}

Mat obs(double zWeight, double xWeight, double yWeight = 0.0) {
  return pauliZ().scaled(zWeight) + pauliX().scaled(xWeight) + pauliY().scaled(yWeight);
}

// projector |v><v| on a classical register of dimension d
Mat basisProj(int d, int v) {
  Mat m(d);
  m(v, v) = 1.0;
  return m;
}

// effects of a node reading off its own classical register
std::vector<Mat> readout(int d) {
  std::vector<Mat> out;
  for (int v = 0; v < d; ++v) out.push_back(basisProj(d, v));
  return out;
}

// qubit effect kron'd with classical-control projectors: sum over control
// values of |g><g| x E^{(g)}, with the control occupying `slot` 0 or 1.
std::vector<Mat> controlledQubit(const std::vector<std::vector<Mat>>& byControl,
                                 bool controlFirst) {
  size_t outcomes = byControl[0].size();
  std::vector<Mat> out;
  for (size_t o = 0; o < outcomes; ++o) {
    Mat e(4);
    for (int g = 0; g < static_cast<int>(byControl.size()); ++g) {
      Mat term = controlFirst ? kron(basisProj(2, g), byControl[g][o])
                              : kron(byControl[g][o], basisProj(2, g));
      e = e + term;
    }
    out.push_back(e);
  }
  return out;
}

PaperStrategy fig1aChsh() {
  PaperStrategy s;
  s.id = "fig1a-chsh";
  s.scene = scenario("fig1a");
  s.cutTargets = {"A"};
  NetworkStrategy& n = s.network;
  n.sources.push_back(Source{"gamma", classicalCopy({0.5, 0.5}), {2, 2}});
  n.sources.push_back(Source{"alpha", phiPlus(), {2, 2}});
  n.wiring["A"] = {{0, 0}};
  n.wiring["B"] = {{0, 1}, {1, 0}};
  n.wiring["C"] = {{1, 1}};
  n.responses["A"] = Response{{}, {{{}, readout(2)}}};
  // B measures sigma_z for bit 0 and sigma_x for bit 1 on its entangled half
  n.responses["B"] = Response{
      {}, {{{}, controlledQubit({qubitEffects(pauliZ()), qubitEffects(pauliX())}, true)}}};
  n.responses["C"] =
      Response{{"A"},
               {{{0}, qubitEffects(obs(kInvSqrt2, kInvSqrt2))},
                {{1}, qubitEffects(obs(kInvSqrt2, -kInvSqrt2))}}};
  return s;
}

PaperStrategy bonet() {
  PaperStrategy s;
  s.id = "bonet";
  s.scene = scenario("fig3a");
  s.cutTargets = {"A"};
  NetworkStrategy& n = s.network;
  n.sources.push_back(Source{"gamma", classicalCopy({0.5, 0.5}), {2, 2}});
  n.sources.push_back(Source{"alpha", phiPlus(), {2, 2}});
  n.wiring["A"] = {{0, 0}};
  n.wiring["B"] = {{0, 1}, {1, 0}};
  n.wiring["C"] = {{1, 1}};
  n.responses["A"] = Response{{}, {{{}, readout(2)}}};
  // settings by (shared bit, received value); (0,0) is never scored by the
  // three-setting inequality, any completion works
  auto bSetting = [&](int g, int recv) {
    if (g == 0 && recv == 1) return qubitEffects(pauliX());
    if (g == 1 && recv == 0) return qubitEffects(pauliZ());
    if (g == 1 && recv == 1) return qubitEffects(obs(-kInvSqrt2, -kInvSqrt2));
    return qubitEffects(pauliX());
  };
  n.responses["B"] =
      Response{{"A"},
               {{{0}, controlledQubit({bSetting(0, 0), bSetting(1, 0)}, true)},
                {{1}, controlledQubit({bSetting(0, 1), bSetting(1, 1)}, true)}}};
  n.responses["C"] =
      Response{{"B"},
               {{{0}, qubitEffects(obs(kInvSqrt2, kInvSqrt2))},
                {{1}, qubitEffects(obs(-kInvSqrt2, kInvSqrt2))}}};
  return s;
}

PaperStrategy theorem1(double v) {
  PaperStrategy s;
  s.id = "theorem1";
  s.scene = scenario("evans-uc");
  s.cutTargets = {"B"};
  NetworkStrategy& n = s.network;
  n.sources.push_back(Source{"gamma", wernerState(v), {2, 2}});
  n.sources.push_back(Source{"alpha", classicalCopy({0.5, 0.5}), {2, 2}});
  n.wiring["A"] = {{0, 0}};
  n.wiring["B"] = {{0, 1}, {1, 0}};
  n.wiring["C"] = {{1, 1}};
  n.responses["A"] = Response{{"B"},
                              {{{0}, qubitEffects(pauliX())},
                               {{1}, qubitEffects(pauliZ())}}};
  // B's setting comes from the classical bit it shares with C
  n.responses["B"] = Response{
      {}, {{{}, controlledQubit({qubitEffects(obs(kInvSqrt2, kInvSqrt2)),
                                 qubitEffects(obs(-kInvSqrt2, kInvSqrt2))}, false)}}};
  n.responses["C"] = Response{{}, {{{}, readout(2)}}};
  return s;
}

PaperStrategy theorem2() {
  PaperStrategy s;
  s.id = "theorem2";
  s.scene = scenario("measurement-dependence");
  s.cutTargets = {"A", "B"};
  NetworkStrategy& n = s.network;
  // |psi> = e^{-i pi/8}/sqrt2 |0>|psi-> + e^{i pi/8}/sqrt2 |1>|theta+>
  const double ph = M_PI / 8.0;
  Complex em(std::cos(ph), -std::sin(ph)), ep(std::cos(ph), std::sin(ph));
  std::vector<Complex> psi(8, 0.0);
  psi[0b001] = em / 2.0;
  psi[0b010] = -em / 2.0;
  psi[0b101] = ep / 2.0;
  psi[0b110] = ep * Complex(0, 1) / 2.0;
  n.sources.push_back(Source{"lambda", Mat::projector(psi), {2, 2, 2}});
  n.wiring["A"] = {{0, 0}};
  n.wiring["B"] = {{0, 1}};
  n.wiring["C"] = {{0, 2}};
  n.responses["A"] = Response{{}, {{{}, qubitEffects(pauliX())}}};
  auto tilt = [&](int p) { return qubitEffects(obs(0.0, kInvSqrt2, p ? -kInvSqrt2 : kInvSqrt2)); };
  n.responses["B"] = Response{{"A"}, {{{0}, tilt(0)}, {{1}, tilt(1)}}};
  n.responses["C"] = Response{{"B"}, {{{0}, tilt(0)}, {{1}, tilt(1)}}};
  return s;
}

std::vector<Mat> swapEffects() {
  Mat p = phiPlus();
  return {p, Mat::identity(4) - p};
}

PaperStrategy bilocalSwap() {
  PaperStrategy s;
  s.id = "bilocal-swap";
  s.scene = scenario("bilocal-chain");
  s.cutTargets = {"A", "B"};
  NetworkStrategy& n = s.network;
  n.sources.push_back(Source{"gamma", phiPlus(), {2, 2}}); // A's half first
  n.sources.push_back(Source{"alpha", phiPlus(), {2, 2}});
  n.wiring["A"] = {{0, 0}, {1, 0}};
  n.wiring["B"] = {{0, 1}};
  n.wiring["C"] = {{1, 1}};
  n.responses["A"] = Response{{}, {{{}, swapEffects()}}};
  n.responses["B"] = Response{{"A"},
                              {{{0}, qubitEffects(pauliX())},
                               {{1}, qubitEffects(pauliZ())}}};
  n.responses["C"] =
      Response{{"B"},
               {{{0}, qubitEffects(obs(kInvSqrt2, kInvSqrt2))},
                {{1}, qubitEffects(obs(kInvSqrt2, -kInvSqrt2))}}};
  return s;
}

PaperStrategy bilocalFritz() {
  PaperStrategy s;
  s.id = "bilocal-fritz";
  s.scene = scenario("bilocal-chain");
  s.cutTargets = {"A", "B"};
  NetworkStrategy& n = s.network;
  n.sources.push_back(Source{"gamma", phiPlus(), {2, 2}});
  n.sources.push_back(Source{"alpha", classicalCopy({0.5, 0.5}), {2, 2}});
  n.wiring["A"] = {{0, 0}, {1, 0}};
  n.wiring["B"] = {{0, 1}};
  n.wiring["C"] = {{1, 1}};
  n.responses["A"] = Response{
      {}, {{{}, controlledQubit({qubitEffects(obs(kInvSqrt2, kInvSqrt2)),
                                 qubitEffects(obs(-kInvSqrt2, kInvSqrt2))}, false)}}};
  n.responses["B"] = Response{{"A"},
                              {{{0}, qubitEffects(pauliX())},
                               {{1}, qubitEffects(pauliZ())}}};
  n.responses["C"] = Response{{}, {{{}, readout(2)}}};
  return s;
}

PaperStrategy bilocalMix(double xi) {
  PaperStrategy s;
  s.id = "bilocal-mix";
  s.scene = scenario("bilocal-chain");
  s.cutTargets = {"A", "B"};
  NetworkStrategy& n = s.network;
  n.sources.push_back(Source{"gamma", phiPlus(), {2, 2}});       // A, B
  n.sources.push_back(Source{"alpha", phiPlus(), {2, 2}});       // A, C qubits
  n.sources.push_back(Source{"alpha", classicalCopy({0.5, 0.5}), {2, 2}}); // beta bit
  n.sources.push_back(Source{"alpha", classicalCopy({xi, 1.0 - xi}), {2, 2}}); // mix bit
  n.wiring["A"] = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  n.wiring["B"] = {{0, 1}};
  n.wiring["C"] = {{1, 1}, {2, 1}, {3, 1}};
  // A's register order: (qubit shared with B) x (qubit to C) x beta x mix
  std::vector<Mat> ea;
  for (int a = 0; a < 2; ++a) {
    Mat swapPart = kron(kron(swapEffects()[a], Mat::identity(2)), basisProj(2, 0));
    Mat fritzPart(16);
    for (int beta = 0; beta < 2; ++beta) {
      Mat rot = qubitEffects(obs(beta ? -kInvSqrt2 : kInvSqrt2, kInvSqrt2))[a];
      fritzPart = fritzPart +
                  kron(kron(kron(rot, Mat::identity(2)), basisProj(2, beta)), basisProj(2, 1));
    }
    ea.push_back(swapPart + fritzPart);
  }
  n.responses["A"] = Response{{}, {{{}, ea}}};
  n.responses["B"] = Response{{"A"},
                              {{{0}, qubitEffects(pauliX())},
                               {{1}, qubitEffects(pauliZ())}}};
  // C's register order: qubit x beta x mix
  auto cEffects = [&](int bmark) {
    std::vector<Mat> out;
    for (int c = 0; c < 2; ++c) {
      Mat rot = qubitEffects(obs(kInvSqrt2, bmark ? -kInvSqrt2 : kInvSqrt2))[c];
      Mat swapPart = kron(kron(rot, Mat::identity(2)), basisProj(2, 0));
      Mat fritzPart = kron(kron(Mat::identity(2), basisProj(2, c)), basisProj(2, 1));
      out.push_back(swapPart + fritzPart);
    }
    return out;
  };
  n.responses["C"] = Response{{"B"}, {{{0}, cEffects(0)}, {{1}, cEffects(1)}}};
  return s;
}

PaperStrategy triangleFritz(double v) {
  PaperStrategy s;
  s.id = "triangle-fritz";
  s.scene = scenario("triangle-AB", {{"C", 4}});
  s.cutTargets = {"A"};
  NetworkStrategy& n = s.network;
  n.sources.push_back(Source{"alpha", wernerState(v), {2, 2}});      // B, C
  n.sources.push_back(Source{"beta", classicalCopy({0.5, 0.5}), {2, 2}}); // A, C
  n.wiring["A"] = {{1, 0}};
  n.wiring["B"] = {{0, 0}};
  n.wiring["C"] = {{0, 1}, {1, 1}};
  n.responses["A"] = Response{{}, {{{}, readout(2)}}}; // a = y
  n.responses["B"] = Response{{"A"},
                              {{{0}, qubitEffects(pauliZ())},
                               {{1}, qubitEffects(pauliX())}}};
  // C outputs the pair (c', y) encoded as c = c' + 2y
  std::vector<Mat> ec;
  for (int y = 0; y < 2; ++y)
    for (int cp = 0; cp < 2; ++cp) {
      Mat rot = qubitEffects(obs(kInvSqrt2, y ? -kInvSqrt2 : kInvSqrt2))[cp];
      Mat e = kron(rot, basisProj(2, y));
      if (static_cast<int>(ec.size()) <= cp + 2 * y) ec.resize(cp + 2 * y + 1, Mat(4));
      ec[cp + 2 * y] = e;
    }
  n.responses["C"] = Response{{}, {{{}, ec}}};
  return s;
}

PaperStrategy coarseFritz(double v) {
  PaperStrategy s;
  s.id = "coarse-fritz";
  s.scene = scenario("triangle-AB", {{"B", 3}, {"C", 3}});
  s.cutTargets = {"A"};
  NetworkStrategy& n = s.network;
  n.sources.push_back(Source{"alpha", wernerState(v), {2, 2}});      // B, C qubits
  n.sources.push_back(Source{"beta", classicalCopy({0.5, 0.5}), {2, 2}});  // y: A, C
  n.sources.push_back(Source{"gamma", classicalCopy({0.5, 0.5}), {2, 2}}); // x: A, B
  n.wiring["A"] = {{2, 0}, {1, 0}}; // x then y
  n.wiring["B"] = {{2, 1}, {0, 0}}; // x copy then qubit
  n.wiring["C"] = {{0, 1}, {1, 1}}; // qubit then y copy
  std::vector<Mat> ea(2, Mat(4));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      ea[x * y] = ea[x * y] + kron(basisProj(2, x), basisProj(2, y));
  n.responses["A"] = Response{{}, {{{}, ea}}};
  // b = x(b'+1) with sigma_x measured at x = 1
  std::vector<Mat> eb = {kron(basisProj(2, 0), Mat::identity(2)),
                         kron(basisProj(2, 1), qubitEffects(pauliX())[0]),
                         kron(basisProj(2, 1), qubitEffects(pauliX())[1])};
  n.responses["B"] = Response{{}, {{{}, eb}}};
  // c = y(c'+1) with (sigma_z - sigma_x)/sqrt2 measured at y = 1
  auto rot1 = qubitEffects(obs(kInvSqrt2, -kInvSqrt2));
  std::vector<Mat> ec = {kron(Mat::identity(2), basisProj(2, 0)),
                         kron(rot1[0], basisProj(2, 1)),
                         kron(rot1[1], basisProj(2, 1))};
  n.responses["C"] = Response{{}, {{{}, ec}}};
  return s;
}

PaperStrategy chainChsh() {
  PaperStrategy s;
  s.id = "chain-chsh";
  s.scene = scenario("triangle-chain");
  s.cutTargets = {"A", "B"};
  NetworkStrategy& n = s.network;
  n.sources.push_back(Source{"alpha", phiPlus(), {2, 2}}); // B, C
  // the bits from gamma and beta are only ever read by A
  n.sources.push_back(Source{"gamma", classicalDiag({0.5, 0.5}), {2}});
  n.sources.push_back(Source{"beta", classicalDiag({0.5, 0.5}), {2}});
  n.wiring["A"] = {{1, 0}, {2, 0}};
  n.wiring["B"] = {{0, 0}};
  n.wiring["C"] = {{0, 1}};
  std::vector<Mat> ea(2, Mat(4));
  for (int g = 0; g < 2; ++g)
    for (int h = 0; h < 2; ++h)
      ea[g ^ h] = ea[g ^ h] + kron(basisProj(2, g), basisProj(2, h));
  n.responses["A"] = Response{{}, {{{}, ea}}};
  n.responses["B"] = Response{{"A"},
                              {{{0}, qubitEffects(pauliX())},
                               {{1}, qubitEffects(pauliZ())}}};
  n.responses["C"] =
      Response{{"B"},
               {{{0}, qubitEffects(obs(kInvSqrt2, kInvSqrt2))},
                {{1}, qubitEffects(obs(-kInvSqrt2, kInvSqrt2))}}};
  return s;
}

} // namespace

PaperStrategy paperStrategy(const std::string& id,
                            const std::map<std::string, double>& params) {
  if (id == "fig1a-chsh") return fig1aChsh();
  if (id == "bonet") return bonet();
  if (id == "theorem1") return theorem1(param(params, "v", 1.0));
  if (id == "theorem2") return theorem2();
  if (id == "bilocal-swap") return bilocalSwap();
  if (id == "bilocal-fritz") return bilocalFritz();
  if (id == "bilocal-mix") return bilocalMix(param(params, "xi", 0.5));
  if (id == "triangle-fritz") return triangleFritz(param(params, "v", 1.0));
  if (id == "coarse-fritz") return coarseFritz(param(params, "v", 1.0));
  if (id == "chain-chsh") return chainChsh();
  throw UnknownStrategy("unknown strategy id: " + id);
}

std::vector<std::string> strategyIds() {
  return {"fig1a-chsh", "bonet",         "theorem1",      "theorem2",
          "bilocal-swap", "bilocal-fritz", "bilocal-mix",   "triangle-fritz",
          "coarse-fritz", "chain-chsh"};
}

DataTable theorem1ClassicalTable() {
  const Scalar s2 = Scalar::sqrt2();
  // source weights over pairs (value used when B=0, value used when B=1)
  std::map<std::pair<int, int>, Scalar> qGamma, qAlpha;
  qGamma[{0, 0}] = (Scalar(6) + Scalar(5) * s2) / Scalar(32);
  qGamma[{1, 0}] = Scalar(3) * (Scalar(2) - s2) / Scalar(16);
  qGamma[{0, 1}] = (Scalar(14) + s2) / Scalar(32);
  // the alpha-source labels run in the opposite orientation to the gamma ones
  qAlpha[{0, 0}] = (Scalar(8) * s2 - Scalar(11)) / Scalar(14);
  qAlpha[{0, 1}] = Scalar(3) / Scalar(7) * (Scalar(30) - Scalar(11) * s2) / (Scalar(14) + s2);
  qAlpha[{1, 0}] = Scalar::frac(1, 2);
  qAlpha[{1, 1}] = Scalar(2) * (Scalar(2) - s2) / (Scalar(14) + s2);

  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Scalar> b0;
  auto key = [](int g0, int g1, int a0, int a1) {
    return std::make_pair(std::make_pair(g0, g1), std::make_pair(a0, a1));
  };
  b0[key(0, 0, 0, 0)] = Scalar(1);
  b0[key(0, 1, 0, 0)] = Scalar(1);
  b0[key(0, 1, 0, 1)] = Scalar(1);
  b0[key(1, 0, 0, 0)] = Scalar(1);
  b0[key(0, 0, 0, 1)] = Scalar(0);
  b0[key(0, 0, 1, 1)] = Scalar(0);
  b0[key(0, 1, 1, 1)] = Scalar(0);
  b0[key(1, 0, 1, 1)] = Scalar(0);
  b0[key(1, 0, 1, 0)] = Scalar::frac(2, 3);
  b0[key(0, 0, 1, 0)] = (Scalar(29) - Scalar(16) * s2) / Scalar(7);
  b0[key(0, 1, 1, 0)] = Scalar(3) * (Scalar(2) - s2) / (Scalar(14) + s2);
  b0[key(1, 0, 0, 1)] =
      (Scalar(610) - Scalar(289) * s2) / (Scalar(18) * (Scalar(30) - Scalar(11) * s2));

  DataTable p({Var{"A", 2}, Var{"B", 2}, Var{"C", 2}});
  for (auto& [g, wg] : qGamma)
    for (auto& [al, wa] : qAlpha) {
      Scalar pb0 = b0.at({g, al});
      // b = 0 branch: a = gamma_0, c = alpha_0
      p.at({g.first, 0, al.first}) += wg * wa * pb0;
      // b = 1 branch: a = gamma_1, c = alpha_1
      p.at({g.second, 1, al.second}) += wg * wa * (Scalar(1) - pb0);
    }
  return p;
}

} // namespace fusion
