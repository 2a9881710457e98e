#include "fusion/witness.hpp"

namespace fusion {

Atom obsAtom(std::map<std::string, int> assign) {
  Atom a;
  a.kind = Atom::Kind::Observational;
  a.assign = std::move(assign);
  return a;
}

Atom doAtom(DoKey cut, std::map<std::string, int> assign) {
  Atom a;
  a.kind = Atom::Kind::Do;
  a.cut = std::move(cut);
  a.assign = std::move(assign);
  return a;
}

Atom extAtom(std::map<std::string, int> assign) {
  Atom a;
  a.kind = Atom::Kind::Extended;
  a.assign = std::move(assign);
  return a;
}

Scalar atomValue(const Atom& a, const WitnessInput& in) {
  switch (a.kind) {
    case Atom::Kind::Observational:
      if (!in.hybrid) throw MissingTable("no observational table supplied");
      return in.hybrid->observational.prob(a.assign);
    case Atom::Kind::Do: {
      if (!in.hybrid) throw MissingTable("no post-intervention tables supplied");
      auto it = in.hybrid->interventions.find(a.cut);
      if (it == in.hybrid->interventions.end()) {
        std::string label;
        for (auto& [t, v] : a.cut) label += t + "=" + std::to_string(v) + " ";
        throw MissingTable("no table for do(" + label + ")");
      }
      return it->second.prob(a.assign);
    }
    case Atom::Kind::Extended:
      if (!in.extended) throw MissingTable("no extended table supplied");
      return in.extended->prob(a.assign);
  }
  throw WitnessError("unreachable");
}

Scalar evaluateTerms(const std::vector<Term>& terms, const WitnessInput& in) {
  Scalar total(0);
  for (const Term& t : terms) {
    Scalar v = t.coeff;
    for (const Atom& f : t.factors) v *= atomValue(f, in);
    for (const Atom& d : t.divisors) {
      Scalar den = atomValue(d, in);
      if (den.sign() == 0) throw DivisorZero("ratio coefficient with zero divisor");
      v /= den;
    }
    total += v;
  }
  return total;
}

WitnessVerdict evaluate(const WitnessExpr& w, const WitnessInput& in) {
  WitnessVerdict out;
  out.value = evaluateTerms(w.terms, in);
  out.slack = w.cmp == Cmp::Leq ? w.bound - out.value : out.value - w.bound;
  out.satisfied = out.slack.sign() >= 0;
  return out;
}

WitnessVerdict evaluate(const WitnessExpr& w, const HybridDataset& data) {
  WitnessInput in;
  in.hybrid = &data;
  return evaluate(w, in);
}

WitnessVerdict evaluate(const WitnessExpr& w, const DataTable& extendedQ) {
  WitnessInput in;
  in.extended = &extendedQ;
  return evaluate(w, in);
}

WitnessVerdict guardedEvaluate(const WitnessExpr& w, const WitnessInput& in) {
  std::vector<std::string> broken;
  for (const Guard& g : w.guards) {
    Scalar lhs(0), rhs = g.shift;
    for (const Atom& a : g.lhs) lhs += atomValue(a, in);
    for (const Atom& a : g.rhs) rhs += atomValue(a, in);
    if (lhs != rhs) broken.push_back(g.label);
  }
  if (!broken.empty())
    throw GuardFailed("support conditions do not hold for witness " + w.key, broken);
  return evaluate(w, in);
}

Scalar evaluatePart(const WitnessExpr& w, const std::string& part, const WitnessInput& in) {
  auto it = w.parts.find(part);
  if (it == w.parts.end())
    throw UnknownWitness("witness " + w.key + " has no part named " + part);
  return evaluateTerms(it->second, in);
}

}  // namespace fusion
