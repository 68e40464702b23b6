#include "gct/trace_logic.hpp"

#include "gct/dist_law.hpp"
#include "gct/logic_eval.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gct {

TraceLogicInstance quantitative_trace_instance() {
  TraceLogicInstance inst;
  inst.name = "quantitative";
  inst.ops.push_back({"T", 0, [](const std::vector<Rational>&) { return Rational(1); }});
  for (long num = 1; num <= 3; ++num) {
    Rational p = rat(num, 4);
    inst.ops.push_back({"+_{" + format_rational(p) + "}", 2,
                        [p](const std::vector<Rational>& v) {
                          return Rational(p * v[0] + (1 - p) * v[1]);
                        }});
  }
  return inst;
}

TraceLogicInstance with_boolean_and(TraceLogicInstance base) {
  base.name += "+and";
  base.ops.push_back({"and", 2, [](const std::vector<Rational>& v) {
                        return v[0] <= v[1] ? v[0] : v[1];
                      }});
  return base;
}

namespace {

Rational expectation(const FinDist<Rational, Rational>& d) {
  Rational s(0);
  for (const auto& [v, w] : d.atoms()) s += v * w;
  return s;
}

std::string rat_ket(const FinDist<Rational, Rational>& d) {
  return ket(d, [](const Rational& v) { return format_rational(v); });
}

using Pair = std::pair<Rational, Rational>;

std::string pair_ket(const FinDist<Pair, Rational>& d) {
  return ket(d, [](const Pair& v) {
    return "(" + format_rational(v.first) + "," + format_rational(v.second) + ")";
  });
}

FinDist<LabelWord, Rational> mix(const Rational& w, const FinDist<LabelWord, Rational>& a,
                                 const FinDist<LabelWord, Rational>& b) {
  FinDist<LabelWord, Rational> out = a;
  out.scale(w);
  for (const auto& [x, q] : b.atoms()) out.add(x, (1 - w) * q);
  return out;
}

// Unit and multiplication of expectation as an algebra on exact values,
// plus the splitting identities of the unit.
CheckReport algebra_laws(const std::vector<Rational>& values, const std::vector<Rational>& grid) {
  CheckReport rep;
  for (const Rational& v : values) {
    ++rep.cases;
    if (expectation(FinDist<Rational, Rational>::dirac(v)) != v)
      rep.fail("expectation of the point distribution at " + format_rational(v) +
               " is not " + format_rational(v));
  }

  const auto dists = enumerate_grid_dists(values, grid);
  for (const auto& d : dists) {
    ++rep.cases;
    FinDist<FinDist<Rational, Rational>, Rational> eta_d =
        FinDist<FinDist<Rational, Rational>, Rational>::dirac(d);
    if (flatten(eta_d) != d) rep.fail("flatten of the point distribution at " + rat_ket(d));
    if (flatten(d.map([](const Rational& v) { return FinDist<Rational, Rational>::dirac(v); })) !=
        d)
      rep.fail("flatten after pointwise units differs from the identity at " + rat_ket(d));
  }

  const std::vector<Rational> mixes = {rat(1, 4), rat(1, 2), rat(3, 4)};
  for (std::size_t i = 0; i < dists.size(); ++i)
    for (std::size_t j = i; j < dists.size(); ++j)
      for (const Rational& w : mixes) {
        ++rep.cases;
        FinDist<FinDist<Rational, Rational>, Rational> xi;
        xi.add(dists[i], w);
        xi.add(dists[j], 1 - w);
        Rational via_flatten = expectation(flatten(xi));
        Rational via_lift(0);
        for (const auto& [d, q] : xi.atoms()) via_lift += q * expectation(d);
        if (via_flatten != via_lift)
          rep.fail("expectation does not commute with flatten at a mixture of " +
                   rat_ket(dists[i]) + " and " + rat_ket(dists[j]));
      }
  rep.notes.push_back("algebra laws: " + std::to_string(rep.cases) + " exact cases");
  return rep;
}

// An op commutes with expectation iff it is affine; checked over enumerated
// joint distributions on pairs of values.
CheckReport op_homomorphism(const PropOp& op, const std::vector<Rational>& values,
                            const std::vector<Rational>& grid) {
  CheckReport rep;
  if (op.arity == 0) {
    ++rep.cases;
    return rep;  // a constant commutes trivially
  }
  if (op.arity == 1) {
    const auto dists = enumerate_grid_dists(values, grid);
    for (const auto& d : dists) {
      ++rep.cases;
      Rational lhs(0);
      for (const auto& [v, w] : d.atoms()) lhs += w * op.apply({v});
      Rational rhs = op.apply({expectation(d)});
      if (lhs != rhs)
        rep.fail("op " + op.name + ": E[op] = " + format_rational(lhs) + " but op(E) = " +
                 format_rational(rhs) + " at " + rat_ket(d));
    }
    return rep;
  }
  if (op.arity != 2) throw std::invalid_argument("op arity above 2 is not supported");

  std::vector<Pair> tuples;
  for (const Rational& u : values)
    for (const Rational& v : values) tuples.emplace_back(u, v);
  const auto joints = enumerate_grid_dists(tuples, grid);
  for (const auto& xi : joints) {
    ++rep.cases;
    Rational lhs(0), eu(0), ev(0);
    for (const auto& [t, w] : xi.atoms()) {
      lhs += w * op.apply({t.first, t.second});
      eu += w * t.first;
      ev += w * t.second;
    }
    Rational rhs = op.apply({eu, ev});
    if (lhs != rhs)
      rep.fail("op " + op.name + ": E[op] = " + format_rational(lhs) + " but op(E,E) = " +
               format_rational(rhs) + " at " + pair_ket(xi));
  }
  return rep;
}

// The label-read and time clauses must be linear over mixtures; this is the
// compatibility of the modalities with the expectation structure.
CheckReport modal_linearity(const std::vector<Rational>& grid) {
  CheckReport rep;
  const std::vector<std::string> labels = {"a", "b"};
  std::vector<LabelWord> words;
  for (const LawWord& w : enumerate_law_words(2, 2)) {
    LabelWord lw;
    for (int c : w) lw.push_back(static_cast<char>(c));
    words.push_back(lw);
  }

  std::vector<Formula> probes;
  probes.push_back(f_top());
  probes.push_back(f_obs("a", f_top()));
  probes.push_back(f_obs("b", f_top()));
  probes.push_back(f_obs("a", f_obs("b", f_top())));
  probes.push_back(f_time(rat(1), f_obs("a", f_top())));
  probes.push_back(f_plus(rat(1, 2), f_obs("a", f_top()), f_obs("b", f_top())));

  auto all = enumerate_grid_dists(words, grid);
  // Deterministic thinning keeps the exact suite fast.
  std::vector<FinDist<LabelWord, Rational>> dists;
  std::size_t stride = all.size() > 60 ? all.size() / 60 : 1;
  for (std::size_t i = 0; i < all.size(); i += stride) dists.push_back(all[i]);
  if (stride > 1)
    rep.notes.push_back("modal linearity: thinned " + std::to_string(all.size()) +
                        " word distributions to " + std::to_string(dists.size()));

  const std::vector<Rational> mixes = {rat(1, 4), rat(1, 2), rat(3, 4)};
  for (const Formula& f : probes) {
    for (std::size_t i = 0; i < dists.size(); ++i)
      for (std::size_t j = i; j < dists.size(); ++j)
        for (const Rational& w : mixes) {
          ++rep.cases;
          Rational lhs = trace_formula_value<Rational>(f, mix(w, dists[i], dists[j]), labels);
          Rational rhs = w * trace_formula_value<Rational>(f, dists[i], labels) +
                         (1 - w) * trace_formula_value<Rational>(f, dists[j], labels);
          if (lhs != rhs)
            rep.fail("clause for " + print_formula(f) + " is not linear at a mixture of " +
                     ket(dists[i], [&](const LabelWord& u) { return label_word_str(u, labels); }) +
                     " and " +
                     ket(dists[j], [&](const LabelWord& u) { return label_word_str(u, labels); }));
        }
  }
  return rep;
}

}  // namespace

CheckReport trace_logic_axiom_check(const TraceLogicInstance& inst) {
  const std::vector<Rational> values = {rat(0), rat(1, 4), rat(1, 2), rat(3, 4), rat(1)};
  const std::vector<Rational> small_values = {rat(0), rat(1, 2), rat(1)};
  const std::vector<Rational> grid = {rat(0), rat(1, 4), rat(1, 2), rat(3, 4), rat(1)};

  CheckReport rep = algebra_laws(values, grid);
  for (const PropOp& op : inst.ops) {
    CheckReport r = op_homomorphism(op, small_values, grid);
    r.notes.push_back("op " + op.name + ": " + std::to_string(r.cases) + " exact cases");
    rep.merge(r);
  }
  rep.merge(modal_linearity(grid));
  return rep;
}

CheckReport factorization_check(WordGradedKernel& k, const std::vector<Formula>& formulas,
                                double tol) {
  CheckReport rep;
  const LabelledModel& m = k.model();
  for (const Formula& f : formulas) {
    DepthResult d = uniform_depth(f);
    if (!d.depth)
      throw std::invalid_argument("formula lacks uniform depth at " + d.offending);
    std::vector<double> inductive = eval_quantitative_all(k, f);
    for (int x = 0; x < m.n_states(); ++x) {
      FinDist<LabelWord, double> tr = trace_vector(k, x, *d.depth);
      double via_trace = trace_formula_value<double>(f, tr, m.labels);
      double residual = std::abs(inductive[static_cast<std::size_t>(x)] - via_trace);
      ++rep.cases;
      rep.observe(residual);
      if (residual > tol) {
        std::ostringstream os;
        os << print_formula(f) << " at state " << m.states[static_cast<std::size_t>(x)]
           << ": inductive " << format_double(inductive[static_cast<std::size_t>(x)])
           << " vs trace " << format_double(via_trace);
        rep.fail(os.str());
      }
    }
  }
  return rep;
}

}  // namespace gct
