#include "gct/lumping.hpp"

#include "gct/kernel.hpp"

#include <map>
#include <stdexcept>

namespace gct {

namespace {

// Reassign block ids in order of first occurrence.
Partition canonicalize(const Partition& raw) {
  Partition out(raw.size(), -1);
  std::map<int, int> seen;
  int next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, fresh] = seen.emplace(raw[i], next);
    if (fresh) ++next;
    out[i] = it->second;
  }
  return out;
}

int block_count(const Partition& p) {
  int n = 0;
  for (int b : p) n = std::max(n, b + 1);
  return n;
}

}  // namespace

std::string partition_str(const Partition& p, const std::vector<std::string>& names) {
  const int blocks = block_count(p);
  std::string s;
  for (int b = 0; b < blocks; ++b) {
    if (!s.empty()) s += " ";
    s += "{";
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] == b) {
        if (!first) s += ",";
        s += names.at(i);
        first = false;
      }
    s += "}";
  }
  return s;
}

LumpingResult lumpability_quotient(const LabelledModel& m) {
  if (auto err = validate_model(m)) throw std::invalid_argument("lumpability_quotient: " + *err);
  const int n = m.n_states();

  // Initial partition: equal observation rows.
  Partition part(n, -1);
  {
    std::map<FinDist<int, Rational>, int> by_obs;
    int next = 0;
    for (int i = 0; i < n; ++i) {
      auto [it, fresh] = by_obs.emplace(m.obs[i], next);
      if (fresh) ++next;
      part[i] = it->second;
    }
    part = canonicalize(part);
  }

  // Refine: split on the exact aggregate rate column into each block (the
  // diagonal is included; its block sum is determined by the others, so this
  // is the ordinary lumpability condition).
  while (true) {
    const int blocks = block_count(part);
    std::map<std::pair<int, std::vector<Rational>>, int> by_sig;
    Partition next_part(n, -1);
    int next = 0;
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> sig(blocks, Rational(0));
      for (int k = 0; k < n; ++k) sig[part[k]] += m.gen.at(k, j);
      auto [it, fresh] = by_sig.emplace(std::make_pair(part[j], sig), next);
      if (fresh) ++next;
      next_part[j] = it->second;
    }
    next_part = canonicalize(next_part);
    if (next_part == part) break;
    part = next_part;
  }

  LumpingResult res;
  res.partition = part;
  const int blocks = block_count(part);
  res.representative.assign(blocks, -1);
  for (int i = 0; i < n; ++i)
    if (res.representative[part[i]] < 0) res.representative[part[i]] = i;

  LabelledModel q;
  q.name = m.name.empty() ? "quotient" : m.name + "-quotient";
  q.labels = m.labels;
  q.states.resize(blocks);
  for (int b = 0; b < blocks; ++b) {
    std::string nm;
    for (int i = 0; i < n; ++i)
      if (part[i] == b) nm += (nm.empty() ? "" : "+") + m.states[i];
    q.states[b] = nm;
  }
  q.gen = Generator(blocks);
  for (int b = 0; b < blocks; ++b) {
    const int j = res.representative[b];
    for (int c = 0; c < blocks; ++c) {
      Rational sum = 0;
      for (int k = 0; k < n; ++k)
        if (part[k] == c) sum += m.gen.at(k, j);
      q.gen.at(c, b) = sum;
    }
  }
  q.obs.resize(blocks);
  for (int b = 0; b < blocks; ++b) q.obs[b] = m.obs[res.representative[b]];
  res.quotient = std::move(q);

  if (auto err = validate_model(res.quotient))
    throw std::logic_error("lumpability_quotient produced an invalid quotient: " + *err);

  // Kernel-level verification of the quotient map at probe times.
  const std::vector<Rational> probes = {Rational(0), rat(1, 10), Rational(1), rat(7, 2)};
  auto rep = check_homomorphism(part, m, res.quotient, probes, 1e-8);
  if (!rep.passed)
    throw std::logic_error("lumpability_quotient failed kernel verification: " +
                           rep.counterexample);
  return res;
}

CheckReport check_homomorphism(const std::vector<int>& h, const LabelledModel& m1,
                               const LabelledModel& m2, const std::vector<Rational>& times,
                               double tol) {
  CheckReport rep;
  const int n1 = m1.n_states(), n2 = m2.n_states();
  if (static_cast<int>(h.size()) != n1) {
    rep.fail("map covers " + std::to_string(h.size()) + " states, model has " + std::to_string(n1));
    return rep;
  }
  for (int i = 0; i < n1; ++i)
    if (h[i] < 0 || h[i] >= n2) {
      rep.fail("map sends state " + std::to_string(i) + " outside the target");
      return rep;
    }
  if (m1.labels != m2.labels) {
    rep.fail("label alphabets differ");
    return rep;
  }

  // Observations must be preserved exactly.
  for (int i = 0; i < n1; ++i) {
    ++rep.cases;
    if (!(m1.obs[i] == m2.obs[h[i]])) {
      rep.fail("obs differs at state " + m1.states[i] + " vs " + m2.states[h[i]]);
      return rep;
    }
  }

  // H gamma_t = delta_t H with H the 0/1 matrix of h, in max norm.
  Eigen::MatrixXd big(n2, n1);
  big.setZero();
  for (int i = 0; i < n1; ++i) big(h[i], i) = 1.0;
  for (const auto& t : times) {
    const auto k1 = kernel_at(m1.gen, t);
    const auto k2 = kernel_at(m2.gen, t);
    const double resid = (big * k1.p - k2.p * big).cwiseAbs().maxCoeff();
    ++rep.cases;
    rep.observe(resid);
    if (resid > tol)
      rep.fail("kernel residual " + format_double(resid) + " at t=" + format_rational(t));
  }
  return rep;
}

}  // namespace gct
