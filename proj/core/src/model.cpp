#include "gct/model.hpp"

#include <stdexcept>

namespace gct {

int LabelledModel::state_index(const std::string& s) const {
  for (int i = 0; i < n_states(); ++i)
    if (states[i] == s) return i;
  return -1;
}

int LabelledModel::label_index(const std::string& l) const {
  for (int i = 0; i < n_labels(); ++i)
    if (labels[i] == l) return i;
  return -1;
}

std::optional<std::string> validate_generator(const Generator& g) {
  if (g.n < 1) return "generator has no states";
  if (g.a.size() != static_cast<std::size_t>(g.n) * g.n)
    return "generator storage is not " + std::to_string(g.n) + "x" + std::to_string(g.n);
  for (int j = 0; j < g.n; ++j) {
    Rational col_sum = 0;
    for (int k = 0; k < g.n; ++k) {
      if (k != j && g.at(k, j) < 0)
        return "negative rate at (" + std::to_string(k) + "," + std::to_string(j) + ")";
      col_sum += g.at(k, j);
    }
    if (col_sum != 0)
      return "column " + std::to_string(j) + " sums to " + format_rational(col_sum) +
             ", expected 0";
  }
  return std::nullopt;
}

std::optional<std::string> validate_model(const LabelledModel& m) {
  if (m.states.empty()) return "model has no states";
  if (m.labels.empty()) return "model has no labels";
  if (m.gen.n != m.n_states())
    return "generator is " + std::to_string(m.gen.n) + "-state but the model lists " +
           std::to_string(m.n_states());
  if (auto err = validate_generator(m.gen)) return err;
  if (static_cast<int>(m.obs.size()) != m.n_states()) return "obs rows do not cover all states";
  for (int i = 0; i < m.n_states(); ++i) {
    Rational mass = 0;
    for (const auto& [b, p] : m.obs[i].atoms()) {
      if (b < 0 || b >= m.n_labels())
        return "obs row " + std::to_string(i) + " references label index " + std::to_string(b);
      if (p < 0) return "obs row " + std::to_string(i) + " has a negative weight";
      mass += p;
    }
    if (mass != 1)
      return "obs row " + std::to_string(i) + " has mass " + format_rational(mass) +
             ", expected 1";
  }
  for (int i = 0; i < m.n_states(); ++i)
    for (int j = 0; j < i; ++j)
      if (m.states[i] == m.states[j]) return "duplicate state name " + m.states[i];
  for (int i = 0; i < m.n_labels(); ++i)
    for (int j = 0; j < i; ++j)
      if (m.labels[i] == m.labels[j]) return "duplicate label name " + m.labels[i];
  return std::nullopt;
}

namespace {

void require_positive(const Rational& v, const char* what) {
  if (v <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

LabelledModel repairable_4state(const Rational& lam, const Rational& mu) {
  require_positive(lam, "lambda");
  require_positive(mu, "mu");
  LabelledModel m;
  m.name = "repairable4";
  m.states = {"0", "L", "R", "2"};
  m.labels = {"yes", "no"};
  m.gen = Generator(4);
  auto& g = m.gen;
  // columns: from 0, from L, from R, from 2
  g.at(0, 0) = -2 * mu;       g.at(0, 1) = lam;             g.at(0, 2) = lam;             g.at(0, 3) = 0;
  g.at(1, 0) = mu;            g.at(1, 1) = -(lam + mu);     g.at(1, 2) = 0;               g.at(1, 3) = lam;
  g.at(2, 0) = mu;            g.at(2, 1) = 0;               g.at(2, 2) = -(lam + mu);     g.at(2, 3) = lam;
  g.at(3, 0) = 0;             g.at(3, 1) = mu;              g.at(3, 2) = mu;              g.at(3, 3) = -2 * lam;

  FinDist<int, Rational> no_only, coin, yes_only;
  no_only.add(1, 1);
  coin.add(0, rat(1, 2));
  coin.add(1, rat(1, 2));
  yes_only.add(0, 1);
  m.obs = {no_only, coin, coin, yes_only};
  return m;
}

LabelledModel repairable_3state(const Rational& lam, const Rational& mu) {
  require_positive(lam, "lambda");
  require_positive(mu, "mu");
  LabelledModel m;
  m.name = "repairable3";
  m.states = {"0", "1", "2"};
  m.labels = {"yes", "no"};
  m.gen = Generator(3);
  auto& g = m.gen;
  g.at(0, 0) = -2 * mu;   g.at(0, 1) = lam;           g.at(0, 2) = 0;
  g.at(1, 0) = 2 * mu;    g.at(1, 1) = -(lam + mu);   g.at(1, 2) = 2 * lam;
  g.at(2, 0) = 0;         g.at(2, 1) = mu;            g.at(2, 2) = -2 * lam;

  FinDist<int, Rational> no_only, coin, yes_only;
  no_only.add(1, 1);
  coin.add(0, rat(1, 2));
  coin.add(1, rat(1, 2));
  yes_only.add(0, 1);
  m.obs = {no_only, coin, yes_only};
  return m;
}

}  // namespace gct
