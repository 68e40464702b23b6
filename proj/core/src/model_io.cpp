#include "gct/model_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace gct {

namespace {

using nlohmann::json;

// Numbers arrive as exact binary rationals; strings as exact fractions.
std::optional<Rational> entry_to_rational(const json& v) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_number_float()) {
    Rational q;
    mpq_set_d(q.get_mpq_t(), v.get<double>());
    return q;
  }
  if (v.is_string()) return parse_rational(v.get<std::string>());
  return std::nullopt;
}

json rational_to_entry(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return json(c.get_num().get_si());
  return json(format_rational(c));
}

ModelLoadResult fail(const std::string& msg) { return {std::nullopt, msg}; }

}  // namespace

ModelLoadResult load_model_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    return fail(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) return fail("top level must be an object");
  for (const char* key : {"states", "labels", "rates", "obs"})
    if (!j.contains(key)) return fail(std::string("missing key \"") + key + "\"");

  LabelledModel m;
  if (j.contains("name") && j["name"].is_string()) m.name = j["name"].get<std::string>();

  if (!j["states"].is_array() || j["states"].empty()) return fail("\"states\" must be a nonempty array");
  for (const auto& s : j["states"]) {
    if (!s.is_string()) return fail("state names must be strings");
    m.states.push_back(s.get<std::string>());
  }
  if (!j["labels"].is_array() || j["labels"].empty()) return fail("\"labels\" must be a nonempty array");
  for (const auto& s : j["labels"]) {
    if (!s.is_string()) return fail("label names must be strings");
    m.labels.push_back(s.get<std::string>());
  }

  const int n = m.n_states();
  if (!j["rates"].is_array() || static_cast<int>(j["rates"].size()) != n)
    return fail("\"rates\" must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  m.gen = Generator(n);
  for (int k = 0; k < n; ++k) {
    const auto& row = j["rates"][k];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      return fail("rates row " + std::to_string(k) + " must have " + std::to_string(n) + " entries");
    for (int col = 0; col < n; ++col) {
      auto q = entry_to_rational(row[col]);
      if (!q)
        return fail("rates entry (" + std::to_string(k) + "," + std::to_string(col) +
                    ") is not a number or fraction string");
      if (k != col && *q < 0)
        return fail("rates entry (" + std::to_string(k) + "," + std::to_string(col) +
                    ") is negative");
      m.gen.at(k, col) = *q;
    }
  }
  // The diagonal is structural: it must agree with minus the off-diagonal
  // column sum within 1e-9 and is then replaced by the exact value, so the
  // column-sum invariant holds exactly even for decimal input.
  for (int col = 0; col < n; ++col) {
    Rational off = 0;
    for (int k = 0; k < n; ++k)
      if (k != col) off += m.gen.at(k, col);
    if (std::abs(to_double(m.gen.at(col, col) + off)) > 1e-9)
      return fail("rates column " + std::to_string(col) + " does not sum to 0 (diagonal " +
                  format_rational(m.gen.at(col, col)) + ", off-diagonal sum " +
                  format_rational(off) + ")");
    m.gen.at(col, col) = -off;
  }

  if (!j["obs"].is_object()) return fail("\"obs\" must be an object keyed by state name");
  m.obs.assign(n, {});
  for (int i = 0; i < n; ++i) {
    if (!j["obs"].contains(m.states[i])) return fail("obs is missing state \"" + m.states[i] + "\"");
    const auto& row = j["obs"][m.states[i]];
    if (!row.is_object()) return fail("obs row \"" + m.states[i] + "\" must be an object");
    Rational mass = 0;
    for (auto it = row.begin(); it != row.end(); ++it) {
      int b = m.label_index(it.key());
      if (b < 0) return fail("obs row \"" + m.states[i] + "\" uses unknown label \"" + it.key() + "\"");
      auto q = entry_to_rational(it.value());
      if (!q || *q < 0)
        return fail("obs weight (\"" + m.states[i] + "\",\"" + it.key() +
                    "\") is not a nonnegative number or fraction string");
      m.obs[i].add(b, *q);
      mass += *q;
    }
    if (std::abs(to_double(mass) - 1.0) > 1e-9)
      return fail("obs row \"" + m.states[i] + "\" has mass " + format_rational(mass) +
                  ", expected 1");
    if (mass != 1 && mass != 0) m.obs[i].scale(Rational(1) / mass);  // exact renormalization of near-1 float input
    if (mass == 0) return fail("obs row \"" + m.states[i] + "\" is empty");
  }

  if (auto err = validate_model(m)) return fail(*err);
  return {std::move(m), ""};
}

ModelLoadResult load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return fail("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model_json(buf.str());
}

std::string model_to_json(const LabelledModel& m) {
  json j;
  if (!m.name.empty()) j["name"] = m.name;
  j["states"] = m.states;
  j["labels"] = m.labels;
  json rates = json::array();
  for (int k = 0; k < m.gen.n; ++k) {
    json row = json::array();
    for (int col = 0; col < m.gen.n; ++col) row.push_back(rational_to_entry(m.gen.at(k, col)));
    rates.push_back(row);
  }
  j["rates"] = rates;
  json obs = json::object();
  for (int i = 0; i < m.n_states(); ++i) {
    json row = json::object();
    for (const auto& [b, p] : m.obs[i].atoms()) row[m.labels[b]] = rational_to_entry(p);
    obs[m.states[i]] = row;
  }
  j["obs"] = obs;
  return j.dump(2) + "\n";
}

void save_model_file(const LabelledModel& m, const std::string& path) {
  std::ofstream out(path);
  out << model_to_json(m);
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace gct
