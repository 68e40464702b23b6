#include "gct/logic_eval.hpp"

#include <stdexcept>

namespace gct {

namespace {

void guard(const Formula& f, LogicInstance want) {
  InstanceResult ir = formula_instance(f);
  if (ir.error) throw std::invalid_argument(*ir.error + ": " + print_formula(f));
  if (ir.instance != LogicInstance::Either && ir.instance != want)
    throw std::invalid_argument(std::string("formula belongs to the ") +
                                (want == LogicInstance::Boolean ? "quantitative" : "Boolean") +
                                " instance: " + print_formula(f));
}

int label_or_throw(const LabelledModel& m, const std::string& label) {
  int b = m.label_index(label);
  if (b < 0) throw std::invalid_argument("unknown label '" + label + "'");
  return b;
}

std::vector<char> rec_bool(WordGradedKernel& k, const Formula& f) {
  const LabelledModel& m = k.model();
  int n = m.n_states();
  std::vector<char> out(static_cast<std::size_t>(n), 0);
  switch (f.kind) {
    case FormulaKind::Top:
      std::fill(out.begin(), out.end(), 1);
      return out;
    case FormulaKind::Not: {
      std::vector<char> a = rec_bool(k, f.kids[0]);
      for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = !a[static_cast<std::size_t>(i)];
      return out;
    }
    case FormulaKind::And: {
      std::vector<char> a = rec_bool(k, f.kids[0]);
      std::vector<char> b = rec_bool(k, f.kids[1]);
      for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            a[static_cast<std::size_t>(i)] && b[static_cast<std::size_t>(i)];
      return out;
    }
    case FormulaKind::Obs: {
      std::vector<char> a = rec_bool(k, f.kids[0]);
      int b = label_or_throw(m, f.label);
      for (int i = 0; i < n; ++i) {
        Rational v = a[static_cast<std::size_t>(i)] ? m.obs[static_cast<std::size_t>(i)].at(b)
                                                    : Rational(0);
        out[static_cast<std::size_t>(i)] = v >= f.number;
      }
      return out;
    }
    case FormulaKind::Time: {
      std::vector<char> a = rec_bool(k, f.kids[0]);
      const Eigen::MatrixXd& p = k.kernel(f.time);
      double thr = to_double(f.number);
      for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int z = 0; z < n; ++z)
          if (a[static_cast<std::size_t>(z)]) s += p(z, i);
        out[static_cast<std::size_t>(i)] = s >= thr;
      }
      return out;
    }
    case FormulaKind::Plus: break;
  }
  throw std::logic_error("rec_bool: unreachable");
}

std::vector<double> rec_quant(WordGradedKernel& k, const Formula& f) {
  const LabelledModel& m = k.model();
  int n = m.n_states();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  switch (f.kind) {
    case FormulaKind::Top:
      std::fill(out.begin(), out.end(), 1.0);
      return out;
    case FormulaKind::Plus: {
      std::vector<double> a = rec_quant(k, f.kids[0]);
      std::vector<double> b = rec_quant(k, f.kids[1]);
      double p = to_double(f.number);
      for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            p * a[static_cast<std::size_t>(i)] + (1 - p) * b[static_cast<std::size_t>(i)];
      return out;
    }
    case FormulaKind::Obs: {
      std::vector<double> a = rec_quant(k, f.kids[0]);
      int b = label_or_throw(m, f.label);
      for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            to_double(m.obs[static_cast<std::size_t>(i)].at(b)) * a[static_cast<std::size_t>(i)];
      return out;
    }
    case FormulaKind::Time: {
      std::vector<double> a = rec_quant(k, f.kids[0]);
      const Eigen::MatrixXd& p = k.kernel(f.time);
      for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int z = 0; z < n; ++z) s += p(z, i) * a[static_cast<std::size_t>(z)];
        out[static_cast<std::size_t>(i)] = s;
      }
      return out;
    }
    case FormulaKind::Not:
    case FormulaKind::And: break;
  }
  throw std::logic_error("rec_quant: unreachable");
}

}  // namespace

std::vector<char> eval_boolean_all(WordGradedKernel& k, const Formula& f) {
  guard(f, LogicInstance::Boolean);
  return rec_bool(k, f);
}

std::vector<double> eval_quantitative_all(WordGradedKernel& k, const Formula& f) {
  guard(f, LogicInstance::Quantitative);
  return rec_quant(k, f);
}

bool eval_boolean(WordGradedKernel& k, const Formula& f, int state) {
  if (state < 0 || state >= k.model().n_states())
    throw std::out_of_range("eval_boolean: state out of range");
  return eval_boolean_all(k, f)[static_cast<std::size_t>(state)] != 0;
}

double eval_quantitative(WordGradedKernel& k, const Formula& f, int state) {
  if (state < 0 || state >= k.model().n_states())
    throw std::out_of_range("eval_quantitative: state out of range");
  return eval_quantitative_all(k, f)[static_cast<std::size_t>(state)];
}

}  // namespace gct
