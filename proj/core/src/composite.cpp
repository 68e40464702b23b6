#include "gct/composite.hpp"

#include <random>
#include <stdexcept>

namespace gct {

std::string label_word_str(const LabelWord& w, const std::vector<std::string>& labels) {
  if (w.empty()) return "ε";
  std::string s;
  for (char c : w) s += labels.at(static_cast<unsigned char>(c));
  return s;
}

WordGradedKernel::WordGradedKernel(LabelledModel m) : m_(std::move(m)) {
  if (auto err = validate_model(m_)) throw std::invalid_argument("WordGradedKernel: " + *err);
}

const Eigen::MatrixXd& WordGradedKernel::kernel(const Rational& t) {
  std::lock_guard lock(kernel_mu_);
  auto it = kernels_.find(t);
  if (it == kernels_.end()) it = kernels_.emplace(t, kernel_at(m_.gen, t).p).first;
  return it->second;
}

namespace {

// Distribution over length-k observation words at one state, float weights.
FinDist<LabelWord, double> obs_word(const LabelledModel& m, int state, std::uint64_t k) {
  FinDist<LabelWord, double> out = FinDist<LabelWord, double>::dirac({});
  for (std::uint64_t i = 0; i < k; ++i) {
    FinDist<LabelWord, double> next;
    for (const auto& [w, p] : out.atoms())
      for (const auto& [b, q] : m.obs[state].atoms())
        next.add(w + static_cast<char>(b), p * to_double(q));
    out = std::move(next);
  }
  return out;
}

FinDist<LabelWord, Rational> obs_word_exact(const LabelledModel& m, int state, std::uint64_t k) {
  FinDist<LabelWord, Rational> out = FinDist<LabelWord, Rational>::dirac({});
  for (std::uint64_t i = 0; i < k; ++i) {
    FinDist<LabelWord, Rational> next;
    for (const auto& [w, p] : out.atoms())
      for (const auto& [b, q] : m.obs[state].atoms()) next.add(w + static_cast<char>(b), p * q);
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<FinDist<CompositeAtom, double>> WordGradedKernel::compute(const SamplingWord& w) {
  const int n = m_.n_states();
  std::vector<FinDist<CompositeAtom, double>> cur(n);
  for (int x = 0; x < n; ++x) cur[x] = FinDist<CompositeAtom, double>::dirac({LabelWord{}, x});

  for (const auto& seg : w.segments()) {
    const Eigen::MatrixXd& step = kernel(seg.t);
    std::vector<FinDist<LabelWord, double>> draws(n);
    for (int z = 0; z < n; ++z) draws[z] = obs_word(m_, z, seg.k);

    for (int x = 0; x < n; ++x) {
      FinDist<CompositeAtom, double> next;
      for (const auto& [atom, p] : cur[x].atoms()) {
        const auto& [word, y] = atom;
        for (int z = 0; z < n; ++z) {
          const double q = step(z, y);
          if (q == 0.0) continue;
          for (const auto& [v, r] : draws[z].atoms()) next.add({word + v, z}, p * q * r);
        }
      }
      cur[x] = std::move(next);
    }
  }
  return cur;
}

const std::vector<FinDist<CompositeAtom, double>>& WordGradedKernel::at(const SamplingWord& w) {
  {
    std::lock_guard lock(memo_mu_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  auto value = compute(w);
  std::lock_guard lock(memo_mu_);
  return memo_.emplace(w, std::move(value)).first->second;
}

FinDist<CompositeAtom, double> composite_at(WordGradedKernel& k, const SamplingWord& w,
                                            int state) {
  return k.at(w).at(static_cast<std::size_t>(state));
}

FinDist<LabelWord, double> trace_vector(WordGradedKernel& k, int state, const SamplingWord& w) {
  return composite_at(k, w, state).map([](const CompositeAtom& a) { return a.first; });
}

FinDist<CompositeAtom, Rational> composite_at_exact(const LabelledModel& m, const SamplingWord& w,
                                                    int state) {
  if (length_morphism(w) != 0)
    throw std::invalid_argument("composite_at_exact requires a pure-observation word");
  // Normal form of a zero-time word is the unit or a single 0:k segment.
  const std::uint64_t k = count_morphism(w);
  FinDist<CompositeAtom, Rational> out;
  const auto draws = obs_word_exact(m, state, k);
  for (const auto& [v, p] : draws.atoms()) out.add({v, state}, p);
  return out;
}

FinDist<LabelWord, Rational> trace_vector_exact(const LabelledModel& m, int state,
                                                const SamplingWord& w) {
  return composite_at_exact(m, w, state).map([](const CompositeAtom& a) { return a.first; });
}

FinDist<CompositeAtom, double> kleisli_then(const FinDist<CompositeAtom, double>& d,
                                            WordGradedKernel& k, const SamplingWord& w) {
  const auto& table = k.at(w);
  FinDist<CompositeAtom, double> out;
  for (const auto& [atom, p] : d.atoms()) {
    const auto& [word, y] = atom;
    for (const auto& [atom2, q] : table[static_cast<std::size_t>(y)].atoms())
      out.add({word + atom2.first, atom2.second}, p * q);
  }
  return out;
}

CheckReport check_graded_axioms(WordGradedKernel& k,
                                const std::vector<std::pair<SamplingWord, SamplingWord>>& pairs,
                                double tol) {
  CheckReport rep;
  const int n = k.model().n_states();

  // Unit axiom: the empty word is the Kleisli unit, exactly.
  for (int x = 0; x < n; ++x) {
    ++rep.cases;
    auto got = composite_at(k, SamplingWord{}, x);
    auto want = FinDist<CompositeAtom, double>::dirac({LabelWord{}, x});
    if (!(got == want)) {
      rep.fail("unit word is not the Kleisli unit at state " + k.model().states[x]);
      return rep;
    }
  }

  // Multiplication axiom: evaluating u*v equals running u, then v.
  for (const auto& [u, v] : pairs) {
    const SamplingWord uv = u * v;
    for (int x = 0; x < n; ++x) {
      ++rep.cases;
      auto joined = composite_at(k, uv, x);
      auto chained = kleisli_then(composite_at(k, u, x), k, v);
      const double gap = dist_linf(joined, chained);
      rep.observe(gap);
      if (gap > tol) {
        rep.fail("u=" + u.str() + " v=" + v.str() + " state=" + k.model().states[x] +
                 " gap=" + format_double(gap));
        return rep;
      }
    }
  }
  return rep;
}

std::vector<std::pair<SamplingWord, SamplingWord>> sample_word_pairs(
    const std::vector<Rational>& time_grid, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> seg_count(0, 2);
  std::uniform_int_distribution<int> obs_count(0, 2);
  std::uniform_int_distribution<std::size_t> time_pick(0, time_grid.size());  // == size() means 0

  auto random_word = [&]() {
    std::vector<SampSegment> raw;
    const int segs = seg_count(rng);
    for (int i = 0; i < segs; ++i) {
      const std::size_t ti = time_pick(rng);
      Rational t = ti == time_grid.size() ? Rational(0) : time_grid[ti];
      raw.push_back({t, static_cast<std::uint64_t>(obs_count(rng))});
    }
    return samp_normalize(std::move(raw));
  };

  std::vector<std::pair<SamplingWord, SamplingWord>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.emplace_back(random_word(), random_word());
  return out;
}

CheckReport labelled_roundtrip_check(WordGradedKernel& k, const std::vector<SamplingWord>& words,
                                     double tol) {
  CheckReport rep;
  const auto& m = k.model();
  const int n = m.n_states();
  const SamplingWord draw_once = SamplingWord::single(0, 1);

  // (t:0) is exactly the one-step kernel, packaged as distributions.
  for (const auto& w : words)
    for (const auto& seg : w.segments()) {
      const SamplingWord pure = SamplingWord::single(seg.t, 0);
      const Eigen::MatrixXd& step = k.kernel(seg.t);
      for (int x = 0; x < n; ++x) {
        ++rep.cases;
        auto got = composite_at(k, pure, x);
        FinDist<CompositeAtom, double> want;
        for (int z = 0; z < n; ++z) want.add({LabelWord{}, z}, step(z, x));
        const double gap = dist_linf(got, want);
        rep.observe(gap);
        if (gap > tol) {
          rep.fail("time segment " + pure.str() + " differs from the kernel at state " +
                   m.states[x]);
          return rep;
        }
      }
    }

  // (0:1) is exactly one observation draw with the state unchanged.
  for (int x = 0; x < n; ++x) {
    ++rep.cases;
    auto got = composite_at(k, draw_once, x);
    FinDist<CompositeAtom, double> want;
    for (const auto& [b, q] : m.obs[x].atoms())
      want.add({LabelWord(1, static_cast<char>(b)), x}, to_double(q));
    const double gap = dist_linf(got, want);
    rep.observe(gap);
    if (gap > tol) {
      rep.fail("single draw differs from obs at state " + m.states[x]);
      return rep;
    }
  }

  // Every word equals the Kleisli chain of its generator factors.
  for (const auto& w : words) {
    std::vector<SamplingWord> factors;
    for (const auto& seg : w.segments()) {
      if (!(seg.t == 0)) factors.push_back(SamplingWord::single(seg.t, 0));
      for (std::uint64_t i = 0; i < seg.k; ++i) factors.push_back(draw_once);
    }
    for (int x = 0; x < n; ++x) {
      ++rep.cases;
      FinDist<CompositeAtom, double> acc = FinDist<CompositeAtom, double>::dirac({LabelWord{}, x});
      for (const auto& f : factors) acc = kleisli_then(acc, k, f);
      auto direct = composite_at(k, w, x);
      const double gap = dist_linf(direct, acc);
      rep.observe(gap);
      if (gap > tol) {
        rep.fail("word " + w.str() + " state " + m.states[x] +
                 " differs from its generator chain by " + format_double(gap));
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace gct
