#pragma once

#include "gct/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace gct {

namespace detail {
inline double weight_as_double(double w) { return w; }
inline double weight_as_double(const Rational& w) { return to_double(w); }
inline std::string weight_str(double w) { return format_double(w); }
inline std::string weight_str(const Rational& w) { return format_rational(w); }
}  // namespace detail

// Finitely supported weight assignment over an ordered carrier.  A full
// distribution carries mass 1, a subdistribution mass <= 1 with the deficit
// read as implicit termination.  Atoms iterate in carrier key order, so all
// derived output is deterministic.  Exactly-zero weights are never stored.
template <class T, class W = Rational>
class FinDist {
 public:
  using atom_type = T;
  using weight_type = W;

  FinDist() = default;

  static FinDist dirac(const T& x) {
    FinDist d;
    d.w_[x] = W(1);
    return d;
  }

  void add(const T& x, const W& p) {
    if (p == W(0)) return;
    auto [it, fresh] = w_.emplace(x, p);
    if (!fresh) {
      it->second += p;
      if (it->second == W(0)) w_.erase(it);
    }
  }

  const std::map<T, W>& atoms() const { return w_; }

  W at(const T& x) const {
    auto it = w_.find(x);
    return it == w_.end() ? W(0) : it->second;
  }

  W mass() const {
    W s(0);
    for (const auto& [x, p] : w_) s += p;
    return s;
  }

  std::size_t support_size() const { return w_.size(); }
  bool empty() const { return w_.empty(); }

  void scale(const W& c) {
    if (c == W(0)) {
      w_.clear();
      return;
    }
    for (auto& [x, p] : w_) p *= c;
  }

  // Pushforward along f.
  template <class F>
  auto map(F f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    FinDist<U, W> out;
    for (const auto& [x, p] : w_) out.add(f(x), p);
    return out;
  }

  // Kleisli extension: f sends atoms to distributions.
  template <class F>
  auto bind(F f) const {
    using D2 = std::decay_t<decltype(f(std::declval<const T&>()))>;
    using U = typename D2::atom_type;
    FinDist<U, W> out;
    for (const auto& [x, p] : w_) {
      // Named so a by-value f keeps its result alive across the inner loop.
      auto&& dx = f(x);
      for (const auto& [y, q] : dx.atoms()) out.add(y, p * q);
    }
    return out;
  }

  bool operator==(const FinDist& o) const { return w_ == o.w_; }
  bool operator!=(const FinDist& o) const { return !(w_ == o.w_); }
  // Lexicographic on the atom map, so distributions can key maps themselves
  // (needed to form distributions over distributions).
  bool operator<(const FinDist& o) const { return w_ < o.w_; }

 private:
  std::map<T, W> w_;
};

// Structurally a FinDist; the alias documents intent where mass may fall
// short of 1.
template <class T, class W = Rational>
using FinSubDist = FinDist<T, W>;

template <class T, class W>
bool is_distribution(const FinDist<T, W>& d, double eps_mass = 1e-9) {
  for (const auto& [x, p] : d.atoms())
    if (detail::weight_as_double(p) < -eps_mass) return false;
  return std::abs(detail::weight_as_double(d.mass()) - 1.0) <= eps_mass;
}

template <class T, class W>
bool is_subdistribution(const FinDist<T, W>& d, double eps_mass = 1e-9) {
  for (const auto& [x, p] : d.atoms())
    if (detail::weight_as_double(p) < -eps_mass) return false;
  return detail::weight_as_double(d.mass()) <= 1.0 + eps_mass;
}

// Monad multiplication.
template <class T, class W>
FinDist<T, W> flatten(const FinDist<FinDist<T, W>, W>& dd) {
  FinDist<T, W> out;
  for (const auto& [d, p] : dd.atoms())
    for (const auto& [x, q] : d.atoms()) out.add(x, p * q);
  return out;
}

// Independent pairing.
template <class A, class B, class W>
FinDist<std::pair<A, B>, W> product(const FinDist<A, W>& a, const FinDist<B, W>& b) {
  FinDist<std::pair<A, B>, W> out;
  for (const auto& [x, p] : a.atoms())
    for (const auto& [y, q] : b.atoms()) out.add({x, y}, p * q);
  return out;
}

// Tensorial strength (b, d) -> sum_x d(x) |(b, x)>.
template <class B, class T, class W>
FinDist<std::pair<B, T>, W> strength(const B& b, const FinDist<T, W>& d) {
  FinDist<std::pair<B, T>, W> out;
  for (const auto& [x, p] : d.atoms()) out.add({b, x}, p);
  return out;
}

// k independent draws, collected as a word.
template <class T, class W>
FinDist<std::vector<T>, W> iid_power(const FinDist<T, W>& d, unsigned k) {
  FinDist<std::vector<T>, W> out = FinDist<std::vector<T>, W>::dirac({});
  for (unsigned i = 0; i < k; ++i) {
    FinDist<std::vector<T>, W> next;
    for (const auto& [w, p] : out.atoms())
      for (const auto& [x, q] : d.atoms()) {
        std::vector<T> wx = w;
        wx.push_back(x);
        next.add(wx, p * q);
      }
    out = std::move(next);
  }
  return out;
}

// Largest absolute pointwise difference over the union of supports.
template <class T, class W>
double dist_linf(const FinDist<T, W>& a, const FinDist<T, W>& b) {
  double worst = 0;
  for (const auto& [x, p] : a.atoms())
    worst = std::max(worst, std::abs(detail::weight_as_double(p) -
                                     detail::weight_as_double(b.at(x))));
  for (const auto& [x, p] : b.atoms())
    worst = std::max(worst, std::abs(detail::weight_as_double(p) -
                                     detail::weight_as_double(a.at(x))));
  return worst;
}

template <class T, class W>
bool dist_eq(const FinDist<T, W>& a, const FinDist<T, W>& b, double tol) {
  return dist_linf(a, b) <= tol;
}

// "p|atom⟩ + p|atom⟩" rendering; an empty distribution prints "0".
template <class T, class W, class Show>
std::string ket(const FinDist<T, W>& d, Show show) {
  if (d.empty()) return "0";
  std::string out;
  for (const auto& [x, p] : d.atoms()) {
    if (!out.empty()) out += " + ";
    out += detail::weight_str(p) + "|" + show(x) + "⟩";
  }
  return out;
}

}  // namespace gct
