#pragma once

#include "gct/check_report.hpp"
#include "gct/findist.hpp"

#include <string>
#include <vector>

namespace gct {

// Label words for the observation side of the composite monad.
using LawWord = std::vector<int>;

inline std::string law_word_str(const LawWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int b : w) s += static_cast<char>('a' + b);
  return s;
}

// The shipped graded distributive law: tensorial strength of the distribution
// monad over the word-writer monad, (u, d) -> sum_x d(x) |(u, x)>.
struct StrengthLaw {
  template <class X>
  FinDist<std::pair<LawWord, X>, Rational> operator()(const LawWord& u,
                                                      const FinDist<X, Rational>& d) const {
    return strength(u, d);
  }
};

// Deliberately corrupted law for mutation tests: swaps two labels inside the
// word before applying strength, which breaks the unit diagram on any word
// containing a swapped label.
struct LabelSwapLaw {
  int a = 0;
  int b = 1;
  template <class X>
  FinDist<std::pair<LawWord, X>, Rational> operator()(const LawWord& u,
                                                      const FinDist<X, Rational>& d) const {
    LawWord v = u;
    for (int& c : v) {
      if (c == a)
        c = b;
      else if (c == b)
        c = a;
    }
    return strength(v, d);
  }
};

// All weight assignments over the given atoms with weights drawn from the
// grid and total mass exactly 1.
template <class X>
std::vector<FinDist<X, Rational>> enumerate_grid_dists(const std::vector<X>& atoms,
                                                       const std::vector<Rational>& grid) {
  std::vector<FinDist<X, Rational>> out;
  FinDist<X, Rational> acc;
  auto rec = [&](auto&& self, std::size_t i, const Rational& left) -> void {
    if (i + 1 == atoms.size()) {
      bool in_grid = false;
      for (const auto& g : grid)
        if (g == left) in_grid = true;
      if (!in_grid) return;
      FinDist<X, Rational> d = acc;
      d.add(atoms[i], left);
      out.push_back(std::move(d));
      return;
    }
    for (const auto& g : grid) {
      if (g > left) continue;
      FinDist<X, Rational> saved = acc;
      acc.add(atoms[i], g);
      self(self, i + 1, left - g);
      acc = std::move(saved);
    }
  };
  if (!atoms.empty()) rec(rec, 0, Rational(1));
  return out;
}

inline std::vector<LawWord> enumerate_law_words(int labels, int max_len) {
  std::vector<LawWord> out{{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int b = 0; b < labels; ++b) {
        LawWord w = out[i];
        w.push_back(b);
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

struct DistLawOptions {
  int max_word_len = 2;
  static DistLawOptions defaults() { return {}; }
};

// Verifies the four compatibility diagrams of a graded distributive law of
// the word-writer grading over the distribution monad, by exhaustive
// enumeration: interchange with distribution multiplication, interchange with
// word concatenation, and both unit diagrams.  All arithmetic is exact.
template <class Law>
CheckReport check_distributive_law(const Law& law, int carrier, int labels,
                                   const std::vector<Rational>& grid,
                                   DistLawOptions opt = DistLawOptions::defaults()) {
  CheckReport rep;
  std::vector<int> atoms;
  for (int i = 0; i < carrier; ++i) atoms.push_back(i);
  const auto dists = enumerate_grid_dists(atoms, grid);
  const auto words = enumerate_law_words(labels, opt.max_word_len);

  auto show_int = [](int x) { return std::to_string(x); };
  auto show_pair = [&](const std::pair<LawWord, int>& p) {
    return law_word_str(p.first) + "," + std::to_string(p.second);
  };

  // Unit of the distribution monad: law(u, dirac x) = dirac (u, x).
  for (const auto& u : words)
    for (int x : atoms) {
      ++rep.cases;
      auto got = law(u, FinDist<int, Rational>::dirac(x));
      auto want = FinDist<std::pair<LawWord, int>, Rational>::dirac({u, x});
      if (!(got == want)) {
        rep.fail("unit-dist diagram: u=" + law_word_str(u) + " x=" + std::to_string(x) +
                 " got " + ket(got, show_pair));
        return rep;
      }
    }

  // Unit of the word grading: law(e, d) = d with the empty word attached.
  for (const auto& d : dists) {
    ++rep.cases;
    auto got = law(LawWord{}, d);
    auto want = d.map([](int x) { return std::pair<LawWord, int>{{}, x}; });
    if (!(got == want)) {
      rep.fail("unit-word diagram: d=" + ket(d, show_int) + " got " + ket(got, show_pair));
      return rep;
    }
  }

  // Interchange with word concatenation:
  // law(uv, d) = concat-collapse of law(u, law(v, d)).
  for (const auto& u : words)
    for (const auto& v : words)
      for (const auto& d : dists) {
        ++rep.cases;
        LawWord uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        auto lhs = law(uv, d);
        auto inner = law(v, d);
        auto rhs = law(u, inner).map([](const std::pair<LawWord, std::pair<LawWord, int>>& p) {
          LawWord w = p.first;
          w.insert(w.end(), p.second.first.begin(), p.second.first.end());
          return std::pair<LawWord, int>{w, p.second.second};
        });
        if (!(lhs == rhs)) {
          rep.fail("mult-word diagram: u=" + law_word_str(u) + " v=" + law_word_str(v) +
                   " d=" + ket(d, show_int) + " lhs=" + ket(lhs, show_pair) +
                   " rhs=" + ket(rhs, show_pair));
          return rep;
        }
      }

  // Interchange with distribution multiplication:
  // law(u, flatten Xi) = flatten(map law over law(u, Xi)).
  for (const auto& u : words)
    for (std::size_t i = 0; i < dists.size(); ++i)
      for (std::size_t j = i; j < dists.size(); ++j)
        for (const auto& w : grid) {
          if (w < 0 || w > 1) continue;
          FinDist<FinDist<int, Rational>, Rational> nested;
          nested.add(dists[i], w);
          nested.add(dists[j], Rational(1) - w);
          ++rep.cases;
          auto lhs = law(u, flatten(nested));
          auto stage = law(u, nested);
          FinDist<FinDist<std::pair<LawWord, int>, Rational>, Rational> lifted;
          for (const auto& [atom, p] : stage.atoms())
            lifted.add(law(atom.first, atom.second), p);
          auto rhs = flatten(lifted);
          if (!(lhs == rhs)) {
            rep.fail("mult-dist diagram: u=" + law_word_str(u) +
                     " inner=" + ket(dists[i], show_int) + " / " + ket(dists[j], show_int) +
                     " weight=" + format_rational(w) + " lhs=" + ket(lhs, show_pair) +
                     " rhs=" + ket(rhs, show_pair));
            return rep;
          }
        }

  return rep;
}

// Monad laws of the finitely supported distribution monad, by exhaustive
// enumeration of Kleisli arrows with grid-valued weights.  Exact.
CheckReport check_monad_laws(int carrier, const std::vector<Rational>& grid);

}  // namespace gct
