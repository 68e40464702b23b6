#include "gct/dist_law.hpp"

namespace gct {

namespace {

std::string show_arrow(const std::vector<FinDist<int, Rational>>& dists,
                       const std::vector<std::size_t>& f) {
  std::string s;
  auto show_int = [](int x) { return std::to_string(x); };
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (x) s += "; ";
    s += std::to_string(x) + "->" + ket(dists[f[x]], show_int);
  }
  return s;
}

}  // namespace

CheckReport check_monad_laws(int carrier, const std::vector<Rational>& grid) {
  CheckReport rep;
  std::vector<int> atoms;
  for (int i = 0; i < carrier; ++i) atoms.push_back(i);
  const auto dists = enumerate_grid_dists(atoms, grid);
  auto show_int = [](int x) { return std::to_string(x); };

  // Kleisli arrows as tuples of distribution indices, one per atom.
  std::vector<std::vector<std::size_t>> arrows;
  {
    std::vector<std::size_t> cur(atoms.size(), 0);
    while (true) {
      arrows.push_back(cur);
      std::size_t i = 0;
      while (i < cur.size() && ++cur[i] == dists.size()) cur[i++] = 0;
      if (i == cur.size()) break;
    }
  }
  auto apply = [&](const std::vector<std::size_t>& f, int x) -> const FinDist<int, Rational>& {
    return dists[f[static_cast<std::size_t>(x)]];
  };

  // Right unit: bind d dirac = d.
  for (const auto& d : dists) {
    ++rep.cases;
    auto got = d.bind([](int x) { return FinDist<int, Rational>::dirac(x); });
    if (!(got == d)) {
      rep.fail("right unit: d=" + ket(d, show_int) + " got " + ket(got, show_int));
      return rep;
    }
  }

  // Left unit: bind (dirac x) f = f(x).
  for (int x : atoms)
    for (const auto& f : arrows) {
      ++rep.cases;
      auto got = FinDist<int, Rational>::dirac(x).bind(
          [&](int y) { return apply(f, y); });
      if (!(got == apply(f, x))) {
        rep.fail("left unit: x=" + std::to_string(x) + " f=[" + show_arrow(dists, f) + "]");
        return rep;
      }
    }

  // Associativity: bind (bind d f) g = bind d (x -> bind f(x) g).
  // Full enumeration when the case count is small; otherwise a deterministic
  // stride subsample of arrow pairs (noted in the report).
  std::size_t total = dists.size() * arrows.size() * arrows.size();
  std::size_t stride = 1;
  while (total / (stride * stride) > 1000000) ++stride;
  if (stride > 1)
    rep.notes.push_back("associativity sampled with arrow stride " + std::to_string(stride));
  for (const auto& d : dists)
    for (std::size_t fi = 0; fi < arrows.size(); fi += stride)
      for (std::size_t gi = 0; gi < arrows.size(); gi += stride) {
        const auto& f = arrows[fi];
        const auto& g = arrows[gi];
        ++rep.cases;
        auto lhs = d.bind([&](int x) { return apply(f, x); })
                       .bind([&](int y) { return apply(g, y); });
        auto rhs = d.bind([&](int x) {
          return apply(f, x).bind([&](int y) { return apply(g, y); });
        });
        if (!(lhs == rhs)) {
          rep.fail("associativity: d=" + ket(d, show_int) + " f=[" + show_arrow(dists, f) +
                   "] g=[" + show_arrow(dists, g) + "]");
          return rep;
        }
      }

  return rep;
}

}  // namespace gct
