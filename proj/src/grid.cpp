#include "nilmix/grid.hpp"

#include <algorithm>

#include "nilmix/errors.hpp"

namespace nilmix {

MixedGrading MixedGrading::from_modules(const SL2Module& m0, const SL2Module& m1) {
  MixedGrading g;
  for (int j = 0; j < 2; ++j) {
    const SL2Module& m = j == 0 ? m0 : m1;
    for (auto [k, mult] : m.terms())
      for (int i = -k; i <= k; i += 2) g.add(j, i, mult);
  }
  return g;
}

long MixedGrading::d(int j, int i) const {
  const auto& r = row(j);
  auto it = r.find(i);
  return it == r.end() ? 0 : it->second;
}

void MixedGrading::add(int j, int i, long count) {
  auto& r = j == 0 ? d0_ : d1_;
  r[i] += count;
  if (r[i] == 0) r.erase(i);
}

int MixedGrading::max_degree(int j) const {
  const auto& r = row(j);
  return r.empty() ? -1 : r.rbegin()->first;
}

long MixedGrading::row_total(int j) const {
  long s = 0;
  for (auto [i, v] : row(j)) s += v;
  return s;
}

SL2Module module_from_row(const MixedGrading& g, int j) {
  SL2Module m;
  for (int i = 0; i <= g.max_degree(j); ++i) {
    const long mult = g.d(j, i) - g.d(j, i + 2);
    if (mult < 0) throw PreconditionViolation("grid row is not the weight diagram of an sl2-module");
    if (mult > 0) m += SL2Module::irreducible(i, mult);
  }
  return m;
}

}  // namespace nilmix
