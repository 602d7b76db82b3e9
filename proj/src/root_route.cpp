#include "nilmix/root_route.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nilmix/errors.hpp"

namespace nilmix {

namespace {

int arm_length(const std::vector<std::vector<int>>& adj, int from, int start) {
  int len = 0, prev = from, cur = start;
  for (;;) {
    ++len;
    int next = -1;
    for (int x : adj[static_cast<std::size_t>(cur)])
      if (x != prev) next = x;
    if (next < 0) return len;
    prev = cur;
    cur = next;
  }
}

SimpleType classify_component(const RootSystem& rs, const std::vector<Root>& simple, const std::vector<int>& comp) {
  const int r = static_cast<int>(comp.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(r));
  std::vector<int> norm(static_cast<std::size_t>(r));
  for (int a = 0; a < r; ++a) {
    const auto& ca = simple[static_cast<std::size_t>(comp[static_cast<std::size_t>(a)])].coeffs;
    norm[static_cast<std::size_t>(a)] = rs.inner(ca, ca);
    for (int b = 0; b < r; ++b)
      if (a != b && rs.inner(ca, simple[static_cast<std::size_t>(comp[static_cast<std::size_t>(b)])].coeffs) != 0)
        adj[static_cast<std::size_t>(a)].push_back(b);
  }
  const int lo = *std::min_element(norm.begin(), norm.end());
  const int hi = *std::max_element(norm.begin(), norm.end());
  if (lo == hi) {
    for (int a = 0; a < r; ++a) {
      if (adj[static_cast<std::size_t>(a)].size() != 3) continue;
      std::vector<int> arms;
      for (int b : adj[static_cast<std::size_t>(a)]) arms.push_back(arm_length(adj, a, b));
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) return SimpleType::make(Family::D, r);
      if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return SimpleType::make(Family::E, r);
      throw std::logic_error("unexpected simply-laced diagram");
    }
    return SimpleType::make(Family::A, r);
  }
  if (hi == 3 * lo) return SimpleType::make(Family::G, 2);
  const int shorts = static_cast<int>(std::count(norm.begin(), norm.end(), lo));
  if (r == 2) return SimpleType::make(Family::B, 2);
  if (shorts == 1) return SimpleType::make(Family::B, r);
  if (shorts == r - 1) return SimpleType::make(Family::C, r);
  if (r == 4 && shorts == 2) return SimpleType::make(Family::F, 4);
  throw std::logic_error("unexpected doubly-laced diagram");
}

}  // namespace

ReductiveAlgebra classify_subsystem(const RootSystem& rs, const std::vector<Root>& simple, int ambient_rank) {
  const int n = static_cast<int>(simple.size());
  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  ReductiveAlgebra out;
  for (int s = 0; s < n; ++s) {
    if (comp_of[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> comp{s};
    comp_of[static_cast<std::size_t>(s)] = s;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int t = 0; t < n; ++t)
        if (comp_of[static_cast<std::size_t>(t)] < 0 &&
            rs.inner(simple[static_cast<std::size_t>(comp[k])].coeffs, simple[static_cast<std::size_t>(t)].coeffs) != 0) {
          comp_of[static_cast<std::size_t>(t)] = s;
          comp.push_back(t);
        }
    out.add_simple(classify_component(rs, simple, comp));
  }
  out.add_torus(ambient_rank - n);
  return out;
}

RootRouteGrading root_route(const RootSystem& rs, const std::function<bool(const Root&)>& in_g0) {
  std::vector<Root> pos0;
  for (const Root& r : rs.positive_roots())
    if (in_g0(r)) pos0.push_back(r);

  std::set<Coeffs> sums;
  for (std::size_t a = 0; a < pos0.size(); ++a)
    for (std::size_t b = a; b < pos0.size(); ++b) sums.insert((pos0[a] + pos0[b]).coeffs);
  std::vector<Root> simple;
  for (const Root& r : pos0)
    if (!sums.count(r.coeffs)) simple.push_back(r);

  // gamma(h) for h = sum of the coroots of the positive roots of g0 (twice the Weyl vector of g0)
  auto value = [&](const Coeffs& c) {
    int v = 0;
    for (const Root& b : pos0) v += rs.pairing(c, b.coeffs);
    return v;
  };

  RootRouteGrading out{rs.type(), classify_subsystem(rs, simple, rs.rank()), 0, 0, simple, {}, {}};
  out.grid.add(0, 0, rs.rank());
  for (const Root& r : rs.positive_roots()) {
    const int j = in_g0(r) ? 0 : 1;
    const int v = value(r.coeffs);
    out.grid.add(j, v, 1);
    out.grid.add(j, -v, 1);
  }
  out.dim_g0 = out.grid.row_total(0);
  out.dim_g1 = out.grid.row_total(1);
  if (out.dim_g0 != out.g0.dimension()) throw std::logic_error("root route: fixed algebra dimension mismatch");

  std::vector<int> values;
  for (int i = 0; i < rs.rank(); ++i) values.push_back(value(rs.simple_root(i).coeffs));
  out.wdd = WeightedDynkinDiagram::make(rs.type(), dominant_labels(rs, values));
  return out;
}

RootRouteGrading root_route_node(const RootSystem& rs, int node) {
  const int mark = rs.highest_root().coeffs.at(static_cast<std::size_t>(node));
  if (mark != 1 && mark != 2)
    throw PreconditionViolation("node " + std::to_string(node + 1) + " of " + rs.type().name() +
                                " has mark " + std::to_string(mark) + "; need 1 or 2");
  const auto k = static_cast<std::size_t>(node);
  return root_route(rs, [k](const Root& r) { return r.coeffs[k] % 2 == 0; });
}

RootRouteGrading root_route_principal(const RootSystem& rs) {
  return root_route(rs, [](const Root& r) { return r.height() % 2 == 0; });
}

}  // namespace nilmix
