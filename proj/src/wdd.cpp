#include "nilmix/wdd.hpp"

#include <algorithm>

#include "nilmix/errors.hpp"

namespace nilmix {

WeightedDynkinDiagram WeightedDynkinDiagram::make(SimpleType type, std::vector<int> labels) {
  type = SimpleType::make(type.family, type.rank);
  if (static_cast<int>(labels.size()) != type.rank)
    throw InvalidInput("WDD for " + type.name() + " needs " + std::to_string(type.rank) + " labels");
  for (int l : labels)
    if (l < 0 || l > 2) throw InvalidInput("WDD labels must lie in {0,1,2}");
  return {type, std::move(labels)};
}

std::vector<int> WeightedDynkinDiagram::zeros() const {
  std::vector<int> z;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[static_cast<std::size_t>(i)] == 0) z.push_back(i);
  return z;
}

int WeightedDynkinDiagram::zero_count() const { return static_cast<int>(zeros().size()); }

bool WeightedDynkinDiagram::has_isolated_zeros() const {
  const RootSystem& rs = root_system(type);
  const auto z = zeros();
  for (int a : z)
    for (int b : z)
      if (rs.adjacent(a, b)) return false;
  return true;
}

bool WeightedDynkinDiagram::is_even() const {
  return std::all_of(labels.begin(), labels.end(), [](int l) { return l % 2 == 0; });
}

std::string WeightedDynkinDiagram::label_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(labels[i]);
  }
  return s + ")";
}

std::map<int, long> eigenvalue_distribution(SimpleType t, const std::vector<int>& labels) {
  const RootSystem& rs = root_system(t);
  std::map<int, long> d;
  d[0] += rs.rank();
  for (const Root& r : rs.positive_roots()) {
    int v = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) v += r.coeffs[i] * labels[i];
    d[v] += 1;
    d[-v] += 1;
  }
  return d;
}

std::vector<int> dominant_labels(const RootSystem& rs, std::vector<int> values) {
  const int n = rs.rank();
  for (;;) {
    int j = -1;
    for (int i = 0; i < n; ++i)
      if (values[static_cast<std::size_t>(i)] < 0) {
        j = i;
        break;
      }
    if (j < 0) return values;
    const int aj = values[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] -= rs.cartan(i, j) * aj;
  }
}

CentralizerDims centralizer_dims_from_wdd(const WeightedDynkinDiagram& w) {
  const auto d = eigenvalue_distribution(w.type, w.labels);
  auto at = [&](int i) {
    auto it = d.find(i);
    return it == d.end() ? 0L : it->second;
  };
  return {at(0) + at(1), at(0) - at(2), at(1) + at(2)};
}

}  // namespace nilmix
