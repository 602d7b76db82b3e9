#include "nilmix/classical_orbit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

#include "nilmix/errors.hpp"

namespace nilmix {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw InvalidInput("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' ||
                               text[i] == '(' || text[i] == ')' || text[i] == '[' || text[i] == ']'))
      ++i;
  };
  auto number = [&]() -> int {
    int v = 0;
    auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc()) throw InvalidInput("cannot parse partition '" + std::string(text) + "'");
    i = static_cast<std::size_t>(p - text.data());
    return v;
  };
  skip();
  while (i < text.size()) {
    const int part = number();
    int mult = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      mult = number();
    }
    for (int k = 0; k < mult; ++k) parts.push_back(part);
    skip();
  }
  return Partition(std::move(parts));
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::dual() const {
  std::vector<int> d;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_.front(); ++j)
    d.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; })));
  return Partition(std::move(d));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

int Partition::multiplicity(int k) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), k)); }

bool Partition::all_odd() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

bool Partition::same_parity() const {
  return parts_.empty() ||
         std::all_of(parts_.begin(), parts_.end(), [&](int p) { return p % 2 == parts_.front() % 2; });
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string ambient_prefix(Ambient a) {
  switch (a) {
    case Ambient::SL: return "sl";
    case Ambient::SO: return "so";
    case Ambient::SP: return "sp";
  }
  return "";
}

bool ClassicalOrbit::is_valid(Ambient a, const Partition& lambda) {
  if (lambda.total() == 0) return false;
  for (auto [k, m] : lambda.multiplicities()) {
    if (a == Ambient::SO && k % 2 == 0 && m % 2) return false;
    if (a == Ambient::SP && k % 2 == 1 && m % 2) return false;
  }
  return true;
}

ClassicalOrbit ClassicalOrbit::make(Ambient a, Partition lambda) {
  if (!is_valid(a, lambda)) {
    const std::string why = a == Ambient::SO   ? "even parts must occur with even multiplicity"
                            : a == Ambient::SP ? "odd parts must occur with even multiplicity"
                                               : "partition must be nonempty";
    throw InvalidInput(lambda.to_string() + " is not a nilpotent orbit of " + ambient_prefix(a) +
                       std::to_string(lambda.total()) + ": " + why);
  }
  return {a, std::move(lambda)};
}

std::string ClassicalOrbit::ambient_name() const { return ambient_prefix(ambient) + std::to_string(n()); }

std::vector<ClassicalOrbit> orbits_of(Ambient a, int n) {
  std::vector<ClassicalOrbit> out;
  if (a == Ambient::SP && n % 2) return out;
  for (auto& p : partitions_of(n))
    if (ClassicalOrbit::is_valid(a, p)) out.push_back({a, p});
  return out;
}

std::optional<SimpleType> ambient_simple_type(Ambient a, int n) {
  switch (a) {
    case Ambient::SL:
      if (n >= 2) return SimpleType{Family::A, n - 1};
      break;
    case Ambient::SO:
      if (n == 3) return SimpleType{Family::A, 1};
      if (n == 6) return SimpleType{Family::A, 3};
      if (n >= 5 && n % 2) return SimpleType{Family::B, n / 2};
      if (n >= 8) return SimpleType{Family::D, n / 2};
      break;
    case Ambient::SP:
      if (n == 2) return SimpleType{Family::A, 1};
      if (n == 4) return SimpleType{Family::B, 2};
      if (n >= 6 && n % 2 == 0) return SimpleType{Family::C, n / 2};
      break;
  }
  return std::nullopt;
}

long ambient_dimension(Ambient a, int n) {
  const long m = n;
  switch (a) {
    case Ambient::SL: return m * m - 1;
    case Ambient::SO: return m * (m - 1) / 2;
    case Ambient::SP: return m * (m + 1) / 2;
  }
  return 0;
}

std::vector<int> characteristic_values(const Partition& lambda) {
  std::vector<int> h;
  for (int p : lambda.parts())
    for (int v = p - 1; v >= 1 - p; v -= 2) h.push_back(v);
  std::sort(h.begin(), h.end(), std::greater<>());
  return h;
}

WeightedDynkinDiagram wdd_from_partition(const ClassicalOrbit& o) {
  const int n = o.n();
  const auto t = ambient_simple_type(o.ambient, n);
  if (!t)
    throw Unsupported(o.ambient_name() + " is not simple; no weighted Dynkin diagram");
  const std::vector<int> h = characteristic_values(o.lambda);
  std::vector<int> labels;
  auto hv = [&](int i) { return h[static_cast<std::size_t>(i)]; };
  switch (o.ambient) {
    case Ambient::SL:
      for (int i = 0; i + 1 < n; ++i) labels.push_back(hv(i) - hv(i + 1));
      break;
    case Ambient::SO: {
      const int r = n / 2;
      if (n % 2) {
        for (int i = 0; i + 1 < r; ++i) labels.push_back(hv(i) - hv(i + 1));
        labels.push_back(hv(r - 1));
      } else {
        for (int i = 0; i + 2 < r; ++i) labels.push_back(hv(i) - hv(i + 1));
        labels.push_back(hv(r - 2) - hv(r - 1));
        labels.push_back(hv(r - 2) + hv(r - 1));
        if (r == 3) labels = {labels[1], labels[0], labels[2]};
      }
      break;
    }
    case Ambient::SP: {
      const int r = n / 2;
      for (int i = 0; i + 1 < r; ++i) labels.push_back(hv(i) - hv(i + 1));
      labels.push_back(2 * hv(r - 1));
      if (r == 2) labels = {labels[1], labels[0]};
      break;
    }
  }
  return WeightedDynkinDiagram::make(*t, std::move(labels));
}

bool is_even(const ClassicalOrbit& o) { return o.lambda.same_parity(); }

ReductiveAlgebra reductive_type(const ClassicalOrbit& o) {
  ReductiveAlgebra red;
  const auto mult = o.lambda.multiplicities();
  switch (o.ambient) {
    case Ambient::SL:
      for (auto [k, m] : mult) red.add_matrix(MatrixFamily::SL, m);
      red.add_torus(static_cast<int>(mult.size()) - 1);
      break;
    case Ambient::SO:
      for (auto [k, m] : mult) red.add_matrix(k % 2 ? MatrixFamily::SO : MatrixFamily::SP, m);
      break;
    case Ambient::SP:
      for (auto [k, m] : mult) red.add_matrix(k % 2 ? MatrixFamily::SP : MatrixFamily::SO, m);
      break;
  }
  return red;
}

CentralizerDims centralizer_dims(const ClassicalOrbit& o) {
  long sq = 0;
  const Partition dual = o.lambda.dual();
  for (int d : dual.parts()) sq += static_cast<long>(d) * d;
  const long odd = std::count_if(o.lambda.parts().begin(), o.lambda.parts().end(), [](int p) { return p % 2; });
  long total = 0;
  switch (o.ambient) {
    case Ambient::SL: total = sq - 1; break;
    case Ambient::SO: total = (sq - odd) / 2; break;
    case Ambient::SP: total = (sq + odd) / 2; break;
  }
  const long red = reductive_type(o).dimension();
  return {total, red, total - red};
}

bool is_distinguished(const ClassicalOrbit& o) { return reductive_type(o).is_zero(); }
bool is_almost_distinguished(const ClassicalOrbit& o) { return reductive_type(o).is_toral(); }

bool is_divisible(const ClassicalOrbit& o) {
  const auto& p = o.lambda.parts();
  if (!o.lambda.all_odd()) return false;
  switch (o.ambient) {
    case Ambient::SL:
      return true;
    case Ambient::SP:
      for (auto [k, m] : o.lambda.multiplicities())
        if (m % 2) return false;
      return true;
    case Ambient::SO:
      for (std::size_t k = 0; k < p.size(); k += 2) {
        const int a = p[k];
        const int b = k + 1 < p.size() ? p[k + 1] : 0;
        if (a == 1) break;
        if (a % 4 == 3 && b != a) return false;
        if (a % 4 == 1 && b != a && b != a - 2) return false;
      }
      return true;
  }
  return false;
}

ClassicalOrbit half_orbit(const ClassicalOrbit& o) {
  if (o.ambient == Ambient::SP)
    throw Unsupported("no closed-form half-orbit rule for sp; use the matrix oracle search");
  if (!is_divisible(o)) throw PreconditionViolation(o.lambda.to_string() + " is not divisible in " + o.ambient_name());
  std::vector<int> out;
  auto push = [&](std::initializer_list<int> xs) {
    for (int x : xs)
      if (x > 0) out.push_back(x);
  };
  const auto& p = o.lambda.parts();
  if (o.ambient == Ambient::SL) {
    for (int part : p) push({(part - 1) / 2 + 1, (part - 1) / 2});
  } else {
    for (std::size_t k = 0; k < p.size(); k += 2) {
      const int a = p[k];
      if (a == 1) {
        for (std::size_t j = k; j < p.size(); ++j) out.push_back(1);
        break;
      }
      const int b = p[k + 1];
      if (a % 4 == 3) {
        const int m = (a - 3) / 4;
        push({2 * m + 2, 2 * m + 2, 2 * m + 1, 2 * m + 1});
      } else if (b == a) {
        const int m = (a - 1) / 4;
        push({2 * m + 1, 2 * m + 1, 2 * m, 2 * m});
      } else {
        const int m = (a - 1) / 4;
        push({2 * m + 1, 2 * m, 2 * m, 2 * m - 1});
      }
    }
  }
  return ClassicalOrbit::make(o.ambient, Partition(std::move(out)));
}

}  // namespace nilmix
