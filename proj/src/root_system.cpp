#include "nilmix/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "nilmix/errors.hpp"

namespace nilmix {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

SimpleType SimpleType::make(Family family, int rank) {
  const std::string name = std::string(1, family_letter(family)) + std::to_string(rank);
  switch (family) {
    case Family::A:
      if (rank < 1) throw InvalidInput("type A needs rank >= 1, got " + name);
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) throw InvalidInput("types B and C need rank >= 2 (use A1), got " + name);
      break;
    case Family::D:
      if (rank < 4)
        throw InvalidInput("type D needs rank >= 4 (use A1+A1 for D2, A3 for D3), got " + name);
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw InvalidInput("type E needs rank 6, 7 or 8, got " + name);
      break;
    case Family::F:
      if (rank != 4) throw InvalidInput("type F needs rank 4, got " + name);
      break;
    case Family::G:
      if (rank != 2) throw InvalidInput("type G needs rank 2, got " + name);
      break;
  }
  return SimpleType{family, rank};
}

SimpleType SimpleType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidInput("cannot parse simple type '" + std::string(text) + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (c < 'A' || c > 'G') throw InvalidInput("unknown family in '" + std::string(text) + "'");
  int rank = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), rank);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InvalidInput("cannot parse rank in '" + std::string(text) + "'");
  return make(static_cast<Family>(c - 'A'), rank);
}

std::string SimpleType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

long SimpleType::dimension() const {
  const long r = rank;
  switch (family) {
    case Family::A: return r * (r + 2);
    case Family::B:
    case Family::C: return r * (2 * r + 1);
    case Family::D: return r * (2 * r - 1);
    case Family::E: return r == 6 ? 78 : r == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

std::vector<SimpleType> all_simple_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back({Family::E, r});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool Root::is_positive() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; }) && height() > 0;
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

namespace {

std::vector<int> symmetric_form(SimpleType t) {
  const int n = t.rank;
  std::vector<int> b(static_cast<std::size_t>(n * n), 0);
  auto set = [&](int i, int j, int v) {
    b[static_cast<std::size_t>(i * n + j)] = v;
    b[static_cast<std::size_t>(j * n + i)] = v;
  };
  auto chain = [&](int from, int to, int norm) {
    for (int i = from; i <= to; ++i) set(i, i, norm);
    for (int i = from; i < to; ++i) set(i, i + 1, -norm / 2);
  };
  switch (t.family) {
    case Family::A:
      chain(0, n - 1, 2);
      break;
    case Family::B:
      chain(0, n - 2, 2);
      set(n - 1, n - 1, 1);
      set(n - 2, n - 1, -1);
      break;
    case Family::C:
      chain(0, n - 2, 2);
      set(n - 1, n - 1, 4);
      set(n - 2, n - 1, -2);
      break;
    case Family::D:
      chain(0, n - 2, 2);
      set(n - 1, n - 1, 2);
      set(n - 3, n - 1, -1);
      break;
    case Family::E:
      chain(0, n - 2, 2);
      set(n - 1, n - 1, 2);
      set(n - 4, n - 1, -1);
      break;
    case Family::F:
      chain(0, 1, 2);
      chain(2, 3, 4);
      set(1, 2, -2);
      break;
    case Family::G:
      set(0, 0, 2);
      set(1, 1, 6);
      set(0, 1, -3);
      break;
  }
  return b;
}

}  // namespace

RootSystem::RootSystem(SimpleType type) : type_(SimpleType::make(type.family, type.rank)) {
  const int n = type_.rank;
  form_ = symmetric_form(type_);

  std::set<Coeffs> seen;
  std::deque<Coeffs> queue;
  for (int i = 0; i < n; ++i) {
    Coeffs c(static_cast<std::size_t>(n), 0);
    c[static_cast<std::size_t>(i)] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    Coeffs c = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      Coeffs unit(static_cast<std::size_t>(n), 0);
      unit[static_cast<std::size_t>(j)] = 1;
      const int p = pairing(c, unit);
      if (p >= 0) continue;
      Coeffs r = c;
      r[static_cast<std::size_t>(j)] -= p;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  for (const auto& c : seen) positive_.push_back(Root{c});
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    const int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs > b.coeffs;
  });
}

long RootSystem::dimension() const {
  return type_.rank + 2 * static_cast<long>(positive_.size());
}

int RootSystem::cartan(int i, int j) const { return 2 * form(i, j) / form(j, j); }

bool RootSystem::is_long(int i) const {
  int max_norm = 0;
  for (int j = 0; j < rank(); ++j) max_norm = std::max(max_norm, form(j, j));
  return form(i, i) == max_norm;
}

std::vector<int> RootSystem::neighbours(int i) const {
  std::vector<int> out;
  for (int j = 0; j < rank(); ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

int RootSystem::inner(const Coeffs& a, const Coeffs& b) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      s += a[static_cast<std::size_t>(i)] * form(i, j) * b[static_cast<std::size_t>(j)];
  }
  return s;
}

int RootSystem::pairing(const Coeffs& a, const Coeffs& b) const { return 2 * inner(a, b) / inner(b, b); }

std::optional<std::size_t> RootSystem::find_positive(const Coeffs& c) const {
  Root key{c};
  const int h = key.height();
  auto lo = std::lower_bound(positive_.begin(), positive_.end(), h,
                             [](const Root& r, int height) { return r.height() < height; });
  for (auto it = lo; it != positive_.end() && it->height() == h; ++it)
    if (it->coeffs == c) return static_cast<std::size_t>(it - positive_.begin());
  return std::nullopt;
}

bool RootSystem::is_root(const Coeffs& c) const {
  if (find_positive(c)) return true;
  return find_positive((-Root{c}).coeffs).has_value();
}

const RootSystem& root_system(SimpleType t) {
  static std::mutex mu;
  static std::map<SimpleType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[t];
  if (!slot) slot = std::make_unique<RootSystem>(t);
  return *slot;
}

int coxeter_number(const RootSystem& rs) { return rs.highest_root().height() + 1; }

int kappa_direct(SimpleType t) {
  if (t.family == Family::D && t.rank % 2 == 0) return t.rank / 2 + 1;
  return (t.rank + 1) / 2;
}

int kappa_root_count(const RootSystem& rs) {
  const int a = (coxeter_number(rs) + 1) / 2;
  return static_cast<int>(std::count_if(rs.positive_roots().begin(), rs.positive_roots().end(),
                                        [a](const Root& r) { return r.height() == a; }));
}

std::vector<Root> principal_layer(const RootSystem& rs, int i) {
  std::vector<Root> out;
  if (i == 0) return out;
  for (const Root& r : rs.positive_roots())
    if (r.height() == std::abs(i)) out.push_back(i > 0 ? r : -r);
  return out;
}

int beta_centre_node(const RootSystem& rs) {
  const Family f = rs.type().family;
  if (f == Family::A || f == Family::C || (f == Family::B && rs.rank() < 3))
    throw PreconditionViolation("beta root is defined only when the fixed algebra of the principal "
                                "inner involution is semisimple (not types A, C); got " +
                                rs.type().name());
  for (int i = 0; i < rs.rank(); ++i) {
    const auto nb = rs.neighbours(i);
    if (f == Family::D || f == Family::E) {
      if (nb.size() == 3) return i;
    } else if (rs.is_long(i) &&
               std::any_of(nb.begin(), nb.end(), [&](int j) { return !rs.is_long(j); })) {
      return i;
    }
  }
  throw std::logic_error("no centre node found for " + rs.type().name());
}

Root beta_root(const RootSystem& rs) {
  const int d = beta_centre_node(rs);
  Root beta{Coeffs(static_cast<std::size_t>(rs.rank()), 0)};
  beta.coeffs[static_cast<std::size_t>(d)] = 1;
  for (int j : rs.neighbours(d)) beta.coeffs[static_cast<std::size_t>(j)] += rs.form(d, d) / rs.form(j, j);

  if (!rs.find_positive(beta.coeffs) || beta.height() != 4)
    throw std::logic_error("beta construction failed for " + rs.type().name());
  const auto layer2 = principal_layer(rs, 2);
  for (const Root& a : layer2)
    for (const Root& b : layer2)
      if (a + b == beta) throw std::logic_error("beta is decomposable for " + rs.type().name());
  return beta;
}

}  // namespace nilmix
