#include "nilmix/involution.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "nilmix/errors.hpp"
#include "nilmix/exceptional_data.hpp"

namespace nilmix {

SatakeDiagram SatakeDiagram::make(SimpleType type, std::vector<int> black, std::vector<std::pair<int, int>> arrows) {
  std::set<int> used;
  auto use = [&](int v) {
    if (v < 0 || v >= type.rank) throw InvalidInput("Satake node out of range for " + type.name());
    if (!used.insert(v).second) throw InvalidInput("Satake node used twice in " + type.name());
  };
  for (int b : black) use(b);
  for (auto& [a, b] : arrows) {
    if (a == b) throw InvalidInput("Satake arrow must join distinct nodes");
    if (a > b) std::swap(a, b);
    use(a);
    use(b);
  }
  std::sort(black.begin(), black.end());
  std::sort(arrows.begin(), arrows.end());
  return {type, std::move(black), std::move(arrows)};
}

bool SatakeDiagram::has_ibn() const {
  const RootSystem& rs = root_system(type);
  for (int a : black)
    for (int b : black)
      if (rs.adjacent(a, b)) return false;
  return true;
}

bool SatakeDiagram::is_white(int node) const { return !std::binary_search(black.begin(), black.end(), node); }

std::pair<Ambient, int> natural_ambient(SimpleType t) {
  switch (t.family) {
    case Family::A: return {Ambient::SL, t.rank + 1};
    case Family::B: return {Ambient::SO, 2 * t.rank + 1};
    case Family::C: return {Ambient::SP, 2 * t.rank};
    case Family::D: return {Ambient::SO, 2 * t.rank};
    default: throw Unsupported(t.name() + " has no classical natural module");
  }
}

std::string SymmetricPair::descriptor() const { return g.name() + "/" + g0_label; }

bool same_class(const SymmetricPair& a, const SymmetricPair& b) {
  return a.g == b.g && a.shape == b.shape && a.n == b.n && a.p == b.p && a.q == b.q && a.g0_label == b.g0_label;
}

namespace {

std::vector<int> range(int from, int to) {  // 1-based inclusive, converted to 0-based
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(i - 1);
  return out;
}

std::vector<int> odd_nodes(int upto) {  // 1,3,5,... <= upto, 0-based
  std::vector<int> out;
  for (int i = 1; i <= upto; i += 2) out.push_back(i - 1);
  return out;
}

SymmetricPair finish(SimpleType g, PairShape shape, Ambient amb, int n, int p, int q, std::string label,
                     ReductiveAlgebra g0, bool inner, std::vector<int> black,
                     std::vector<std::pair<int, int>> arrows) {
  SymmetricPair out;
  out.g = g;
  out.shape = shape;
  out.ambient = amb;
  out.n = n;
  out.p = p;
  out.q = q;
  out.g0_label = std::move(label);
  out.g0 = std::move(g0);
  out.inner = inner;
  out.satake = SatakeDiagram::make(g, std::move(black), std::move(arrows));
  out.dim_g0 = out.g0.dimension();
  out.dim_g1 = g.dimension() - out.dim_g0;
  return out;
}

std::string mat(const char* name, int k) { return std::string(name) + std::to_string(k); }

void catalog_a(SimpleType t, std::vector<SymmetricPair>& out) {
  const int n = t.rank + 1;
  if (n >= 3) {
    out.push_back(finish(t, PairShape::SlSo, Ambient::SL, n, n, 0, mat("so", n),
                         ReductiveAlgebra().add_matrix(MatrixFamily::SO, n), false, {}, {}));
    if (n % 2 == 0)
      out.push_back(finish(t, PairShape::SlSp, Ambient::SL, n, n, 0, mat("sp", n),
                           ReductiveAlgebra().add_matrix(MatrixFamily::SP, n), false, odd_nodes(n - 1), {}));
  }
  for (int p = 1; 2 * p <= n; ++p) {
    const int q = n - p;
    ReductiveAlgebra g0;
    g0.add_matrix(MatrixFamily::SL, p).add_matrix(MatrixFamily::SL, q).add_torus(1);
    std::vector<std::pair<int, int>> arrows;
    for (int i = 1; i <= (p < q ? p : p - 1); ++i) arrows.emplace_back(i - 1, n - i - 1);
    out.push_back(finish(t, PairShape::SlGlGl, Ambient::SL, n, p, q,
                         "s(gl" + std::to_string(p) + "+gl" + std::to_string(q) + ")", std::move(g0), true,
                         range(p + 1, n - p - 1), std::move(arrows)));
  }
}

SymmetricPair so_so(SimpleType t, int n, int q) {
  const int p = n - q;
  const int r = t.rank;
  ReductiveAlgebra g0;
  g0.add_matrix(MatrixFamily::SO, p).add_matrix(MatrixFamily::SO, q);
  std::vector<int> black;
  std::vector<std::pair<int, int>> arrows;
  if (n % 2 == 1 || q <= r - 2) {
    black = range(q + 1, r);
  } else if (q == r - 1) {
    arrows.emplace_back(r - 2, r - 1);
  }
  const bool inner = n % 2 == 1 || q % 2 == 0;
  return finish(t, PairShape::SoSo, Ambient::SO, n, p, q, mat("so", p) + "+" + mat("so", q), std::move(g0), inner,
                std::move(black), std::move(arrows));
}

void catalog_b(SimpleType t, std::vector<SymmetricPair>& out) {
  const int n = 2 * t.rank + 1;
  for (int q = 1; q <= t.rank; ++q) out.push_back(so_so(t, n, q));
}

void catalog_c(SimpleType t, std::vector<SymmetricPair>& out) {
  const int r = t.rank;
  const int n = 2 * r;
  out.push_back(finish(t, PairShape::SpGl, Ambient::SP, n, r, r, mat("gl", r),
                       ReductiveAlgebra().add_matrix(MatrixFamily::GL, r), true, {}, {}));
  for (int k = 1; 2 * k <= r; ++k) {
    const int p = n - 2 * k, q = 2 * k;
    std::vector<int> black = odd_nodes(2 * k - 1);
    for (int i : range(2 * k + 1, r)) black.push_back(i);
    out.push_back(finish(t, PairShape::SpSp, Ambient::SP, n, p, q, mat("sp", p) + "+" + mat("sp", q),
                         ReductiveAlgebra().add_matrix(MatrixFamily::SP, p).add_matrix(MatrixFamily::SP, q), true,
                         std::move(black), {}));
  }
}

void catalog_d(SimpleType t, std::vector<SymmetricPair>& out) {
  const int r = t.rank;
  const int n = 2 * r;
  for (int q = 1; q <= r; ++q) out.push_back(so_so(t, n, q));
  if (r == 4) return;
  std::vector<int> black = odd_nodes(r % 2 ? r - 2 : r - 1);
  std::vector<std::pair<int, int>> arrows;
  if (r % 2) arrows.emplace_back(r - 2, r - 1);
  out.push_back(finish(t, PairShape::SoGl, Ambient::SO, n, r, r, mat("gl", r),
                       ReductiveAlgebra().add_matrix(MatrixFamily::GL, r), true, std::move(black),
                       std::move(arrows)));
}

void catalog_exceptional(SimpleType t, std::vector<SymmetricPair>& out) {
  for (const auto& rec : exceptional_involutions()) {
    if (rec.type != t) continue;
    std::vector<int> black;
    for (int b : rec.black) black.push_back(b - 1);
    std::vector<std::pair<int, int>> arrows;
    for (auto [a, b] : rec.arrows) arrows.emplace_back(a - 1, b - 1);
    out.push_back(finish(t, PairShape::Exceptional, Ambient::SL, 0, 0, 0, rec.g0, ReductiveAlgebra::parse(rec.g0),
                         rec.inner, std::move(black), std::move(arrows)));
  }
}

}  // namespace

std::vector<SymmetricPair> catalog(SimpleType t) {
  t = SimpleType::make(t.family, t.rank);
  std::vector<SymmetricPair> out;
  switch (t.family) {
    case Family::A: catalog_a(t, out); break;
    case Family::B: catalog_b(t, out); break;
    case Family::C: catalog_c(t, out); break;
    case Family::D: catalog_d(t, out); break;
    default: catalog_exceptional(t, out); break;
  }
  return out;
}

SymmetricPair maximal_rank(SimpleType t) {
  for (auto& p : catalog(t))
    if (p.signature() == t.rank) return p;
  throw std::logic_error("no maximal-rank involution in the catalog of " + t.name());
}

SymmetricPair pi_involution(SimpleType t) {
  const auto all = catalog(t);
  auto pick = [&](auto pred) {
    for (const auto& p : all)
      if (pred(p)) return p;
    throw std::logic_error("principal inner involution missing from the catalog of " + t.name());
  };
  const int r = t.rank;
  switch (t.family) {
    case Family::A:
      return pick([&](const SymmetricPair& p) { return p.shape == PairShape::SlGlGl && p.p == (r + 1) / 2; });
    case Family::B:
      return pick([&](const SymmetricPair& p) { return p.q == r; });
    case Family::C:
      return pick([&](const SymmetricPair& p) { return p.shape == PairShape::SpGl; });
    case Family::D:
      return pick([&](const SymmetricPair& p) { return p.shape == PairShape::SoSo && p.q == (r % 2 ? r - 1 : r); });
    default: {
      const char* g0 = r == 6 && t.family == Family::E ? "A5+A1"
                       : r == 7                        ? "A7"
                       : r == 8                        ? "D8"
                       : t.family == Family::F         ? "C3+A1"
                                                       : "A1+A1";
      return pick([&](const SymmetricPair& p) { return p.g0_label == g0; });
    }
  }
}

int ibn_signature(const SatakeDiagram& s) {
  if (!s.has_ibn()) throw PreconditionViolation("Satake diagram of " + s.type.name() + " has adjacent black nodes");
  return s.type.rank - 2 * static_cast<int>(s.arrows.size()) - 4 * static_cast<int>(s.black.size());
}

SymmetricPair identify_ibn(SimpleType t, long signature, InnerFilter filter) {
  std::vector<SymmetricPair> hits;
  std::string available;
  for (auto& p : catalog(t)) {
    if (filter == InnerFilter::Inner && !p.inner) continue;
    if (filter == InnerFilter::Outer && p.inner) continue;
    if (!p.satake.has_ibn()) continue;
    available += (available.empty() ? "" : ", ") + p.g0_label + ":" + std::to_string(p.signature());
    if (p.signature() == signature) hits.push_back(p);
  }
  if (hits.size() != 1)
    throw LookupFailure("no unique IBN involution of " + t.name() + " with dim g1 - dim g0 = " +
                        std::to_string(signature) + "; available: " + (available.empty() ? "none" : available));
  return hits.front();
}

bool so_pair_ibn(int n, int m) {
  if (n < 1 || m < 1) throw InvalidInput("so_pair_ibn needs n, m >= 1");
  return std::abs(n - m) <= 4;
}

bool orbit_meets_g1(const WeightedDynkinDiagram& wdd, const SatakeDiagram& s) {
  if (!(wdd.type == s.type))
    throw InvalidInput("type mismatch: WDD of " + wdd.type.name() + " vs Satake diagram of " + s.type.name());
  for (int b : s.black)
    if (wdd.labels[static_cast<std::size_t>(b)] != 0) return false;
  for (auto [a, b] : s.arrows)
    if (wdd.labels[static_cast<std::size_t>(a)] != wdd.labels[static_cast<std::size_t>(b)]) return false;
  return true;
}

WeightedDynkinDiagram max_orbit_meeting_g1(const SatakeDiagram& s) {
  std::vector<int> labels(static_cast<std::size_t>(s.type.rank), 2);
  for (int b : s.black) labels[static_cast<std::size_t>(b)] = 0;
  return WeightedDynkinDiagram::make(s.type, std::move(labels));
}

namespace {

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 0)
    throw InvalidInput("cannot parse number in '" + std::string(whole) + "'");
  return v;
}

SimpleType parse_ambient(std::string_view raw) {
  const std::string s = lower(raw);
  for (auto [prefix, amb] : {std::pair{"sl", Ambient::SL}, {"so", Ambient::SO}, {"sp", Ambient::SP}}) {
    if (s.rfind(prefix, 0) == 0 && s.size() > 2 && std::isdigit(static_cast<unsigned char>(s[2]))) {
      const int n = parse_int(std::string_view(s).substr(2), raw);
      auto t = ambient_simple_type(amb, n);
      if (!t) throw InvalidInput(std::string(raw) + " is not a simple Lie algebra");
      return *t;
    }
  }
  return SimpleType::parse(raw);
}

// Splits on '+' outside parentheses.
std::vector<std::string> split_factors(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

ReductiveAlgebra parse_g0(std::string_view raw) {
  const std::string s = lower(raw);
  ReductiveAlgebra out;
  for (std::string f : split_factors(s)) {
    if (f.rfind("s(", 0) == 0 && f.back() == ')') {
      const auto inner = split_factors(f.substr(2, f.size() - 3));
      ReductiveAlgebra gl;
      for (const auto& g : inner) gl.add(parse_g0(g));
      if (gl.center_dim() < static_cast<int>(inner.size()) - 1 + 1)
        throw InvalidInput("s(...) expects gl factors in '" + std::string(raw) + "'");
      ReductiveAlgebra trimmed;
      for (const auto& st : gl.simple_factors()) trimmed.add_simple(st);
      trimmed.add_torus(gl.center_dim() - 1);
      out.add(trimmed);
      continue;
    }
    bool matched = false;
    for (auto [prefix, fam] : {std::pair{"sl", MatrixFamily::SL}, {"gl", MatrixFamily::GL},
                               {"so", MatrixFamily::SO}, {"sp", MatrixFamily::SP}}) {
      if (f.rfind(prefix, 0) == 0 && f.size() > 2 && std::isdigit(static_cast<unsigned char>(f[2]))) {
        out.add_matrix(fam, parse_int(std::string_view(f).substr(2), raw));
        matched = true;
        break;
      }
    }
    if (!matched) out.add(ReductiveAlgebra::parse(f));
  }
  return out;
}

}  // namespace

SymmetricPair find_pair(std::string_view descriptor) {
  std::string d(descriptor);
  bool diagram = false;
  const std::string suffix = "-diagram";
  if (d.size() > suffix.size() && d.compare(d.size() - suffix.size(), suffix.size(), suffix) == 0) {
    diagram = true;
    d.resize(d.size() - suffix.size());
  }
  const auto slash = d.find('/');
  if (slash == std::string::npos)
    throw InvalidInput("pair descriptor must look like <type>/<g0>[-diagram], got '" + std::string(descriptor) + "'");
  const SimpleType t = parse_ambient(d.substr(0, slash));
  const ReductiveAlgebra g0 = parse_g0(d.substr(slash + 1));
  std::vector<SymmetricPair> hits;
  std::string available;
  for (auto& p : catalog(t)) {
    available += (available.empty() ? "" : ", ") + p.g0_label + (p.inner ? "" : " (outer)");
    if (p.g0 == g0 && (!diagram || !p.inner)) hits.push_back(p);
  }
  if (hits.empty())
    throw LookupFailure("no involution of " + t.name() + " with fixed algebra " + g0.to_string() +
                        (diagram ? " (outer)" : "") + "; available: " + available);
  if (hits.size() > 1)
    throw LookupFailure("descriptor '" + std::string(descriptor) + "' is ambiguous in " + t.name());
  return hits.front();
}

}  // namespace nilmix
