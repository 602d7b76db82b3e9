#include "nilmix/render.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "nilmix/root_system.hpp"

namespace nilmix {

namespace {

// Display width in terminal cells; the diagram symbols are single-width multibyte characters.
std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

std::string bond(const RootSystem& rs, int i, int j) {
  const int a = rs.form(i, i), b = rs.form(j, j);
  const int ratio = std::max(a, b) / std::min(a, b);
  if (ratio == 1) return "---";
  const char* line = ratio == 2 ? "=" : "≡";
  return fmt::format("{}{}{}", line, a > b ? ">" : "<", line);
}

}  // namespace

std::string render_dynkin(SimpleType t, const std::vector<std::string>& labels) {
  const RootSystem& rs = root_system(t);
  const int r = t.rank;
  std::vector<std::string> cell(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    const std::string& l = labels.at(static_cast<std::size_t>(i));
    const bool short_root = !rs.is_long(i);
    cell[static_cast<std::size_t>(i)] = short_root ? "(" + l + ")" : l;
  }
  int hang = -1, attach = -1;
  if (t.family == Family::D) hang = r - 1, attach = r - 3;
  if (t.family == Family::E) hang = r - 1, attach = r - 4;
  std::string chain;
  std::size_t attach_col = 0;
  int prev = -1;
  for (int i = 0; i < r; ++i) {
    if (i == hang) continue;
    if (prev >= 0) chain += bond(rs, prev, i);
    if (i == attach) attach_col = width(chain);
    chain += cell[static_cast<std::size_t>(i)];
    prev = i;
  }
  std::string out = chain + "\n";
  if (hang >= 0) {
    out += std::string(attach_col, ' ') + "|\n";
    out += std::string(attach_col, ' ') + cell[static_cast<std::size_t>(hang)] + "\n";
  }
  return out;
}

std::string render_wdd(const WeightedDynkinDiagram& w) {
  std::vector<std::string> labels;
  for (int l : w.labels) labels.push_back(std::to_string(l));
  return render_dynkin(w.type, labels);
}

std::string render_satake(const SatakeDiagram& s) {
  std::vector<std::string> labels;
  for (int i = 0; i < s.type.rank; ++i) labels.push_back(s.is_white(i) ? "○" : "●");
  std::string out = render_dynkin(s.type, labels);
  if (!s.arrows.empty()) {
    out += "arrows:";
    for (auto [a, b] : s.arrows) out += fmt::format(" {}<->{}", a + 1, b + 1);
    out += "\n";
  }
  return out;
}

std::string render_grid(const MixedGrading& g) {
  const int top = std::max({g.max_degree(0), g.max_degree(1), 0});
  bool odd = false;
  for (int j = 0; j < 2; ++j)
    for (auto [i, d] : g.row(j))
      if (i % 2) odd = true;
  std::vector<int> cols;
  for (int i = 0; i <= top; i += odd ? 1 : 2) cols.push_back(i);
  auto cell = [&](int j, int i) {
    const std::string v = std::to_string(g.d(j, i));
    return (j == 0 && i == 0) || (j == 1 && i == 4) ? "[" + v + "]" : v;
  };
  std::size_t w = 3;
  for (int i : cols) w = std::max({w, std::to_string(i).size(), cell(0, i).size(), cell(1, i).size()});
  std::string out = "  i    |";
  for (int i : cols) out += fmt::format(" {:>{}}", i, w);
  out += "\n-------+" + std::string(cols.size() * (w + 1), '-') + "\n";
  for (int j = 0; j < 2; ++j) {
    out += fmt::format(" d{}(i) |", j);
    for (int i : cols) out += fmt::format(" {:>{}}", cell(j, i), w);
    out += "\n";
  }
  return out;
}

}  // namespace nilmix
