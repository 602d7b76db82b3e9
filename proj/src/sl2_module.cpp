#include "nilmix/sl2_module.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "nilmix/errors.hpp"

namespace nilmix {

SL2Module SL2Module::irreducible(int k, long long mult) {
  if (k < 0) throw InvalidInput("negative highest weight " + std::to_string(k));
  if (mult < 0) throw InvalidInput("negative multiplicity");
  SL2Module m;
  if (mult > 0) m.mult_[k] = mult;
  return m;
}

SL2Module SL2Module::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  SL2Module out;
  if (s.empty() || s == "0") return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('+', pos);
    if (next == std::string::npos) next = s.size();
    const std::string tok = s.substr(pos, next - pos);
    const auto bad = [&] { return InvalidInput("cannot parse sl2-module term '" + tok + "'"); };
    long long mult = 1;
    std::size_t r = tok.find_first_of("Rr");
    if (r == std::string::npos) throw bad();
    if (r > 0) {
      std::string prefix = tok.substr(0, r);
      if (prefix.back() == '*') prefix.pop_back();
      auto [p, ec] = std::from_chars(prefix.data(), prefix.data() + prefix.size(), mult);
      if (ec != std::errc() || p != prefix.data() + prefix.size()) throw bad();
    }
    int k = 0;
    auto [p, ec] = std::from_chars(tok.data() + r + 1, tok.data() + tok.size(), k);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw bad();
    out += irreducible(k, mult);
    pos = next + 1;
  }
  return out;
}

long long SL2Module::multiplicity(int k) const {
  auto it = mult_.find(k);
  return it == mult_.end() ? 0 : it->second;
}

long long SL2Module::dimension() const {
  long long d = 0;
  for (auto [k, m] : mult_) d += m * (k + 1);
  return d;
}

long long SL2Module::length() const {
  long long n = 0;
  for (auto [k, m] : mult_) n += m;
  return n;
}

int SL2Module::max_weight() const { return mult_.empty() ? -1 : mult_.rbegin()->first; }

bool SL2Module::all_even() const {
  return std::all_of(mult_.begin(), mult_.end(), [](const auto& kv) { return kv.first % 2 == 0; });
}

bool SL2Module::all_odd() const {
  return std::all_of(mult_.begin(), mult_.end(), [](const auto& kv) { return kv.first % 2 == 1; });
}

SL2Module& SL2Module::operator+=(const SL2Module& other) {
  for (auto [k, m] : other.mult_) mult_[k] += m;
  return *this;
}

SL2Module SL2Module::scaled(long long factor) const {
  if (factor < 0) throw InvalidInput("negative scale factor");
  SL2Module out;
  if (factor == 0) return out;
  for (auto [k, m] : mult_) out.mult_[k] = m * factor;
  return out;
}

SL2Module SL2Module::minus(const SL2Module& other) const {
  SL2Module out = *this;
  for (auto [k, m] : other.mult_) {
    auto it = out.mult_.find(k);
    if (it == out.mult_.end() || it->second < m)
      throw PreconditionViolation("R" + std::to_string(k) + " does not occur with multiplicity " +
                                  std::to_string(m) + " in " + to_string());
    it->second -= m;
    if (it->second == 0) out.mult_.erase(it);
  }
  return out;
}

std::string SL2Module::to_string() const {
  if (mult_.empty()) return "0";
  std::string out;
  for (auto [k, m] : mult_) {
    if (!out.empty()) out += "+";
    if (m != 1) out += std::to_string(m) + "*";
    out += "R" + std::to_string(k);
  }
  return out;
}

namespace {

void add_tensor_irreducibles(std::map<int, long long>& acc, int a, int b, long long mult) {
  for (int k = 0; k <= std::min(a, b); ++k) acc[a + b - 2 * k] += mult;
}

SL2Module from_map(std::map<int, long long> m) {
  SL2Module out;
  for (auto [k, v] : m)
    if (v > 0) out += SL2Module::irreducible(k, v);
  return out;
}

// Sym^2 (sym = true) or Lambda^2 of a single R_m.
void add_square_irreducible(std::map<int, long long>& acc, int m, bool sym, long long mult) {
  for (int k = sym ? 2 * m : 2 * m - 2; k >= 0; k -= 4) acc[k] += mult;
}

SL2Module square(const SL2Module& a, bool sym) {
  std::map<int, long long> acc;
  const auto& t = a.terms();
  for (auto it = t.begin(); it != t.end(); ++it) {
    const auto [k, m] = *it;
    add_square_irreducible(acc, k, sym, m);
    add_tensor_irreducibles(acc, k, k, m * (m - 1) / 2);
    for (auto jt = std::next(it); jt != t.end(); ++jt) add_tensor_irreducibles(acc, k, jt->first, m * jt->second);
  }
  return from_map(std::move(acc));
}

}  // namespace

SL2Module tensor(const SL2Module& a, const SL2Module& b) {
  std::map<int, long long> acc;
  for (auto [ka, ma] : a.terms())
    for (auto [kb, mb] : b.terms()) add_tensor_irreducibles(acc, ka, kb, ma * mb);
  return from_map(std::move(acc));
}

SL2Module sym2(const SL2Module& a) { return square(a, true); }
SL2Module alt2(const SL2Module& a) { return square(a, false); }

long long eigen_dim(const SL2Module& m, int i) {
  const int a = std::abs(i);
  long long d = 0;
  for (auto [k, v] : m.terms())
    if (k >= a && (k - a) % 2 == 0) d += v;
  return d;
}

long long signed_count(const SL2Module& m, SignRule rule) {
  long long s = 0;
  for (auto [k, v] : m.terms()) {
    if (k % 2) throw PreconditionViolation("signed count needs even highest weights; found R" + std::to_string(k));
    s += ((k / 2) % 2 == 0) ? v : -v;
  }
  return rule == SignRule::EvenPlus ? s : -s;
}

}  // namespace nilmix
