#include "nilmix/reductive.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "nilmix/errors.hpp"

namespace nilmix {

SimpleType canonical_simple(Family f, int rank) {
  if ((f == Family::B || f == Family::C) && rank == 1) return {Family::A, 1};
  if (f == Family::C && rank == 2) return {Family::B, 2};
  if (f == Family::D && rank == 3) return {Family::A, 3};
  return SimpleType::make(f, rank);
}

ReductiveAlgebra& ReductiveAlgebra::add_simple(SimpleType t) {
  simple_.push_back(canonical_simple(t.family, t.rank));
  normalise();
  return *this;
}

ReductiveAlgebra& ReductiveAlgebra::add_torus(int dim) {
  if (dim < 0) throw InvalidInput("negative torus dimension");
  torus_ += dim;
  return *this;
}

ReductiveAlgebra& ReductiveAlgebra::add_matrix(MatrixFamily f, int n) {
  if (n < 0) throw InvalidInput("negative matrix size");
  switch (f) {
    case MatrixFamily::GL:
      if (n >= 1) torus_ += 1;
      [[fallthrough]];
    case MatrixFamily::SL:
      if (n >= 2) simple_.push_back({Family::A, n - 1});
      break;
    case MatrixFamily::SO:
      if (n == 2) {
        torus_ += 1;
      } else if (n == 4) {
        simple_.push_back({Family::A, 1});
        simple_.push_back({Family::A, 1});
      } else if (n >= 3) {
        simple_.push_back(canonical_simple(n % 2 ? Family::B : Family::D, n / 2));
      }
      break;
    case MatrixFamily::SP:
      if (n % 2) throw InvalidInput("sp_n needs even n, got " + std::to_string(n));
      if (n >= 2) simple_.push_back(canonical_simple(Family::C, n / 2));
      break;
  }
  normalise();
  return *this;
}

ReductiveAlgebra& ReductiveAlgebra::add(const ReductiveAlgebra& other) {
  simple_.insert(simple_.end(), other.simple_.begin(), other.simple_.end());
  torus_ += other.torus_;
  normalise();
  return *this;
}

void ReductiveAlgebra::normalise() {
  std::sort(simple_.begin(), simple_.end(), [](const SimpleType& a, const SimpleType& b) {
    if (a.dimension() != b.dimension()) return a.dimension() > b.dimension();
    return a.family < b.family;
  });
}

long ReductiveAlgebra::dimension() const {
  long d = torus_;
  for (const auto& s : simple_) d += s.dimension();
  return d;
}

int ReductiveAlgebra::rank() const {
  int r = torus_;
  for (const auto& s : simple_) r += s.rank;
  return r;
}

std::string ReductiveAlgebra::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& s : simple_) {
    if (!out.empty()) out += "+";
    out += s.name();
  }
  if (torus_ > 0) {
    if (!out.empty()) out += "+";
    out += "t" + std::to_string(torus_);
  }
  return out;
}

ReductiveAlgebra ReductiveAlgebra::parse(std::string_view text) {
  ReductiveAlgebra out;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "0" || s == "{0}") return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('+', pos);
    if (next == std::string::npos) next = s.size();
    std::string tok = s.substr(pos, next - pos);
    if (tok.empty()) throw InvalidInput("empty factor in '" + std::string(text) + "'");
    if (tok.front() == '~') tok.erase(0, 1);
    int mult = 1;
    std::size_t i = 0;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i > 0 && i < tok.size()) {
      std::from_chars(tok.data(), tok.data() + i, mult);
      tok.erase(0, i);
    }
    if (!tok.empty() && tok.back() == '~') tok.pop_back();
    if (tok.size() >= 2 && (tok[0] == 't' || tok[0] == 'T')) {
      int k = 0;
      auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), k);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw InvalidInput("bad torus factor '" + tok + "'");
      out.add_torus(k * mult);
    } else {
      const SimpleType raw = [&] {
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
        int r = 0;
        auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), r);
        if (tok.size() < 2 || c < 'A' || c > 'G' || ec != std::errc() || p != tok.data() + tok.size())
          throw InvalidInput("bad factor '" + tok + "' in '" + std::string(text) + "'");
        return SimpleType{static_cast<Family>(c - 'A'), r};
      }();
      for (int k = 0; k < mult; ++k) {
        if (raw.family == Family::D && raw.rank == 2) {
          out.simple_.push_back({Family::A, 1});
          out.simple_.push_back({Family::A, 1});
        } else {
          out.simple_.push_back(canonical_simple(raw.family, raw.rank));
        }
      }
    }
    pos = next + 1;
  }
  out.normalise();
  return out;
}

}  // namespace nilmix
