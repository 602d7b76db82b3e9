#include "nilmix/matrix_oracle.hpp"

#include <algorithm>
#include <map>

#include "nilmix/errors.hpp"
#include "nilmix/mixed_grading.hpp"

namespace nilmix {

namespace {

struct Block {
  int d;
  bool paired;
};

void place_block(Triple& t, int o, int d) {
  for (int k = 0; k < d; ++k) {
    t.h(o + k, o + k) = d - 1 - 2 * k;
    if (k + 1 < d) t.f(o + k + 1, o + k) = 1;
    if (k > 0) t.e(o + k - 1, o + k) = static_cast<long long>(k) * (d - k);
  }
}

std::vector<long long> flat(const IntMatrix& m) { return m.data(); }

int weight_of(const std::vector<int>& w, int a, int b) { return w[static_cast<std::size_t>(a)] - w[static_cast<std::size_t>(b)]; }

FormedTriple diag_sum(const FormedTriple& a, const FormedTriple& b, Ambient amb) {
  FormedTriple out;
  out.ambient = amb;
  out.triple = {direct_sum(a.triple.e, b.triple.e), direct_sum(a.triple.h, b.triple.h),
                direct_sum(a.triple.f, b.triple.f)};
  if (a.gram.rows() || b.gram.rows()) out.gram = direct_sum(a.gram, b.gram);
  return out;
}

IntMatrix sign_diag(int p, int q) {
  IntMatrix d(p + q, p + q);
  for (int i = 0; i < p + q; ++i) d(i, i) = i < p ? 1 : -1;
  return d;
}

// Image dimension of a map on g, computed weight by weight (ad e shifts weights by 2).
template <class F>
long image_dim(const WeightBasis& basis, F&& map) {
  std::map<int, std::vector<std::vector<long long>>> by_weight;
  for (std::size_t k = 0; k < basis.elements.size(); ++k)
    by_weight[basis.weights[k]].push_back(flat(map(basis.elements[k])));
  long rank = 0;
  for (const auto& [w, rows] : by_weight) rank += exact_rank(rows);
  return rank;
}

}  // namespace

FormedTriple natural_triple(Ambient a, const Partition& lambda) {
  if (!ClassicalOrbit::is_valid(a, lambda))
    throw InvalidInput(lambda.to_string() + " is not a valid partition for " + ambient_prefix(a));
  const int n = lambda.total();
  std::vector<Block> blocks;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int d = parts[i];
    const bool needs_pair = (a == Ambient::SO && d % 2 == 0) || (a == Ambient::SP && d % 2 == 1);
    blocks.push_back({d, needs_pair});
    if (needs_pair) ++i;
  }
  FormedTriple ft;
  ft.ambient = a;
  ft.triple = {IntMatrix(n, n), IntMatrix(n, n), IntMatrix(n, n)};
  if (a != Ambient::SL) ft.gram = IntMatrix(n, n);
  const long long eps = a == Ambient::SO ? 1 : -1;
  int o = 0;
  for (const Block& b : blocks) {
    const int d = b.d;
    place_block(ft.triple, o, d);
    if (b.paired) place_block(ft.triple, o + d, d);
    if (a != Ambient::SL) {
      for (int k = 0; k < d; ++k) {
        const long long s = k % 2 ? -1 : 1;
        if (!b.paired) {
          ft.gram(o + k, o + d - 1 - k) = s;
        } else {
          ft.gram(o + k, o + d + d - 1 - k) = s;
          ft.gram(o + d + d - 1 - k, o + k) = eps * s;
        }
      }
    }
    o += b.paired ? 2 * d : d;
  }
  return ft;
}

bool triple_relations_hold(const Triple& t) {
  return commutator(t.h, t.e) == 2 * t.e && commutator(t.h, t.f) == -2 * t.f && commutator(t.e, t.f) == t.h;
}

bool preserves_form(const IntMatrix& x, const IntMatrix& gram) {
  if (gram.rows() == 0) {
    long long tr = 0;
    for (int i = 0; i < x.rows(); ++i) tr += x(i, i);
    return tr == 0;
  }
  return (x.transpose() * gram + gram * x).is_zero();
}

WeightBasis lie_basis(const FormedTriple& ft) {
  const int n = ft.triple.h.rows();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = static_cast<int>(ft.triple.h(i, i));
  WeightBasis out;
  if (ft.ambient == Ambient::SL) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        out.elements.push_back(IntMatrix::unit(n, a, b));
        out.weights.push_back(weight_of(w, a, b));
      }
    for (int a = 0; a + 1 < n; ++a) {
      out.elements.push_back(IntMatrix::unit(n, a, a) - IntMatrix::unit(n, a + 1, a + 1));
      out.weights.push_back(0);
    }
    return out;
  }
  // X = G^{-1} S with S skew (orthogonal) or symmetric (symplectic); G is a signed permutation.
  const IntMatrix ginv = ft.gram.transpose();
  const bool so = ft.ambient == Ambient::SO;
  for (int a = 0; a < n; ++a)
    for (int b = so ? a + 1 : a; b < n; ++b) {
      IntMatrix s = IntMatrix::unit(n, a, b);
      if (a != b) s = so ? s - IntMatrix::unit(n, b, a) : s + IntMatrix::unit(n, b, a);
      out.elements.push_back(ginv * s);
      out.weights.push_back(-w[static_cast<std::size_t>(a)] - w[static_cast<std::size_t>(b)]);
    }
  return out;
}

long oracle_centralizer_dim(Ambient a, const Partition& lambda) {
  const FormedTriple ft = natural_triple(a, lambda);
  const WeightBasis basis = lie_basis(ft);
  const IntMatrix& e = ft.triple.e;
  return static_cast<long>(basis.elements.size()) -
         image_dim(basis, [&](const IntMatrix& x) { return commutator(e, x); });
}

long oracle_ker_ad_squared(Ambient a, const Partition& lambda) {
  const FormedTriple ft = natural_triple(a, lambda);
  const WeightBasis basis = lie_basis(ft);
  const IntMatrix& e = ft.triple.e;
  return static_cast<long>(basis.elements.size()) -
         image_dim(basis, [&](const IntMatrix& x) { return commutator(e, commutator(e, x)); });
}

IntMatrix InvolutionRealization::apply(const IntMatrix& x) const {
  if (transpose_type) return -1 * (form.transpose() * x.transpose() * form);
  return d * x * d;
}

InvolutionRealization realize(const SymmetricPair& pair, const std::vector<Partition>& fp) {
  auto need = [&](std::size_t k) {
    if (fp.size() != k)
      throw InvalidInput(pair.descriptor() + " needs " + std::to_string(k) + " factor partition(s)");
  };
  auto expect = [&](std::size_t i, int total) {
    if (fp[i].total() != total)
      throw InvalidInput("factor partition " + fp[i].to_string() + " does not match " + pair.descriptor());
  };
  InvolutionRealization r;
  r.pair = pair;
  switch (pair.shape) {
    case PairShape::SlSo:
    case PairShape::SlSp:
      need(1);
      expect(0, pair.n);
      r.natural = natural_triple(pair.shape == PairShape::SlSo ? Ambient::SO : Ambient::SP, fp[0]);
      r.form = r.natural.gram;
      r.natural.gram = IntMatrix();
      r.natural.ambient = Ambient::SL;
      r.transpose_type = true;
      break;
    case PairShape::SlGlGl:
    case PairShape::SoSo:
    case PairShape::SpSp: {
      need(2);
      expect(0, pair.p);
      expect(1, pair.q);
      const Ambient a = pair.ambient;
      r.natural = diag_sum(natural_triple(a, fp[0]), natural_triple(a, fp[1]), a);
      r.d = sign_diag(pair.p, pair.q);
      break;
    }
    case PairShape::SoGl:
    case PairShape::SpGl: {
      need(1);
      const int m = pair.n / 2;
      expect(0, m);
      const Triple w = natural_triple(Ambient::SL, fp[0]).triple;
      auto dual = [](const IntMatrix& x) { return -1 * x.transpose(); };
      r.natural.ambient = pair.ambient;
      r.natural.triple = {direct_sum(w.e, dual(w.e)), direct_sum(w.h, dual(w.h)), direct_sum(w.f, dual(w.f))};
      r.natural.gram = IntMatrix(2 * m, 2 * m);
      for (int i = 0; i < m; ++i) {
        r.natural.gram(i, m + i) = 1;
        r.natural.gram(m + i, i) = pair.shape == PairShape::SoGl ? 1 : -1;
      }
      r.d = sign_diag(m, m);
      break;
    }
    case PairShape::Exceptional: throw Unsupported("no matrix realisation of " + pair.descriptor());
  }
  const Triple& t = r.natural.triple;
  for (const IntMatrix* x : {&t.e, &t.h, &t.f}) {
    if (!(r.apply(*x) == *x)) throw std::logic_error("triple not fixed by the involution of " + pair.descriptor());
    if (!preserves_form(*x, r.natural.gram)) throw std::logic_error("triple outside g for " + pair.descriptor());
  }
  return r;
}

MixedGrading oracle_grid(const SymmetricPair& pair, const std::vector<Partition>& fp) {
  const InvolutionRealization r = realize(pair, fp);
  const WeightBasis basis = lie_basis(r.natural);
  std::map<int, std::vector<std::vector<long long>>> plus, minus;
  for (std::size_t k = 0; k < basis.elements.size(); ++k) {
    const IntMatrix& b = basis.elements[k];
    const IntMatrix s = r.apply(b);
    plus[basis.weights[k]].push_back(flat(b + s));
    minus[basis.weights[k]].push_back(flat(b - s));
  }
  MixedGrading g;
  for (const auto& [w, rows] : plus) g.add(0, w, exact_rank(rows));
  for (const auto& [w, rows] : minus) g.add(1, w, exact_rank(rows));
  return g;
}

MixedGrading oracle_grid(const SymmetricPair& pair) { return oracle_grid(pair, regular_factor_partitions(pair)); }

Partition sp_half_orbit(const Partition& lambda) {
  const ClassicalOrbit o = ClassicalOrbit::make(Ambient::SP, lambda);
  if (!is_divisible(o)) throw PreconditionViolation("sp orbit " + lambda.to_string() + " is not divisible");
  const FormedTriple ft = natural_triple(Ambient::SP, lambda);
  std::vector<int> half;
  for (int i = 0; i < ft.triple.h.rows(); ++i) half.push_back(static_cast<int>(ft.triple.h(i, i) / 2));
  std::sort(half.begin(), half.end());
  for (const auto& cand : orbits_of(Ambient::SP, lambda.total())) {
    std::vector<int> c = characteristic_values(cand.lambda);
    std::sort(c.begin(), c.end());
    if (c == half) return cand.lambda;
  }
  throw std::logic_error("no sp orbit with characteristic h/2 for " + lambda.to_string());
}

}  // namespace nilmix
