#include "nilmix/mixed_grading.hpp"

#include <algorithm>
#include <cstdlib>

#include "nilmix/errors.hpp"
#include "nilmix/exceptional_data.hpp"

namespace nilmix {

namespace {

Partition regular_so(int k) { return k % 2 || k == 1 ? Partition({k}) : Partition({k - 1, 1}); }

Partition partition_of_module(const SL2Module& m) {
  std::vector<int> parts;
  for (auto [k, mult] : m.terms())
    for (long long c = 0; c < mult; ++c) parts.push_back(k + 1);
  return Partition(std::move(parts));
}

Partition concat(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

std::size_t factor_count(PairShape s) {
  switch (s) {
    case PairShape::SlSo:
    case PairShape::SlSp:
    case PairShape::SoGl:
    case PairShape::SpGl: return 1;
    case PairShape::SlGlGl:
    case PairShape::SoSo:
    case PairShape::SpSp: return 2;
    case PairShape::Exceptional: break;
  }
  throw Unsupported("exceptional pair has no classical factors");
}

const ExceptionalInvolution& exceptional_record(const SymmetricPair& pair) {
  for (const auto& rec : exceptional_involutions())
    if (rec.type == pair.g && rec.g0 == pair.g0_label) return rec;
  throw LookupFailure("no dataset record for " + pair.descriptor());
}

ClassicalOrbit ambient_orbit(const PairDecomposition& pd) {
  if (!pd.ambient_partition) throw Unsupported(pd.pair.descriptor() + " has no classical ambient orbit");
  return ClassicalOrbit::make(pd.pair.ambient, *pd.ambient_partition);
}

long total(const MixedGrading& mg, int i) { return mg.d(0, i) + mg.d(1, i); }

}  // namespace

SL2Module module_of_partition(const Partition& lambda) {
  SL2Module m;
  for (int k : lambda.parts()) m += SL2Module::irreducible(k - 1);
  return m;
}

std::vector<Partition> regular_factor_partitions(const SymmetricPair& pair) {
  switch (pair.shape) {
    case PairShape::SlSo: return {regular_so(pair.n)};
    case PairShape::SlSp:
    case PairShape::SpGl:
    case PairShape::SoGl: return {Partition({pair.shape == PairShape::SlSp ? pair.n : pair.n / 2})};
    case PairShape::SlGlGl: return {Partition({pair.p}), Partition({pair.q})};
    case PairShape::SoSo: return {regular_so(pair.p), regular_so(pair.q)};
    case PairShape::SpSp: return {Partition({pair.p}), Partition({pair.q})};
    case PairShape::Exceptional: break;
  }
  throw Unsupported("regular partition of " + pair.descriptor() + ": exceptional ambient");
}

Partition regular_e_partition(const SymmetricPair& pair) {
  const auto f = regular_factor_partitions(pair);
  if (pair.shape == PairShape::SoGl || pair.shape == PairShape::SpGl) return concat(f[0], f[0]);
  return f.size() == 1 ? f[0] : concat(f[0], f[1]);
}

PairDecomposition decompose_classical(const SymmetricPair& pair, const std::vector<SL2Module>& v) {
  const std::size_t need = factor_count(pair.shape);
  if (v.size() != need)
    throw InvalidInput(pair.descriptor() + " needs " + std::to_string(need) + " factor module(s), got " +
                       std::to_string(v.size()));
  auto expect_dim = [&](std::size_t i, long d) {
    if (v[i].dimension() != d)
      throw InvalidInput("factor module " + std::to_string(i + 1) + " of " + pair.descriptor() + " has dimension " +
                         std::to_string(v[i].dimension()) + ", expected " + std::to_string(d));
  };
  PairDecomposition pd;
  pd.pair = pair;
  for (const auto& m : v) pd.factor_partitions.push_back(partition_of_module(m));
  const SL2Module r0 = SL2Module::irreducible(0);
  switch (pair.shape) {
    case PairShape::SlSo:
      expect_dim(0, pair.n);
      pd.m0 = alt2(v[0]);
      pd.m1 = sym2(v[0]).minus(r0);
      break;
    case PairShape::SlSp:
      expect_dim(0, pair.n);
      pd.m0 = sym2(v[0]);
      pd.m1 = alt2(v[0]).minus(r0);
      break;
    case PairShape::SlGlGl:
      expect_dim(0, pair.p);
      expect_dim(1, pair.q);
      pd.m0 = (tensor(v[0], v[0]) + tensor(v[1], v[1])).minus(r0);
      pd.m1 = tensor(v[0], v[1]).scaled(2);
      break;
    case PairShape::SoSo:
      expect_dim(0, pair.p);
      expect_dim(1, pair.q);
      pd.m0 = alt2(v[0]) + alt2(v[1]);
      pd.m1 = tensor(v[0], v[1]);
      break;
    case PairShape::SpSp:
      expect_dim(0, pair.p);
      expect_dim(1, pair.q);
      pd.m0 = sym2(v[0]) + sym2(v[1]);
      pd.m1 = tensor(v[0], v[1]);
      break;
    case PairShape::SpGl:
      expect_dim(0, pair.n / 2);
      pd.m0 = tensor(v[0], v[0]);
      pd.m1 = sym2(v[0]).scaled(2);
      break;
    case PairShape::SoGl:
      expect_dim(0, pair.n / 2);
      pd.m0 = tensor(v[0], v[0]);
      pd.m1 = alt2(v[0]).scaled(2);
      break;
    case PairShape::Exceptional: throw Unsupported("use decompose_exceptional for " + pair.descriptor());
  }
  if (need == 1)
    pd.ambient_partition = pair.shape == PairShape::SlSo || pair.shape == PairShape::SlSp
                               ? pd.factor_partitions[0]
                               : concat(pd.factor_partitions[0], pd.factor_partitions[0]);
  else
    pd.ambient_partition = concat(pd.factor_partitions[0], pd.factor_partitions[1]);
  return pd;
}

PairDecomposition decompose_classical(const SymmetricPair& pair) {
  std::vector<SL2Module> v;
  for (const auto& p : regular_factor_partitions(pair)) v.push_back(module_of_partition(p));
  return decompose_classical(pair, v);
}

PairDecomposition decompose_exceptional(const SymmetricPair& pair, std::string_view orbit_label) {
  if (pair.is_classical()) throw Unsupported("use decompose_classical for " + pair.descriptor());
  const auto& rec = exceptional_record(pair);
  if (!orbit_label.empty() && orbit_label != rec.regular_orbit)
    throw LookupFailure("dataset has no decomposition of " + pair.descriptor() + " for orbit " +
                        std::string(orbit_label) + "; available: " + rec.regular_orbit);
  PairDecomposition pd;
  pd.pair = pair;
  pd.orbit_label = rec.regular_orbit;
  pd.m0 = rec.m0;
  pd.m1 = rec.m1;
  return pd;
}

PairDecomposition decompose_regular(const SymmetricPair& pair) {
  return pair.is_classical() ? decompose_classical(pair) : decompose_exceptional(pair);
}

MixedGrading grading_grid(const PairDecomposition& pd) { return MixedGrading::from_modules(pd.m0, pd.m1); }

WeightedDynkinDiagram ambient_wdd(const PairDecomposition& pd) {
  if (!pd.pair.is_classical()) return exceptional_lookup(pd.pair.g, pd.orbit_label).wdd;
  WeightedDynkinDiagram w = wdd_from_partition(ambient_orbit(pd));
  if (w.type != pd.pair.g) {
    // sp4 is reported as B2; C2 numbering swaps the nodes.
    std::reverse(w.labels.begin(), w.labels.end());
    w.type = pd.pair.g;
  }
  return w;
}

CentralizerDims ambient_centralizer(const PairDecomposition& pd) {
  if (!pd.pair.is_classical()) {
    const auto& o = exceptional_lookup(pd.pair.g, pd.orbit_label);
    return {o.dim_centralizer, o.red.dimension(), o.dim_nil};
  }
  return centralizer_dims(ambient_orbit(pd));
}

bool check_02(const MixedGrading& mg) { return mg.d(0, 0) == mg.d(1, 2); }
bool check_04(const MixedGrading& mg) { return mg.d(0, 0) == mg.d(1, 4); }

std::vector<int> failing_4k2(const MixedGrading& mg) {
  const int top = std::max(mg.max_degree(0), mg.max_degree(1));
  std::vector<int> ks;
  for (int k = -(top + 2) / 4 - 1; 4 * k + 2 <= top; ++k)
    if (mg.d(0, 4 * k + 2) != mg.d(1, 4 * k + 2)) ks.push_back(k);
  return ks;
}

bool check_4k2(const MixedGrading& mg) { return failing_4k2(mg).empty(); }

bool check02_consequences(const MixedGrading& mg) {
  return std::abs(mg.max_degree(0) - mg.max_degree(1)) <= 2 && mg.d(0, 0) <= mg.d(1, 0);
}

long fixed_dim(const MixedGrading& mg) { return mg.row_total(0); }

long cross_fixed_dim(const MixedGrading& mg) {
  long out = 0;
  for (int j = 0; j < 2; ++j)
    for (auto [i, d] : mg.row(j)) {
      const int r = ((i % 4) + 4) % 4;
      if ((j == 0 && r == 0) || (j == 1 && r == 2)) out += d;
    }
  return out;
}

UpsilonReport upsilon(const PairDecomposition& pd) {
  if (!pd.m0.all_even() || !pd.m1.all_even())
    throw PreconditionViolation("upsilon needs e even in g; " + pd.pair.descriptor() + " has odd weights");
  if (pd.m0.max_weight() == 0 && pd.m1.max_weight() <= 0)
    throw PreconditionViolation("upsilon needs e != 0; " + pd.pair.descriptor() + " has e = 0");
  UpsilonReport out;
  out.sigma = pd.pair;
  const long c0 = signed_count(pd.m0, SignRule::EvenPlus);
  out.diff_check = c0 + signed_count(pd.m1, SignRule::EvenPlus);
  out.diff_cross = c0 + signed_count(pd.m1, SignRule::OddFlip);
  out.sigma_check = identify_ibn(pd.pair.g, -out.diff_check, InnerFilter::Inner);
  if (!out.sigma_check.inner) throw std::logic_error("sigma-check identified as an outer class");
  out.sigma_sigma_check =
      identify_ibn(pd.pair.g, -out.diff_cross, pd.pair.inner ? InnerFilter::Inner : InnerFilter::Outer);
  out.e_wdd = ambient_wdd(pd);
  return out;
}

Check04Report check04_report(const MixedGrading& mg, const PairDecomposition& pd) {
  if (!check_04(mg)) throw PreconditionViolation("check04_report needs d0(0) = d1(4)");
  Check04Report r;
  const long d00 = mg.d(0, 0);
  r.grid_identities = mg.d(0, 2) == d00 && mg.d(1, 2) == d00 && check_4k2(mg);
  r.no_r2_in_m1 = pd.m1.multiplicity(2) == 0;
  r.g0_semisimple = pd.pair.g0.is_semisimple();
  // The reductive part of z(e/2) has dimension d(0) - d(4); below 3 it is toral.
  const bool half_toral_by_grid = total(mg, 0) - total(mg, 4) < 3;
  if (pd.pair.is_classical()) {
    const ClassicalOrbit o = ambient_orbit(pd);
    r.divisible = is_divisible(o);
    r.e_almost_distinguished = is_almost_distinguished(o);
    r.half_almost_distinguished = half_toral_by_grid;
    if (r.divisible && o.ambient != Ambient::SP) {
      const ClassicalOrbit half = half_orbit(o);
      r.half_orbit = half.lambda.to_string();
      r.half_almost_distinguished = is_almost_distinguished(half);
    }
  } else {
    const auto& o = exceptional_lookup(pd.pair.g, pd.orbit_label);
    r.divisible = o.divisible.value_or(false);
    r.e_almost_distinguished = o.red.is_toral();
    r.half_almost_distinguished = half_toral_by_grid;
  }
  if (!r.grid_identities) r.violations.push_back("grid identities");
  if (!r.divisible) r.violations.push_back("divisibility");
  if (!r.no_r2_in_m1) r.violations.push_back("3-dimensional module in g1");
  if (!r.g0_semisimple) r.violations.push_back("g0 semisimple");
  if (!r.e_almost_distinguished) r.violations.push_back("e almost distinguished");
  if (!r.half_almost_distinguished) r.violations.push_back("e/2 almost distinguished");
  return r;
}

long d00_closed_form(const std::vector<int>& m) {
  if (m.empty()) throw InvalidInput("d00_closed_form needs at least one m_j");
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] < 0) throw InvalidInput("d00_closed_form needs m_j >= 0");
    if (j && m[j - 1] - m[j] < 2) throw InvalidInput("d00_closed_form needs m_{j-1} - m_j >= 2");
  }
  const long s = static_cast<long>(m.size());
  long out = s * (s - 1) / 2;
  for (long j = 1; j <= s; ++j) out += (2 * j - 1) * m[static_cast<std::size_t>(j - 1)];
  return out;
}

long collapsing_defect(SimpleType t) {
  const PairDecomposition pd = decompose_regular(pi_involution(t));
  return ambient_centralizer(pd).total - 2L * t.rank;
}

}  // namespace nilmix
