// cells.cpp — cell dimension routes and decompositions.

#include "weylkit/cells.hpp"

#include <algorithm>

namespace weylkit {

namespace {

long rat_to_long_exact(const Rat& x, const char* what) {
  if (!rat_is_integer(x) || !x.get_num().fits_slong_p()) {
    throw WeylkitError(std::string(what) + ": expected small integer");
  }
  return x.get_num().get_si();
}

void check_dominant_integral(const Coweight& v, const char* what) {
  if (!is_dominant(v)) throw NonDominant(std::string(what) + ": coweight not dominant");
  if (!is_integral(v)) {
    throw NonIntegralCoweight(std::string(what) + ": coweight not integral");
  }
}

}  // namespace

long cell_dimension(const RootSystem& rs, const Coweight& v) {
  check_dominant_integral(v, "cell_dimension");
  // Route 1: 2⟨λ∨, ρ⟩.
  long via_rho = rat_to_long_exact(two_rho_pairing(rs, v), "cell_dimension");
  // Route 2: Σ_{α∈Φ⁺} ⟨λ∨, α⟩.
  Rat sum(0);
  Vec ambient = coweight_ambient(rs, v);
  for (const Vec& a : rs.positive_roots) sum += dot(ambient, a);
  long via_sum = rat_to_long_exact(sum, "cell_dimension");
  // Route 3: inversion count of the translation.
  long via_inversions = inversion_count(rs, affine_translation(rs, v));
  if (via_rho != via_sum || via_rho != via_inversions) {
    throw WeylkitError("cell_dimension: routes disagree");
  }
  return via_rho;
}

CellDecomposition decompose(const RootSystem& rs, const Coweight& v) {
  check_dominant_integral(v, "decompose");
  CellDecomposition d;
  d.base_coweight = v;
  d.component_shift = fundamental_group_class(rs, v);

  AffineWeylElement t = affine_translation(rs, v);
  std::vector<WeylElement> reps = minimal_coset_reps(rs, v);
  d.top_dimension = 0;
  for (const WeylElement& w : reps) {
    AffineWeylElement s = affine_mul(affine_from_finite(w), t);
    long dim = inversion_count(rs, s);
    d.cells.push_back({w, dim});
    d.top_dimension = std::max(d.top_dimension, dim);
  }

  long expected_top = cell_dimension(rs, v);
  if (d.top_dimension != expected_top) {
    throw WeylkitError("decompose: top dimension != 2<coweight, rho>");
  }
  for (const Cell& c : d.cells) {
    bool is_id = weyl_is_identity(c.rep);
    if (is_id != (c.dimension == expected_top)) {
      throw WeylkitError("decompose: top dimension not achieved exactly at identity");
    }
  }

  d.poincare.assign(static_cast<std::size_t>(d.top_dimension) + 1, 0);
  for (const Cell& c : d.cells) d.poincare[static_cast<std::size_t>(c.dimension)]++;

  Vec ambient = coweight_ambient(rs, v);
  d.jet_bound = 0;
  for (const Vec& a : rs.roots) {
    long val = rat_to_long_exact(dot(ambient, a), "decompose jet bound");
    d.jet_bound = std::max(d.jet_bound, val);
  }
  return d;
}

FundamentalGroupElement modification_type_sum(
    const RootSystem& rs, const std::vector<std::pair<Coweight, long>>& types) {
  FundamentalGroupElement acc = fundamental_group_identity(rs);
  for (const auto& [mu, count] : types) {
    FundamentalGroupElement cls = fundamental_group_class(rs, mu);
    acc = fundamental_group_add(rs, acc, fundamental_group_scale(rs, cls, count));
  }
  return acc;
}

long deformation_dimension(const RootSystem& rs, const std::vector<long>& r) {
  if (static_cast<int>(r.size()) != rs.rank) {
    throw IndexOutOfRange("deformation_dimension: multiplicity vector length");
  }
  bool all_zero = true;
  long total_r = 0;
  Coweight v;
  v.coeffs.assign(rs.rank, Rat(0));
  for (int i = 0; i < rs.rank; ++i) {
    if (r[i] < 0) {
      throw WeylkitError("deformation_dimension: negative multiplicity");
    }
    if (r[i] != 0) all_zero = false;
    total_r += r[i];
    v.coeffs[i] = Rat(r[i]);
  }
  if (all_zero) throw ZeroCocharacter("deformation_dimension: zero cocharacter");
  return cell_dimension(rs, v) + total_r;
}

}  // namespace weylkit
