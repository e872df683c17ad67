// helpers.hpp — shared fixtures for the test suites: deterministic RNG,
// random group elements and rational points, and coweight enumeration.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "weylkit/affine.hpp"
#include "weylkit/rootsys.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit_test {

using weylkit::AffineWeylElement;
using weylkit::Coweight;
using weylkit::Rat;
using weylkit::RootSystem;
using weylkit::Type;
using weylkit::Vec;
using weylkit::WeylElement;

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kSeed = 0x5eed5eed5eedULL;

/// All irreducible systems with rank ≤ max_rank (and rank ≥ the type's
/// minimum), G2 included when max_rank ≥ 2.
inline std::vector<RootSystem> systems_up_to_rank(int max_rank) {
  std::vector<RootSystem> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back(weylkit::build_root_system(Type::A, l));
  for (int l = 2; l <= max_rank; ++l) out.push_back(weylkit::build_root_system(Type::B, l));
  for (int l = 2; l <= max_rank; ++l) out.push_back(weylkit::build_root_system(Type::C, l));
  for (int l = 3; l <= max_rank; ++l) out.push_back(weylkit::build_root_system(Type::D, l));
  if (max_rank >= 2) out.push_back(weylkit::build_root_system(Type::G2, 2));
  return out;
}

/// Random exact rational with numerator in [-9, 9], denominator in [1, 5].
inline Rat random_rat(Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Rat x(num(rng), den(rng));
  x.canonicalize();
  return x;
}

/// Random point with all coordinates nonzero (torus-interior sampling).
inline Vec random_point(Rng& rng, int n) {
  Vec z(static_cast<std::size_t>(n));
  for (auto& zi : z) {
    do {
      zi = random_rat(rng);
    } while (zi == 0);
  }
  return z;
}

/// Random finite Weyl element: product of `len` random simple reflections.
inline WeylElement random_weyl(const RootSystem& rs, Rng& rng, int len) {
  std::uniform_int_distribution<int> pick(1, rs.rank);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) word.push_back(pick(rng));
  return weylkit::weyl_from_word(rs, word);
}

/// Random element of the (unextended) affine Weyl group: product of `len`
/// random generators from {s₀, s₁, …, s_l}.
inline AffineWeylElement random_affine(const RootSystem& rs, Rng& rng, int len) {
  std::uniform_int_distribution<int> pick(0, rs.rank);
  AffineWeylElement s = weylkit::affine_identity(rs);
  const AffineWeylElement s0 = weylkit::affine_generator(rs);
  for (int k = 0; k < len; ++k) {
    const int i = pick(rng);
    const AffineWeylElement g =
        (i == 0) ? s0
                 : weylkit::affine_from_finite(weylkit::simple_reflection(rs, i));
    s = weylkit::affine_mul(s, g);
  }
  return s;
}

/// All dominant integral coweights with 2⟨λ∨,ρ⟩ ≤ bound, optionally
/// restricted to the coroot lattice.  Enumerates non-negative coefficient
/// vectors; coefficients are bounded because every 2⟨λ_i∨,ρ⟩ ≥ 1.
inline std::vector<Coweight> dominant_coweights(const RootSystem& rs, long bound,
                                                bool coroot_lattice_only) {
  std::vector<long> weights;  // 2⟨λ_i∨,ρ⟩ per index
  weights.reserve(static_cast<std::size_t>(rs.rank));
  for (int i = 1; i <= rs.rank; ++i)
    weights.push_back(weylkit::parameter_count(rs, i) - 1);

  std::vector<Coweight> out;
  std::vector<long> c(static_cast<std::size_t>(rs.rank), 0);
  const auto emit = [&] {
    Vec coeffs(static_cast<std::size_t>(rs.rank));
    for (std::size_t i = 0; i < c.size(); ++i) coeffs[i] = Rat(c[i]);
    Coweight v{coeffs};
    if (!coroot_lattice_only || weylkit::in_coroot_lattice(rs, v))
      out.push_back(v);
  };
  // Odometer enumeration with the linear budget Σ c_i · weights[i] ≤ bound.
  const auto total = [&] {
    long t = 0;
    for (std::size_t i = 0; i < c.size(); ++i) t += c[i] * weights[i];
    return t;
  };
  emit();
  while (true) {
    std::size_t i = 0;
    for (; i < c.size(); ++i) {
      ++c[i];
      if (total() <= bound) break;
      c[i] = 0;
    }
    if (i == c.size()) break;
    emit();
  }
  return out;
}

}  // namespace weylkit_test
