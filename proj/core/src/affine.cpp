// affine.cpp — extended affine Weyl group arithmetic.

#include "weylkit/affine.hpp"

#include <algorithm>
#include <deque>

namespace weylkit {

namespace {

long pairing_level(const Vec& mu, const Vec& alpha, const char* what) {
  Rat c = dot(mu, alpha);
  if (!rat_is_integer(c)) {
    throw NonIntegralCoweight(std::string(what) +
                              ": translation pairs non-integrally with a root");
  }
  if (!c.get_num().fits_slong_p()) {
    throw WeylkitError(std::string(what) + ": level out of range");
  }
  return c.get_num().get_si();
}

// Number of inversion levels contributed by the finite root with index
// `idx`, and the interval bounds.  For s = t(μ)w and α = roots[idx] with
// c = ⟨μ, α⟩: levels n with n ≥ [α ∈ Φ⁻] and n ≤ c − 1 + [w⁻¹α ∈ Φ⁻].
struct LevelInterval {
  long lo = 0;
  long hi = -1;

  [[nodiscard]] long count() const { return hi < lo ? 0 : hi - lo + 1; }
};

LevelInterval levels_for_root(const RootSystem& rs, const AffineWeylElement& s,
                              const WeylElement& w_inv, int idx) {
  const int p = static_cast<int>(rs.positive_roots.size());
  const Vec& alpha = rs.roots[idx];
  long c = pairing_level(s.mu, alpha, "inversion_set");
  bool alpha_negative = idx >= p;
  bool pullback_negative = weyl_act_root(rs, w_inv, idx) >= p;
  LevelInterval iv;
  iv.lo = alpha_negative ? 1 : 0;
  iv.hi = c - 1 + (pullback_negative ? 1 : 0);
  return iv;
}

}  // namespace

bool affine_root_positive(const RootSystem& rs, const AffineRoot& b) {
  const int p = static_cast<int>(rs.positive_roots.size());
  if (b.alpha_index < 0 || b.alpha_index >= 2 * p) {
    throw IndexOutOfRange("affine_root_positive: root index");
  }
  return b.level > 0 || (b.level == 0 && b.alpha_index < p);
}

AffineWeylElement affine_identity(const RootSystem& rs) {
  return {Vec(rs.ambient, Rat(0)), weyl_identity(rs.ambient)};
}

AffineWeylElement affine_translation(const RootSystem& rs, const Coweight& v) {
  if (!is_integral(v)) {
    throw NonIntegralCoweight("affine_translation: coweight not in the lattice");
  }
  return {coweight_ambient(rs, v), weyl_identity(rs.ambient)};
}

AffineWeylElement affine_from_finite(const WeylElement& w) {
  return {Vec(w.img.size(), Rat(0)), w};
}

AffineWeylElement affine_mul(const AffineWeylElement& a,
                             const AffineWeylElement& b) {
  if (a.mu.size() != b.mu.size()) {
    throw DimensionMismatch("affine_mul: mixed ambient dimensions");
  }
  return {vec_add(a.mu, weyl_act(a.w, b.mu)), weyl_mul(a.w, b.w)};
}

AffineWeylElement affine_inverse(const AffineWeylElement& s) {
  WeylElement w_inv = weyl_inverse(s.w);
  return {vec_neg(weyl_act(w_inv, s.mu)), w_inv};
}

std::vector<std::vector<int>> cartan_components(const RootSystem& rs) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(rs.rank, false);
  for (int start = 0; start < rs.rank; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::deque<int> frontier{start};
    seen[start] = true;
    while (!frontier.empty()) {
      int i = frontier.front();
      frontier.pop_front();
      comp.push_back(i + 1);
      for (int j = 0; j < rs.rank; ++j) {
        if (!seen[j] && rs.cartan.at(i, j) != 0) {
          seen[j] = true;
          frontier.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

AffineWeylElement affine_generator(const RootSystem& rs) {
  if (cartan_components(rs).size() != 1) {
    throw UnsupportedType("affine_generator: Cartan matrix is not irreducible");
  }
  WeylElement s_theta = reflection_element(rs, rs.highest_root);
  return {vec_neg(rs.highest_coroot), s_theta};
}

AffineRoot affine_act(const RootSystem& rs, const AffineWeylElement& s,
                      const AffineRoot& b) {
  const int p = static_cast<int>(rs.positive_roots.size());
  if (b.alpha_index < 0 || b.alpha_index >= 2 * p) {
    throw IndexOutOfRange("affine_act: root index");
  }
  int image = weyl_act_root(rs, s.w, b.alpha_index);
  long shift = pairing_level(s.mu, rs.roots[image], "affine_act");
  return {image, b.level + shift};
}

Coweight affine_translation_coweight(const RootSystem& rs,
                                     const AffineWeylElement& s) {
  return coweight_from_ambient(rs, s.mu);
}

bool affine_is_extended(const RootSystem& rs, const AffineWeylElement& s) {
  Coweight v = affine_translation_coweight(rs, s);
  if (!is_integral(v)) {
    throw NonIntegralCoweight("affine_is_extended: translation not in lattice");
  }
  return !fundamental_group_class(rs, v).is_identity();
}

std::vector<AffineRoot> inversion_set(const RootSystem& rs,
                                      const AffineWeylElement& s) {
  const int total = static_cast<int>(rs.roots.size());
  WeylElement w_inv = weyl_inverse(s.w);
  std::vector<AffineRoot> out;
  for (int idx = 0; idx < total; ++idx) {
    LevelInterval iv = levels_for_root(rs, s, w_inv, idx);
    for (long n = iv.lo; n <= iv.hi; ++n) out.push_back({idx, n});
  }
  std::sort(out.begin(), out.end());
  return out;
}

long inversion_count(const RootSystem& rs, const AffineWeylElement& s) {
  const int total = static_cast<int>(rs.roots.size());
  WeylElement w_inv = weyl_inverse(s.w);
  long count = 0;
  for (int idx = 0; idx < total; ++idx) {
    count += levels_for_root(rs, s, w_inv, idx).count();
  }
  return count;
}

long affine_length(const RootSystem& rs, const AffineWeylElement& s) {
  return inversion_count(rs, s);
}

AffineWord affine_length_via_word(const RootSystem& rs,
                                  const AffineWeylElement& s, long budget) {
  // Generator table: index 0 is the affine reflection with simple affine
  // root (−θ, 1); indices 1..l are the finite simple reflections with
  // affine roots (α_i, 0).
  std::vector<AffineWeylElement> gens;
  std::vector<AffineRoot> gen_roots;
  gens.push_back(affine_generator(rs));
  gen_roots.push_back({root_index_of(rs, vec_neg(rs.highest_root)), 1});
  for (int i = 1; i <= rs.rank; ++i) {
    gens.push_back(affine_from_finite(simple_reflection(rs, i)));
    gen_roots.push_back({root_index_of(rs, rs.simple_roots[i - 1]), 0});
  }

  AffineWord result;
  AffineWeylElement cur = s;
  long remaining = inversion_count(rs, cur);
  while (remaining > 0) {
    if (static_cast<long>(result.word.size()) >= budget) {
      throw BudgetExceeded("affine_length_via_word: budget exhausted");
    }
    AffineWeylElement cur_inv = affine_inverse(cur);
    int chosen = -1;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      // α_g ∈ Φ_af^cur  ⇔  cur⁻¹ α_g ∈ Φ_af⁻.
      AffineRoot pulled = affine_act(rs, cur_inv, gen_roots[g]);
      if (!affine_root_positive(rs, pulled)) {
        chosen = static_cast<int>(g);
        break;
      }
    }
    if (chosen < 0) {
      throw WeylkitError("affine_length_via_word: positive length but no descent");
    }
    result.word.push_back(chosen);
    cur = affine_mul(gens[chosen], cur);
    long next = inversion_count(rs, cur);
    if (next != remaining - 1) {
      throw WeylkitError("affine_length_via_word: descent did not drop length by 1");
    }
    remaining = next;
  }
  result.residual = cur;
  return result;
}

Rat affine_functional(const RootSystem& rs, const AffineRoot& b, const Vec& x) {
  if (b.alpha_index < 0 || b.alpha_index >= static_cast<int>(rs.roots.size())) {
    throw IndexOutOfRange("affine_functional: root index");
  }
  return dot(rs.roots[b.alpha_index], x) + Rat(b.level);
}

Vec affine_geometric_act(const AffineWeylElement& s, const Vec& x) {
  return vec_sub(weyl_act(s.w, x), s.mu);
}

}  // namespace weylkit
