// affine.hpp — affine roots, the (extended) affine Weyl group, inversion
// sets in closed form, and the length function by two independent routes.

#pragma once

#include <vector>

#include "weylkit/weyl.hpp"

namespace weylkit {

/// An affine root (α, n): finite root by index into RootSystem::roots,
/// integer level n.  Positive iff n > 0, or n = 0 and α ∈ Φ⁺.
struct AffineRoot {
  int alpha_index = 0;
  long level = 0;

  [[nodiscard]] bool operator==(const AffineRoot& o) const {
    return alpha_index == o.alpha_index && level == o.level;
  }
  [[nodiscard]] bool operator<(const AffineRoot& o) const {
    if (alpha_index != o.alpha_index) return alpha_index < o.alpha_index;
    return level < o.level;
  }
};

/// Element t(μ)·w of the extended affine Weyl group: μ is the translation
/// part as an ambient vector (an integral coweight), w the finite part.
/// The factorization is unique, so (μ, w.img) identifies the element.
struct AffineWeylElement {
  Vec mu;
  WeylElement w;

  [[nodiscard]] bool operator==(const AffineWeylElement& o) const {
    return mu == o.mu && w == o.w;
  }
};

/// Result of the word route: the reduced word found (generator indices,
/// 0 = affine generator, 1..l finite) and the residual length-zero part
/// left after peeling — the identity for elements of the unextended
/// group, a nontrivial length-zero element otherwise.
struct AffineWord {
  std::vector<int> word;
  AffineWeylElement residual;
};

[[nodiscard]] bool affine_root_positive(const RootSystem& rs, const AffineRoot& b);

[[nodiscard]] AffineWeylElement affine_identity(const RootSystem& rs);

/// t(λ∨) for an integral coweight λ∨ ∈ Λ∨.  Throws NonIntegralCoweight
/// when a fundamental coefficient is not an integer.
[[nodiscard]] AffineWeylElement affine_translation(const RootSystem& rs,
                                                   const Coweight& v);

/// Embed a finite Weyl element.
[[nodiscard]] AffineWeylElement affine_from_finite(const WeylElement& w);

/// Composition: t(μ₁)w₁ · t(μ₂)w₂ = t(μ₁ + w₁μ₂)(w₁w₂).
[[nodiscard]] AffineWeylElement affine_mul(const AffineWeylElement& a,
                                           const AffineWeylElement& b);

[[nodiscard]] AffineWeylElement affine_inverse(const AffineWeylElement& s);

/// The affine simple reflection s₀ = t(−θ∨)·s_θ.  Requires an
/// irreducible Cartan matrix (one block); see cartan_components.
[[nodiscard]] AffineWeylElement affine_generator(const RootSystem& rs);

/// Connected components of the Cartan matrix (1-based node indices).
[[nodiscard]] std::vector<std::vector<int>> cartan_components(const RootSystem& rs);

/// Action on affine roots: t(μ)w · (α, n) = (wα, n + ⟨μ, wα⟩).
[[nodiscard]] AffineRoot affine_act(const RootSystem& rs,
                                    const AffineWeylElement& s,
                                    const AffineRoot& b);

/// The translation part as a coweight in the fundamental basis.
[[nodiscard]] Coweight affine_translation_coweight(const RootSystem& rs,
                                                   const AffineWeylElement& s);

/// Whether s lies outside the unextended group, i.e. μ ∉ Λ_r∨.
[[nodiscard]] bool affine_is_extended(const RootSystem& rs,
                                      const AffineWeylElement& s);

/// Inversion set {β ∈ Φ_af⁺ : s⁻¹β ∈ Φ_af⁻}, materialized.  For every
/// finite root the admissible levels form one contiguous interval
/// computed in closed form; no search over levels.
[[nodiscard]] std::vector<AffineRoot> inversion_set(const RootSystem& rs,
                                                    const AffineWeylElement& s);

/// |inversion_set(s)| without materializing the set.
[[nodiscard]] long inversion_count(const RootSystem& rs,
                                   const AffineWeylElement& s);

/// Length ℓ(s) = |Φ_af^s|; for extended elements this is the length of
/// the unextended factor (the length-zero part contributes nothing).
[[nodiscard]] long affine_length(const RootSystem& rs,
                                 const AffineWeylElement& s);

/// Independent length route: peel descents s ← g·s over the generator
/// set ordered [0, 1, …, l] (least applicable index wins) until the
/// inversion count reaches zero.  Throws BudgetExceeded if the word
/// would exceed `budget` letters.
[[nodiscard]] AffineWord affine_length_via_word(const RootSystem& rs,
                                                const AffineWeylElement& s,
                                                long budget);

/// Value of the affine functional f_{(α,n)}(x) = α(x) + n at a rational
/// point x of the ambient space.
[[nodiscard]] Rat affine_functional(const RootSystem& rs, const AffineRoot& b,
                                    const Vec& x);

/// Geometric affine action on the ambient space, normalized so that
/// f_{s·β} = f_β ∘ g_s⁻¹: for s = t(μ)w, g_s(x) = w·x − μ.
[[nodiscard]] Vec affine_geometric_act(const AffineWeylElement& s, const Vec& x);

}  // namespace weylkit
