// weyl.hpp — finite Weyl groups as signed permutations of the ambient
// coordinates, with exact length, reduced words, orbits, and minimal
// coset representatives.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylkit/rootsys.hpp"

namespace weylkit {

/// A Weyl group element stored as a signed permutation of the ambient
/// coordinates: img[i] = ±(j+1) means e_{i+1} ↦ sign · e_j.  Every
/// supported realization embeds its Weyl group this way.  A reduced word
/// in the simple generators (1-based indices, product left to right) is
/// carried as a witness when one is known; `img` alone is the identity of
/// the element — comparison and hashing ignore `word`.
struct WeylElement {
  std::vector<int> img;
  std::vector<int> word;  ///< witness word; empty for the identity

  [[nodiscard]] bool operator==(const WeylElement& o) const { return img == o.img; }
  [[nodiscard]] bool operator!=(const WeylElement& o) const { return img != o.img; }
  [[nodiscard]] bool operator<(const WeylElement& o) const { return img < o.img; }
};

/// Identity element on `ambient` coordinates.
[[nodiscard]] WeylElement weyl_identity(int ambient);

/// Simple reflection s_i (1-based).  Constructed from the per-type signed
/// permutation table and checked against s_i(α_j) = α_j − a_ij α_i.
[[nodiscard]] WeylElement simple_reflection(const RootSystem& rs, int i);

/// Composition u∘w (first apply w, then u).
[[nodiscard]] WeylElement weyl_mul(const WeylElement& u, const WeylElement& w);

/// Inverse (transpose of the signed permutation).
[[nodiscard]] WeylElement weyl_inverse(const WeylElement& w);

/// Product s_{word[0]} · s_{word[1]} · … of simple reflections.
[[nodiscard]] WeylElement weyl_from_word(const RootSystem& rs,
                                         const std::vector<int>& word);

/// Apply w to an ambient vector.
[[nodiscard]] Vec weyl_act(const WeylElement& w, const Vec& v);

/// Apply w to a root given by index; returns the image's index.
[[nodiscard]] int weyl_act_root(const RootSystem& rs, const WeylElement& w,
                                int root_index);

[[nodiscard]] bool weyl_is_identity(const WeylElement& w);

/// Length = #{α ∈ Φ⁺ : w(α) ∈ Φ⁻}, counted exactly.
[[nodiscard]] long weyl_length(const RootSystem& rs, const WeylElement& w);

/// The inversion set {α ∈ Φ⁺ : w(α) ∈ Φ⁻} as positive-root indices.
[[nodiscard]] std::vector<int> weyl_inversions(const RootSystem& rs,
                                               const WeylElement& w);

/// Canonical reduced word: repeatedly strip the least descent on the
/// right (least i with w(α_i) ∈ Φ⁻).  The returned element carries the
/// word; its length equals weyl_length(w).
[[nodiscard]] std::vector<int> reduced_word(const RootSystem& rs,
                                            const WeylElement& w);

/// Longest element w₀, with its canonical reduced word attached.
[[nodiscard]] WeylElement longest_element(const RootSystem& rs);

/// The involution ω with w₀(α_i) = −α_{ω(i)}; entry i−1 holds ω(i) (1-based).
[[nodiscard]] std::vector<int> longest_element_involution(const RootSystem& rs);

/// Weyl orbit of an ambient vector, sorted canonically (deterministic).
[[nodiscard]] std::vector<Vec> weyl_orbit(const RootSystem& rs, const Vec& v);

/// Minimal-length coset representatives for W/Stab(λ∨), one per orbit
/// vector of the dominant coweight λ∨.  Each carries its lex-least
/// reduced word; the identity comes first and the order is deterministic
/// (by word length, then lexicographic word).
[[nodiscard]] std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs,
                                                          const Coweight& v);

/// Enumerate the whole group (BFS over generators).  Throws
/// BudgetExceeded when the group has more than `cap` elements.
[[nodiscard]] std::vector<WeylElement> enumerate_group(const RootSystem& rs,
                                                       std::size_t cap);

/// The reflection s_β for a root β of the system, as a group element:
/// walk β to a simple root by height-reducing simple reflections and
/// conjugate.  Acts as v ↦ v − ⟨β∨, v⟩β on the root span.
[[nodiscard]] WeylElement reflection_element(const RootSystem& rs, const Vec& beta);

/// Serialize as "[2,-1,3]" (img entries, comma-separated).
[[nodiscard]] std::string weyl_to_string(const WeylElement& w);

/// Parse the serialization produced by weyl_to_string.  Validates that
/// the entries form a signed permutation.
[[nodiscard]] WeylElement weyl_from_string(const std::string& s);

}  // namespace weylkit
