// rootsys.hpp — exact root systems: realizations, Cartan data, coweights,
// fundamental-group (lattice-quotient) classes, and kernel coweights.
//
// Systems are built in explicit Euclidean realizations with rational
// coordinates.  The A family lives in the zero-sum hyperplane of R^{l+1},
// B/C/D in R^l, and G2 in the zero-sum hyperplane of R^3; in all of these
// the Weyl group acts by signed permutation matrices, which the weyl module
// exploits.  Positive roots are generated from the simple roots by iterated
// reflection (no per-type root tables beyond the simple roots themselves).

#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylkit/ratmat.hpp"

namespace weylkit {

/// Supported system types.  G2 is the rank-2 exceptional system.
enum class Type { A, B, C, D, G2 };

[[nodiscard]] std::string type_to_string(Type t);
[[nodiscard]] Type type_from_string(const std::string& s);

/// A coweight in the fundamental-coweight basis: v = Σ coeffs[i]·λ_i∨.
/// Integer coefficients ⇔ membership in the coweight lattice Λ∨.
struct Coweight {
  Vec coeffs;
};

/// A class in the finite quotient Λ∨/Λr∨ (coweight lattice mod coroot
/// lattice), in canonical residue coordinates from the Smith normal form of
/// the transposed Cartan matrix.
struct FundamentalGroupElement {
  std::vector<long> residues;  // one residue per nontrivial invariant factor
  std::vector<long> moduli;    // the matching invariant factors (> 1)

  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool operator==(const FundamentalGroupElement&) const = default;
  [[nodiscard]] std::string to_string() const;
};

/// Immutable exact root-system table.
struct RootSystem {
  Type type;
  int rank;          // l
  int ambient;       // dimension of the Euclidean realization
  int dim_g;         // |Φ| + l

  std::vector<Vec> simple_roots;     // α_1..α_l, ambient coordinates
  std::vector<Vec> simple_coroots;   // α_i∨ = 2 α_i / (α_i, α_i)

  ZMat cartan;        // a_ij = ⟨α_i∨, α_j⟩
  Mat inverse_cartan; // exact inverse of cartan

  // Positive roots in canonical order (by height, then lexicographic on
  // simple-root coefficients); positive_coroots aligned index-by-index.
  std::vector<Vec> positive_roots;
  std::vector<Vec> positive_coroots;
  std::vector<std::vector<long>> positive_root_coeffs;  // simple-root coords

  // All roots: indices 0..p-1 are the positive roots, p..2p-1 their
  // negatives (index i+p holds -positive_roots[i]).
  std::vector<Vec> roots;

  Vec rho;                              // half-sum of positive roots
  std::vector<Vec> fundamental_weights;   // λ_i, ambient
  std::vector<Vec> fundamental_coweights; // λ_i∨, ambient

  Vec highest_root;    // θ (unique dominance-maximal root)
  Vec highest_coroot;  // θ∨

  // Root-length bookkeeping: squared lengths and the short/long split.
  // Single-length systems have all roots long and no short roots.
  Rat long_norm2;
  Rat short_norm2;                 // equals long_norm2 for single-length
  std::vector<bool> positive_is_long;  // aligned with positive_roots
  int num_short_positive;
  int num_long_positive;

  // Fundamental-group machinery: Smith form data of transpose(cartan).
  ZMat snf_left;                 // L with L·Aᵀ·R = D
  std::vector<long> snf_diagonal;  // diag(D), d_1 | d_2 | …
  std::vector<long> pi1_invariant_factors;  // the d_i > 1
  long pi1_order;                // ∏ d_i = |det A|

  // Lookup: canonical vector string → index into `roots`.
  std::map<std::string, int> root_index;
};

// ---------------------------------------------------------------------------
// Construction and basic queries
// ---------------------------------------------------------------------------

/// Build the root system of the given type and rank.
/// Throws UnsupportedType / InvalidRank (A: l ≥ 1; B, C: l ≥ 2; D: l ≥ 3;
/// G2: l = 2).
[[nodiscard]] RootSystem build_root_system(Type type, int rank);

/// Natural pairing of a coweight with an ambient-coordinate vector (root or
/// weight): ⟨v, α⟩.  Exact; throws DimensionMismatch.
[[nodiscard]] Rat pairing(const RootSystem& rs, const Coweight& v, const Vec& alpha);

/// Pairing of two ambient vectors (Euclidean dot); exposed because roots,
/// coroots and coweights all live in the ambient space.
[[nodiscard]] Rat pairing_ambient(const Vec& v, const Vec& alpha);

/// Ambient coordinates of a coweight: Σ coeffs[i]·λ_i∨.
[[nodiscard]] Vec coweight_ambient(const RootSystem& rs, const Coweight& v);

/// Coweight (fundamental-basis coefficients c_j = ⟨v, α_j⟩) of an ambient
/// vector lying in the span of the coroots.
[[nodiscard]] Coweight coweight_from_ambient(const RootSystem& rs, const Vec& v);

/// Coroot-basis coordinates d of a coweight (v = Σ d_k α_k∨), via the
/// relation coeffs = Aᵀ·d.
[[nodiscard]] Vec coroot_coords(const RootSystem& rs, const Coweight& v);

/// Coweight from coroot-basis coordinates.
[[nodiscard]] Coweight coweight_from_coroot_coords(const RootSystem& rs, const Vec& d);

/// Dominance test: every fundamental-basis coefficient is ≥ 0.
[[nodiscard]] bool is_dominant(const Coweight& v);

/// True iff the coweight has integer coefficients (lies in Λ∨).
[[nodiscard]] bool is_integral(const Coweight& v);

/// True iff the coweight lies in the coroot lattice Λr∨.
[[nodiscard]] bool in_coroot_lattice(const RootSystem& rs, const Coweight& v);

/// Index of an ambient vector in rs.roots; throws RootNotInSystem.
[[nodiscard]] int root_index_of(const RootSystem& rs, const Vec& alpha);

/// True iff the ambient vector is a root.
[[nodiscard]] bool is_root(const RootSystem& rs, const Vec& alpha);

/// True iff the root is long (single-length systems: always true).
[[nodiscard]] bool is_long_root(const RootSystem& rs, const Vec& alpha);

/// Simple-root coefficients of an arbitrary vector in the root span,
/// if it lies there.
[[nodiscard]] std::optional<Vec> simple_root_coords(const RootSystem& rs, const Vec& v);

// ---------------------------------------------------------------------------
// Fundamental group and kernel coweights
// ---------------------------------------------------------------------------

/// Class of an integral coweight in Λ∨/Λr∨; throws NonIntegralCoweight.
[[nodiscard]] FundamentalGroupElement fundamental_group_class(const RootSystem& rs,
                                                              const Coweight& v);

/// Identity class of the quotient.
[[nodiscard]] FundamentalGroupElement fundamental_group_identity(const RootSystem& rs);

/// Sum of two classes.
[[nodiscard]] FundamentalGroupElement fundamental_group_add(
    const RootSystem& rs, const FundamentalGroupElement& a,
    const FundamentalGroupElement& b);

/// Class of k·[v].
[[nodiscard]] FundamentalGroupElement fundamental_group_scale(
    const RootSystem& rs, const FundamentalGroupElement& a, long k);

/// Kernel coweight ξ_i: row i of the inverse TRANSPOSED Cartan matrix in the
/// coroot basis (equivalently column i of A⁻¹).  For symmetric Cartan
/// matrices this equals λ_i∨; for C_l it is α_1∨ + … + α_{l−1}∨ + ½α_l∨.
/// 1-based index; throws IndexOutOfRange.
[[nodiscard]] Coweight kernel_coweight(const RootSystem& rs, int i);

// ---------------------------------------------------------------------------
// Derived counts
// ---------------------------------------------------------------------------

/// 2⟨v, ρ⟩ as an exact rational (integer for integral coweights).
[[nodiscard]] Rat two_rho_pairing(const RootSystem& rs, const Coweight& v);

/// Parameter count of one simple modification of type ±λ_i∨:
/// 2⟨λ_i∨, ρ⟩ + 1.  1-based index.
[[nodiscard]] long parameter_count(const RootSystem& rs, int i);

/// Canonical string key of an ambient vector (used for dedup everywhere).
[[nodiscard]] std::string vec_key(const Vec& v);

}  // namespace weylkit
