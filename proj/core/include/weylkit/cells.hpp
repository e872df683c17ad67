// cells.hpp — Bruhat-cell dimension bookkeeping over the affine
// Grassmannian: cell dimensions, decompositions over minimal coset
// representatives, topological-type sums, and deformation dimensions.

#pragma once

#include <utility>
#include <vector>

#include "weylkit/affine.hpp"

namespace weylkit {

/// One cell: a minimal coset representative and the dimension
/// d_w = |Φ_af^{w·t(λ∨)}|.
struct Cell {
  WeylElement rep;
  long dimension = 0;
};

/// Full decomposition for a dominant integral coweight.
struct CellDecomposition {
  Coweight base_coweight;
  std::vector<Cell> cells;
  long top_dimension = 0;
  /// poincare[d] = number of cells of dimension d (coefficient array).
  std::vector<long> poincare;
  /// Derived jet bound: max over roots α of ⟨λ∨, α⟩.
  long jet_bound = 0;
  /// Component shift: the class of λ∨ in the fundamental group.  The
  /// identity exactly when λ∨ lies in the coroot lattice; dimensions are
  /// computed by the same interval rule either way, with the shift
  /// recorded rather than folded in.
  FundamentalGroupElement component_shift;
};

/// Cell dimension 2⟨λ∨, ρ⟩ for a dominant integral coweight.  Internally
/// asserts agreement with Σ_{α∈Φ⁺}⟨λ∨, α⟩ and with the inversion count
/// of t(λ∨) — three independent routes.  Throws NonDominant or
/// NonIntegralCoweight when the preconditions fail.
[[nodiscard]] long cell_dimension(const RootSystem& rs, const Coweight& v);

/// Decompose with one cell per minimal coset representative.  Throws
/// NonDominant / NonIntegralCoweight.
[[nodiscard]] CellDecomposition decompose(const RootSystem& rs, const Coweight& v);

/// Topological-type sum Σ k_i·[μ_i∨] in the fundamental group, starting
/// from the trivial class.  All coweights must be integral.
[[nodiscard]] FundamentalGroupElement modification_type_sum(
    const RootSystem& rs, const std::vector<std::pair<Coweight, long>>& types);

/// Dimension of the deformation space for the cocharacter encoded by the
/// non-negative multiplicity vector r (the cocharacter −Σ r_i λ_i∨):
/// Σ_{α∈Φ⁺} ⟨Σ r_i λ_i∨, α⟩ + Σ_i r_i.  Throws ZeroCocharacter when
/// r = 0, IndexOutOfRange when r has the wrong length.
[[nodiscard]] long deformation_dimension(const RootSystem& rs,
                                         const std::vector<long>& r);

}  // namespace weylkit
