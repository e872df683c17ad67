// wonderful.hpp — exact tangent calculus at torus-closure points of the
// wonderful compactification: infinitesimal left/right actions in the
// dA basis, independently built transposes, Killing-form transfer, the
// twisted charts, and the inversion involution on torus coordinates.

#pragma once

#include <optional>
#include <vector>

#include "weylkit/weyl.hpp"

namespace weylkit {

/// A point of the torus closure in chart coordinates z_i = 1/α_i(t);
/// zeros are boundary points (all 2^l sign patterns of vanishing allowed).
struct TorusPoint {
  Vec z;
};

enum class Side { Left, Right };

/// A tangent map in the fixed basis order
///   rows: {dA(x_α)}_{α∈Φ⁺}, then {dA(y_α)}_{α∈Φ⁺}, then {dA(e_j)}_{j=1..l}
///   cols: {x_α}_{α∈Φ⁺},     then {y_α}_{α∈Φ⁺},     then {h_i}_{i=1..l}
/// with positive roots in the system's canonical order.  For a twisted
/// chart the block index β runs over the chart's positive system pulled
/// back to Φ⁺ (column β holds the root vector for ν·β; rows are the
/// chart's dA coordinates); `twist` records ν.
struct TangentMap {
  Mat matrix{0, 0};
  Side side = Side::Left;
  std::optional<WeylElement> twist;
  /// When set, the matrix is of the dual map (rows: dual Lie basis,
  /// cols: dual dA basis), built independently from the dual formulas.
  bool is_transpose = false;
};

/// Killing-form data: the toral Gram matrix κ(h_i, h_j), the per-root
/// constants k_α with κ(x_α, y_α) = k_α, and the transfer matrix κ̃ (the
/// inverse Gram matrix of κ in the {x_α, y_α, h_i} basis).
struct KillingData {
  Mat toral_gram{0, 0};
  std::vector<Rat> root_constants;  ///< k_α per positive root
  Mat kappa_tilde{0, 0};            ///< block matrix, same basis order as TangentMap columns
};

/// Witness for the left/right transfer identity check.
struct LRCheckResult {
  bool ok = true;
  std::size_t row = 0;  ///< first differing entry when !ok
  std::size_t col = 0;
  Rat lhs;
  Rat rhs;
};

/// Monomial z^{⟨λ_1∨,α⟩}···z^{⟨λ_l∨,α⟩} at z, given the positive root's
/// simple-root coefficient vector.
[[nodiscard]] Rat root_monomial(const std::vector<long>& exponents, const Vec& z);

/// dL or dR at z, entries exactly per the diagonal/toral formulas:
/// dL(x_α) = −dA(x_α); dL(y_α) = m_α(z)·dA(y_α);
/// dL(h_i) = dR(h_i) = −Σ_j a_ij z_j dA(e_j);
/// dR(x_α) = −m_α(z)·dA(x_α); dR(y_α) = +dA(y_α).
[[nodiscard]] TangentMap infinitesimal_action(const RootSystem& rs,
                                              const TorusPoint& z, Side side);

/// The dual map built independently from the dual-basis formulas (never
/// by transposing a matrix); must equal the matrix transpose of
/// infinitesimal_action(z, side) entrywise.
[[nodiscard]] TangentMap infinitesimal_transpose(const RootSystem& rs,
                                                 const TorusPoint& z, Side side);

/// Killing data for the root system.  k_α is derived from the identity
/// κ(h_α, h) = α(h)·k_α, checked for independence of the test vector h.
/// Throws DegeneratePairing if any k_α or the toral Gram degenerates.
[[nodiscard]] KillingData killing_data(const RootSystem& rs);

/// Verify dL∘κ̃∘dLᵗ = dR∘κ̃∘dRᵗ at z, exactly; on failure the witness
/// holds the first differing entry.
[[nodiscard]] LRCheckResult check_lr_transpose(const RootSystem& rs,
                                               const TorusPoint& z);

/// dL in the ν-twisted chart at the point with chart coordinates z.
/// Blocks indexed by β ∈ Φ⁺ (column β ↔ root vector for ν·β): x-block
/// diag −1, y-block diag m_β(z), toral entry (e_j, h_i) = −⟨ν⁻¹α_i∨, α_j⟩z_j.
/// ν = identity coincides with infinitesimal_action(z, Left).
[[nodiscard]] TangentMap twisted_action(const RootSystem& rs, const TorusPoint& z,
                                        const WeylElement& nu);

/// Monomial exponents of the ν-chart at the global root α (given by
/// index into RootSystem::roots): the pairings ⟨λ_i∨, ν⁻¹α⟩ for i=1..l.
/// Negative entries mean α is not of y-type in the chart.
[[nodiscard]] std::vector<long> twist_exponents(const RootSystem& rs,
                                                const WeylElement& nu,
                                                int root_index);

/// Inversion on torus coordinates: z ↦ (z_{ω(1)}, …, z_{ω(l)}) with ω
/// the longest-element index involution.
[[nodiscard]] TorusPoint inversion_on_torus(const RootSystem& rs,
                                            const TorusPoint& z);

/// Predicted rank of dL at a boundary pattern: |Φ⁺| + #{α ∈ Φ⁺ with no
/// support on vanishing coordinates} + #{j : z_j ≠ 0}.
[[nodiscard]] long degeneration_rank_formula(const RootSystem& rs,
                                             const TorusPoint& z);

/// All 2^l boundary sign patterns (coordinates in {0,1}).
[[nodiscard]] std::vector<TorusPoint> boundary_points(const RootSystem& rs);

}  // namespace weylkit
