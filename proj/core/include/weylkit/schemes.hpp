// schemes.hpp — the parametrization engine: verification, presets,
// search, and obstruction certificates for Hecke-modification schemes.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/cells.hpp"

namespace weylkit {

/// One aggregated entry: `points` modifications of type −ν·λ_i∨ at
/// distinct points (positions themselves are out of the model).
struct SchemeEntry {
  WeylElement twist;
  int coweight_index = 1;  ///< 1-based fundamental coweight index
  long points = 0;
};

/// A modification scheme over a curve of the given genus.
struct ModificationScheme {
  Type type = Type::A;
  int rank = 0;
  long genus = 0;
  std::vector<SchemeEntry> entries;
};

/// A preset scheme plus construction notes (e.g. recorded inferences).
struct PresetResult {
  ModificationScheme scheme;
  std::vector<std::string> notes;
};

enum class DegreeMode { AtLeast, Exact };

/// Per-root degree bookkeeping: the degree of D_α and which entries
/// contribute with which per-point coefficient.
struct RootDegreeRow {
  int root_index = 0;
  long degree = 0;
  /// (entry position, per-point coefficient max{0, ⟨λ_i∨, ν⁻¹α⟩} > 0).
  std::vector<std::pair<std::size_t, long>> contributions;
};

/// A projective line of toral kernel directions with aggregated count.
struct ToralLine {
  Vec direction;  ///< canonical integer form, first nonzero positive
  long points = 0;
};

struct SchemeReport {
  long param_count = 0;
  long param_target = 0;
  bool param_ok = false;

  std::vector<RootDegreeRow> root_degrees;
  long min_degree = 0;
  bool degrees_ok = false;

  std::vector<ToralLine> toral_lines;
  bool per_line_ok = false;  ///< at least l lines with count ≥ g
  bool spanning_ok = false;  ///< qualified directions have full rank

  FundamentalGroupElement top_type;  ///< Σ k·[λ_i∨]; informational

  bool pass = false;  ///< conjunction of the four flags above
  std::vector<std::string> failures;
  std::vector<std::string> notes;  ///< includes the genericity disclaimer
};

/// Families with a built-in scheme construction.
enum class PresetFamily { A3, Cl, Dl };

[[nodiscard]] PresetFamily preset_family_from_string(const std::string& s);
[[nodiscard]] std::string preset_family_to_string(PresetFamily f);

/// deg D_α for the scheme: Σ over entries of k·max{0, ⟨λ_i∨, ν⁻¹α⟩}.
[[nodiscard]] long root_degree(const RootSystem& rs,
                               const ModificationScheme& scheme,
                               int root_index);

/// Evaluate all four conditions.  Failures are report content, never
/// exceptions.  Point positions are assumed generic (the report carries
/// a fixed disclaimer note saying so).
[[nodiscard]] SchemeReport verify(const RootSystem& rs,
                                  const ModificationScheme& scheme,
                                  DegreeMode mode = DegreeMode::AtLeast);

/// The built-in constructions, exactly as published: A₃ (6 twist classes
/// of −λ₂∨, the identity class recorded as an inference note), C_l (the
/// 2l powers of the signed cycle ν on −λ₁∨), D_l (parity-dependent twist
/// set on −λ₁∨).  Throws OddGenus / InvalidRank.
[[nodiscard]] PresetResult preset(PresetFamily family, int rank, long genus);

/// The C-type signed cycle ν (e_i ↦ e_{i+1}, e_l ↦ −e₁); ν^l = −1.
/// Throws UnsupportedType for other types.
[[nodiscard]] WeylElement cyclic_twist(const RootSystem& rs);

/// Determinant of the kernel-direction matrix {ν·ξ₁, …, ν^{l−1}·ξ₁, ξ₁}
/// (rows in that cyclic order) in the coroot basis, for type C; equals
/// (−1)^{l−1} − 2^{−l}.  Throws UnsupportedType otherwise.
[[nodiscard]] Rat cyclic_kernel_determinant(const RootSystem& rs);

/// Aggregate feasibility data per modification type.
struct ObstructionRow {
  int index = 0;  ///< 1-based coweight index
  long s = 0;     ///< Σ over short positive roots of ⟨λ_i∨, α⟩
  long t = 0;     ///< Σ over long positive roots of ⟨λ_i∨, α⟩
  long p = 0;     ///< s + t + 1 parameters per modification
};

struct ObstructionReport {
  bool feasible = false;
  long target = 0;        ///< g·dim_g
  long short_required = 0;  ///< g·|Φ_short| over the full root set
  long long_required = 0;   ///< g·|Φ_long| over the full root set
  std::vector<ObstructionRow> rows;
  /// Count vectors satisfying the parameter equality (bounded sample),
  /// each with a flag telling whether the aggregate inequalities hold.
  std::vector<std::pair<std::vector<long>, bool>> equality_solutions;
  std::vector<std::string> certificate;
};

/// Twist-invariant necessary-condition screen: decide whether any
/// non-negative counts k_i satisfy Σk_i·p_i = g·dim_g together with the
/// aggregate short/long degree budgets.  Strictly weaker than verify.
[[nodiscard]] ObstructionReport obstruction_analysis(const RootSystem& rs,
                                                     long genus);

struct SearchOptions {
  /// Allowed coweight indices (1-based); empty means all of 1..l.
  std::vector<int> coweight_indices;
  /// Twist pool; empty means minimal coset representatives of the orbit
  /// of each allowed λ_i∨.
  std::vector<WeylElement> twist_pool;
  DegreeMode mode = DegreeMode::AtLeast;
  long node_budget = 2000000;
};

struct SearchResult {
  bool feasible = false;
  std::optional<ModificationScheme> scheme;  ///< set when feasible
  std::optional<SchemeReport> report;        ///< verify() of the scheme
  std::vector<std::string> certificate;      ///< set when infeasible
};

/// Deterministic backtracking search over (coweight index, twist) slots
/// in lexicographic order with ascending counts; the first scheme
/// passing verify wins.  Infeasibility is certified either by the
/// aggregate screen or by exhausting the (scope-limited) search space.
/// Throws SearchBudgetExceeded when the node budget runs out.
[[nodiscard]] SearchResult search(const RootSystem& rs, long genus,
                                  const SearchOptions& options);

/// The fixed genericity disclaimer attached to every report.
[[nodiscard]] const std::string& genericity_disclaimer();

}  // namespace weylkit
