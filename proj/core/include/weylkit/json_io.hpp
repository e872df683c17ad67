// json_io.hpp — canonical JSON serialization for every artifact the
// command-line front end emits or consumes.  All documents use sorted
// keys and exact rational encodings ("p/q" strings, or [num, den]
// integer pairs for tangent-map matrices), so output is byte-stable.

#pragma once

#include "weylkit/third_party/json.hpp"

#include "weylkit/affine.hpp"
#include "weylkit/cells.hpp"
#include "weylkit/schemes.hpp"
#include "weylkit/wonderful.hpp"

namespace weylkit {

using Json = nlohmann::json;

// --- scalars and vectors ----------------------------------------------------

/// Exact rational as canonical string: "5", "-3/4".
[[nodiscard]] Json rat_to_json(const Rat& x);
[[nodiscard]] Rat rat_from_json(const Json& j);

/// Vector of rationals as an array of canonical strings.
[[nodiscard]] Json vec_to_json(const Vec& v);
[[nodiscard]] Vec vec_from_json(const Json& j);

/// Matrix as nested arrays of canonical strings.
[[nodiscard]] Json mat_to_json(const Mat& m);

/// Matrix as nested arrays of [numerator, denominator] integer pairs
/// (the fixed encoding for tangent-map matrices).
[[nodiscard]] Json mat_to_json_pairs(const Mat& m);

// --- root systems -----------------------------------------------------------

/// Canonical document: type, rank, ambient, simple roots, Cartan matrix,
/// positive roots, dimension, fundamental-group invariant factors.
[[nodiscard]] Json rootsys_to_json(const RootSystem& rs);

// --- affine elements --------------------------------------------------------

/// {"translation": [integer fundamental-coweight coefficients],
///  "finite": "<signed permutation>"}.
[[nodiscard]] Json affine_to_json(const RootSystem& rs,
                                  const AffineWeylElement& s);
[[nodiscard]] AffineWeylElement affine_from_json(const RootSystem& rs,
                                                 const Json& j);

// --- cells ------------------------------------------------------------------

[[nodiscard]] Json decomposition_to_json(const RootSystem& rs,
                                         const CellDecomposition& d);

// --- wonderful --------------------------------------------------------------

/// Tangent map with basis bookkeeping; matrix entries as [num, den].
[[nodiscard]] Json tangent_map_to_json(const TangentMap& m);

[[nodiscard]] Json killing_to_json(const KillingData& k);

// --- schemes ----------------------------------------------------------------

/// {"type": "C", "rank": 3, "genus": 4, "entries": [...]} with optional
/// "notes".  Entries: {"twist": "<signed permutation>", "coweight": i,
/// "points": k}.
[[nodiscard]] Json scheme_to_json(const ModificationScheme& scheme,
                                  const std::vector<std::string>& notes = {});

/// Parse a scheme document (unknown keys ignored).  Throws ParseError
/// on malformed input.
[[nodiscard]] ModificationScheme scheme_from_json(const Json& j);

[[nodiscard]] Json report_to_json(const RootSystem& rs,
                                  const SchemeReport& report);

[[nodiscard]] Json obstruction_to_json(const ObstructionReport& report);

[[nodiscard]] Json search_to_json(const RootSystem& rs,
                                  const SearchResult& result);

/// Serialize with the project-wide canonical settings (sorted keys,
/// two-space indent, trailing newline).
[[nodiscard]] std::string to_canonical_string(const Json& j);

}  // namespace weylkit
