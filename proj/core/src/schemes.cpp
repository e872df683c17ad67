// schemes.cpp — verification, presets, search, and obstruction
// certificates for Hecke-modification schemes.

#include "weylkit/schemes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "weylkit/errors.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

namespace {

long to_long_exact(const Rat& x, const char* what) {
  if (!rat_is_integer(x)) {
    throw WeylkitError(std::string(what) + ": non-integer value " +
                       rat_to_string(x));
  }
  Int n = x.get_num();
  if (!n.fits_slong_p()) {
    throw WeylkitError(std::string(what) + ": value out of range");
  }
  return n.get_si();
}

/// Unit coweight λ_i∨ (1-based index).
Coweight unit_coweight(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank) {
    throw IndexOutOfRange("coweight index " + std::to_string(i) +
                          " outside 1.." + std::to_string(rs.rank));
  }
  Coweight cw;
  cw.coeffs.assign(static_cast<std::size_t>(rs.rank), Rat(0));
  cw.coeffs[static_cast<std::size_t>(i - 1)] = Rat(1);
  return cw;
}

/// Transposition (a b) of coordinates, 1-based, as a signed permutation.
WeylElement transposition(int ambient, int a, int b) {
  WeylElement w = weyl_identity(ambient);
  w.img[static_cast<std::size_t>(a - 1)] = b;
  w.img[static_cast<std::size_t>(b - 1)] = a;
  return w;
}

/// Negate every coordinate (the −1 map, when it lies in the group).
WeylElement negate_all(const WeylElement& w) {
  WeylElement r = w;
  r.word.clear();
  for (int& entry : r.img) entry = -entry;
  return r;
}

/// Check that `w` is a genuine element of the Weyl group of `rs` (a
/// signed permutation alone is not enough: it must permute the roots
/// and admit a reduced word).
void require_weyl_member(const RootSystem& rs, const WeylElement& w,
                         const char* context) {
  if (static_cast<int>(w.img.size()) != rs.ambient) {
    throw DimensionMismatch(std::string(context) + ": twist acts on " +
                            std::to_string(w.img.size()) +
                            " coordinates, ambient is " +
                            std::to_string(rs.ambient));
  }
  try {
    (void)reduced_word(rs, w);
  } catch (const WeylkitError&) {
    throw WeylkitError(std::string(context) + ": twist " + weyl_to_string(w) +
                       " is not an element of the Weyl group");
  }
}

void check_scheme(const RootSystem& rs, const ModificationScheme& scheme) {
  if (scheme.type != rs.type || scheme.rank != rs.rank) {
    throw DimensionMismatch("scheme is typed " + type_to_string(scheme.type) +
                            std::to_string(scheme.rank) +
                            " but the root system is " +
                            type_to_string(rs.type) + std::to_string(rs.rank));
  }
  if (scheme.genus < 1) {
    throw WeylkitError("scheme genus must be a positive integer");
  }
  for (const SchemeEntry& e : scheme.entries) {
    if (e.coweight_index < 1 || e.coweight_index > rs.rank) {
      throw IndexOutOfRange("entry coweight index " +
                            std::to_string(e.coweight_index) + " outside 1.." +
                            std::to_string(rs.rank));
    }
    if (e.points < 1) {
      throw WeylkitError("entry point count must be a positive integer");
    }
    require_weyl_member(rs, e.twist, "scheme entry");
  }
}

/// Per-point coefficient of an entry on a root: max{0, ⟨λ_i∨, ν⁻¹α⟩}.
long entry_coefficient(const RootSystem& rs, const SchemeEntry& e,
                       const Vec& alpha) {
  const Vec pulled = weyl_act(weyl_inverse(e.twist), alpha);
  const Vec& lam = rs.fundamental_coweights[static_cast<std::size_t>(
      e.coweight_index - 1)];
  long c = to_long_exact(dot(lam, pulled), "root degree pairing");
  return c > 0 ? c : 0;
}

/// Canonical integer form of a projective direction: clear denominators,
/// divide by the content, make the first nonzero entry positive.
Vec canonical_line_form(const Vec& v) {
  Int l(1);
  for (const Rat& x : v) l = lcm(l, x.get_den());
  std::vector<Int> ints;
  ints.reserve(v.size());
  for (const Rat& x : v) {
    Rat scaled = x * Rat(l);
    scaled.canonicalize();
    ints.push_back(scaled.get_num());
  }
  Int g(0);
  for (const Int& n : ints) g = gcd(g, n);
  if (g == 0) throw WeylkitError("toral direction is the zero vector");
  int sign = 0;
  for (const Int& n : ints) {
    if (n != 0) {
      sign = (n > 0) ? 1 : -1;
      break;
    }
  }
  Vec out;
  out.reserve(ints.size());
  for (const Int& n : ints) out.emplace_back(n * sign / g);
  return out;
}

std::vector<WeylElement> sorted_unique_twists(std::vector<WeylElement> pool) {
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

}  // namespace

const std::string& genericity_disclaimer() {
  static const std::string text =
      "Point positions are assumed generic: these checks certify "
      "combinatorial necessary conditions (parameter count, per-root "
      "degree budgets, toral line coverage), not analytic genericity "
      "of the chosen points.";
  return text;
}

PresetFamily preset_family_from_string(const std::string& s) {
  if (s == "A3") return PresetFamily::A3;
  if (s == "Cl") return PresetFamily::Cl;
  if (s == "Dl") return PresetFamily::Dl;
  throw ParseError("unknown preset family '" + s + "' (expected A3, Cl, Dl)");
}

std::string preset_family_to_string(PresetFamily f) {
  switch (f) {
    case PresetFamily::A3: return "A3";
    case PresetFamily::Cl: return "Cl";
    case PresetFamily::Dl: return "Dl";
  }
  throw WeylkitError("unreachable preset family");
}

long root_degree(const RootSystem& rs, const ModificationScheme& scheme,
                 int root_index) {
  check_scheme(rs, scheme);
  if (root_index < 0 || root_index >= static_cast<int>(rs.roots.size())) {
    throw IndexOutOfRange("root index " + std::to_string(root_index) +
                          " outside the root list");
  }
  const Vec& alpha = rs.roots[static_cast<std::size_t>(root_index)];
  long degree = 0;
  for (const SchemeEntry& e : scheme.entries) {
    degree += e.points * entry_coefficient(rs, e, alpha);
  }
  return degree;
}

SchemeReport verify(const RootSystem& rs, const ModificationScheme& scheme,
                    DegreeMode mode) {
  check_scheme(rs, scheme);
  SchemeReport report;
  report.notes.push_back(genericity_disclaimer());

  // Condition 1: total parameter count meets g·dim g.
  report.param_target = scheme.genus * rs.dim_g;
  for (const SchemeEntry& e : scheme.entries) {
    report.param_count += e.points * parameter_count(rs, e.coweight_index);
  }
  report.param_ok = (report.param_count == report.param_target);
  if (!report.param_ok) {
    std::ostringstream os;
    os << "parameter count " << report.param_count << " differs from target "
       << report.param_target;
    report.failures.push_back(os.str());
  }

  // Condition 2: per-root degrees.  Precompute each entry's inverse
  // twist once; degrees are exact integers.
  std::vector<WeylElement> inverses;
  inverses.reserve(scheme.entries.size());
  for (const SchemeEntry& e : scheme.entries) {
    inverses.push_back(weyl_inverse(e.twist));
  }
  long max_degree = 0;
  int worst_root = -1;
  for (int r = 0; r < static_cast<int>(rs.roots.size()); ++r) {
    RootDegreeRow row;
    row.root_index = r;
    const Vec& alpha = rs.roots[static_cast<std::size_t>(r)];
    for (std::size_t pos = 0; pos < scheme.entries.size(); ++pos) {
      const SchemeEntry& e = scheme.entries[pos];
      const Vec pulled = weyl_act(inverses[pos], alpha);
      const Vec& lam = rs.fundamental_coweights[static_cast<std::size_t>(
          e.coweight_index - 1)];
      long c = to_long_exact(dot(lam, pulled), "root degree pairing");
      if (c > 0) {
        row.contributions.emplace_back(pos, c);
        row.degree += e.points * c;
      }
    }
    if (r == 0 || row.degree < report.min_degree) {
      report.min_degree = row.degree;
      worst_root = r;
    }
    if (r == 0 || row.degree > max_degree) max_degree = row.degree;
    report.root_degrees.push_back(std::move(row));
  }
  if (mode == DegreeMode::AtLeast) {
    report.degrees_ok = (report.min_degree >= scheme.genus);
  } else {
    report.degrees_ok =
        (report.min_degree == scheme.genus && max_degree == scheme.genus);
  }
  if (!report.degrees_ok) {
    std::ostringstream os;
    if (report.min_degree < scheme.genus) {
      os << "root at index " << worst_root << " has degree "
         << report.min_degree << " below genus " << scheme.genus;
    } else {
      os << "degrees range over [" << report.min_degree << ", " << max_degree
         << "] but exact mode requires every degree to equal "
         << scheme.genus;
    }
    report.failures.push_back(os.str());
  }

  // Condition 3: toral kernel lines.  Each entry contributes its points
  // to the projective line of ν·ξ_i.
  std::map<std::string, ToralLine> lines;
  for (const SchemeEntry& e : scheme.entries) {
    const Vec xi =
        coweight_ambient(rs, kernel_coweight(rs, e.coweight_index));
    const Vec dir = canonical_line_form(weyl_act(e.twist, xi));
    ToralLine& line = lines[vec_key(dir)];
    line.direction = dir;
    line.points += e.points;
  }
  std::vector<Vec> qualified;
  for (const auto& [key, line] : lines) {
    (void)key;
    report.toral_lines.push_back(line);
    if (line.points >= scheme.genus) qualified.push_back(line.direction);
  }
  report.per_line_ok = (static_cast<int>(qualified.size()) >= rs.rank);
  report.spanning_ok =
      (static_cast<int>(rank_of_span(qualified)) == rs.rank);
  if (!report.per_line_ok) {
    std::ostringstream os;
    os << "only " << qualified.size() << " toral lines reach " << scheme.genus
       << " points (need at least " << rs.rank << ")";
    report.failures.push_back(os.str());
  }
  if (!report.spanning_ok) {
    std::ostringstream os;
    os << "toral lines with enough points span rank "
       << rank_of_span(qualified) << " < " << rs.rank;
    report.failures.push_back(os.str());
  }

  // Informational: topological type Σ k·[λ_i∨] in the fundamental group.
  std::vector<std::pair<Coweight, long>> types;
  types.reserve(scheme.entries.size());
  for (const SchemeEntry& e : scheme.entries) {
    types.emplace_back(unit_coweight(rs, e.coweight_index), e.points);
  }
  report.top_type = modification_type_sum(rs, types);

  report.pass = report.param_ok && report.degrees_ok && report.per_line_ok &&
                report.spanning_ok;
  return report;
}

WeylElement cyclic_twist(const RootSystem& rs) {
  if (rs.type != Type::C) {
    throw UnsupportedType("the cyclic twist is defined for type C only");
  }
  WeylElement nu = weyl_identity(rs.ambient);
  for (int i = 1; i < rs.rank; ++i) {
    nu.img[static_cast<std::size_t>(i - 1)] = i + 1;
  }
  nu.img[static_cast<std::size_t>(rs.rank - 1)] = -1;
  return nu;
}

PresetResult preset(PresetFamily family, int rank, long genus) {
  if (genus < 1) throw WeylkitError("preset genus must be a positive integer");
  if (genus % 2 != 0) {
    throw OddGenus("preset constructions need an even genus, got " +
                   std::to_string(genus));
  }
  const long half = genus / 2;
  PresetResult result;
  result.scheme.genus = genus;

  switch (family) {
    case PresetFamily::A3: {
      if (rank != 3) {
        throw InvalidRank("the A-family preset is specific to rank 3");
      }
      const RootSystem rs = build_root_system(Type::A, 3);
      result.scheme.type = Type::A;
      result.scheme.rank = 3;
      std::vector<WeylElement> twists;
      twists.push_back(weyl_identity(4));
      twists.push_back(transposition(4, 1, 3));
      twists.push_back(transposition(4, 2, 3));
      twists.push_back(transposition(4, 1, 4));
      twists.push_back(transposition(4, 2, 4));
      twists.push_back(
          weyl_mul(transposition(4, 1, 4), transposition(4, 2, 3)));
      for (const WeylElement& t : twists) {
        result.scheme.entries.push_back(SchemeEntry{t, 2, half});
      }
      result.notes.push_back(
          "the published class list names five nontrivial twists; the "
          "identity class is inferred as the sixth so that six equal "
          "groups of g/2 points meet the parameter total");
      check_scheme(rs, result.scheme);
      break;
    }
    case PresetFamily::Cl: {
      if (rank < 2) throw InvalidRank("the C-family preset needs rank >= 2");
      const RootSystem rs = build_root_system(Type::C, rank);
      result.scheme.type = Type::C;
      result.scheme.rank = rank;
      const WeylElement nu = cyclic_twist(rs);
      WeylElement power = weyl_identity(rs.ambient);
      for (int k = 0; k < 2 * rank; ++k) {
        result.scheme.entries.push_back(SchemeEntry{power, 1, half});
        power = weyl_mul(nu, power);
      }
      if (!weyl_is_identity(power)) {
        throw WeylkitError("cyclic twist order is not 2l");
      }
      check_scheme(rs, result.scheme);
      break;
    }
    case PresetFamily::Dl: {
      if (rank < 3) throw InvalidRank("the D-family preset needs rank >= 3");
      const RootSystem rs = build_root_system(Type::D, rank);
      result.scheme.type = Type::D;
      result.scheme.rank = rank;
      if (rank % 2 == 0) {
        // Even rank: −1 lies in the group; pair (1 i) with −(1 i).
        for (int i = 1; i <= rank; ++i) {
          WeylElement t = transposition(rank, 1, i);
          result.scheme.entries.push_back(SchemeEntry{t, 1, half});
          result.scheme.entries.push_back(SchemeEntry{negate_all(t), 1, half});
        }
        result.notes.push_back(
            "the i = 1 transposition is the identity twist; its partner "
            "negates every coordinate");
      } else {
        // Odd rank: −1 is not in the group; pair (1 i) with (1 i)∘ν
        // where ν negates the first l−1 coordinates.
        WeylElement nu = weyl_identity(rank);
        for (int j = 1; j < rank; ++j) {
          nu.img[static_cast<std::size_t>(j - 1)] = -j;
        }
        for (int i = 1; i <= rank; ++i) {
          WeylElement t = transposition(rank, 1, i);
          result.scheme.entries.push_back(SchemeEntry{t, 1, half});
          result.scheme.entries.push_back(
              SchemeEntry{weyl_mul(t, nu), 1, half});
        }
        result.notes.push_back(
            "the i = 1 transposition is the identity twist; partners "
            "compose with the sign change on the first l-1 coordinates");
      }
      check_scheme(rs, result.scheme);
      break;
    }
  }

  // Safety net: every preset is built to meet the parameter total.
  const RootSystem rs =
      build_root_system(result.scheme.type, result.scheme.rank);
  long n = 0;
  for (const SchemeEntry& e : result.scheme.entries) {
    n += e.points * parameter_count(rs, e.coweight_index);
  }
  if (n != genus * rs.dim_g) {
    throw WeylkitError("preset parameter total mismatch");
  }
  return result;
}

Rat cyclic_kernel_determinant(const RootSystem& rs) {
  if (rs.type != Type::C) {
    throw UnsupportedType(
        "the kernel determinant identity is defined for type C only");
  }
  const WeylElement nu = cyclic_twist(rs);
  const Vec xi = coweight_ambient(rs, kernel_coweight(rs, 1));
  std::vector<Vec> rows;
  rows.reserve(static_cast<std::size_t>(rs.rank));
  WeylElement power = nu;
  for (int k = 1; k < rs.rank; ++k) {
    rows.push_back(
        coroot_coords(rs, coweight_from_ambient(rs, weyl_act(power, xi))));
    power = weyl_mul(nu, power);
  }
  rows.push_back(coroot_coords(rs, coweight_from_ambient(rs, xi)));
  return mat_from_rows(rows).det();
}

ObstructionReport obstruction_analysis(const RootSystem& rs, long genus) {
  if (genus < 1) throw WeylkitError("genus must be a positive integer");
  ObstructionReport report;
  report.target = genus * rs.dim_g;
  report.short_required = genus * 2L * rs.num_short_positive;
  report.long_required = genus * 2L * rs.num_long_positive;

  for (int i = 1; i <= rs.rank; ++i) {
    ObstructionRow row;
    row.index = i;
    for (std::size_t a = 0; a < rs.positive_roots.size(); ++a) {
      long c = rs.positive_root_coeffs[a][static_cast<std::size_t>(i - 1)];
      if (rs.positive_is_long[a]) {
        row.t += c;
      } else {
        row.s += c;
      }
    }
    row.p = row.s + row.t + 1;
    if (row.p != parameter_count(rs, i)) {
      throw WeylkitError("degree budgets do not add up to the parameter "
                         "count; root data is inconsistent");
    }
    report.rows.push_back(row);
  }

  {
    std::ostringstream os;
    os << "target parameter total: g*dim = " << genus << "*" << rs.dim_g
       << " = " << report.target;
    report.certificate.push_back(os.str());
  }
  for (const ObstructionRow& row : report.rows) {
    std::ostringstream os;
    os << "type " << row.index << ": p = " << row.p
       << " parameters per modification, short-degree budget s = " << row.s
       << ", long-degree budget t = " << row.t;
    report.certificate.push_back(os.str());
  }
  {
    std::ostringstream os;
    os << "aggregate requirements: sum k_i*s_i >= " << report.short_required
       << " (short roots), sum k_i*t_i >= " << report.long_required
       << " (long roots)";
    report.certificate.push_back(os.str());
  }

  // Feasibility: does any k >= 0 satisfy sum k_i p_i = target together
  // with both aggregate budgets?  Using t_i = p_i − 1 − s_i, the long
  // budget becomes target − M − S' >= long_required with M = Σk_i and
  // S' = Σ k_i s_i, so it suffices to know the minimum M achieving each
  // (target, S') — a two-dimensional unbounded knapsack.
  const long T = report.target;
  if (T > 1500) {
    throw BudgetExceeded(
        "obstruction analysis target exceeds the supported table size");
  }
  const std::size_t width = static_cast<std::size_t>(T) + 1;
  const long INF = -1;
  std::vector<std::vector<long>> min_m(width, std::vector<long>(width, INF));
  min_m[0][0] = 0;
  for (const ObstructionRow& row : report.rows) {
    const std::size_t p = static_cast<std::size_t>(row.p);
    const std::size_t s = static_cast<std::size_t>(row.s);
    for (std::size_t n = 0; n + p < width; ++n) {
      for (std::size_t sp = 0; sp + s < width; ++sp) {
        if (min_m[n][sp] == INF) continue;
        long candidate = min_m[n][sp] + 1;
        long& slot = min_m[n + p][sp + s];
        if (slot == INF || candidate < slot) slot = candidate;
      }
    }
  }
  report.feasible = false;
  for (std::size_t sp = 0; sp < width; ++sp) {
    if (min_m[static_cast<std::size_t>(T)][sp] == INF) continue;
    if (static_cast<long>(sp) < report.short_required) continue;
    const long m = min_m[static_cast<std::size_t>(T)][sp];
    if (static_cast<long>(sp) + m <= T - report.long_required) {
      report.feasible = true;
      break;
    }
  }

  // Bounded enumeration of parameter-equality solutions for the
  // certificate (skipped for large targets).
  if (T <= 400) {
    const std::size_t cap = 500;
    std::vector<long> counts(static_cast<std::size_t>(rs.rank), 0);
    std::vector<std::pair<std::vector<long>, bool>>& sols =
        report.equality_solutions;
    // Depth-first over types, largest index innermost.
    std::function<void(int, long)> enumerate = [&](int idx, long remaining) {
      if (sols.size() >= cap) return;
      if (idx == rs.rank) {
        if (remaining != 0) return;
        long sshort = 0;
        long slong = 0;
        for (int i = 0; i < rs.rank; ++i) {
          sshort += counts[static_cast<std::size_t>(i)] *
                    report.rows[static_cast<std::size_t>(i)].s;
          slong += counts[static_cast<std::size_t>(i)] *
                   report.rows[static_cast<std::size_t>(i)].t;
        }
        bool ok = sshort >= report.short_required &&
                  slong >= report.long_required;
        sols.emplace_back(counts, ok);
        return;
      }
      const long p = report.rows[static_cast<std::size_t>(idx)].p;
      for (long k = 0; k * p <= remaining; ++k) {
        counts[static_cast<std::size_t>(idx)] = k;
        enumerate(idx + 1, remaining - k * p);
        if (sols.size() >= cap) break;
      }
      counts[static_cast<std::size_t>(idx)] = 0;
    };
    enumerate(0, T);
    std::size_t good = 0;
    for (const auto& [k, ok] : sols) {
      (void)k;
      if (ok) ++good;
    }
    std::ostringstream os;
    os << sols.size() << " count vector(s) meet the parameter equality";
    if (sols.size() >= cap) os << " (enumeration capped)";
    os << "; " << good << " also meet both aggregate budgets";
    report.certificate.push_back(os.str());
  }

  report.certificate.push_back(
      report.feasible
          ? "FEASIBLE: the aggregate necessary conditions admit a solution"
          : "INFEASIBLE: no non-negative counts satisfy the parameter "
            "equality together with both aggregate degree budgets");
  return report;
}

SearchResult search(const RootSystem& rs, long genus,
                    const SearchOptions& options) {
  if (genus < 1) throw WeylkitError("genus must be a positive integer");
  SearchResult result;
  const long target = genus * rs.dim_g;

  // Twist-invariant screen first: if the aggregate necessary conditions
  // fail, no choice of twists can succeed.
  ObstructionReport screen = obstruction_analysis(rs, genus);
  if (!screen.feasible) {
    result.feasible = false;
    result.certificate = screen.certificate;
    result.certificate.push_back(
        "search not started: the aggregate screen is already infeasible");
    return result;
  }

  // Build the slot list: (coweight index, twist) in lexicographic order
  // by index, then by the twist's signed-permutation image.
  std::vector<int> indices = options.coweight_indices;
  if (indices.empty()) {
    for (int i = 1; i <= rs.rank; ++i) indices.push_back(i);
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (int i : indices) {
    if (i < 1 || i > rs.rank) {
      throw IndexOutOfRange("search coweight index " + std::to_string(i) +
                            " outside 1.." + std::to_string(rs.rank));
    }
  }
  std::vector<WeylElement> user_pool = options.twist_pool;
  for (const WeylElement& w : user_pool) {
    require_weyl_member(rs, w, "search twist pool");
  }
  user_pool = sorted_unique_twists(std::move(user_pool));

  struct Slot {
    int index;
    WeylElement twist;
    long p;
  };
  std::vector<Slot> slots;
  for (int i : indices) {
    std::vector<WeylElement> pool =
        user_pool.empty()
            ? sorted_unique_twists(minimal_coset_reps(rs, unit_coweight(rs, i)))
            : user_pool;
    const long p = parameter_count(rs, i);
    for (const WeylElement& w : pool) {
      slots.push_back(Slot{i, w, p});
    }
  }
  if (slots.empty()) throw WeylkitError("search has no slots to fill");

  // Suffix reachability of the parameter equality (unbounded coins).
  const std::size_t m = slots.size();
  std::vector<std::vector<char>> reach(
      m + 1, std::vector<char>(static_cast<std::size_t>(target) + 1, 0));
  reach[m][0] = 1;
  for (std::size_t j = m; j-- > 0;) {
    reach[j] = reach[j + 1];
    const std::size_t p = static_cast<std::size_t>(slots[j].p);
    for (std::size_t n = 0; n + p <= static_cast<std::size_t>(target); ++n) {
      if (reach[j][n]) reach[j][n + p] = 1;
    }
  }
  if (!reach[0][static_cast<std::size_t>(target)]) {
    result.feasible = false;
    result.certificate.push_back(
        "the parameter equality is unreachable with the allowed "
        "modification types");
    return result;
  }

  // Depth-first over slots, counts ascending from zero; the first
  // verify-passing scheme wins.  Deterministic by construction.
  std::vector<long> counts(m, 0);
  long nodes = 0;
  std::function<bool(std::size_t, long)> descend = [&](std::size_t j,
                                                       long remaining) {
    if (++nodes > options.node_budget) {
      throw SearchBudgetExceeded("search exceeded " +
                                 std::to_string(options.node_budget) +
                                 " nodes");
    }
    if (j == m) {
      if (remaining != 0) return false;
      ModificationScheme scheme;
      scheme.type = rs.type;
      scheme.rank = rs.rank;
      scheme.genus = genus;
      for (std::size_t t = 0; t < m; ++t) {
        if (counts[t] > 0) {
          scheme.entries.push_back(
              SchemeEntry{slots[t].twist, slots[t].index, counts[t]});
        }
      }
      if (scheme.entries.empty()) return false;
      SchemeReport report = verify(rs, scheme, options.mode);
      if (!report.pass) return false;
      result.feasible = true;
      result.scheme = std::move(scheme);
      result.report = std::move(report);
      return true;
    }
    if (!reach[j][static_cast<std::size_t>(remaining)]) return false;
    for (long k = 0; k * slots[j].p <= remaining; ++k) {
      counts[j] = k;
      if (descend(j + 1, remaining - k * slots[j].p)) return true;
    }
    counts[j] = 0;
    return false;
  };

  if (!descend(0, target)) {
    result.feasible = false;
    std::ostringstream os;
    os << "exhausted " << m << " slot(s) over " << indices.size()
       << " modification type(s) without a passing scheme";
    result.certificate.push_back(os.str());
    result.certificate.push_back(
        "the aggregate screen was feasible; the searched twist pool is "
        "the limiting scope");
  }
  return result;
}

}  // namespace weylkit
