// cli.cpp — subcommand grammar, document plumbing, and table rendering
// for the weylkit command-line tool.

#include "weylkit_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "weylkit/errors.hpp"
#include "weylkit/json_io.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit_cli {

namespace {

using namespace weylkit;

// --- parsing helpers --------------------------------------------------------

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

Vec parse_rat_list(const std::string& s, const char* what) {
  Vec v;
  for (const std::string& part : split(s, ',')) {
    const std::string t = trim(part);
    if (t.empty()) {
      throw ParseError(std::string(what) + ": empty entry in '" + s + "'");
    }
    v.push_back(rat_from_string(t));
  }
  return v;
}

std::vector<long> parse_long_list(const std::string& s, const char* what) {
  std::vector<long> v;
  for (const Rat& x : parse_rat_list(s, what)) {
    if (!rat_is_integer(x) || !x.get_num().fits_slong_p()) {
      throw ParseError(std::string(what) + ": expected integers in '" + s +
                       "'");
    }
    v.push_back(x.get_num().get_si());
  }
  return v;
}

Coweight parse_coweight(const RootSystem& rs, const std::string& s) {
  Coweight cw;
  cw.coeffs = parse_rat_list(s, "coweight");
  if (static_cast<int>(cw.coeffs.size()) != rs.rank) {
    throw ParseError("coweight needs " + std::to_string(rs.rank) +
                     " coefficients, got " +
                     std::to_string(cw.coeffs.size()));
  }
  return cw;
}

Vec parse_ambient(const RootSystem& rs, const std::string& s) {
  Vec v = parse_rat_list(s, "vector");
  if (static_cast<int>(v.size()) != rs.ambient) {
    throw ParseError("vector needs " + std::to_string(rs.ambient) +
                     " ambient coordinates, got " + std::to_string(v.size()));
  }
  return v;
}

TorusPoint parse_point(const RootSystem& rs, const std::string& s) {
  TorusPoint z;
  z.z = parse_rat_list(s, "point");
  if (static_cast<int>(z.z.size()) != rs.rank) {
    throw ParseError("point needs " + std::to_string(rs.rank) +
                     " coordinates, got " + std::to_string(z.z.size()));
  }
  return z;
}

/// A signed permutation string that must denote a Weyl group element.
WeylElement parse_member(const RootSystem& rs, const std::string& s) {
  WeylElement w = weyl_from_string(s);
  if (static_cast<int>(w.img.size()) != rs.ambient) {
    throw ParseError("element acts on " + std::to_string(w.img.size()) +
                     " coordinates, ambient is " +
                     std::to_string(rs.ambient));
  }
  try {
    w.word = reduced_word(rs, w);
  } catch (const WeylkitError&) {
    throw ParseError("'" + s + "' is not an element of this Weyl group");
  }
  return w;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

Json read_json_document(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), "stdin");
  }
  std::ifstream file(path);
  if (!file) {
    throw ParseError(path + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_json_text(buffer.str(), path);
}

// --- shared option state ------------------------------------------------

struct Opts {
  std::string type;
  std::string family;
  int rank = -1;
  long genus = 0;
  bool json = false;

  std::string element;       // finite Weyl element "[...]"
  std::string word_csv;      // simple-reflection word
  std::string vector_csv;    // ambient vector
  std::string coweight_csv;  // fundamental-basis coefficients

  std::string affine_json;      // inline affine element document
  std::string translation_csv;  // integral coweight coefficients
  std::string finite;           // finite part of an affine element
  std::string root_csv;         // ambient root coordinates
  long level = 0;
  long budget = 100000;

  std::string multiplicities_csv;
  std::vector<std::string> terms;

  std::string point_csv;
  std::string side = "left";
  std::string twist;

  std::string file;
  bool strict = false;

  std::string indices_csv;
  std::string pool = "reps";
  long search_budget = 2000000;
};

RootSystem make_system(const Opts& o) {
  if (!o.family.empty()) {
    if (o.family == "A3") {
      if (o.rank != -1 && o.rank != 3) {
        throw ParseError("family A3 has rank 3");
      }
      return build_root_system(Type::A, 3);
    }
    if (o.family == "Cl") {
      if (o.rank < 0) throw ParseError("family Cl needs --rank");
      return build_root_system(Type::C, o.rank);
    }
    if (o.family == "Dl") {
      if (o.rank < 0) throw ParseError("family Dl needs --rank");
      return build_root_system(Type::D, o.rank);
    }
    if (o.family == "G2") {
      if (o.rank != -1 && o.rank != 2) {
        throw ParseError("family G2 has rank 2");
      }
      return build_root_system(Type::G2, 2);
    }
    throw ParseError("unknown family '" + o.family +
                     "' (expected A3, Cl, Dl, G2)");
  }
  if (o.type.empty() || o.rank < 0) {
    throw ParseError("need --type and --rank (or --family)");
  }
  return build_root_system(type_from_string(o.type), o.rank);
}

AffineWeylElement parse_affine(const RootSystem& rs, const Opts& o) {
  const bool inline_json = !o.affine_json.empty();
  const bool pieces = !o.translation_csv.empty() || !o.finite.empty();
  if (inline_json == pieces) {
    throw ParseError(
        "give exactly one of --element or --translation/--finite");
  }
  if (inline_json) {
    AffineWeylElement s =
        affine_from_json(rs, parse_json_text(o.affine_json, "--element"));
    (void)parse_member(rs, weyl_to_string(s.w));
    return s;
  }
  AffineWeylElement s = affine_identity(rs);
  if (!o.translation_csv.empty()) {
    Coweight cw = parse_coweight(rs, o.translation_csv);
    s = affine_translation(rs, cw);
  }
  if (!o.finite.empty()) {
    s = affine_mul(s, affine_from_finite(parse_member(rs, o.finite)));
  }
  return s;
}

// --- table rendering helpers ---------------------------------------------

std::string group_to_string(const RootSystem& rs) {
  if (rs.pi1_invariant_factors.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < rs.pi1_invariant_factors.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(rs.pi1_invariant_factors[i]);
  }
  return s;
}

std::string word_to_string(const std::vector<int>& word) {
  std::string s = "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(word[i]);
  }
  return s + "]";
}

void emit(std::ostream& out, bool json, const Json& doc,
          const std::function<void()>& table) {
  if (json) {
    out << to_canonical_string(doc);
  } else {
    table();
  }
}

// --- subcommand handlers --------------------------------------------------

int run_rootsys(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  emit(out, o.json, rootsys_to_json(rs), [&] {
    // Type::G2's label already carries its rank.
    const std::string label = type_to_string(rs.type) +
        (rs.type == Type::G2 ? std::string() : std::to_string(rs.rank));
    out << "type: " << label << "\n";
    out << "ambient dimension: " << rs.ambient << "\n";
    out << "dim g: " << rs.dim_g << "\n";
    out << "positive roots: " << rs.positive_roots.size() << " ("
        << rs.num_short_positive << " short, " << rs.num_long_positive
        << " long)\n";
    out << "simple roots:\n";
    for (int i = 0; i < rs.rank; ++i) {
      out << "  a" << (i + 1) << " = "
          << vec_to_string(rs.simple_roots[static_cast<std::size_t>(i)])
          << "\n";
    }
    out << "cartan matrix:\n";
    for (std::size_t i = 0; i < rs.cartan.rows(); ++i) {
      out << "  [";
      for (std::size_t j = 0; j < rs.cartan.cols(); ++j) {
        if (j) out << ", ";
        out << rs.cartan.at(i, j).get_str();
      }
      out << "]\n";
    }
    out << "rho = " << vec_to_string(rs.rho) << "\n";
    out << "highest root = " << vec_to_string(rs.highest_root) << "\n";
    out << "fundamental group: " << group_to_string(rs) << " (order "
        << rs.pi1_order << ")\n";
  });
  return 0;
}

int run_weyl_act(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  WeylElement w;
  const bool has_element = !o.element.empty();
  const bool has_word = !o.word_csv.empty();
  if (has_element == has_word) {
    throw ParseError("give exactly one of --element or --word");
  }
  if (has_element) {
    w = parse_member(rs, o.element);
  } else {
    std::vector<long> letters = parse_long_list(o.word_csv, "--word");
    std::vector<int> word(letters.begin(), letters.end());
    w = weyl_from_word(rs, word);
  }
  if (o.vector_csv.empty()) throw ParseError("need --vector");
  const Vec image = weyl_act(w, parse_ambient(rs, o.vector_csv));
  emit(out, o.json,
       Json{{"element", weyl_to_string(w)}, {"image", vec_to_json(image)}},
       [&] { out << vec_to_string(image) << "\n"; });
  return 0;
}

int run_weyl_word(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  if (o.element.empty()) throw ParseError("need --element");
  const WeylElement w = parse_member(rs, o.element);
  const std::vector<int> word = reduced_word(rs, w);
  emit(out, o.json,
       Json{{"length", static_cast<long>(word.size())},
            {"word", Json(word)}},
       [&] {
         out << "word = " << word_to_string(word) << "\n";
         out << "length = " << word.size() << "\n";
       });
  return 0;
}

int run_weyl_longest(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  const WeylElement w0 = longest_element(rs);
  const std::vector<int> omega = longest_element_involution(rs);
  emit(out, o.json,
       Json{{"element", weyl_to_string(w0)},
            {"involution", Json(omega)},
            {"length", weyl_length(rs, w0)},
            {"word", Json(w0.word)}},
       [&] {
         out << "w0 = " << weyl_to_string(w0) << "\n";
         out << "word = " << word_to_string(w0.word) << "\n";
         out << "length = " << w0.word.size() << "\n";
         out << "involution = " << word_to_string(omega) << "\n";
       });
  return 0;
}

int run_weyl_cosets(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  if (o.coweight_csv.empty()) throw ParseError("need --coweight");
  const Coweight cw = parse_coweight(rs, o.coweight_csv);
  const std::vector<WeylElement> reps = minimal_coset_reps(rs, cw);
  Json arr = Json::array();
  for (const WeylElement& w : reps) {
    arr.push_back(Json{{"element", weyl_to_string(w)},
                       {"length", static_cast<long>(w.word.size())},
                       {"word", Json(w.word)}});
  }
  emit(out, o.json,
       Json{{"count", static_cast<long>(reps.size())},
            {"representatives", std::move(arr)}},
       [&] {
         out << reps.size() << " representatives\n";
         for (const WeylElement& w : reps) {
           out << "  " << weyl_to_string(w)
               << "  word=" << word_to_string(w.word)
               << "  length=" << w.word.size() << "\n";
         }
       });
  return 0;
}

int run_weyl_orbit(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  Vec v;
  const bool has_vec = !o.vector_csv.empty();
  const bool has_cw = !o.coweight_csv.empty();
  if (has_vec == has_cw) {
    throw ParseError("give exactly one of --vector or --coweight");
  }
  v = has_vec ? parse_ambient(rs, o.vector_csv)
              : coweight_ambient(rs, parse_coweight(rs, o.coweight_csv));
  const std::vector<Vec> orbit = weyl_orbit(rs, v);
  Json arr = Json::array();
  for (const Vec& x : orbit) arr.push_back(vec_to_json(x));
  emit(out, o.json,
       Json{{"count", static_cast<long>(orbit.size())},
            {"orbit", std::move(arr)}},
       [&] {
         out << orbit.size() << " orbit vectors\n";
         for (const Vec& x : orbit) out << "  " << vec_to_string(x) << "\n";
       });
  return 0;
}

int run_affine_act(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  const AffineWeylElement s = parse_affine(rs, o);
  if (o.root_csv.empty()) throw ParseError("need --root");
  AffineRoot b;
  b.alpha_index = root_index_of(rs, parse_ambient(rs, o.root_csv));
  b.level = o.level;
  const AffineRoot image = affine_act(rs, s, b);
  const Vec& alpha = rs.roots[static_cast<std::size_t>(image.alpha_index)];
  emit(out, o.json,
       Json{{"index", image.alpha_index},
            {"level", image.level},
            {"root", vec_to_json(alpha)}},
       [&] {
         out << "(" << vec_to_string(alpha) << ", " << image.level << ")\n";
       });
  return 0;
}

int run_affine_invset(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  const AffineWeylElement s = parse_affine(rs, o);
  const std::vector<AffineRoot> inv = inversion_set(rs, s);
  Json arr = Json::array();
  for (const AffineRoot& b : inv) {
    arr.push_back(Json{
        {"index", b.alpha_index},
        {"level", b.level},
        {"root",
         vec_to_json(rs.roots[static_cast<std::size_t>(b.alpha_index)])}});
  }
  emit(out, o.json,
       Json{{"count", static_cast<long>(inv.size())},
            {"inversions", std::move(arr)}},
       [&] {
         out << inv.size() << " inversions\n";
         for (const AffineRoot& b : inv) {
           out << "  ("
               << vec_to_string(
                      rs.roots[static_cast<std::size_t>(b.alpha_index)])
               << ", " << b.level << ")\n";
         }
       });
  return 0;
}

int run_affine_length(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  const AffineWeylElement s = parse_affine(rs, o);
  const long closed = affine_length(rs, s);
  const AffineWord via_word = affine_length_via_word(rs, s, o.budget);
  const bool extended = affine_is_extended(rs, s);
  Json j{{"length", closed},
         {"word", Json(via_word.word)},
         {"extended", extended}};
  if (weyl_is_identity(via_word.residual.w) &&
      vec_is_zero(via_word.residual.mu)) {
    j["residual"] = nullptr;
  } else {
    j["residual"] = affine_to_json(rs, via_word.residual);
  }
  emit(out, o.json, j, [&] {
    out << "length = " << closed << "\n";
    out << "word = " << word_to_string(via_word.word) << "\n";
    if (j["residual"].is_null()) {
      out << "residual = trivial\n";
    } else {
      out << "residual = " << j["residual"].dump() << "\n";
    }
  });
  return 0;
}

int run_cells_dim(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  if (o.coweight_csv.empty()) throw ParseError("need --coweight");
  const long dim = cell_dimension(rs, parse_coweight(rs, o.coweight_csv));
  emit(out, o.json, Json{{"dimension", dim}},
       [&] { out << dim << "\n"; });
  return 0;
}

int run_cells_decompose(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  if (o.coweight_csv.empty()) throw ParseError("need --coweight");
  const CellDecomposition d =
      decompose(rs, parse_coweight(rs, o.coweight_csv));
  emit(out, o.json, decomposition_to_json(rs, d), [&] {
    out << "top dimension = " << d.top_dimension << "\n";
    out << "jet bound = " << d.jet_bound << "\n";
    out << "component shift = " << d.component_shift.to_string() << "\n";
    out << "poincare coefficients = [";
    for (std::size_t i = 0; i < d.poincare.size(); ++i) {
      if (i) out << ", ";
      out << d.poincare[i];
    }
    out << "]\n";
    out << d.cells.size() << " cells:\n";
    for (const Cell& c : d.cells) {
      out << "  " << weyl_to_string(c.rep) << "  dim " << c.dimension
          << "  word " << word_to_string(c.rep.word) << "\n";
    }
  });
  return 0;
}

int run_cells_deform(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  if (o.multiplicities_csv.empty()) throw ParseError("need --multiplicities");
  const std::vector<long> r =
      parse_long_list(o.multiplicities_csv, "--multiplicities");
  const long dim = deformation_dimension(rs, r);
  emit(out, o.json, Json{{"dimension", dim}},
       [&] { out << dim << "\n"; });
  return 0;
}

int run_cells_typesum(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  if (o.terms.empty()) {
    throw ParseError("need at least one --term \"c1,...,cl:k\"");
  }
  std::vector<std::pair<Coweight, long>> types;
  for (const std::string& term : o.terms) {
    const std::vector<std::string> parts = split(term, ':');
    if (parts.size() != 2) {
      throw ParseError("--term expects \"c1,...,cl:k\", got '" + term + "'");
    }
    const std::vector<long> counts = parse_long_list(parts[1], "--term count");
    if (counts.size() != 1) {
      throw ParseError("--term expects one count after ':', got '" + term +
                       "'");
    }
    types.emplace_back(parse_coweight(rs, parts[0]), counts[0]);
  }
  const FundamentalGroupElement cls = modification_type_sum(rs, types);
  emit(out, o.json, Json{{"class", cls.to_string()}},
       [&] { out << cls.to_string() << "\n"; });
  return 0;
}

int run_wonderful_action(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  if (o.point_csv.empty()) throw ParseError("need --point");
  const TorusPoint z = parse_point(rs, o.point_csv);
  TangentMap map;
  if (!o.twist.empty()) {
    if (o.side != "left") {
      throw ParseError("--twist is defined for the left action only");
    }
    map = twisted_action(rs, z, parse_member(rs, o.twist));
  } else if (o.side == "left") {
    map = infinitesimal_action(rs, z, Side::Left);
  } else if (o.side == "right") {
    map = infinitesimal_action(rs, z, Side::Right);
  } else {
    throw ParseError("--side must be left or right");
  }
  emit(out, o.json, tangent_map_to_json(map), [&] {
    for (std::size_t i = 0; i < map.matrix.rows(); ++i) {
      out << vec_to_string(map.matrix.row(i)) << "\n";
    }
  });
  return 0;
}

int run_wonderful_transpose(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  if (o.point_csv.empty()) throw ParseError("need --point");
  const TorusPoint z = parse_point(rs, o.point_csv);
  Side side;
  if (o.side == "left") {
    side = Side::Left;
  } else if (o.side == "right") {
    side = Side::Right;
  } else {
    throw ParseError("--side must be left or right");
  }
  const TangentMap map = infinitesimal_transpose(rs, z, side);
  emit(out, o.json, tangent_map_to_json(map), [&] {
    for (std::size_t i = 0; i < map.matrix.rows(); ++i) {
      out << vec_to_string(map.matrix.row(i)) << "\n";
    }
  });
  return 0;
}

int run_wonderful_killing(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  const KillingData k = killing_data(rs);
  emit(out, o.json, killing_to_json(k), [&] {
    out << "toral gram:\n";
    for (std::size_t i = 0; i < k.toral_gram.rows(); ++i) {
      out << "  " << vec_to_string(k.toral_gram.row(i)) << "\n";
    }
    out << "root constants k_a (positive roots, canonical order):\n  ";
    for (std::size_t i = 0; i < k.root_constants.size(); ++i) {
      if (i) out << ", ";
      out << rat_to_string(k.root_constants[i]);
    }
    out << "\nkappa tilde:\n";
    for (std::size_t i = 0; i < k.kappa_tilde.rows(); ++i) {
      out << "  " << vec_to_string(k.kappa_tilde.row(i)) << "\n";
    }
  });
  return 0;
}

int run_wonderful_check(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  if (o.point_csv.empty()) throw ParseError("need --point");
  const LRCheckResult res = check_lr_transpose(rs, parse_point(rs, o.point_csv));
  Json j{{"ok", res.ok}};
  if (!res.ok) {
    j["row"] = res.row;
    j["col"] = res.col;
    j["lhs"] = rat_to_json(res.lhs);
    j["rhs"] = rat_to_json(res.rhs);
  }
  emit(out, o.json, j, [&] {
    if (res.ok) {
      out << "PASS\n";
    } else {
      out << "FAIL at (" << res.row << ", " << res.col
          << "): " << rat_to_string(res.lhs)
          << " != " << rat_to_string(res.rhs) << "\n";
    }
  });
  return res.ok ? 0 : 1;
}

int run_wonderful_invert(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  if (o.point_csv.empty()) throw ParseError("need --point");
  const TorusPoint image = inversion_on_torus(rs, parse_point(rs, o.point_csv));
  emit(out, o.json, Json{{"point", vec_to_json(image.z)}},
       [&] { out << vec_to_string(image.z) << "\n"; });
  return 0;
}

PresetFamily preset_family(const Opts& o) {
  if (o.family.empty()) throw ParseError("need --family (A3, Cl, Dl)");
  return preset_family_from_string(o.family);
}

int preset_rank(const Opts& o, PresetFamily family) {
  if (family == PresetFamily::A3) {
    if (o.rank != -1 && o.rank != 3) throw ParseError("family A3 has rank 3");
    return 3;
  }
  if (o.rank < 0) throw ParseError("this family needs --rank");
  return o.rank;
}

int run_scheme_preset(const Opts& o, std::ostream& out) {
  const PresetFamily family = preset_family(o);
  if (o.genus <= 0) throw ParseError("need --genus > 0");
  const PresetResult pr = preset(family, preset_rank(o, family), o.genus);
  out << to_canonical_string(scheme_to_json(pr.scheme, pr.notes));
  return 0;
}

void print_report_table(const RootSystem& rs, const SchemeReport& report,
                        std::ostream& out) {
  out << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
  out << "parameters: " << report.param_count << " / " << report.param_target
      << (report.param_ok ? " (ok)" : " (MISMATCH)") << "\n";
  out << "toral lines (" << report.toral_lines.size()
      << "; spanning " << (report.spanning_ok ? "ok" : "FAIL")
      << ", per-line " << (report.per_line_ok ? "ok" : "FAIL") << "):\n";
  for (const ToralLine& line : report.toral_lines) {
    out << "  " << vec_to_string(line.direction) << ": " << line.points
        << " points\n";
  }
  const bool has_short = rs.num_short_positive > 0;
  out << "root degrees (min " << report.min_degree
      << (report.degrees_ok ? ", ok" : ", FAIL") << "):\n";
  for (int pass_long = 1; pass_long >= 0; --pass_long) {
    if (has_short || pass_long == 1) {
      out << (pass_long ? "  long roots:\n" : "  short roots:\n");
    }
    for (const RootDegreeRow& row : report.root_degrees) {
      const std::size_t p = rs.positive_roots.size();
      const std::size_t pos =
          static_cast<std::size_t>(row.root_index) < p
              ? static_cast<std::size_t>(row.root_index)
              : static_cast<std::size_t>(row.root_index) - p;
      if (rs.positive_is_long[pos] != (pass_long == 1)) continue;
      out << "    "
          << vec_to_string(
                 rs.roots[static_cast<std::size_t>(row.root_index)])
          << ": " << row.degree << "\n";
    }
    if (!has_short) break;
  }
  out << "topological type: " << report.top_type.to_string() << "\n";
  for (const std::string& f : report.failures) {
    out << "failure: " << f << "\n";
  }
  for (const std::string& n : report.notes) {
    out << "note: " << n << "\n";
  }
}

int run_scheme_verify(const Opts& o, std::ostream& out, std::istream& in) {
  const Json doc = read_json_document(o.file, in);
  const ModificationScheme scheme = scheme_from_json(doc);
  const RootSystem rs = build_root_system(scheme.type, scheme.rank);
  const SchemeReport report =
      verify(rs, scheme, o.strict ? DegreeMode::Exact : DegreeMode::AtLeast);
  emit(out, o.json, report_to_json(rs, report),
       [&] { print_report_table(rs, report, out); });
  return report.pass ? 0 : 1;
}

int run_scheme_degree(const Opts& o, std::ostream& out, std::istream& in) {
  const Json doc = read_json_document(o.file, in);
  const ModificationScheme scheme = scheme_from_json(doc);
  const RootSystem rs = build_root_system(scheme.type, scheme.rank);
  if (!o.root_csv.empty()) {
    const int idx = root_index_of(rs, parse_ambient(rs, o.root_csv));
    const long degree = root_degree(rs, scheme, idx);
    emit(out, o.json, Json{{"degree", degree}},
         [&] { out << degree << "\n"; });
    return 0;
  }
  Json rows = Json::array();
  for (int idx = 0; idx < static_cast<int>(rs.roots.size()); ++idx) {
    const long degree = root_degree(rs, scheme, idx);
    rows.push_back(Json{
        {"root", vec_to_json(rs.roots[static_cast<std::size_t>(idx)])},
        {"degree", degree}});
  }
  emit(out, o.json, Json{{"degrees", std::move(rows)}}, [&] {
    for (int idx = 0; idx < static_cast<int>(rs.roots.size()); ++idx) {
      out << vec_to_string(rs.roots[static_cast<std::size_t>(idx)]) << ": "
          << root_degree(rs, scheme, idx) << "\n";
    }
  });
  return 0;
}

int run_scheme_search(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  if (o.genus <= 0) throw ParseError("need --genus > 0");
  SearchOptions options;
  options.mode = o.strict ? DegreeMode::Exact : DegreeMode::AtLeast;
  options.node_budget = o.search_budget;
  if (!o.indices_csv.empty()) {
    for (long i : parse_long_list(o.indices_csv, "--indices")) {
      options.coweight_indices.push_back(static_cast<int>(i));
    }
  }
  if (o.pool == "cyclic") {
    const WeylElement nu = cyclic_twist(rs);
    WeylElement power = weyl_identity(rs.ambient);
    do {
      options.twist_pool.push_back(power);
      power = weyl_mul(nu, power);
    } while (!weyl_is_identity(power));
  } else if (o.pool != "reps") {
    throw ParseError("--pool must be reps or cyclic");
  }
  const SearchResult result = search(rs, o.genus, options);
  emit(out, o.json, search_to_json(rs, result), [&] {
    if (result.feasible) {
      out << "FEASIBLE\n";
      out << to_canonical_string(scheme_to_json(*result.scheme));
      print_report_table(rs, *result.report, out);
    } else {
      out << "INFEASIBLE\n";
      for (const std::string& line : result.certificate) {
        out << "  " << line << "\n";
      }
    }
  });
  return result.feasible ? 0 : 1;
}

int run_scheme_obstruct(const Opts& o, std::ostream& out) {
  const RootSystem rs = make_system(o);
  if (o.genus <= 0) throw ParseError("need --genus > 0");
  const ObstructionReport report = obstruction_analysis(rs, o.genus);
  emit(out, o.json, obstruction_to_json(report), [&] {
    out << (report.feasible ? "FEASIBLE" : "INFEASIBLE") << "\n";
    for (const std::string& line : report.certificate) {
      out << "  " << line << "\n";
    }
  });
  return report.feasible ? 0 : 1;
}

// --- the reproduction suite -----------------------------------------------

struct SuiteRow {
  std::string name;
  bool ok = false;
  std::string detail;
};

SuiteRow suite_preset_check(PresetFamily family, int rank, long genus) {
  SuiteRow row;
  row.name = preset_family_to_string(family);
  row.name += " rank " + std::to_string(rank) + " genus " +
              std::to_string(genus) + " preset verifies (strict)";
  try {
    const PresetResult pr = preset(family, rank, genus);
    const RootSystem rs =
        build_root_system(pr.scheme.type, pr.scheme.rank);
    const SchemeReport report = verify(rs, pr.scheme, DegreeMode::Exact);
    const bool trivial = report.top_type.is_identity();
    row.ok = report.pass && trivial;
    std::ostringstream os;
    os << "pass=" << (report.pass ? "yes" : "no")
       << " trivial-type=" << (trivial ? "yes" : "no") << " parameters "
       << report.param_count << "/" << report.param_target;
    row.detail = os.str();
  } catch (const std::exception& e) {
    row.ok = false;
    row.detail = e.what();
  }
  return row;
}

SuiteRow suite_obstruction_check(long genus) {
  SuiteRow row;
  row.name = "G2 genus " + std::to_string(genus) + " aggregate obstruction";
  try {
    const RootSystem rs = build_root_system(Type::G2, 2);
    const ObstructionReport report = obstruction_analysis(rs, genus);
    row.ok = !report.feasible;
    row.detail = report.feasible ? "unexpectedly feasible" : "INFEASIBLE";
  } catch (const std::exception& e) {
    row.ok = false;
    row.detail = e.what();
  }
  return row;
}

SuiteRow suite_determinant_check(int rank) {
  SuiteRow row;
  row.name = "C" + std::to_string(rank) + " kernel determinant";
  try {
    const RootSystem rs = build_root_system(Type::C, rank);
    const Rat det = cyclic_kernel_determinant(rs);
    const Rat expected =
        Rat(rank % 2 == 1 ? 1 : -1) - Rat(1, 1L << rank);
    row.ok = (det == expected);
    row.detail = "det = " + rat_to_string(det) +
                 (row.ok ? "" : " (expected " + rat_to_string(expected) + ")");
  } catch (const std::exception& e) {
    row.ok = false;
    row.detail = e.what();
  }
  return row;
}

int run_suite(const Opts& o, std::ostream& out) {
  std::vector<SuiteRow> rows;
  for (long genus : {2L, 4L}) {
    rows.push_back(suite_preset_check(PresetFamily::A3, 3, genus));
  }
  for (int rank = 2; rank <= 6; ++rank) {
    for (long genus : {2L, 4L}) {
      rows.push_back(suite_preset_check(PresetFamily::Cl, rank, genus));
    }
  }
  for (int rank = 4; rank <= 7; ++rank) {
    for (long genus : {2L, 4L}) {
      rows.push_back(suite_preset_check(PresetFamily::Dl, rank, genus));
    }
  }
  for (long genus = 1; genus <= 6; ++genus) {
    rows.push_back(suite_obstruction_check(genus));
  }
  for (int rank = 2; rank <= 8; ++rank) {
    rows.push_back(suite_determinant_check(rank));
  }
  const bool all_ok =
      std::all_of(rows.begin(), rows.end(),
                  [](const SuiteRow& r) { return r.ok; });
  if (o.json) {
    Json arr = Json::array();
    for (const SuiteRow& r : rows) {
      arr.push_back(
          Json{{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    }
    out << to_canonical_string(Json{{"all_ok", all_ok},
                                    {"results", std::move(arr)}});
  } else {
    for (const SuiteRow& r : rows) {
      out << (r.ok ? "[ ok ] " : "[FAIL] ") << r.name;
      if (!r.detail.empty()) out << " — " << r.detail;
      out << "\n";
    }
    out << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int cli_main(std::vector<std::string> args, std::ostream& out,
             std::ostream& err, std::istream& in) {
  Opts o;
  CLI::App app{"exact root-system, affine-length, and modification-scheme "
               "calculator"};
  app.require_subcommand(1);

  const auto add_system = [&](CLI::App* sc, bool with_family = false) {
    sc->add_option("--type", o.type, "system type: A, B, C, D, G2");
    sc->add_option("--rank", o.rank, "rank l");
    if (with_family) {
      sc->add_option("--family", o.family,
                     "family shorthand: A3, Cl, Dl, G2");
    }
  };
  const auto add_json = [&](CLI::App* sc) {
    sc->add_flag("--json", o.json, "emit canonical JSON");
  };
  const auto add_affine_element = [&](CLI::App* sc) {
    sc->add_option("--element", o.affine_json,
                   "affine element as JSON "
                   "{\"translation\": [...], \"finite\": \"[...]\"}");
    sc->add_option("--translation", o.translation_csv,
                   "integral coweight coefficients c1,...,cl");
    sc->add_option("--finite", o.finite,
                   "finite part as a signed permutation \"[...]\"");
  };

  // rootsys ------------------------------------------------------------
  auto* sc_rootsys = app.add_subcommand("rootsys", "print root-system data");
  add_system(sc_rootsys, true);
  add_json(sc_rootsys);

  // weyl ----------------------------------------------------------------
  auto* sc_weyl = app.add_subcommand("weyl", "finite Weyl group operations");
  sc_weyl->require_subcommand(1);
  auto* sc_weyl_act = sc_weyl->add_subcommand("act", "apply an element");
  add_system(sc_weyl_act);
  add_json(sc_weyl_act);
  sc_weyl_act->add_option("--element", o.element, "signed permutation");
  sc_weyl_act->add_option("--word", o.word_csv, "simple-reflection word");
  sc_weyl_act->add_option("--vector", o.vector_csv, "ambient vector");
  auto* sc_weyl_word = sc_weyl->add_subcommand("word", "canonical reduced word");
  add_system(sc_weyl_word);
  add_json(sc_weyl_word);
  sc_weyl_word->add_option("--element", o.element, "signed permutation");
  auto* sc_weyl_longest = sc_weyl->add_subcommand("longest", "longest element");
  add_system(sc_weyl_longest);
  add_json(sc_weyl_longest);
  auto* sc_weyl_cosets =
      sc_weyl->add_subcommand("cosets", "minimal coset representatives");
  add_system(sc_weyl_cosets);
  add_json(sc_weyl_cosets);
  sc_weyl_cosets->add_option("--coweight", o.coweight_csv,
                             "dominant coweight coefficients");
  auto* sc_weyl_orbit = sc_weyl->add_subcommand("orbit", "Weyl orbit");
  add_system(sc_weyl_orbit);
  add_json(sc_weyl_orbit);
  sc_weyl_orbit->add_option("--vector", o.vector_csv, "ambient vector");
  sc_weyl_orbit->add_option("--coweight", o.coweight_csv,
                            "coweight coefficients");

  // affine ----------------------------------------------------------------
  auto* sc_affine =
      app.add_subcommand("affine", "extended affine Weyl group operations");
  sc_affine->require_subcommand(1);
  auto* sc_affine_act =
      sc_affine->add_subcommand("act", "act on an affine root");
  add_system(sc_affine_act);
  add_json(sc_affine_act);
  add_affine_element(sc_affine_act);
  sc_affine_act->add_option("--root", o.root_csv, "finite root, ambient");
  sc_affine_act->add_option("--level", o.level, "affine level n");
  auto* sc_affine_invset =
      sc_affine->add_subcommand("invset", "inversion set");
  add_system(sc_affine_invset);
  add_json(sc_affine_invset);
  add_affine_element(sc_affine_invset);
  auto* sc_affine_length =
      sc_affine->add_subcommand("length", "length by both routes");
  add_system(sc_affine_length);
  add_json(sc_affine_length);
  add_affine_element(sc_affine_length);
  sc_affine_length->add_option("--budget", o.budget,
                               "maximum word length before giving up");

  // cells ---------------------------------------------------------------
  auto* sc_cells = app.add_subcommand("cells", "cell-dimension bookkeeping");
  sc_cells->require_subcommand(1);
  auto* sc_cells_dim = sc_cells->add_subcommand("dim", "cell dimension");
  add_system(sc_cells_dim);
  add_json(sc_cells_dim);
  sc_cells_dim->add_option("--coweight", o.coweight_csv,
                           "dominant integral coweight coefficients");
  auto* sc_cells_decompose =
      sc_cells->add_subcommand("decompose", "full decomposition");
  add_system(sc_cells_decompose);
  add_json(sc_cells_decompose);
  sc_cells_decompose->add_option("--coweight", o.coweight_csv,
                                 "dominant integral coweight coefficients");
  auto* sc_cells_deform =
      sc_cells->add_subcommand("deform", "deformation dimension");
  add_system(sc_cells_deform);
  add_json(sc_cells_deform);
  sc_cells_deform->add_option("--multiplicities", o.multiplicities_csv,
                              "non-negative multiplicities r1,...,rl");
  auto* sc_cells_typesum =
      sc_cells->add_subcommand("typesum", "topological-type sum");
  add_system(sc_cells_typesum);
  add_json(sc_cells_typesum);
  sc_cells_typesum->add_option("--term", o.terms,
                               "coweight and count, \"c1,...,cl:k\"");

  // wonderful -------------------------------------------------------------
  auto* sc_wonderful =
      app.add_subcommand("wonderful", "compactification tangent calculus");
  sc_wonderful->require_subcommand(1);
  auto* sc_w_action =
      sc_wonderful->add_subcommand("action", "infinitesimal action matrix");
  add_system(sc_w_action);
  add_json(sc_w_action);
  sc_w_action->add_option("--point", o.point_csv, "torus point z1,...,zl");
  sc_w_action->add_option("--side", o.side, "left or right");
  sc_w_action->add_option("--twist", o.twist, "twist for the left action");
  auto* sc_w_transpose =
      sc_wonderful->add_subcommand("transpose", "independent dual transpose");
  add_system(sc_w_transpose);
  add_json(sc_w_transpose);
  sc_w_transpose->add_option("--point", o.point_csv, "torus point z1,...,zl");
  sc_w_transpose->add_option("--side", o.side, "left or right");
  auto* sc_w_killing =
      sc_wonderful->add_subcommand("killing", "Killing-form data");
  add_system(sc_w_killing);
  add_json(sc_w_killing);
  auto* sc_w_check = sc_wonderful->add_subcommand(
      "check", "left/right transpose-conjugation identity");
  add_system(sc_w_check);
  add_json(sc_w_check);
  sc_w_check->add_option("--point", o.point_csv, "torus point z1,...,zl");
  auto* sc_w_invert =
      sc_wonderful->add_subcommand("invert", "inversion on the torus");
  add_system(sc_w_invert);
  add_json(sc_w_invert);
  sc_w_invert->add_option("--point", o.point_csv, "torus point z1,...,zl");

  // scheme ------------------------------------------------------------
  auto* sc_scheme =
      app.add_subcommand("scheme", "modification-scheme operations");
  sc_scheme->require_subcommand(1);
  auto* sc_s_preset =
      sc_scheme->add_subcommand("preset", "emit a published construction");
  sc_s_preset->add_option("--family", o.family, "A3, Cl, or Dl");
  sc_s_preset->add_option("--rank", o.rank, "rank l");
  sc_s_preset->add_option("--genus", o.genus, "curve genus (even)");
  add_json(sc_s_preset);
  auto* sc_s_verify =
      sc_scheme->add_subcommand("verify", "verify a scheme document");
  sc_s_verify->add_option("file", o.file,
                          "scheme JSON file (default: stdin)");
  sc_s_verify->add_flag("--strict", o.strict,
                        "require every root degree to equal the genus");
  add_json(sc_s_verify);
  auto* sc_s_degree =
      sc_scheme->add_subcommand("degree", "root degrees of a scheme");
  sc_s_degree->add_option("file", o.file,
                          "scheme JSON file (default: stdin)");
  sc_s_degree->add_option("--root", o.root_csv, "single root, ambient");
  add_json(sc_s_degree);
  auto* sc_s_search =
      sc_scheme->add_subcommand("search", "search for a passing scheme");
  add_system(sc_s_search, true);
  add_json(sc_s_search);
  sc_s_search->add_option("--genus", o.genus, "curve genus");
  sc_s_search->add_option("--indices", o.indices_csv,
                          "allowed coweight indices i1,...");
  sc_s_search->add_option("--pool", o.pool,
                          "twist pool: reps (default) or cyclic");
  sc_s_search->add_flag("--exact", o.strict,
                        "require degrees exactly equal to the genus");
  sc_s_search->add_option("--budget", o.search_budget,
                          "search node budget");
  auto* sc_s_obstruct = sc_scheme->add_subcommand(
      "obstruct", "aggregate feasibility analysis");
  add_system(sc_s_obstruct, true);
  add_json(sc_s_obstruct);
  sc_s_obstruct->add_option("--genus", o.genus, "curve genus");

  // suite ------------------------------------------------------------
  auto* sc_suite = app.add_subcommand(
      "suite", "run the full reproduction grid and print a pass/fail matrix");
  sc_suite->alias("paper-suite");
  add_json(sc_suite);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (sc_rootsys->parsed()) return run_rootsys(o, out);
    if (sc_weyl_act->parsed()) return run_weyl_act(o, out);
    if (sc_weyl_word->parsed()) return run_weyl_word(o, out);
    if (sc_weyl_longest->parsed()) return run_weyl_longest(o, out);
    if (sc_weyl_cosets->parsed()) return run_weyl_cosets(o, out);
    if (sc_weyl_orbit->parsed()) return run_weyl_orbit(o, out);
    if (sc_affine_act->parsed()) return run_affine_act(o, out);
    if (sc_affine_invset->parsed()) return run_affine_invset(o, out);
    if (sc_affine_length->parsed()) return run_affine_length(o, out);
    if (sc_cells_dim->parsed()) return run_cells_dim(o, out);
    if (sc_cells_decompose->parsed()) return run_cells_decompose(o, out);
    if (sc_cells_deform->parsed()) return run_cells_deform(o, out);
    if (sc_cells_typesum->parsed()) return run_cells_typesum(o, out);
    if (sc_w_action->parsed()) return run_wonderful_action(o, out);
    if (sc_w_transpose->parsed()) return run_wonderful_transpose(o, out);
    if (sc_w_killing->parsed()) return run_wonderful_killing(o, out);
    if (sc_w_check->parsed()) return run_wonderful_check(o, out);
    if (sc_w_invert->parsed()) return run_wonderful_invert(o, out);
    if (sc_s_preset->parsed()) return run_scheme_preset(o, out);
    if (sc_s_verify->parsed()) return run_scheme_verify(o, out, in);
    if (sc_s_degree->parsed()) return run_scheme_degree(o, out, in);
    if (sc_s_search->parsed()) return run_scheme_search(o, out);
    if (sc_s_obstruct->parsed()) return run_scheme_obstruct(o, out);
    if (sc_suite->parsed()) return run_suite(o, out);
  } catch (const SearchBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const WeylkitError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand selected\n";
  return 2;
}

}  // namespace weylkit_cli
