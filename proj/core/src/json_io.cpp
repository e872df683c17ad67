// json_io.cpp — canonical JSON serialization for CLI artifacts.

#include "weylkit/json_io.hpp"

#include "weylkit/errors.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

namespace {

long json_to_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + ": expected an integer, got " +
                     j.dump());
  }
  return j.get<long>();
}

std::string json_to_string(const Json& j, const char* what) {
  if (!j.is_string()) {
    throw ParseError(std::string(what) + ": expected a string, got " +
                     j.dump());
  }
  return j.get<std::string>();
}

}  // namespace

Json rat_to_json(const Rat& x) { return rat_to_string(x); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  return rat_from_string(json_to_string(j, "rational"));
}

Json vec_to_json(const Vec& v) {
  Json arr = Json::array();
  for (const Rat& x : v) arr.push_back(rat_to_json(x));
  return arr;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) {
    throw ParseError("vector: expected an array, got " + j.dump());
  }
  Vec v;
  v.reserve(j.size());
  for (const Json& entry : j) v.push_back(rat_from_json(entry));
  return v;
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(vec_to_json(m.row(i)));
  }
  return rows;
}

Json mat_to_json_pairs(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& x = m.at(i, j);
      if (!x.get_num().fits_slong_p() || !x.get_den().fits_slong_p()) {
        throw WeylkitError("matrix entry exceeds the integer-pair encoding");
      }
      row.push_back(Json::array(
          {x.get_num().get_si(), x.get_den().get_si()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rootsys_to_json(const RootSystem& rs) {
  Json j;
  j["type"] = type_to_string(rs.type);
  j["rank"] = rs.rank;
  j["ambient"] = rs.ambient;
  j["dim_g"] = rs.dim_g;
  Json simples = Json::array();
  for (const Vec& a : rs.simple_roots) simples.push_back(vec_to_json(a));
  j["simple_roots"] = std::move(simples);
  Json cartan = Json::array();
  for (std::size_t i = 0; i < rs.cartan.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < rs.cartan.cols(); ++k) {
      if (!rs.cartan.at(i, k).fits_slong_p()) {
        throw WeylkitError("Cartan entry exceeds the integer encoding");
      }
      row.push_back(rs.cartan.at(i, k).get_si());
    }
    cartan.push_back(std::move(row));
  }
  j["cartan"] = std::move(cartan);
  Json positives = Json::array();
  for (const Vec& a : rs.positive_roots) positives.push_back(vec_to_json(a));
  j["positive_roots"] = std::move(positives);
  Json factors = Json::array();
  for (long d : rs.pi1_invariant_factors) factors.push_back(d);
  j["fundamental_group_invariant_factors"] = std::move(factors);
  j["fundamental_group_order"] = rs.pi1_order;
  return j;
}

Json affine_to_json(const RootSystem& rs, const AffineWeylElement& s) {
  const Coweight cw = coweight_from_ambient(rs, s.mu);
  Json translation = Json::array();
  for (const Rat& c : cw.coeffs) {
    if (!rat_is_integer(c)) {
      throw WeylkitError(
          "affine translation is not an integral coweight; cannot serialize");
    }
    if (!c.get_num().fits_slong_p()) {
      throw WeylkitError("affine translation coefficient out of range");
    }
    translation.push_back(c.get_num().get_si());
  }
  Json j;
  j["translation"] = std::move(translation);
  j["finite"] = weyl_to_string(s.w);
  return j;
}

AffineWeylElement affine_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_object() || !j.contains("translation") || !j.contains("finite")) {
    throw ParseError(
        "affine element: expected {\"translation\": [...], \"finite\": "
        "\"...\"}");
  }
  const Json& tr = j.at("translation");
  if (!tr.is_array() || static_cast<int>(tr.size()) != rs.rank) {
    throw ParseError("affine element: translation needs " +
                     std::to_string(rs.rank) + " integer coefficients");
  }
  Coweight cw;
  cw.coeffs.reserve(tr.size());
  for (const Json& c : tr) {
    cw.coeffs.emplace_back(json_to_long(c, "translation coefficient"));
  }
  AffineWeylElement s;
  s.mu = coweight_ambient(rs, cw);
  s.w = weyl_from_string(json_to_string(j.at("finite"), "finite part"));
  if (static_cast<int>(s.w.img.size()) != rs.ambient) {
    throw ParseError("affine element: finite part acts on " +
                     std::to_string(s.w.img.size()) +
                     " coordinates, ambient is " + std::to_string(rs.ambient));
  }
  return s;
}

Json decomposition_to_json(const RootSystem& rs, const CellDecomposition& d) {
  Json j;
  j["base_coweight"] = vec_to_json(d.base_coweight.coeffs);
  j["top_dimension"] = d.top_dimension;
  j["jet_bound"] = d.jet_bound;
  j["component_shift"] = d.component_shift.to_string();
  Json poincare = Json::array();
  for (long c : d.poincare) poincare.push_back(c);
  j["poincare"] = std::move(poincare);
  Json cells = Json::array();
  for (const Cell& c : d.cells) {
    Json cell;
    cell["rep"] = weyl_to_string(c.rep);
    Json word = Json::array();
    for (int i : c.rep.word) word.push_back(i);
    cell["word"] = std::move(word);
    cell["dimension"] = c.dimension;
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  (void)rs;
  return j;
}

Json tangent_map_to_json(const TangentMap& m) {
  Json j;
  j["side"] = (m.side == Side::Left) ? "left" : "right";
  j["is_transpose"] = m.is_transpose;
  if (m.twist.has_value()) j["twist"] = weyl_to_string(*m.twist);
  j["rows"] = m.matrix.rows();
  j["cols"] = m.matrix.cols();
  j["entries"] = mat_to_json_pairs(m.matrix);
  j["basis"] =
      "rows and columns ordered as x-root lines (positive roots in "
      "canonical order), then y-root lines, then toral coordinates";
  return j;
}

Json killing_to_json(const KillingData& k) {
  Json j;
  j["toral_gram"] = mat_to_json_pairs(k.toral_gram);
  Json constants = Json::array();
  for (const Rat& c : k.root_constants) constants.push_back(rat_to_json(c));
  j["root_constants"] = std::move(constants);
  j["kappa_tilde"] = mat_to_json_pairs(k.kappa_tilde);
  return j;
}

Json scheme_to_json(const ModificationScheme& scheme,
                    const std::vector<std::string>& notes) {
  Json j;
  j["type"] = type_to_string(scheme.type);
  j["rank"] = scheme.rank;
  j["genus"] = scheme.genus;
  Json entries = Json::array();
  for (const SchemeEntry& e : scheme.entries) {
    Json entry;
    entry["twist"] = weyl_to_string(e.twist);
    entry["coweight"] = e.coweight_index;
    entry["points"] = e.points;
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  if (!notes.empty()) {
    Json ns = Json::array();
    for (const std::string& n : notes) ns.push_back(n);
    j["notes"] = std::move(ns);
  }
  return j;
}

ModificationScheme scheme_from_json(const Json& j) {
  if (!j.is_object()) {
    throw ParseError("scheme: expected a JSON object, got " + j.dump());
  }
  for (const char* key : {"type", "rank", "genus", "entries"}) {
    if (!j.contains(key)) {
      throw ParseError(std::string("scheme: missing key \"") + key + "\"");
    }
  }
  ModificationScheme scheme;
  scheme.type = type_from_string(json_to_string(j.at("type"), "scheme type"));
  scheme.rank = static_cast<int>(json_to_long(j.at("rank"), "scheme rank"));
  scheme.genus = json_to_long(j.at("genus"), "scheme genus");
  const Json& entries = j.at("entries");
  if (!entries.is_array()) {
    throw ParseError("scheme: \"entries\" must be an array");
  }
  for (const Json& entry : entries) {
    if (!entry.is_object()) {
      throw ParseError("scheme entry: expected an object, got " +
                       entry.dump());
    }
    for (const char* key : {"twist", "coweight", "points"}) {
      if (!entry.contains(key)) {
        throw ParseError(std::string("scheme entry: missing key \"") + key +
                         "\"");
      }
    }
    SchemeEntry e;
    e.twist = weyl_from_string(json_to_string(entry.at("twist"), "twist"));
    e.coweight_index =
        static_cast<int>(json_to_long(entry.at("coweight"), "coweight index"));
    e.points = json_to_long(entry.at("points"), "points");
    scheme.entries.push_back(std::move(e));
  }
  return scheme;
}

Json report_to_json(const RootSystem& rs, const SchemeReport& report) {
  Json j;
  j["pass"] = report.pass;
  j["parameters"] = Json{{"count", report.param_count},
                         {"target", report.param_target},
                         {"ok", report.param_ok}};
  Json rows = Json::array();
  for (const RootDegreeRow& row : report.root_degrees) {
    Json r;
    r["index"] = row.root_index;
    r["root"] =
        vec_to_json(rs.roots[static_cast<std::size_t>(row.root_index)]);
    const bool positive =
        row.root_index < static_cast<int>(rs.positive_roots.size());
    const int pos_index = positive
                              ? row.root_index
                              : row.root_index -
                                    static_cast<int>(rs.positive_roots.size());
    r["long"] = rs.positive_is_long[static_cast<std::size_t>(pos_index)];
    r["degree"] = row.degree;
    Json contribs = Json::array();
    for (const auto& [pos, coeff] : row.contributions) {
      contribs.push_back(Json::array({pos, coeff}));
    }
    r["contributions"] = std::move(contribs);
    rows.push_back(std::move(r));
  }
  j["degrees"] = Json{{"min", report.min_degree},
                      {"ok", report.degrees_ok},
                      {"rows", std::move(rows)}};
  Json lines = Json::array();
  for (const ToralLine& line : report.toral_lines) {
    lines.push_back(Json{{"direction", vec_to_json(line.direction)},
                         {"points", line.points}});
  }
  j["toral"] = Json{{"lines", std::move(lines)},
                    {"per_line_ok", report.per_line_ok},
                    {"spanning_ok", report.spanning_ok}};
  j["top_type"] = report.top_type.to_string();
  Json failures = Json::array();
  for (const std::string& f : report.failures) failures.push_back(f);
  j["failures"] = std::move(failures);
  Json notes = Json::array();
  for (const std::string& n : report.notes) notes.push_back(n);
  j["notes"] = std::move(notes);
  return j;
}

Json obstruction_to_json(const ObstructionReport& report) {
  Json j;
  j["feasible"] = report.feasible;
  j["target"] = report.target;
  j["short_required"] = report.short_required;
  j["long_required"] = report.long_required;
  Json rows = Json::array();
  for (const ObstructionRow& row : report.rows) {
    rows.push_back(Json{{"index", row.index},
                        {"p", row.p},
                        {"s", row.s},
                        {"t", row.t}});
  }
  j["rows"] = std::move(rows);
  Json sols = Json::array();
  for (const auto& [counts, ok] : report.equality_solutions) {
    Json counts_json = Json::array();
    for (long k : counts) counts_json.push_back(k);
    sols.push_back(Json{{"counts", std::move(counts_json)}, {"ok", ok}});
  }
  j["equality_solutions"] = std::move(sols);
  Json cert = Json::array();
  for (const std::string& line : report.certificate) cert.push_back(line);
  j["certificate"] = std::move(cert);
  return j;
}

Json search_to_json(const RootSystem& rs, const SearchResult& result) {
  Json j;
  j["feasible"] = result.feasible;
  if (result.scheme.has_value()) {
    j["scheme"] = scheme_to_json(*result.scheme);
  }
  if (result.report.has_value()) {
    j["report"] = report_to_json(rs, *result.report);
  }
  Json cert = Json::array();
  for (const std::string& line : result.certificate) cert.push_back(line);
  j["certificate"] = std::move(cert);
  return j;
}

std::string to_canonical_string(const Json& j) {
  return j.dump(2) + "\n";
}

}  // namespace weylkit
