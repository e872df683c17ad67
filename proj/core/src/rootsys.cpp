// rootsys.cpp — construction of the exact root-system tables.

#include "weylkit/rootsys.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace weylkit {

namespace {

// Reflection of v in the hyperplane of root alpha (coroot alpha_check):
// s_α(v) = v − (v, α∨)·α.
Vec reflect(const Vec& v, const Vec& alpha, const Vec& alpha_check) {
  return vec_sub(v, vec_scale(dot(v, alpha_check), alpha));
}

Vec coroot_of(const Vec& alpha) {
  Rat norm2 = dot(alpha, alpha);
  return vec_scale(Rat(2) / norm2, alpha);
}

// Simple roots of each supported realization.
std::vector<Vec> make_simple_roots(Type type, int rank) {
  std::vector<Vec> simples;
  auto basis = [](int dim, int i) {  // e_{i+1} in R^dim (0-based i)
    Vec e(dim, Rat(0));
    e[i] = 1;
    return e;
  };
  switch (type) {
    case Type::A: {
      const int dim = rank + 1;
      for (int i = 0; i < rank; ++i) {
        Vec a = basis(dim, i);
        a[i + 1] = -1;
        simples.push_back(a);
      }
      break;
    }
    case Type::B: {
      for (int i = 0; i + 1 < rank; ++i) {
        Vec a = basis(rank, i);
        a[i + 1] = -1;
        simples.push_back(a);
      }
      simples.push_back(basis(rank, rank - 1));  // α_l = e_l (short)
      break;
    }
    case Type::C: {
      for (int i = 0; i + 1 < rank; ++i) {
        Vec a = basis(rank, i);
        a[i + 1] = -1;
        simples.push_back(a);
      }
      Vec a = basis(rank, rank - 1);
      a[rank - 1] = 2;  // α_l = 2 e_l (long)
      simples.push_back(a);
      break;
    }
    case Type::D: {
      for (int i = 0; i + 1 < rank; ++i) {
        Vec a = basis(rank, i);
        a[i + 1] = -1;
        simples.push_back(a);
      }
      Vec a = basis(rank, rank - 2);
      a[rank - 1] = 1;  // α_l = e_{l−1} + e_l
      simples.push_back(a);
      break;
    }
    case Type::G2: {
      // Zero-sum realization in R³: α_1 = e_1 − e_2 (short),
      // α_2 = −2e_1 + e_2 + e_3 (long).  The Weyl group is then the group
      // of signed permutations {±σ : σ ∈ S_3} acting on the hyperplane.
      Vec a1(3, Rat(0)), a2(3, Rat(0));
      a1[0] = 1;
      a1[1] = -1;
      a2[0] = -2;
      a2[1] = 1;
      a2[2] = 1;
      simples = {a1, a2};
      break;
    }
  }
  return simples;
}

void validate_rank(Type type, int rank) {
  switch (type) {
    case Type::A:
      if (rank < 1) throw InvalidRank("type A needs rank >= 1");
      break;
    case Type::B:
      if (rank < 2) throw InvalidRank("type B needs rank >= 2");
      break;
    case Type::C:
      if (rank < 2) throw InvalidRank("type C needs rank >= 2");
      break;
    case Type::D:
      if (rank < 3) throw InvalidRank("type D needs rank >= 3");
      break;
    case Type::G2:
      if (rank != 2) throw InvalidRank("type G2 needs rank == 2");
      break;
  }
}

long rat_to_long_exact(const Rat& x, const char* what) {
  if (!rat_is_integer(x)) {
    throw WeylkitError(std::string(what) + ": expected integer, got " +
                       rat_to_string(x));
  }
  if (!x.get_num().fits_slong_p()) {
    throw WeylkitError(std::string(what) + ": integer out of range");
  }
  return x.get_num().get_si();
}

}  // namespace

std::string type_to_string(Type t) {
  switch (t) {
    case Type::A: return "A";
    case Type::B: return "B";
    case Type::C: return "C";
    case Type::D: return "D";
    case Type::G2: return "G2";
  }
  throw UnsupportedType("unknown type enum");
}

Type type_from_string(const std::string& s) {
  if (s == "A") return Type::A;
  if (s == "B") return Type::B;
  if (s == "C") return Type::C;
  if (s == "D") return Type::D;
  if (s == "G2" || s == "G") return Type::G2;
  throw UnsupportedType("unsupported type label '" + s + "'");
}

std::string vec_key(const Vec& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  return os.str();
}

bool FundamentalGroupElement::is_identity() const {
  return std::all_of(residues.begin(), residues.end(),
                     [](long r) { return r == 0; });
}

std::string FundamentalGroupElement::to_string() const {
  if (moduli.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i) os << ", ";
    os << residues[i] << " mod " << moduli[i];
  }
  return os.str();
}

RootSystem build_root_system(Type type, int rank) {
  validate_rank(type, rank);

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.simple_roots = make_simple_roots(type, rank);
  rs.ambient = static_cast<int>(rs.simple_roots.front().size());
  for (const Vec& a : rs.simple_roots) rs.simple_coroots.push_back(coroot_of(a));

  // Cartan matrix a_ij = ⟨α_i∨, α_j⟩.
  rs.cartan = ZMat(rank, rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      Rat a = dot(rs.simple_coroots[i], rs.simple_roots[j]);
      rs.cartan.at(i, j) = Int(rat_to_long_exact(a, "cartan entry"));
    }
  }
  for (int i = 0; i < rank; ++i) {
    if (rs.cartan.at(i, i) != 2) throw WeylkitError("cartan diagonal != 2");
    for (int j = 0; j < rank; ++j) {
      if (i != j && sgn(rs.cartan.at(i, j)) > 0) {
        throw WeylkitError("cartan off-diagonal > 0");
      }
    }
  }
  auto inv = rs.cartan.to_mat().inverse();
  if (!inv) throw WeylkitError("cartan matrix singular");
  rs.inverse_cartan = *inv;

  // Generate the full root set: closure of the simple roots under the
  // simple reflections (every root is conjugate to a simple root).
  std::map<std::string, Vec> closure;
  std::vector<Vec> frontier = rs.simple_roots;
  for (const Vec& a : frontier) closure.emplace(vec_key(a), a);
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& v : frontier) {
      for (int i = 0; i < rank; ++i) {
        Vec u = reflect(v, rs.simple_roots[i], rs.simple_coroots[i]);
        auto [it, inserted] = closure.emplace(vec_key(u), u);
        if (inserted) next.push_back(u);
      }
    }
    frontier = std::move(next);
  }

  // Split by sign of the simple-root coefficients and order canonically.
  Mat simple_cols = mat_from_columns(rs.simple_roots);
  struct PosRoot {
    Vec root;
    std::vector<long> coeffs;
    long height;
  };
  std::vector<PosRoot> positives;
  for (const auto& [key, v] : closure) {
    auto c = solve(simple_cols, v);
    if (!c) throw WeylkitError("root outside simple-root span");
    bool nonneg = true, nonpos = true;
    std::vector<long> coeffs(rank);
    long height = 0;
    for (int i = 0; i < rank; ++i) {
      coeffs[i] = rat_to_long_exact((*c)[i], "root coefficient");
      height += coeffs[i];
      if (coeffs[i] < 0) nonneg = false;
      if (coeffs[i] > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) throw WeylkitError("root with mixed signs");
    if (nonneg) positives.push_back({v, coeffs, height});
  }
  // Canonical order: by height, then by coefficient vector with the
  // lexicographically greatest first, so the simple roots come out in
  // index order α_1, …, α_l.
  std::sort(positives.begin(), positives.end(),
            [](const PosRoot& a, const PosRoot& b) {
              if (a.height != b.height) return a.height < b.height;
              return a.coeffs > b.coeffs;
            });
  if (closure.size() != 2 * positives.size()) {
    throw WeylkitError("positive/negative root split failed");
  }

  for (const PosRoot& p : positives) {
    rs.positive_roots.push_back(p.root);
    rs.positive_coroots.push_back(coroot_of(p.root));
    rs.positive_root_coeffs.push_back(p.coeffs);
  }
  const int p = static_cast<int>(rs.positive_roots.size());
  rs.dim_g = 2 * p + rank;

  rs.roots = rs.positive_roots;
  for (const Vec& a : rs.positive_roots) rs.roots.push_back(vec_neg(a));
  for (int i = 0; i < 2 * p; ++i) rs.root_index.emplace(vec_key(rs.roots[i]), i);

  // ρ = half-sum of positive roots.
  rs.rho = Vec(rs.ambient, Rat(0));
  for (const Vec& a : rs.positive_roots) rs.rho = vec_add(rs.rho, a);
  rs.rho = vec_scale(Rat(1, 2), rs.rho);
  for (int i = 0; i < rank; ++i) {
    if (dot(rs.simple_coroots[i], rs.rho) != 1) {
      throw WeylkitError("rho pairing check failed");
    }
  }

  // Fundamental weights: λ_i = Σ_k (A⁻¹)_{ki} α_k  (column i over roots).
  // Fundamental coweights: λ_i∨ = Σ_k (A⁻¹)_{ik} α_k∨ (row i over coroots).
  for (int i = 0; i < rank; ++i) {
    Vec w(rs.ambient, Rat(0));
    Vec cw(rs.ambient, Rat(0));
    for (int k = 0; k < rank; ++k) {
      w = vec_add(w, vec_scale(rs.inverse_cartan.at(k, i), rs.simple_roots[k]));
      cw = vec_add(cw, vec_scale(rs.inverse_cartan.at(i, k), rs.simple_coroots[k]));
    }
    rs.fundamental_weights.push_back(w);
    rs.fundamental_coweights.push_back(cw);
  }

  // Highest root: the unique root of maximal height.
  long max_height = positives.back().height;
  int count_at_max = 0;
  for (const PosRoot& q : positives) {
    if (q.height == max_height) ++count_at_max;
  }
  if (count_at_max != 1) throw WeylkitError("highest root not unique");
  rs.highest_root = positives.back().root;
  rs.highest_coroot = coroot_of(rs.highest_root);
  for (int i = 0; i < rank; ++i) {
    if (dot(rs.simple_coroots[i], rs.highest_root) < 0) {
      throw WeylkitError("highest root not dominant");
    }
  }

  // Length classes.
  rs.long_norm2 = Rat(0);
  rs.short_norm2 = Rat(0);
  bool first = true;
  for (const Vec& a : rs.positive_roots) {
    Rat n2 = dot(a, a);
    if (first) {
      rs.long_norm2 = rs.short_norm2 = n2;
      first = false;
    } else {
      if (n2 > rs.long_norm2) rs.long_norm2 = n2;
      if (n2 < rs.short_norm2) rs.short_norm2 = n2;
    }
  }
  rs.num_short_positive = rs.num_long_positive = 0;
  for (const Vec& a : rs.positive_roots) {
    bool is_long = (dot(a, a) == rs.long_norm2);
    rs.positive_is_long.push_back(is_long);
    if (is_long) {
      ++rs.num_long_positive;
    } else {
      ++rs.num_short_positive;
    }
  }

  // Fundamental group: Smith normal form of Aᵀ.
  SmithForm snf = smith_normal_form(rs.cartan.transpose());
  rs.snf_left = snf.left;
  rs.pi1_order = 1;
  for (int i = 0; i < rank; ++i) {
    const Int& d = snf.diagonal.at(i, i);
    if (!d.fits_slong_p()) throw WeylkitError("invariant factor out of range");
    long dv = d.get_si();
    if (dv <= 0) throw WeylkitError("nonpositive invariant factor");
    rs.snf_diagonal.push_back(dv);
    rs.pi1_order *= dv;
    if (dv > 1) rs.pi1_invariant_factors.push_back(dv);
  }
  Rat det_a = rs.cartan.to_mat().det();
  if (Rat(rs.pi1_order) != abs(det_a)) {
    throw WeylkitError("fundamental group order != |det A|");
  }

  return rs;
}

Rat pairing_ambient(const Vec& v, const Vec& alpha) { return dot(v, alpha); }

Vec coweight_ambient(const RootSystem& rs, const Coweight& v) {
  if (static_cast<int>(v.coeffs.size()) != rs.rank) {
    throw DimensionMismatch("coweight_ambient: coefficient count != rank");
  }
  Vec r(rs.ambient, Rat(0));
  for (int i = 0; i < rs.rank; ++i) {
    r = vec_add(r, vec_scale(v.coeffs[i], rs.fundamental_coweights[i]));
  }
  return r;
}

Rat pairing(const RootSystem& rs, const Coweight& v, const Vec& alpha) {
  if (static_cast<int>(alpha.size()) != rs.ambient) {
    throw DimensionMismatch("pairing: ambient dimension mismatch");
  }
  return dot(coweight_ambient(rs, v), alpha);
}

Coweight coweight_from_ambient(const RootSystem& rs, const Vec& v) {
  if (static_cast<int>(v.size()) != rs.ambient) {
    throw DimensionMismatch("coweight_from_ambient: dimension mismatch");
  }
  Coweight c;
  c.coeffs.resize(rs.rank);
  for (int j = 0; j < rs.rank; ++j) c.coeffs[j] = dot(v, rs.simple_roots[j]);
  if (coweight_ambient(rs, c) != v) {
    throw DimensionMismatch("coweight_from_ambient: vector not in coroot span");
  }
  return c;
}

Vec coroot_coords(const RootSystem& rs, const Coweight& v) {
  // coeffs = Aᵀ d  ⇒  d = (Aᵀ)⁻¹ coeffs = (A⁻¹)ᵀ coeffs.
  Vec d(rs.rank, Rat(0));
  for (int k = 0; k < rs.rank; ++k) {
    for (int j = 0; j < rs.rank; ++j) d[k] += rs.inverse_cartan.at(j, k) * v.coeffs[j];
  }
  return d;
}

Coweight coweight_from_coroot_coords(const RootSystem& rs, const Vec& d) {
  if (static_cast<int>(d.size()) != rs.rank) {
    throw DimensionMismatch("coweight_from_coroot_coords: length != rank");
  }
  Vec ambient(rs.ambient, Rat(0));
  for (int k = 0; k < rs.rank; ++k) {
    ambient = vec_add(ambient, vec_scale(d[k], rs.simple_coroots[k]));
  }
  return coweight_from_ambient(rs, ambient);
}

bool is_dominant(const Coweight& v) {
  return std::all_of(v.coeffs.begin(), v.coeffs.end(),
                     [](const Rat& c) { return sgn(c) >= 0; });
}

bool is_integral(const Coweight& v) {
  return std::all_of(v.coeffs.begin(), v.coeffs.end(), rat_is_integer);
}

bool in_coroot_lattice(const RootSystem& rs, const Coweight& v) {
  Vec d = coroot_coords(rs, v);
  return std::all_of(d.begin(), d.end(), rat_is_integer);
}

int root_index_of(const RootSystem& rs, const Vec& alpha) {
  auto it = rs.root_index.find(vec_key(alpha));
  if (it == rs.root_index.end()) {
    throw RootNotInSystem("not a root: " + vec_to_string(alpha));
  }
  return it->second;
}

bool is_root(const RootSystem& rs, const Vec& alpha) {
  return rs.root_index.count(vec_key(alpha)) != 0;
}

bool is_long_root(const RootSystem& rs, const Vec& alpha) {
  int idx = root_index_of(rs, alpha);
  const int p = static_cast<int>(rs.positive_roots.size());
  return rs.positive_is_long[idx < p ? idx : idx - p];
}

std::optional<Vec> simple_root_coords(const RootSystem& rs, const Vec& v) {
  return solve(mat_from_columns(rs.simple_roots), v);
}

FundamentalGroupElement fundamental_group_identity(const RootSystem& rs) {
  FundamentalGroupElement e;
  e.moduli = rs.pi1_invariant_factors;
  e.residues.assign(e.moduli.size(), 0);
  return e;
}

FundamentalGroupElement fundamental_group_class(const RootSystem& rs,
                                                const Coweight& v) {
  if (!is_integral(v)) {
    throw NonIntegralCoweight("fundamental_group_class: " +
                              vec_to_string(v.coeffs));
  }
  // Residues of the coefficient vector under L·coeffs mod the invariant
  // factors: coeffs ∈ Aᵀ·Zˡ ⇔ L·coeffs ∈ D·Zˡ for L·Aᵀ·R = D.
  FundamentalGroupElement e = fundamental_group_identity(rs);
  std::vector<Int> y(rs.rank, Int(0));
  for (int i = 0; i < rs.rank; ++i) {
    for (int j = 0; j < rs.rank; ++j) {
      y[i] += rs.snf_left.at(i, j) * v.coeffs[j].get_num();
    }
  }
  std::size_t out = 0;
  for (int i = 0; i < rs.rank; ++i) {
    long d = rs.snf_diagonal[i];
    if (d <= 1) continue;
    Int m = y[i] % d;
    if (sgn(m) < 0) m += d;
    e.residues[out++] = m.get_si();
  }
  return e;
}

FundamentalGroupElement fundamental_group_add(const RootSystem& rs,
                                              const FundamentalGroupElement& a,
                                              const FundamentalGroupElement& b) {
  FundamentalGroupElement e = fundamental_group_identity(rs);
  if (a.moduli != e.moduli || b.moduli != e.moduli) {
    throw DimensionMismatch("fundamental_group_add: class from another system");
  }
  for (std::size_t i = 0; i < e.moduli.size(); ++i) {
    e.residues[i] = (a.residues[i] + b.residues[i]) % e.moduli[i];
  }
  return e;
}

FundamentalGroupElement fundamental_group_scale(const RootSystem& rs,
                                                const FundamentalGroupElement& a,
                                                long k) {
  FundamentalGroupElement e = fundamental_group_identity(rs);
  if (a.moduli != e.moduli) {
    throw DimensionMismatch("fundamental_group_scale: class from another system");
  }
  for (std::size_t i = 0; i < e.moduli.size(); ++i) {
    long m = e.moduli[i];
    long r = (a.residues[i] % m) * (k % m) % m;
    if (r < 0) r += m;
    e.residues[i] = r;
  }
  return e;
}

Coweight kernel_coweight(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank) {
    throw IndexOutOfRange("kernel_coweight: index " + std::to_string(i));
  }
  // ξ_i in coroot coordinates is column i of A⁻¹ (row i of the inverse
  // transposed Cartan matrix); for symmetric A this is λ_i∨.
  Vec d(rs.rank);
  for (int k = 0; k < rs.rank; ++k) d[k] = rs.inverse_cartan.at(k, i - 1);
  return coweight_from_coroot_coords(rs, d);
}

Rat two_rho_pairing(const RootSystem& rs, const Coweight& v) {
  return Rat(2) * pairing(rs, v, rs.rho);
}

long parameter_count(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank) {
    throw IndexOutOfRange("parameter_count: index " + std::to_string(i));
  }
  Rat t = Rat(2) * dot(rs.fundamental_coweights[i - 1], rs.rho) + 1;
  return rat_to_long_exact(t, "parameter_count");
}

}  // namespace weylkit
