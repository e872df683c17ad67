// wonderful.cpp — tangent maps, Killing transfer, twisted charts.

#include "weylkit/wonderful.hpp"

namespace weylkit {

namespace {

void check_point(const RootSystem& rs, const TorusPoint& z, const char* what) {
  if (static_cast<int>(z.z.size()) != rs.rank) {
    throw DimensionMismatch(std::string(what) + ": point length != rank");
  }
}

long exponent_of(const RootSystem& rs, const Vec& root, int i) {
  // ⟨λ_i∨, β⟩ is the coefficient of α_i in β; read it off exactly.
  Rat c = dot(rs.fundamental_coweights[i], root);
  if (!rat_is_integer(c) || !c.get_num().fits_slong_p()) {
    throw WeylkitError("twist exponent not a small integer");
  }
  return c.get_num().get_si();
}

}  // namespace

Rat root_monomial(const std::vector<long>& exponents, const Vec& z) {
  if (exponents.size() != z.size()) {
    throw DimensionMismatch("root_monomial: exponent/point length mismatch");
  }
  Rat m(1);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (exponents[i] < 0) {
      throw WeylkitError("root_monomial: negative exponent");
    }
    for (long k = 0; k < exponents[i]; ++k) m *= z[i];
  }
  return m;
}

TangentMap infinitesimal_action(const RootSystem& rs, const TorusPoint& z,
                                Side side) {
  check_point(rs, z, "infinitesimal_action");
  const int p = static_cast<int>(rs.positive_roots.size());
  const int n = 2 * p + rs.rank;
  TangentMap t;
  t.side = side;
  t.matrix = Mat(n, n);
  for (int a = 0; a < p; ++a) {
    Rat m = root_monomial(rs.positive_root_coeffs[a], z.z);
    // Column x_α: row dA(x_α).  Column y_α: row dA(y_α).
    t.matrix.at(a, a) = side == Side::Left ? Rat(-1) : -m;
    t.matrix.at(p + a, p + a) = side == Side::Left ? m : Rat(1);
  }
  for (int i = 0; i < rs.rank; ++i) {
    for (int j = 0; j < rs.rank; ++j) {
      // Column h_i, row dA(e_j): −a_ij z_j, identical on both sides.
      t.matrix.at(2 * p + j, 2 * p + i) = -Rat(rs.cartan.at(i, j)) * z.z[j];
    }
  }
  return t;
}

TangentMap infinitesimal_transpose(const RootSystem& rs, const TorusPoint& z,
                                   Side side) {
  check_point(rs, z, "infinitesimal_transpose");
  const int p = static_cast<int>(rs.positive_roots.size());
  const int n = 2 * p + rs.rank;
  TangentMap t;
  t.side = side;
  t.is_transpose = true;
  t.matrix = Mat(n, n);
  // Dual formulas; rows are x_α^*, y_α^*, h_i^*, columns are dA(·)^*.
  for (int a = 0; a < p; ++a) {
    Rat m = root_monomial(rs.positive_root_coeffs[a], z.z);
    // dLᵗ(dA(x_α)^*) = −x_α^*;        dRᵗ(dA(x_α)^*) = −m_α x_α^*.
    t.matrix.at(a, a) = side == Side::Left ? Rat(-1) : -m;
    // dLᵗ(dA(y_α)^*) = m_α y_α^*;     dRᵗ(dA(y_α)^*) = y_α^*.
    t.matrix.at(p + a, p + a) = side == Side::Left ? m : Rat(1);
  }
  for (int j = 0; j < rs.rank; ++j) {
    for (int i = 0; i < rs.rank; ++i) {
      // dLᵗ(dA(e_j)^*) = dRᵗ(dA(e_j)^*) = −z_j Σ_i a_ij h_i^*.
      t.matrix.at(2 * p + i, 2 * p + j) = -z.z[j] * Rat(rs.cartan.at(i, j));
    }
  }
  return t;
}

KillingData killing_data(const RootSystem& rs) {
  KillingData kd;
  const int p = static_cast<int>(rs.positive_roots.size());
  const int l = rs.rank;

  // Toral Gram: κ(h_i, h_j) = Σ_{α∈Φ} ⟨α_i∨, α⟩⟨α_j∨, α⟩.
  kd.toral_gram = Mat(l, l);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      Rat sum(0);
      for (const Vec& a : rs.roots) {
        sum += dot(rs.simple_coroots[i], a) * dot(rs.simple_coroots[j], a);
      }
      kd.toral_gram.at(i, j) = sum;
    }
  }

  // k_α from κ(h_α, h) = α(h)·k_α, where for toral u, v the Killing form
  // is κ(u, v) = Σ_{β∈Φ} β(u)β(v).  Derived for h = α∨ and re-checked
  // against every simple coroot that pairs nontrivially with α.
  for (int a = 0; a < p; ++a) {
    const Vec& alpha = rs.positive_roots[a];
    const Vec& h_alpha = rs.positive_coroots[a];
    auto kappa_with = [&](const Vec& h) {
      Rat sum(0);
      for (const Vec& beta : rs.roots) sum += dot(beta, h_alpha) * dot(beta, h);
      return sum;
    };
    Rat denom = dot(alpha, h_alpha);  // = 2
    Rat k = kappa_with(h_alpha) / denom;
    if (sgn(k) == 0) throw DegeneratePairing("killing_data: k_alpha = 0");
    for (int i = 0; i < l; ++i) {
      Rat ai = dot(alpha, rs.simple_coroots[i]);
      if (sgn(ai) == 0) continue;
      if (kappa_with(rs.simple_coroots[i]) / ai != k) {
        throw DegeneratePairing("killing_data: k_alpha depends on the test vector");
      }
    }
    kd.root_constants.push_back(k);
  }

  // κ̃ = inverse Gram matrix in the basis {x_α} ∪ {y_α} ∪ {h_i}:
  // κ(x_α, y_α) = k_α pairs the first two blocks; the toral block is G.
  auto g_inv = kd.toral_gram.inverse();
  if (!g_inv) throw DegeneratePairing("killing_data: toral Gram singular");
  const int n = 2 * p + l;
  kd.kappa_tilde = Mat(n, n);
  for (int a = 0; a < p; ++a) {
    Rat inv_k = Rat(1) / kd.root_constants[a];
    kd.kappa_tilde.at(a, p + a) = inv_k;
    kd.kappa_tilde.at(p + a, a) = inv_k;
  }
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      kd.kappa_tilde.at(2 * p + i, 2 * p + j) = g_inv->at(i, j);
    }
  }
  return kd;
}

LRCheckResult check_lr_transpose(const RootSystem& rs, const TorusPoint& z) {
  check_point(rs, z, "check_lr_transpose");
  KillingData kd = killing_data(rs);
  Mat left = infinitesimal_action(rs, z, Side::Left).matrix;
  Mat right = infinitesimal_action(rs, z, Side::Right).matrix;
  Mat left_t = infinitesimal_transpose(rs, z, Side::Left).matrix;
  Mat right_t = infinitesimal_transpose(rs, z, Side::Right).matrix;
  Mat lhs = left * kd.kappa_tilde * left_t;
  Mat rhs = right * kd.kappa_tilde * right_t;
  LRCheckResult res;
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
      if (lhs.at(r, c) != rhs.at(r, c)) {
        res.ok = false;
        res.row = r;
        res.col = c;
        res.lhs = lhs.at(r, c);
        res.rhs = rhs.at(r, c);
        return res;
      }
    }
  }
  return res;
}

TangentMap twisted_action(const RootSystem& rs, const TorusPoint& z,
                          const WeylElement& nu) {
  check_point(rs, z, "twisted_action");
  const int p = static_cast<int>(rs.positive_roots.size());
  const int n = 2 * p + rs.rank;
  TangentMap t;
  t.side = Side::Left;
  t.twist = nu;
  t.matrix = Mat(n, n);
  for (int b = 0; b < p; ++b) {
    Rat m = root_monomial(rs.positive_root_coeffs[b], z.z);
    t.matrix.at(b, b) = Rat(-1);
    t.matrix.at(p + b, p + b) = m;
  }
  WeylElement nu_inv = weyl_inverse(nu);
  for (int i = 0; i < rs.rank; ++i) {
    Vec pulled = weyl_act(nu_inv, rs.simple_coroots[i]);
    for (int j = 0; j < rs.rank; ++j) {
      // Row dA(e_j), column h_i: −⟨ν⁻¹α_i∨, α_j⟩ z_j.
      t.matrix.at(2 * p + j, 2 * p + i) = -dot(pulled, rs.simple_roots[j]) * z.z[j];
    }
  }
  return t;
}

std::vector<long> twist_exponents(const RootSystem& rs, const WeylElement& nu,
                                  int root_index) {
  if (root_index < 0 || root_index >= static_cast<int>(rs.roots.size())) {
    throw IndexOutOfRange("twist_exponents: root index");
  }
  Vec beta = weyl_act(weyl_inverse(nu), rs.roots[root_index]);
  std::vector<long> e(rs.rank);
  for (int i = 0; i < rs.rank; ++i) e[i] = exponent_of(rs, beta, i);
  return e;
}

TorusPoint inversion_on_torus(const RootSystem& rs, const TorusPoint& z) {
  check_point(rs, z, "inversion_on_torus");
  std::vector<int> omega = longest_element_involution(rs);
  TorusPoint out;
  out.z.resize(rs.rank);
  for (int i = 0; i < rs.rank; ++i) out.z[i] = z.z[omega[i] - 1];
  return out;
}

long degeneration_rank_formula(const RootSystem& rs, const TorusPoint& z) {
  check_point(rs, z, "degeneration_rank_formula");
  const int p = static_cast<int>(rs.positive_roots.size());
  long rank = p;
  for (int a = 0; a < p; ++a) {
    bool clear = true;
    for (int i = 0; i < rs.rank; ++i) {
      if (rs.positive_root_coeffs[a][i] > 0 && sgn(z.z[i]) == 0) {
        clear = false;
        break;
      }
    }
    if (clear) ++rank;
  }
  for (int i = 0; i < rs.rank; ++i) {
    if (sgn(z.z[i]) != 0) ++rank;
  }
  return rank;
}

std::vector<TorusPoint> boundary_points(const RootSystem& rs) {
  std::vector<TorusPoint> pts;
  const int l = rs.rank;
  for (long mask = 0; mask < (1L << l); ++mask) {
    TorusPoint z;
    z.z.assign(l, Rat(0));
    for (int i = 0; i < l; ++i) {
      if (mask & (1L << i)) z.z[i] = 1;
    }
    pts.push_back(z);
  }
  return pts;
}

}  // namespace weylkit
