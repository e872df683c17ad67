// test_schemes.cpp — the parametrization engine: preset constructions,
// the four verification conditions, per-root degree bookkeeping, kernel
// line geometry, obstruction certificates, and the deterministic search.

#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "weylkit/schemes.hpp"

using namespace weylkit;
using weylkit_test::Rng;

namespace {

WeylElement perm_from_images(std::vector<int> img) { return WeylElement{std::move(img), {}}; }

/// Transposition (a b) on `n` coordinates, 1-based.
WeylElement transposition(int n, int a, int b) {
  WeylElement w = weyl_identity(n);
  w.img[static_cast<std::size_t>(a - 1)] = b;
  w.img[static_cast<std::size_t>(b - 1)] = a;
  return w;
}

long total_points(const ModificationScheme& s) {
  long m = 0;
  for (const auto& e : s.entries) m += e.points;
  return m;
}

}  // namespace

TEST_CASE("preset schemes pass verification across the published grid") {
  struct Case { PresetFamily family; int rank; };
  std::vector<Case> grid = {{PresetFamily::A3, 3, }};
  for (int l = 2; l <= 6; ++l) grid.push_back({PresetFamily::Cl, l});
  for (int l = 4; l <= 7; ++l) grid.push_back({PresetFamily::Dl, l});
  for (const Case& c : grid) {
    for (long g : {2L, 4L}) {
      const PresetResult pr = preset(c.family, c.rank, g);
      const RootSystem rs = build_root_system(pr.scheme.type, pr.scheme.rank);
      const SchemeReport strict = verify(rs, pr.scheme, DegreeMode::Exact);
      CHECK(strict.pass);
      CHECK(strict.failures.empty());
      CHECK(strict.param_count == strict.param_target);
      CHECK(strict.param_count == g * rs.dim_g);
      CHECK(strict.min_degree == g);
      CHECK(strict.top_type.is_identity());
      // The default mode accepts whatever the strict mode accepts.
      CHECK(verify(rs, pr.scheme).pass);
      // Every report carries the genericity disclaimer.
      CHECK(std::find(strict.notes.begin(), strict.notes.end(),
                      genericity_disclaimer()) != strict.notes.end());
    }
  }
}

TEST_CASE("preset constructions record their inferences") {
  const PresetResult a3 = preset(PresetFamily::A3, 3, 2);
  CHECK(a3.scheme.entries.size() == 6);
  bool mentions_identity = false;
  for (const std::string& note : a3.notes)
    mentions_identity |= note.find("identity") != std::string::npos;
  CHECK(mentions_identity);
  // Twist classes are distinct and include the identity.
  std::set<std::string> twists;
  for (const auto& e : a3.scheme.entries) {
    CHECK(e.coweight_index == 2);
    CHECK(e.points == 1);  // genus 2 → one point per class
    twists.insert(weyl_to_string(e.twist));
  }
  CHECK(twists.size() == 6);
  CHECK(twists.count(weyl_to_string(weyl_identity(4))) == 1);

  const PresetResult c3 = preset(PresetFamily::Cl, 3, 4);
  CHECK(c3.scheme.entries.size() == 6);  // the 2l cyclic powers
  for (const auto& e : c3.scheme.entries) {
    CHECK(e.coweight_index == 1);
    CHECK(e.points == 2);
  }

  for (int l : {4, 5}) {
    const PresetResult dl = preset(PresetFamily::Dl, l, 2);
    CHECK(static_cast<int>(dl.scheme.entries.size()) == 2 * l);
    CHECK_FALSE(dl.notes.empty());
  }
}

TEST_CASE("presets reject odd genus and out-of-range ranks") {
  CHECK_THROWS_AS((void)preset(PresetFamily::A3, 3, 3), OddGenus);
  CHECK_THROWS_AS((void)preset(PresetFamily::Cl, 4, 5), OddGenus);
  CHECK_THROWS_AS((void)preset(PresetFamily::A3, 4, 2), InvalidRank);
  CHECK_THROWS_AS((void)preset(PresetFamily::Cl, 1, 2), InvalidRank);
  CHECK_THROWS_AS((void)preset(PresetFamily::Dl, 2, 2), InvalidRank);
  CHECK_THROWS_AS((void)preset(PresetFamily::A3, 3, 0), WeylkitError);
  CHECK(preset_family_from_string("Dl") == PresetFamily::Dl);
  CHECK(preset_family_to_string(PresetFamily::Cl) == "Cl");
  CHECK_THROWS_AS((void)preset_family_from_string("Bl"), WeylkitError);
}

TEST_CASE("degree pattern: every root is covered exactly twice at one point per class") {
  // Type C for every supported sweep rank, with a single point per twist
  // class: long roots get their 2 from one class, short roots from two.
  for (int l = 2; l <= 8; ++l) {
    const RootSystem rs = build_root_system(Type::C, l);
    ModificationScheme s{Type::C, l, 2, {}};
    const WeylElement nu = cyclic_twist(rs);
    WeylElement power = weyl_identity(rs.ambient);
    for (int k = 0; k < 2 * l; ++k) {
      s.entries.push_back(SchemeEntry{power, 1, 1});
      power = weyl_mul(nu, power);
    }
    const SchemeReport rep = verify(rs, s, DegreeMode::Exact);
    for (const RootDegreeRow& row : rep.root_degrees) {
      CHECK(row.degree == 2);
      const Vec& alpha = rs.roots[static_cast<std::size_t>(row.root_index)];
      if (is_long_root(rs, alpha)) {
        REQUIRE(row.contributions.size() == 1);
        CHECK(row.contributions[0].second == 2);
      } else {
        REQUIRE(row.contributions.size() == 2);
        CHECK(row.contributions[0].second == 1);
        CHECK(row.contributions[1].second == 1);
      }
    }
  }
  // The six twist classes on the middle coweight cover each of the 12
  // roots of the rank-3 simply-laced system exactly twice.
  const PresetResult a3 = preset(PresetFamily::A3, 3, 2);
  const RootSystem rs = build_root_system(Type::A, 3);
  REQUIRE(rs.roots.size() == 12);
  for (int r = 0; r < 12; ++r) CHECK(root_degree(rs, a3.scheme, r) == 2);
}

TEST_CASE("root degrees are reported per root and match the direct sum") {
  const RootSystem rs = build_root_system(Type::C, 2);
  ModificationScheme s{Type::C, 2, 2, {SchemeEntry{weyl_identity(2), 1, 3}}};
  // λ₁∨ = e₁ pairs 1 with e₁∓e₂, 2 with 2e₁, 0 with the rest.
  CHECK(root_degree(rs, s, root_index_of(rs, {Rat(1), Rat(-1)})) == 3);
  CHECK(root_degree(rs, s, root_index_of(rs, {Rat(1), Rat(1)})) == 3);
  CHECK(root_degree(rs, s, root_index_of(rs, {Rat(2), Rat(0)})) == 6);
  CHECK(root_degree(rs, s, root_index_of(rs, {Rat(0), Rat(2)})) == 0);
  CHECK(root_degree(rs, s, root_index_of(rs, {Rat(-2), Rat(0)})) == 0);
  const SchemeReport rep = verify(rs, s);
  for (const RootDegreeRow& row : rep.root_degrees)
    CHECK(row.degree == root_degree(rs, s, row.root_index));
  CHECK_FALSE(rep.pass);
  CHECK(rep.min_degree == 0);
}

TEST_CASE("parameter and degree bookkeeping: degrees plus toral count equals the total") {
  Rng rng(weylkit_test::kSeed + 50);
  for (const RootSystem& rs : weylkit_test::systems_up_to_rank(3)) {
    for (int trial = 0; trial < 6; ++trial) {
      ModificationScheme s{rs.type, rs.rank, 2, {}};
      std::uniform_int_distribution<int> idx(1, rs.rank);
      std::uniform_int_distribution<long> pts(1, 3);
      const int entries = 1 + trial % 3;
      for (int e = 0; e < entries; ++e)
        s.entries.push_back(SchemeEntry{weylkit_test::random_weyl(rs, rng, 6),
                                        idx(rng), pts(rng)});
      const SchemeReport rep = verify(rs, s);
      long degree_sum = 0;
      for (const RootDegreeRow& row : rep.root_degrees) degree_sum += row.degree;
      CHECK(degree_sum + total_points(s) == rep.param_count);
      long expected_params = 0;
      for (const auto& e : s.entries)
        expected_params += e.points * parameter_count(rs, e.coweight_index);
      CHECK(rep.param_count == expected_params);
    }
  }
}

TEST_CASE("twisting permutes coverage within length classes") {
  // The short- and long-root coefficient totals of a modification type
  // are invariant under any twist: the twist permutes the root set
  // preserving lengths.  Checked over the full group in low rank.
  for (const RootSystem& rs : weylkit_test::systems_up_to_rank(3)) {
    const ObstructionReport ob = obstruction_analysis(rs, 2);
    for (const WeylElement& nu : enumerate_group(rs, 2000)) {
      const WeylElement nu_inv = weyl_inverse(nu);
      for (int i = 1; i <= rs.rank; ++i) {
        long s_total = 0;
        long t_total = 0;
        const Vec& lam = rs.fundamental_coweights[static_cast<std::size_t>(i - 1)];
        for (const Vec& alpha : rs.roots) {
          const Rat c = pairing_ambient(lam, weyl_act(nu_inv, alpha));
          if (c <= 0) continue;
          const long cl = static_cast<long>(c.get_num().get_si());
          if (is_long_root(rs, alpha)) t_total += cl;
          else s_total += cl;
        }
        CHECK(s_total == ob.rows[static_cast<std::size_t>(i - 1)].s);
        CHECK(t_total == ob.rows[static_cast<std::size_t>(i - 1)].t);
      }
    }
  }
}

TEST_CASE("kernel line fixtures for the cyclic twist") {
  for (int l = 2; l <= 5; ++l) {
    const RootSystem rs = build_root_system(Type::C, l);
    const WeylElement nu = cyclic_twist(rs);
    // ν^l = −1 as signed permutations.
    WeylElement power = weyl_identity(l);
    for (int k = 0; k < l; ++k) power = weyl_mul(nu, power);
    WeylElement minus = weyl_identity(l);
    for (auto& x : minus.img) x = -x;
    CHECK(power == minus);
    // ν has order 2l.
    for (int k = 0; k < l; ++k) power = weyl_mul(nu, power);
    CHECK(weyl_is_identity(power));
    // ν^k·ξ₁ = ½e_k + e_{k+1} for 1 ≤ k ≤ l−1, starting from ξ₁ = e₁ − ½e_l.
    const Vec xi = coweight_ambient(rs, kernel_coweight(rs, 1));
    Vec image = xi;
    for (int k = 1; k < l; ++k) {
      image = weyl_act(nu, image);
      Vec expected(static_cast<std::size_t>(l), Rat(0));
      expected[static_cast<std::size_t>(k - 1)] = Rat(1, 2);
      expected[static_cast<std::size_t>(k)] = 1;
      CHECK(image == expected);
    }
    CHECK(weyl_act(nu, image) == vec_neg(xi));
  }
  CHECK_THROWS_AS((void)cyclic_twist(build_root_system(Type::A, 2)),
                  UnsupportedType);
}

TEST_CASE("kernel determinant identity for the cyclic twist matrix") {
  for (int l = 2; l <= 8; ++l) {
    const RootSystem rs = build_root_system(Type::C, l);
    Rat expected = Rat((l % 2 == 1) ? 1 : -1) - Rat(1, 1L << l);
    CHECK(cyclic_kernel_determinant(rs) == expected);
  }
  CHECK_THROWS_AS((void)cyclic_kernel_determinant(build_root_system(Type::B, 3)),
                  UnsupportedType);
}

TEST_CASE("sign relations among the middle kernel directions in rank three") {
  const RootSystem rs = build_root_system(Type::A, 3);
  const Vec xi = coweight_ambient(rs, kernel_coweight(rs, 2));
  const auto act = [&](const WeylElement& w) { return weyl_act(w, xi); };
  const WeylElement t13 = transposition(4, 1, 3);
  const WeylElement t24 = transposition(4, 2, 4);
  const WeylElement t23 = transposition(4, 2, 3);
  const WeylElement t14 = transposition(4, 1, 4);
  const WeylElement t14_23 = weyl_mul(t14, t23);
  // Half-sum expressions in the coroots.
  const Vec a1 = rs.simple_coroots[0];
  const Vec a3 = rs.simple_coroots[2];
  CHECK(act(t13) == vec_scale(Rat(1, 2), vec_sub(a3, a1)));
  CHECK(act(t13) == vec_neg(act(t24)));
  CHECK(act(t23) == vec_scale(Rat(1, 2), vec_add(a1, a3)));
  CHECK(act(t23) == vec_neg(act(t14)));
  // The double transposition fixes the line through ξ₂ (it negates the
  // vector, which is the same projective direction).
  CHECK(act(t14_23) == vec_neg(xi));
  // All six classes together span only three lines, each hit twice.
  std::map<std::string, int> lines;
  for (const WeylElement& w : {weyl_identity(4), t13, t23, t14, t24, t14_23}) {
    Vec v = act(w);
    // Canonical line key: scale to first-nonzero-positive integer form.
    Rat scale(2);  // all entries are half-integers here
    Vec norm = vec_scale(scale, v);
    for (const Rat& x : norm)
      if (x != 0) {
        if (x < 0) norm = vec_neg(norm);
        break;
      }
    ++lines[vec_key(norm)];
  }
  CHECK(lines.size() == 3);
  for (const auto& [key, count] : lines) {
    (void)key;
    CHECK(count == 2);
  }
}

TEST_CASE("vector-coweight images in the even orthogonal family") {
  const RootSystem rs = build_root_system(Type::D, 4);
  const Vec xi = coweight_ambient(rs, kernel_coweight(rs, 1));
  Vec e1(4, Rat(0));
  e1[0] = 1;
  CHECK(xi == e1);
  for (int i = 2; i <= 4; ++i) {
    Vec ei(4, Rat(0));
    ei[static_cast<std::size_t>(i - 1)] = 1;
    CHECK(weyl_act(transposition(4, 1, i), xi) == ei);
  }
}

TEST_CASE("verification reports each failure mode without passing") {
  const RootSystem rs = build_root_system(Type::C, 2);  // dim 10

  SUBCASE("parameter total off target") {
    ModificationScheme s{Type::C, 2, 2, {SchemeEntry{weyl_identity(2), 1, 1}}};
    const SchemeReport rep = verify(rs, s);
    CHECK_FALSE(rep.param_ok);
    CHECK_FALSE(rep.pass);
    CHECK(rep.param_count == 5);
    CHECK(rep.param_target == 20);
    CHECK_FALSE(rep.failures.empty());
  }

  SUBCASE("degrees below genus") {
    // Four points all on the identity class: correct total, starved roots.
    ModificationScheme s{Type::C, 2, 2, {SchemeEntry{weyl_identity(2), 1, 4}}};
    const SchemeReport rep = verify(rs, s);
    CHECK(rep.param_ok);
    CHECK_FALSE(rep.degrees_ok);
    CHECK_FALSE(rep.per_line_ok);  // one line only
    CHECK_FALSE(rep.pass);
  }

  SUBCASE("exact mode rejects surplus degrees that the default mode accepts") {
    const RootSystem c3 = build_root_system(Type::C, 3);
    PresetResult pr = preset(PresetFamily::Cl, 3, 2);
    // Double one class: degrees on its roots exceed the genus.
    pr.scheme.entries[0].points += 2;
    const SchemeReport loose = verify(c3, pr.scheme);
    CHECK(loose.degrees_ok);
    CHECK_FALSE(loose.param_ok);  // the total is now off target
    const SchemeReport strict = verify(c3, pr.scheme, DegreeMode::Exact);
    CHECK_FALSE(strict.degrees_ok);
  }

  SUBCASE("distinct qualified lines that fail to span") {
    const RootSystem c3 = build_root_system(Type::C, 3);
    // Three twists sending ξ₁ into a common coordinate plane: identity
    // keeps (2,0,−1)/2, one flips the last sign, one maps to (1,0,2)/2.
    ModificationScheme s{Type::C, 3, 2, {}};
    s.entries.push_back(SchemeEntry{weyl_identity(3), 1, 2});
    s.entries.push_back(SchemeEntry{perm_from_images({1, 2, -3}), 1, 2});
    s.entries.push_back(SchemeEntry{perm_from_images({3, 2, -1}), 1, 2});
    const SchemeReport rep = verify(c3, s);
    CHECK(rep.param_ok);  // 3·2·7 = 42 = 2·21
    CHECK(rep.toral_lines.size() == 3);
    CHECK(rep.per_line_ok);
    CHECK_FALSE(rep.spanning_ok);
    CHECK_FALSE(rep.pass);
  }

  SUBCASE("malformed schemes are rejected up front") {
    ModificationScheme wrong_type{Type::B, 2, 2, {SchemeEntry{weyl_identity(2), 1, 1}}};
    CHECK_THROWS_AS((void)verify(rs, wrong_type), DimensionMismatch);
    ModificationScheme bad_genus{Type::C, 2, 0, {SchemeEntry{weyl_identity(2), 1, 1}}};
    CHECK_THROWS_AS((void)verify(rs, bad_genus), WeylkitError);
    ModificationScheme bad_index{Type::C, 2, 2, {SchemeEntry{weyl_identity(2), 3, 1}}};
    CHECK_THROWS_AS((void)verify(rs, bad_index), IndexOutOfRange);
    ModificationScheme bad_points{Type::C, 2, 2, {SchemeEntry{weyl_identity(2), 1, 0}}};
    CHECK_THROWS_AS((void)verify(rs, bad_points), WeylkitError);
    // A signed permutation outside the group (odd sign count in type D).
    const RootSystem d4 = build_root_system(Type::D, 4);
    ModificationScheme bad_twist{Type::D, 4, 2,
                                 {SchemeEntry{perm_from_images({-1, 2, 3, 4}), 1, 1}}};
    CHECK_THROWS_AS((void)verify(d4, bad_twist), WeylkitError);
  }
}

TEST_CASE("topological type sums are reported") {
  const RootSystem rs = build_root_system(Type::C, 2);
  // One modification of the long fundamental coweight λ₂∨ = (½,½): its
  // class generates the order-2 component group, so an odd number of
  // such modifications shifts the component and an even number does not.
  ModificationScheme s{Type::C, 2, 2, {SchemeEntry{weyl_identity(2), 2, 1}}};
  CHECK_FALSE(verify(rs, s).top_type.is_identity());
  s.entries[0].points = 2;
  CHECK(verify(rs, s).top_type.is_identity());
  // The short coweight λ₁∨ = e₁ lies in the coroot lattice already.
  ModificationScheme t{Type::C, 2, 2, {SchemeEntry{weyl_identity(2), 1, 1}}};
  CHECK(verify(rs, t).top_type.is_identity());
}

TEST_CASE("aggregate obstruction: the rank-2 exceptional system is stuck") {
  const RootSystem g2 = build_root_system(Type::G2, 2);
  for (long g = 1; g <= 6; ++g) {
    const ObstructionReport ob = obstruction_analysis(g2, g);
    CHECK_FALSE(ob.feasible);
    REQUIRE(ob.rows.size() == 2);
    CHECK(ob.rows[0].p == 11);
    CHECK(ob.rows[0].s == 4);
    CHECK(ob.rows[0].t == 6);
    CHECK(ob.rows[1].p == 7);
    CHECK(ob.rows[1].s == 2);
    CHECK(ob.rows[1].t == 4);
    CHECK(ob.target == 14 * g);
    CHECK(ob.short_required == 6 * g);   // three short positive roots
    CHECK(ob.long_required == 6 * g);
    CHECK_FALSE(ob.certificate.empty());
    // Independent brute force over all count pairs on the parameter line:
    // none meets the short-root budget.
    long solutions = 0;
    for (long k1 = 0; 11 * k1 <= 14 * g; ++k1) {
      const long rem = 14 * g - 11 * k1;
      if (rem % 7 != 0) continue;
      const long k2 = rem / 7;
      ++solutions;
      CHECK(4 * k1 + 2 * k2 < 6 * g);
    }
    CHECK(solutions >= 1);  // the line is never empty, the budget rules it out
    CHECK(static_cast<long>(ob.equality_solutions.size()) == solutions);
    for (const auto& [counts, ok] : ob.equality_solutions) {
      (void)counts;
      CHECK_FALSE(ok);
    }
  }
}

TEST_CASE("aggregate obstruction rows are internally consistent everywhere") {
  for (const RootSystem& rs : weylkit_test::systems_up_to_rank(4)) {
    const ObstructionReport ob = obstruction_analysis(rs, 2);
    REQUIRE(static_cast<int>(ob.rows.size()) == rs.rank);
    for (const ObstructionRow& row : ob.rows) {
      CHECK(row.s + row.t + 1 == row.p);
      CHECK(row.p == parameter_count(rs, row.index));
      CHECK(row.s >= 0);
      CHECK(row.t >= 1);  // the highest root always contributes
    }
    CHECK(ob.short_required == 2L * 2 * rs.num_short_positive);
    CHECK(ob.long_required == 2L * 2 * rs.num_long_positive);
  }
  // Families with presets pass the screen.
  CHECK(obstruction_analysis(build_root_system(Type::A, 3), 2).feasible);
  CHECK(obstruction_analysis(build_root_system(Type::C, 3), 2).feasible);
  CHECK(obstruction_analysis(build_root_system(Type::D, 4), 2).feasible);
}

TEST_CASE("odd orthogonal rows expose the coin problem without a verdict bias") {
  // No feasibility assertion here — only that the reported per-type data
  // matches the closed form i(2l−i)+1 and the aggregate bounds are real.
  for (int l = 2; l <= 4; ++l) {
    const RootSystem rs = build_root_system(Type::B, l);
    const ObstructionReport ob = obstruction_analysis(rs, 2);
    for (int i = 1; i <= l; ++i)
      CHECK(ob.rows[static_cast<std::size_t>(i - 1)].p ==
            static_cast<long>(i) * (2 * l - i) + 1);
  }
}

TEST_CASE("search finds the cyclic solution in the smallest symplectic case") {
  const RootSystem rs = build_root_system(Type::C, 2);
  SearchOptions opt;
  opt.coweight_indices = {1};
  const WeylElement nu = cyclic_twist(rs);
  WeylElement power = weyl_identity(2);
  for (int k = 0; k < 4; ++k) {
    opt.twist_pool.push_back(power);
    power = weyl_mul(nu, power);
  }
  const SearchResult res = search(rs, 2, opt);
  REQUIRE(res.feasible);
  REQUIRE(res.scheme.has_value());
  REQUIRE(res.report.has_value());
  CHECK(res.report->pass);
  // The unique minimal cover: one point on every power of the twist.
  REQUIRE(res.scheme->entries.size() == 4);
  std::set<std::string> seen;
  for (const auto& e : res.scheme->entries) {
    CHECK(e.points == 1);
    CHECK(e.coweight_index == 1);
    seen.insert(weyl_to_string(e.twist));
  }
  CHECK(seen.size() == 4);
  // Determinism: a second run returns the identical scheme.
  const SearchResult again = search(rs, 2, opt);
  REQUIRE(again.scheme.has_value());
  CHECK(again.scheme->entries.size() == res.scheme->entries.size());
  for (std::size_t i = 0; i < res.scheme->entries.size(); ++i) {
    CHECK(again.scheme->entries[i].twist == res.scheme->entries[i].twist);
    CHECK(again.scheme->entries[i].points == res.scheme->entries[i].points);
  }
}

TEST_CASE("search certifies infeasibility via the aggregate screen") {
  const RootSystem g2 = build_root_system(Type::G2, 2);
  const SearchResult res = search(g2, 2, SearchOptions{});
  CHECK_FALSE(res.feasible);
  CHECK_FALSE(res.scheme.has_value());
  CHECK_FALSE(res.certificate.empty());
}

TEST_CASE("search certifies exhaustion of a too-small scope") {
  const RootSystem rs = build_root_system(Type::C, 2);
  SearchOptions opt;
  opt.coweight_indices = {1};
  opt.twist_pool = {weyl_identity(2)};  // one class cannot spread degrees
  const SearchResult res = search(rs, 2, opt);
  CHECK_FALSE(res.feasible);
  CHECK_FALSE(res.certificate.empty());
}

TEST_CASE("search respects its node budget") {
  const RootSystem rs = build_root_system(Type::C, 3);
  SearchOptions opt;
  opt.node_budget = 1;
  CHECK_THROWS_AS((void)search(rs, 2, opt), SearchBudgetExceeded);
}

TEST_CASE("search validates its twist pool") {
  const RootSystem d4 = build_root_system(Type::D, 4);
  SearchOptions opt;
  opt.twist_pool = {perm_from_images({-1, 2, 3, 4})};  // not in the group
  CHECK_THROWS_AS((void)search(d4, 2, opt), WeylkitError);
}
