// weyl.cpp — signed-permutation Weyl elements and combinatorics.

#include "weylkit/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <sstream>

namespace weylkit {

namespace {

int ambient_of(const WeylElement& w) { return static_cast<int>(w.img.size()); }

void check_signed_perm(const std::vector<int>& img) {
  const int n = static_cast<int>(img.size());
  std::vector<bool> seen(n, false);
  for (int e : img) {
    int j = std::abs(e);
    if (j < 1 || j > n || seen[j - 1]) {
      throw ParseError("not a signed permutation");
    }
    seen[j - 1] = true;
  }
}

}  // namespace

WeylElement weyl_identity(int ambient) {
  WeylElement w;
  w.img.resize(ambient);
  for (int i = 0; i < ambient; ++i) w.img[i] = i + 1;
  return w;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank) {
    throw IndexOutOfRange("simple_reflection: index " + std::to_string(i));
  }
  WeylElement s = weyl_identity(rs.ambient);
  const int l = rs.rank;
  switch (rs.type) {
    case Type::A:
      s.img[i - 1] = i + 1;
      s.img[i] = i;
      break;
    case Type::B:
    case Type::C:
      if (i < l) {
        s.img[i - 1] = i + 1;
        s.img[i] = i;
      } else {
        s.img[l - 1] = -l;
      }
      break;
    case Type::D:
      if (i < l) {
        s.img[i - 1] = i + 1;
        s.img[i] = i;
      } else {
        s.img[l - 2] = -l;
        s.img[l - 1] = -(l - 1);
      }
      break;
    case Type::G2:
      if (i == 1) {
        s.img = {2, 1, 3};
      } else {
        s.img = {-1, -3, -2};
      }
      break;
  }
  s.word = {i};
  // The signed permutation must realize the reflection on the root span:
  // s_i(α_j) = α_j − a_ij · α_i for every simple α_j.
  for (int j = 0; j < rs.rank; ++j) {
    Rat a_ij = Rat(rs.cartan.at(i - 1, j));
    Vec expect = vec_sub(rs.simple_roots[j], vec_scale(a_ij, rs.simple_roots[i - 1]));
    if (weyl_act(s, rs.simple_roots[j]) != expect) {
      throw WeylkitError("simple reflection table inconsistent with Cartan matrix");
    }
  }
  return s;
}

WeylElement weyl_mul(const WeylElement& u, const WeylElement& w) {
  if (u.img.size() != w.img.size()) {
    throw DimensionMismatch("weyl_mul: mixed ambient dimensions");
  }
  WeylElement r;
  r.img.resize(w.img.size());
  for (std::size_t i = 0; i < w.img.size(); ++i) {
    int m = w.img[i];
    int v = u.img[std::abs(m) - 1];
    r.img[i] = m > 0 ? v : -v;
  }
  r.word = u.word;
  r.word.insert(r.word.end(), w.word.begin(), w.word.end());
  return r;
}

WeylElement weyl_inverse(const WeylElement& w) {
  WeylElement r;
  r.img.resize(w.img.size());
  for (std::size_t i = 0; i < w.img.size(); ++i) {
    int m = w.img[i];
    int j = std::abs(m);
    r.img[j - 1] = m > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
  }
  r.word.assign(w.word.rbegin(), w.word.rend());
  return r;
}

WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = weyl_identity(rs.ambient);
  for (int i : word) w = weyl_mul(w, simple_reflection(rs, i));
  w.word = word;
  return w;
}

Vec weyl_act(const WeylElement& w, const Vec& v) {
  if (v.size() != w.img.size()) {
    throw DimensionMismatch("weyl_act: vector length != ambient");
  }
  Vec r(v.size(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    int m = w.img[i];
    int j = std::abs(m) - 1;
    r[j] = m > 0 ? v[i] : -v[i];
  }
  return r;
}

int weyl_act_root(const RootSystem& rs, const WeylElement& w, int root_index) {
  if (root_index < 0 || root_index >= static_cast<int>(rs.roots.size())) {
    throw IndexOutOfRange("weyl_act_root: root index");
  }
  return root_index_of(rs, weyl_act(w, rs.roots[root_index]));
}

bool weyl_is_identity(const WeylElement& w) {
  for (std::size_t i = 0; i < w.img.size(); ++i) {
    if (w.img[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

long weyl_length(const RootSystem& rs, const WeylElement& w) {
  return static_cast<long>(weyl_inversions(rs, w).size());
}

std::vector<int> weyl_inversions(const RootSystem& rs, const WeylElement& w) {
  const int p = static_cast<int>(rs.positive_roots.size());
  std::vector<int> inv;
  for (int i = 0; i < p; ++i) {
    if (weyl_act_root(rs, w, i) >= p) inv.push_back(i);
  }
  return inv;
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
  const int p = static_cast<int>(rs.positive_roots.size());
  std::vector<int> collected;
  WeylElement cur = w;
  cur.word.clear();
  while (!weyl_is_identity(cur)) {
    int descent = 0;
    for (int i = 1; i <= rs.rank; ++i) {
      int img = root_index_of(rs, weyl_act(cur, rs.simple_roots[i - 1]));
      if (img >= p) {
        descent = i;
        break;
      }
    }
    if (descent == 0) throw WeylkitError("non-identity element with no descent");
    collected.push_back(descent);
    cur = weyl_mul(cur, simple_reflection(rs, descent));
    if (collected.size() > rs.positive_roots.size()) {
      throw WeylkitError("reduced word exceeded the longest length");
    }
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

WeylElement longest_element(const RootSystem& rs) {
  Vec v = rs.rho;
  Vec target = vec_neg(rs.rho);
  std::vector<int> steps;
  while (v != target) {
    int pick = 0;
    for (int i = 1; i <= rs.rank; ++i) {
      if (sgn(dot(rs.simple_coroots[i - 1], v)) > 0) {
        pick = i;
        break;
      }
    }
    if (pick == 0) throw WeylkitError("descent walk stalled before -rho");
    v = vec_sub(v, vec_scale(dot(v, rs.simple_coroots[pick - 1]),
                             rs.simple_roots[pick - 1]));
    steps.push_back(pick);
  }
  std::reverse(steps.begin(), steps.end());
  WeylElement w0 = weyl_from_word(rs, steps);
  if (weyl_length(rs, w0) != static_cast<long>(rs.positive_roots.size()) ||
      static_cast<long>(steps.size()) != weyl_length(rs, w0)) {
    throw WeylkitError("longest element construction failed");
  }
  return w0;
}

std::vector<int> longest_element_involution(const RootSystem& rs) {
  WeylElement w0 = longest_element(rs);
  std::vector<int> omega(rs.rank, 0);
  for (int i = 1; i <= rs.rank; ++i) {
    Vec image = vec_neg(weyl_act(w0, rs.simple_roots[i - 1]));
    bool found = false;
    for (int j = 1; j <= rs.rank; ++j) {
      if (image == rs.simple_roots[j - 1]) {
        omega[i - 1] = j;
        found = true;
        break;
      }
    }
    if (!found) throw WeylkitError("longest element does not permute simples");
  }
  return omega;
}

std::vector<Vec> weyl_orbit(const RootSystem& rs, const Vec& v) {
  if (static_cast<int>(v.size()) != rs.ambient) {
    throw DimensionMismatch("weyl_orbit: vector length != ambient");
  }
  std::map<std::string, Vec> seen;
  std::deque<Vec> frontier{v};
  seen.emplace(vec_key(v), v);
  while (!frontier.empty()) {
    Vec u = frontier.front();
    frontier.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      Vec t = vec_sub(u, vec_scale(dot(u, rs.simple_coroots[i]), rs.simple_roots[i]));
      if (seen.emplace(vec_key(t), t).second) frontier.push_back(t);
    }
  }
  std::vector<Vec> orbit;
  orbit.reserve(seen.size());
  for (auto& [key, u] : seen) orbit.push_back(u);
  return orbit;
}

std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs,
                                            const Coweight& v) {
  if (!is_dominant(v)) {
    throw NonDominant("minimal_coset_reps: coweight not dominant");
  }
  Vec base = coweight_ambient(rs, v);
  // Layered BFS over the orbit; each orbit vector gets the lexicographically
  // least among the shortest words reaching it.
  std::map<std::string, std::vector<int>> settled;
  settled.emplace(vec_key(base), std::vector<int>{});
  std::vector<Vec> layer{base};
  std::vector<std::vector<int>> layer_words{{}};
  std::vector<std::pair<std::vector<int>, Vec>> order{{std::vector<int>{}, base}};
  while (!layer.empty()) {
    std::map<std::string, std::pair<std::vector<int>, Vec>> next;
    for (std::size_t k = 0; k < layer.size(); ++k) {
      const Vec& u = layer[k];
      const std::vector<int>& wu = layer_words[k];
      for (int i = 1; i <= rs.rank; ++i) {
        Vec t = vec_sub(u, vec_scale(dot(u, rs.simple_coroots[i - 1]),
                                     rs.simple_roots[i - 1]));
        std::string key = vec_key(t);
        if (settled.count(key)) continue;
        std::vector<int> cand;
        cand.reserve(wu.size() + 1);
        cand.push_back(i);
        cand.insert(cand.end(), wu.begin(), wu.end());
        auto it = next.find(key);
        if (it == next.end() || cand < it->second.first) {
          next[key] = {cand, t};
        }
      }
    }
    layer.clear();
    layer_words.clear();
    for (auto& [key, cw] : next) {
      settled.emplace(key, cw.first);
      layer.push_back(cw.second);
      layer_words.push_back(cw.first);
      order.emplace_back(cw.first, cw.second);
    }
  }
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) {
              if (a.first.size() != b.first.size()) {
                return a.first.size() < b.first.size();
              }
              return a.first < b.first;
            });
  std::vector<WeylElement> reps;
  reps.reserve(order.size());
  for (const auto& entry : order) reps.push_back(weyl_from_word(rs, entry.first));
  return reps;
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::size_t cap) {
  std::map<std::vector<int>, WeylElement> seen;
  WeylElement e = weyl_identity(rs.ambient);
  seen.emplace(e.img, e);
  std::deque<WeylElement> frontier{e};
  while (!frontier.empty()) {
    WeylElement u = frontier.front();
    frontier.pop_front();
    for (int i = 1; i <= rs.rank; ++i) {
      WeylElement t = weyl_mul(u, simple_reflection(rs, i));
      if (seen.size() >= cap && !seen.count(t.img)) {
        throw BudgetExceeded("enumerate_group: group larger than cap");
      }
      if (seen.emplace(t.img, t).second) frontier.push_back(t);
    }
  }
  std::vector<WeylElement> all;
  all.reserve(seen.size());
  for (auto& [img, w] : seen) all.push_back(w);
  return all;
}

WeylElement reflection_element(const RootSystem& rs, const Vec& beta) {
  int idx = root_index_of(rs, beta);
  const int p = static_cast<int>(rs.positive_roots.size());
  Vec cur = idx < p ? beta : vec_neg(beta);  // s_β = s_{−β}
  std::vector<int> conj;
  for (;;) {
    for (int j = 0; j < rs.rank; ++j) {
      if (cur == rs.simple_roots[j]) {
        WeylElement w = simple_reflection(rs, j + 1);
        for (auto it = conj.rbegin(); it != conj.rend(); ++it) {
          WeylElement si = simple_reflection(rs, *it);
          w = weyl_mul(si, weyl_mul(w, si));
        }
        return w;
      }
    }
    int pick = 0;
    for (int i = 1; i <= rs.rank; ++i) {
      if (sgn(dot(rs.simple_coroots[i - 1], cur)) > 0) {
        pick = i;
        break;
      }
    }
    if (pick == 0) throw WeylkitError("reflection_element: walk stalled");
    cur = vec_sub(cur, vec_scale(dot(cur, rs.simple_coroots[pick - 1]),
                                 rs.simple_roots[pick - 1]));
    conj.push_back(pick);
  }
}

std::string weyl_to_string(const WeylElement& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.img.size(); ++i) {
    if (i) os << ',';
    os << w.img[i];
  }
  os << ']';
  return os.str();
}

WeylElement weyl_from_string(const std::string& s) {
  std::size_t a = s.find('[');
  std::size_t b = s.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b < a) {
    throw ParseError("weyl_from_string: expected [..] form");
  }
  WeylElement w;
  std::string body = s.substr(a + 1, b - a - 1);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) {
      ++pos;
    }
    std::size_t end = tok.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(tok[end - 1]))) {
      --end;
    }
    std::string t = tok.substr(pos, end - pos);
    if (t.empty()) throw ParseError("weyl_from_string: empty entry");
    try {
      std::size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw ParseError("weyl_from_string: bad entry '" + t + "'");
      w.img.push_back(v);
    } catch (const std::invalid_argument&) {
      throw ParseError("weyl_from_string: bad entry '" + t + "'");
    } catch (const std::out_of_range&) {
      throw ParseError("weyl_from_string: entry out of range '" + t + "'");
    }
  }
  if (w.img.empty()) throw ParseError("weyl_from_string: empty permutation");
  check_signed_perm(w.img);
  return w;
}

}  // namespace weylkit
