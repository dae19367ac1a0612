#pragma once

// Deliberately naive reference implementations. None of them call into the
// library's Smith form, homology, canonical form or systole code.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<mpz_class>;
using Mat = std::vector<Vec>;  // row major
using Tri = std::array<std::uint32_t, 3>;
using Ed = std::array<std::uint32_t, 2>;

struct Chains {
  std::size_t n = 0;
  std::vector<Ed> edges;  // sorted
  std::vector<Tri> tris;  // sorted
  Mat d1;                 // n x edges
  Mat d2;                 // edges x tris
};

// Boundary maps with d[a,b] = b - a and d[a,b,c] = [b,c] - [a,c] + [a,b].
inline Chains chains(std::size_t n, std::vector<Tri> tris, std::vector<Ed> extra = {}) {
  Chains c;
  c.n = n;
  std::set<Ed> es(extra.begin(), extra.end());
  for (auto& t : tris) {
    std::sort(t.begin(), t.end());
    es.insert({t[0], t[1]});
    es.insert({t[0], t[2]});
    es.insert({t[1], t[2]});
  }
  std::sort(tris.begin(), tris.end());
  c.tris = tris;
  c.edges.assign(es.begin(), es.end());
  std::map<Ed, std::size_t> idx;
  for (std::size_t i = 0; i < c.edges.size(); ++i) idx[c.edges[i]] = i;
  c.d1.assign(n, Vec(c.edges.size(), 0));
  for (std::size_t j = 0; j < c.edges.size(); ++j) {
    c.d1[c.edges[j][0]][j] -= 1;
    c.d1[c.edges[j][1]][j] += 1;
  }
  c.d2.assign(c.edges.size(), Vec(c.tris.size(), 0));
  for (std::size_t j = 0; j < c.tris.size(); ++j) {
    const auto& t = c.tris[j];
    c.d2[idx[{t[1], t[2]}]][j] += 1;
    c.d2[idx[{t[0], t[2]}]][j] -= 1;
    c.d2[idx[{t[0], t[1]}]][j] += 1;
  }
  return c;
}

// Rank over Q, by fraction-free elimination on a copy.
inline std::size_t rank_q(Mat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const mpz_class a = m[r][c], b = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] = m[i][k] * a - m[r][k] * b;
      mpz_class g = 0;
      for (std::size_t k = c; k < cols; ++k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m[i][k].get_mpz_t());
      if (g > 1)
        for (std::size_t k = c; k < cols; ++k) m[i][k] /= g;
    }
    ++r;
  }
  return r;
}

inline std::size_t rank_p(const Mat& src, unsigned long p) {
  if (src.empty()) return 0;
  const std::size_t rows = src.size(), cols = src[0].size();
  std::vector<std::vector<unsigned long>> m(rows, std::vector<unsigned long>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_class v = src[i][j] % static_cast<long>(p);
      if (v < 0) v += p;
      m[i][j] = v.get_ui();
    }
  auto inv = [p](unsigned long a) {
    unsigned long r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t q = r;
    while (q < rows && m[q][c] == 0) ++q;
    if (q == rows) continue;
    std::swap(m[q], m[r]);
    const unsigned long iv = inv(m[r][c]);
    for (auto& v : m[r]) v = v * iv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const unsigned long f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = (m[i][k] + (p - f) * m[r][k]) % p;
    }
    ++r;
  }
  return r;
}

// Textbook Smith form: move a smallest nonzero entry to the corner, clear
// its row and column by division with remainder, repeat until it divides
// everything left, recurse. Returns the nonzero diagonal.
inline Vec smith_diagonal(Mat m) {
  Vec out;
  if (m.empty() || m[0].empty()) return out;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return out;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const mpz_class q = m[i][t] / m[t][t];
        if (q != 0)
          for (std::size_t k = t; k < cols; ++k) m[i][k] -= q * m[t][k];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const mpz_class q = m[t][j] / m[t][t];
        if (q != 0)
          for (std::size_t k = t; k < rows; ++k) m[k][j] -= q * m[k][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bi = rows;
      for (std::size_t i = t + 1; i < rows && bi == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bi = i;
            break;
          }
      if (bi == rows) break;
      for (std::size_t k = t; k < cols; ++k) m[t][k] += m[bi][k];
    }
    out.push_back(abs(m[t][t]));
  }
  return out;
}

struct H {
  std::array<std::size_t, 3> betti{};
  Vec torsion;  // factors > 1
};

inline H homology(const Chains& c) {
  const std::size_t r1 = rank_q(c.d1), r2 = rank_q(c.d2);
  // H0 via components, the rest by ranks.
  std::vector<std::size_t> parent(c.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& e : c.edges) parent[find(e[0])] = find(e[1]);
  std::size_t comps = 0;
  for (std::size_t v = 0; v < c.n; ++v)
    if (find(v) == v) ++comps;
  H h;
  h.betti = {comps, c.edges.size() - r1 - r2, c.tris.size() - r2};
  for (const auto& d : smith_diagonal(c.d2))
    if (d > 1) h.torsion.push_back(d);
  return h;
}

// Determinant by cofactor expansion (matrices here are at most 6 x 6).
inline mpz_class det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const mpz_class term = m[0][j] * det(minor);
    s += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return s;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// gcd of all k x k minors.
inline mpz_class minors_gcd(const Mat& m, std::size_t k) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  mpz_class g = 0;
  subsets(rows, k, [&](const std::vector<std::size_t>& ri) {
    subsets(cols, k, [&](const std::vector<std::size_t>& ci) {
      Mat sub;
      for (auto i : ri) {
        Vec row;
        for (auto j : ci) row.push_back(m[i][j]);
        sub.push_back(row);
      }
      const mpz_class d = det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

// Membership in the column lattice of a matrix: column-style Hermite
// reduction with extended gcds, then greedy elimination of the target.
class Lattice {
 public:
  explicit Lattice(const Mat& m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<Vec> gens(cols, Vec(rows));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) gens[j][i] = m[i][j];
    for (std::size_t row = 0; row < rows && !gens.empty(); ++row) {
      std::size_t piv = gens.size();
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j][row] == 0) continue;
        if (piv == gens.size()) {
          piv = j;
          continue;
        }
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), gens[piv][row].get_mpz_t(),
                   gens[j][row].get_mpz_t());
        const mpz_class a = gens[piv][row] / g, b = gens[j][row] / g;
        Vec u(rows), v(rows);
        for (std::size_t k = 0; k < rows; ++k) {
          u[k] = s * gens[piv][k] + t * gens[j][k];
          v[k] = a * gens[j][k] - b * gens[piv][k];
        }
        gens[piv] = std::move(u);
        gens[j] = std::move(v);
      }
      if (piv == gens.size()) continue;
      if (gens[piv][row] < 0)
        for (auto& x : gens[piv]) x = -x;
      basis_.push_back({row, gens[piv]});
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(piv));
      gens.erase(std::remove_if(gens.begin(), gens.end(),
                                [](const Vec& g) { return std::all_of(g.begin(), g.end(), [](const mpz_class& x) { return x == 0; }); }),
                 gens.end());
    }
  }

  bool contains(Vec z) const {
    for (const auto& [row, b] : basis_) {
      if (z[row] % b[row] != 0) return false;
      const mpz_class q = z[row] / b[row];
      for (std::size_t k = 0; k < z.size(); ++k) z[k] -= q * b[k];
    }
    return std::all_of(z.begin(), z.end(), [](const mpz_class& x) { return x == 0; });
  }

 private:
  std::vector<std::pair<std::size_t, Vec>> basis_;
};

inline Vec loop_vector(const Chains& c, const std::vector<std::uint32_t>& loop) {
  Vec z(c.edges.size(), 0);
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const auto a = loop[i], b = loop[(i + 1) % loop.size()];
    const Ed e{std::min(a, b), std::max(a, b)};
    const auto it = std::lower_bound(c.edges.begin(), c.edges.end(), e);
    if (it == c.edges.end() || *it != e) throw std::runtime_error("loop leaves the edge set");
    z[static_cast<std::size_t>(it - c.edges.begin())] += a < b ? 1 : -1;
  }
  return z;
}

// Shortest simple cycle (unit lengths) whose chain is not a boundary, by
// enumerating every simple cycle. Only for small graphs.
inline std::size_t brute_systole(const Chains& c, std::size_t max_len = 12) {
  std::vector<std::vector<std::uint32_t>> adj(c.n);
  for (const auto& e : c.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  const Lattice lat(c.d2);
  std::size_t best = 0;
  std::vector<std::uint32_t> path;
  std::vector<char> on(c.n, 0);
  std::function<void(std::uint32_t)> dfs = [&](std::uint32_t v) {
    if (best != 0 && path.size() >= best) return;
    if (path.size() >= max_len) return;
    for (auto w : adj[v]) {
      if (w == path[0] && path.size() >= 3) {
        if (!lat.contains(loop_vector(c, path))) best = path.size();
        continue;
      }
      if (on[w] || w < path[0]) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (std::uint32_t s = 0; s < c.n; ++s) {
    path = {s};
    on[s] = 1;
    dfs(s);
    on[s] = 0;
  }
  return best;
}

// Sorted triangle list of the lexicographically least relabeling over all
// permutations of the used vertices (mapped onto 0..k-1).
inline std::vector<Tri> brute_canonical(const std::vector<Tri>& tris) {
  std::set<std::uint32_t> used;
  for (const auto& t : tris) used.insert(t.begin(), t.end());
  std::vector<std::uint32_t> vs(used.begin(), used.end());
  std::vector<std::uint32_t> perm(vs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::map<std::uint32_t, std::size_t> pos;
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = i;
  std::vector<Tri> best;
  do {
    std::vector<Tri> img;
    for (const auto& t : tris) {
      Tri u{perm[pos[t[0]]], perm[pos[t[1]]], perm[pos[t[2]]]};
      std::sort(u.begin(), u.end());
      img.push_back(u);
    }
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = img;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Isomorphism classes of connected triangle sets with at most max_t
// triangles on at most 3 max_t / 4 vertices, every used edge in at least
// two triangles and every used vertex in at least four. Exhaustive over
// subsets; only for max_t <= 9.
inline std::set<std::vector<Tri>> brute_census(std::size_t max_t) {
  const std::uint32_t n = static_cast<std::uint32_t>(3 * max_t / 4);
  std::vector<Tri> all;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      for (std::uint32_t c = b + 1; c < n; ++c) all.push_back({a, b, c});
  std::set<std::vector<Tri>> out;
  const std::uint64_t total = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_t) continue;
    std::vector<Tri> tris;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) tris.push_back(all[i]);
    std::vector<int> vdeg(n, 0);
    std::map<Ed, int> edeg;
    for (const auto& t : tris) {
      for (auto v : t) ++vdeg[v];
      ++edeg[{t[0], t[1]}];
      ++edeg[{t[0], t[2]}];
      ++edeg[{t[1], t[2]}];
    }
    if (std::any_of(vdeg.begin(), vdeg.end(), [](int d) { return d > 0 && d < 4; })) continue;
    if (std::any_of(edeg.begin(), edeg.end(), [](const auto& kv) { return kv.second < 2; })) continue;
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t v) {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (const auto& [e, _] : edeg) parent[find(e[0])] = find(e[1]);
    std::set<std::uint32_t> roots;
    for (std::uint32_t v = 0; v < n; ++v)
      if (vdeg[v] > 0) roots.insert(find(v));
    if (roots.size() != 1) continue;
    out.insert(brute_canonical(tris));
  }
  return out;
}

// Smallest k with 3^k >= t^2.
inline unsigned torsion_floor(const mpz_class& t) {
  mpz_class p = 1;
  unsigned k = 0;
  while (p < t * t) {
    p *= 3;
    ++k;
  }
  return k;
}

}  // namespace oracle
