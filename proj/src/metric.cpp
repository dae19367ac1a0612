#include "sk/metric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sk/error.hpp"
#include "sk/homology.hpp"

namespace sk {

EdgeMetric EdgeMetric::unit(const Simplex2Complex& x) {
  EdgeMetric m;
  m.lengths.assign(x.edges().size(), mpq_class(1));
  return m;
}

EdgeMetric EdgeMetric::scaled(const mpq_class& factor) const {
  if (factor <= 0) throw Error(ErrorCode::DomainError, "metric scale must be positive");
  EdgeMetric m = *this;
  for (auto& l : m.lengths) l *= factor;
  return m;
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> c) {
  if (c.size() < 2) return c;
  const auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return c;
}

SystoleResult homological_systole(const Simplex2Complex& x, const EdgeMetric& m, unsigned ring) {
  const auto edges = x.edges();
  if (m.lengths.size() != edges.size())
    throw Error(ErrorCode::DomainError, "metric does not match the edge set");
  for (const auto& l : m.lengths)
    if (l <= 0) throw Error(ErrorCode::DomainError, "edge lengths must be positive");
  if (!m.scale.positive()) throw Error(ErrorCode::DomainError, "metric scale must be positive");
  if (component_count(x) != 1) throw Error(ErrorCode::Disconnected, "systole needs a connected complex");

  const std::size_t nv = x.vertex_count();
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(nv);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i][0]].push_back({edges[i][1], i});
    adj[edges[i][1]].push_back({edges[i][0], i});
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::set<std::pair<mpq_class, std::vector<Vertex>>> candidates;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  for (Vertex root = 0; root < nv; ++root) {
    std::vector<mpq_class> dist(nv);
    std::vector<std::uint8_t> reached(nv, 0), done(nv, 0);
    std::vector<std::size_t> parent_edge(nv, kNone);
    std::vector<Vertex> parent(nv, 0);
    std::set<std::pair<mpq_class, Vertex>> queue;
    dist[root] = 0;
    reached[root] = 1;
    queue.insert({dist[root], root});
    while (!queue.empty()) {
      const auto [d, v] = *queue.begin();
      queue.erase(queue.begin());
      done[v] = 1;
      for (const auto& [w, e] : adj[v]) {
        if (done[w]) continue;
        const mpq_class nd = d + m.lengths[e];
        if (!reached[w] || nd < dist[w]) {
          if (reached[w]) queue.erase({dist[w], w});
          dist[w] = nd;
          reached[w] = 1;
          parent[w] = v;
          parent_edge[w] = e;
          queue.insert({nd, w});
        }
      }
    }

    auto path_to = [&](Vertex v) {
      std::vector<Vertex> p{v};
      while (v != root) {
        v = parent[v];
        p.push_back(v);
      }
      std::reverse(p.begin(), p.end());
      return p;
    };

    for (std::size_t e = 0; e < edges.size(); ++e) {
      const Vertex u = edges[e][0], v = edges[e][1];
      if (parent_edge[u] == e || parent_edge[v] == e) continue;
      const auto pu = path_to(u), pv = path_to(v);
      std::size_t k = 0;
      while (k + 1 < pu.size() && k + 1 < pv.size() && pu[k + 1] == pv[k + 1]) ++k;
      const Vertex w = pu[k];
      std::vector<Vertex> cyc(pu.begin() + static_cast<std::ptrdiff_t>(k), pu.end());
      for (std::size_t i = pv.size() - 1; i > k; --i) cyc.push_back(pv[i]);
      const mpq_class len = dist[u] - dist[w] + m.lengths[e] + dist[v] - dist[w];
      candidates.insert({len, canonical_cycle(std::move(cyc))});
    }
  }

  const BoundaryTest test(x, ring);
  for (const auto& [len, cyc] : candidates) {
    if (test.is_boundary(loop_chain(x, cyc))) continue;
    SystoleResult r;
    r.rational_length = len;
    r.length = Interval(len) * m.scale;
    r.witness_cycle = cyc;
    r.ring = ring;
    return r;
  }
  throw Error(ErrorCode::TrivialH1, "every edge cycle bounds over the chosen coefficients");
}

EquilateralBound equilateral_sigma_upper(const Simplex2Complex& x) {
  const auto unit = EdgeMetric::unit(x);
  SystoleResult sys;
  bool found = false;
  for (unsigned ring : {0u, 2u}) {
    try {
      sys = homological_systole(x, unit, ring);
      found = true;
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TrivialH1) throw;
    }
  }
  if (!found) throw Error(ErrorCode::TrivialH1, "H1 vanishes with Z and Z/2 coefficients");
  // Unit lengths: the rational systole is the number of edges. Each edge is
  // 2 pi/3 long, so a systole of 2 pi needs at least three edges.
  if (sys.rational_length < 3)
    throw Error(ErrorCode::SystoleTooShort, "a nontrivial cycle with fewer than three edges exists");
  EquilateralBound b;
  b.s2 = x.triangles().size();
  b.systole_edges = sys.witness_cycle.size();
  b.ring = sys.ring;
  b.sigma_upper = Interval(static_cast<long>(b.s2)) / (Interval(2L) * Interval::pi());
  b.proviso =
      "systole checked on homology classes; a sigma bound for pi1 when short nontrivial loops stay "
      "nontrivial in H1";
  return b;
}

TelescopeBound telescope_sigma_upper(const mpz_class& m) {
  if (m < 2) throw Error(ErrorCode::DomainError, "telescope bound needs m >= 2");
  const Interval pi = Interval::pi();
  const Interval coeff = (Interval(1L) + Interval(2L) * sqrt(Interval(3L))) / pi;
  TelescopeBound t;
  t.n = mpz_sizeinbase(m.get_mpz_t(), 2) - 1;
  const Interval n(static_cast<long>(t.n));
  t.bound = coeff * log2(Interval(m));
  t.strip_area = n * Interval(2L) * pi * sqrt(Interval(3L));
  t.disk_area_max = pi * n;
  t.systole = pi;
  t.bound_at_n = (t.strip_area + t.disk_area_max) / (pi * pi);
  return t;
}

}  // namespace sk
