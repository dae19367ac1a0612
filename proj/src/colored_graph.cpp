#include "sk/colored_graph.hpp"

#include <algorithm>
#include <set>

#include "sk/error.hpp"

namespace sk {

ColoredGraph ColoredGraph::make(std::size_t b, std::vector<std::array<std::uint32_t, 2>> a,
                                std::size_t g, std::vector<std::array<std::uint32_t, 3>> bm) {
  if (g != a.size()) throw Error(ErrorCode::InvalidColoredGraph, "green count does not match A");
  for (const auto& row : a) {
    if (row[0] >= b || row[1] >= b)
      throw Error(ErrorCode::InvalidColoredGraph, "A row points past the black vertices");
    if (row[0] == row[1])
      throw Error(ErrorCode::InvalidColoredGraph, "A row must have exactly two ones");
  }
  for (const auto& row : bm) {
    for (auto v : row)
      if (v >= g) throw Error(ErrorCode::InvalidColoredGraph, "B row points past the green vertices");
    if (row[0] == row[1] || row[0] == row[2] || row[1] == row[2])
      throw Error(ErrorCode::InvalidColoredGraph, "B row must have exactly three ones");
  }
  ColoredGraph cg;
  cg.b_ = b;
  cg.a_ = std::move(a);
  cg.bm_ = std::move(bm);
  for (auto& row : cg.a_) std::sort(row.begin(), row.end());
  for (auto& row : cg.bm_) std::sort(row.begin(), row.end());
  return cg;
}

ColoredGraph ColoredGraph::from_dense(std::size_t b, const std::vector<std::vector<int>>& a,
                                      const std::vector<std::vector<int>>& bm) {
  std::vector<std::array<std::uint32_t, 2>> ar;
  for (const auto& row : a) {
    if (row.size() != b) throw Error(ErrorCode::InvalidColoredGraph, "A row has the wrong width");
    std::vector<std::uint32_t> ones;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0 && row[j] != 1) throw Error(ErrorCode::InvalidColoredGraph, "A entries must be 0 or 1");
      if (row[j] == 1) ones.push_back(static_cast<std::uint32_t>(j));
    }
    if (ones.size() != 2) throw Error(ErrorCode::InvalidColoredGraph, "A row must have exactly two ones");
    ar.push_back({ones[0], ones[1]});
  }
  std::vector<std::array<std::uint32_t, 3>> br;
  for (const auto& row : bm) {
    if (row.size() != a.size()) throw Error(ErrorCode::InvalidColoredGraph, "B row has the wrong width");
    std::vector<std::uint32_t> ones;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0 && row[j] != 1) throw Error(ErrorCode::InvalidColoredGraph, "B entries must be 0 or 1");
      if (row[j] == 1) ones.push_back(static_cast<std::uint32_t>(j));
    }
    if (ones.size() != 3) throw Error(ErrorCode::InvalidColoredGraph, "B row must have exactly three ones");
    br.push_back({ones[0], ones[1], ones[2]});
  }
  const std::size_t g = ar.size();
  return make(b, std::move(ar), g, std::move(br));
}

std::vector<std::vector<int>> ColoredGraph::dense_a() const {
  std::vector<std::vector<int>> m(a_.size(), std::vector<int>(b_, 0));
  for (std::size_t i = 0; i < a_.size(); ++i) m[i][a_[i][0]] = m[i][a_[i][1]] = 1;
  return m;
}

std::vector<std::vector<int>> ColoredGraph::dense_b() const {
  std::vector<std::vector<int>> m(bm_.size(), std::vector<int>(a_.size(), 0));
  for (std::size_t i = 0; i < bm_.size(); ++i)
    for (auto v : bm_[i]) m[i][v] = 1;
  return m;
}

ColoredGraph encode(const Simplex2Complex& x) {
  const auto edges = x.edges();
  std::vector<std::array<std::uint32_t, 2>> a;
  for (const auto& e : edges) a.push_back({e[0], e[1]});
  std::vector<std::array<std::uint32_t, 3>> bm;
  for (const auto& t : x.triangles()) {
    std::array<std::uint32_t, 3> row{};
    const auto es = triangle_edges(t);
    for (int i = 0; i < 3; ++i) row[i] = static_cast<std::uint32_t>(edge_index(edges, es[i]));
    bm.push_back(row);
  }
  return ColoredGraph::make(x.vertex_count(), std::move(a), edges.size(), std::move(bm));
}

PropertyReport check_properties(const ColoredGraph& g, std::size_t t) {
  PropertyReport r;
  r.p1 = true;
  if (4 * g.black() > 3 * t) {
    r.p1 = false;
    r.failures.push_back("P1: b = " + std::to_string(g.black()) + " exceeds 3T/4");
  }
  if (2 * g.green() > 3 * t) {
    r.p1 = false;
    r.failures.push_back("P1: g = " + std::to_string(g.green()) + " exceeds 3T/2");
  }
  if (g.red() > t) {
    r.p1 = false;
    r.failures.push_back("P1: r = " + std::to_string(g.red()) + " exceeds T");
  }
  r.p2 = std::all_of(g.a_rows().begin(), g.a_rows().end(), [&](const auto& row) {
    return row[0] != row[1] && row[0] < g.black() && row[1] < g.black();
  });
  if (!r.p2) r.failures.push_back("P2: a green vertex without exactly two black neighbours");
  r.p3 = std::all_of(g.b_rows().begin(), g.b_rows().end(), [&](const auto& row) {
    return row[0] != row[1] && row[1] != row[2] && row[0] != row[2] && row[2] < g.green();
  });
  if (!r.p3) r.failures.push_back("P3: a red vertex without exactly three green neighbours");
  r.p4 = true;  // no red-black incidence is representable
  return r;
}

Simplex2Complex decode(const ColoredGraph& g) {
  std::vector<Edge> edges;
  for (const auto& row : g.a_rows()) edges.push_back(make_edge(row[0], row[1]));
  {
    std::set<Edge> seen;
    for (const auto& e : edges)
      if (!seen.insert(e).second)
        throw Error(ErrorCode::NotAComplex, "duplicate edge: two green vertices share their black pair");
  }
  std::vector<Triangle> tris;
  std::vector<std::uint8_t> used(edges.size(), 0);
  for (const auto& row : g.b_rows()) {
    std::set<Vertex> vs;
    for (auto e : row) {
      vs.insert(edges[e][0]);
      vs.insert(edges[e][1]);
      used[e] = 1;
    }
    if (vs.size() != 3)
      throw Error(ErrorCode::NotAComplex, "non-triangle red vertex: its green neighbours span " +
                                              std::to_string(vs.size()) + " black vertices");
    auto it = vs.begin();
    const Vertex a = *it++, b = *it++, c = *it;
    tris.push_back({a, b, c});
  }
  std::sort(tris.begin(), tris.end());
  if (std::adjacent_find(tris.begin(), tris.end()) != tris.end())
    throw Error(ErrorCode::NotAComplex, "duplicate triangle: two red vertices share their green triple");
  std::vector<Edge> extra;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!used[i]) extra.push_back(edges[i]);
  return Simplex2Complex::validate(g.black(), std::move(tris), std::move(extra));
}

CountBounds count_bounds(std::size_t t) {
  if (t < 2) throw Error(ErrorCode::DomainError, "count_bounds needs T >= 2");
  const mpq_class T(static_cast<unsigned long>(t));
  const mpq_class b = 3 * T / 4, g = 3 * T / 2;
  const mpq_class q1 = 9 * T * T * T / 8;
  const mpq_class q2 = b * (b - 1) / 2;
  const mpq_class q3 = g * (g - 1) * (g - 2) / 6;
  CountBounds c;
  c.log2_full = log2(Interval(q1)) + Interval(g) * log2(Interval(q2)) + Interval(T) * log2(Interval(q3));
  c.log2_simplified = Interval(6 * T) * log2(Interval(T));
  const mpq_class e = (T - 3) / 14;
  c.log2_lower_abelian = Interval(e);
  if (t < 3) {
    c.lower_count = 0;
  } else {
    mpz_class p = 1;
    p <<= static_cast<mp_bitcnt_t>(t - 3);
    mpz_root(c.lower_count.get_mpz_t(), p.get_mpz_t(), 14);
  }
  return c;
}

}  // namespace sk
