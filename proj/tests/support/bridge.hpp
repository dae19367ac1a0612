#pragma once

#include <random>

#include "oracles.hpp"
#include "sk/complex.hpp"
#include "sk/homology.hpp"

namespace bridge {

inline oracle::Chains chains(const sk::Simplex2Complex& x) {
  std::vector<oracle::Tri> t(x.triangles().begin(), x.triangles().end());
  std::vector<oracle::Ed> e(x.extra_edges().begin(), x.extra_edges().end());
  return oracle::chains(x.vertex_count(), t, e);
}

inline oracle::Mat mat(const sk::IntMatrix& m) {
  oracle::Mat out(m.rows, oracle::Vec(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out[i][j] = m(i, j);
  return out;
}

inline bool same_homology(const sk::Simplex2Complex& x) {
  const auto h = sk::homology_summary(x);
  const auto o = oracle::homology(chains(x));
  return h.betti == o.betti && h.h1_torsion_factors == o.torsion;
}

// Random complex: random triples on n vertices plus a few random extra
// edges; vertices that end up unused stay isolated.
inline sk::Simplex2Complex random_complex(std::mt19937_64& rng, std::size_t n, std::size_t tries) {
  std::set<sk::Triangle> tris;
  std::uniform_int_distribution<sk::Vertex> pick(0, static_cast<sk::Vertex>(n - 1));
  for (std::size_t i = 0; i < tries; ++i) {
    const auto a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;
    tris.insert(sk::make_triangle(a, b, c));
  }
  std::set<sk::Edge> face;
  for (const auto& t : tris)
    for (const auto& e : sk::triangle_edges(t)) face.insert(e);
  std::set<sk::Edge> extra;
  for (std::size_t i = 0; i < n / 2; ++i) {
    const auto a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const auto e = sk::make_edge(a, b);
    if (!face.count(e)) extra.insert(e);
  }
  return sk::Simplex2Complex::validate(n, {tris.begin(), tris.end()}, {extra.begin(), extra.end()});
}

}  // namespace bridge
