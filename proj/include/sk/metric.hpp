#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sk/complex.hpp"
#include "sk/interval.hpp"

namespace sk {

// Edge lengths are positive rationals times one common real factor, which
// keeps exact comparisons possible for metrics such as "every edge 2 pi/3".
struct EdgeMetric {
  std::vector<mpq_class> lengths;  // aligned with x.edges()
  Interval scale = Interval(1L);
  std::string scale_name = "1";

  static EdgeMetric unit(const Simplex2Complex& x);
  EdgeMetric scaled(const mpq_class& factor) const;
};

struct SystoleResult {
  mpq_class rational_length;  // length / scale
  Interval length;
  std::vector<Vertex> witness_cycle;  // simple closed vertex path
  unsigned ring = 0;                  // 0 for Z, else the prime p
};

// Shortest simple edge cycle whose class in H1(X; ring) is nonzero.
// Candidates are the fundamental cycles of a shortest-path tree from every
// root, cut down to their simple part; ties go to the smaller witness
// (rotated to its least vertex, then read in the smaller direction).
SystoleResult homological_systole(const Simplex2Complex& x, const EdgeMetric& m, unsigned ring = 0);

// Canonical rotation/direction of a closed vertex path.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);

struct EquilateralBound {
  Interval sigma_upper;  // s2 / (2 pi)
  std::size_t s2 = 0;
  std::size_t systole_edges = 0;  // combinatorial length of the systole
  unsigned ring = 0;
  std::string proviso;
};

// Every edge of length 2 pi / 3 (equilateral hemispheres). Requires a
// nonzero class in H1(X; Z) or, failing that, H1(X; Z/2).
EquilateralBound equilateral_sigma_upper(const Simplex2Complex& x);

struct TelescopeBound {
  Interval bound;          // (1 + 2 sqrt 3)/pi * log2 m
  std::size_t n = 0;       // floor(log2 m)
  Interval strip_area;     // n * 2 pi sqrt 3
  Interval disk_area_max;  // pi n
  Interval systole;        // pi
  Interval bound_at_n;     // (strip_area + disk_area_max) / pi^2
};

TelescopeBound telescope_sigma_upper(const mpz_class& m);

}  // namespace sk
