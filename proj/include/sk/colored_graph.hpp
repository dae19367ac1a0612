#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sk/complex.hpp"
#include "sk/interval.hpp"

namespace sk {

// Three-coloured graph of a barycentric subdivision with red-black edges
// erased: black = vertices, green = edges, red = triangles. Each green
// vertex lists its two black neighbours (a row of A), each red vertex its
// three green neighbours (a row of B), so red-black adjacency cannot be
// expressed at all.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  // Rows must hold distinct in-range indices.
  static ColoredGraph make(std::size_t b, std::vector<std::array<std::uint32_t, 2>> a,
                           std::size_t g, std::vector<std::array<std::uint32_t, 3>> bm);

  // Dense 0/1 incidence rows: A is g x b with two ones per row, B is r x g
  // with three.
  static ColoredGraph from_dense(std::size_t b, const std::vector<std::vector<int>>& a,
                                 const std::vector<std::vector<int>>& bm);

  std::size_t black() const { return b_; }
  std::size_t green() const { return a_.size(); }
  std::size_t red() const { return bm_.size(); }
  const std::vector<std::array<std::uint32_t, 2>>& a_rows() const { return a_; }
  const std::vector<std::array<std::uint32_t, 3>>& b_rows() const { return bm_; }

  std::vector<std::vector<int>> dense_a() const;
  std::vector<std::vector<int>> dense_b() const;

  bool operator==(const ColoredGraph&) const = default;

 private:
  std::size_t b_ = 0;
  std::vector<std::array<std::uint32_t, 2>> a_;
  std::vector<std::array<std::uint32_t, 3>> bm_;
};

ColoredGraph encode(const Simplex2Complex& x);

struct PropertyReport {
  bool p1 = false;
  bool p2 = false;
  bool p3 = false;
  bool p4 = false;
  std::vector<std::string> failures;

  bool all() const { return p1 && p2 && p3 && p4; }
};

// P1: 4b <= 3T, 2g <= 3T, r <= T. P2-P4 hold by construction of the type
// and are re-checked on the rows.
PropertyReport check_properties(const ColoredGraph& g, std::size_t t);

// Throws NotAComplex naming the first defect found.
Simplex2Complex decode(const ColoredGraph& g);

struct CountBounds {
  Interval log2_full;
  Interval log2_simplified;
  Interval log2_lower_abelian;
  mpz_class lower_count;  // floor(2^((T-3)/14))
};

CountBounds count_bounds(std::size_t t);

}  // namespace sk
