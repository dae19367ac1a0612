#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sk/complex.hpp"

namespace sk {

constexpr std::size_t kCensusDefaultCeiling = 10;
constexpr std::size_t kCensusHardCeiling = 16;

struct CensusOptions {
  std::size_t max_t = 6;
  std::size_t ceiling = kCensusDefaultCeiling;
  std::uint64_t budget_nodes = 0;  // 0: unlimited
  double budget_seconds = 0;       // 0: unlimited
  unsigned workers = 1;
};

struct CensusEntry {
  std::vector<Triangle> canonical_triangles;
  std::size_t s0 = 0, s1 = 0, s2 = 0;
  std::int64_t euler = 0;
  std::array<std::size_t, 3> betti{};
  std::vector<mpz_class> torsion;

  bool operator==(const CensusEntry&) const = default;
};

struct CensusResult {
  std::vector<CensusEntry> entries;  // sorted by (s2, canonical_triangles)
  bool complete = true;
  std::string stop_reason;  // set when incomplete
  std::uint64_t nodes = 0;
};

// Connected complexes with at most max_t triangles in which every edge lies
// in two triangles and every vertex in four, one per isomorphism class.
// Orderly generation: triples are added in increasing colex rank and a set
// is kept only if it is canonical (see canonical.hpp), so each class is
// reached exactly once. Work below a fixed depth is split across workers.
CensusResult census(const CensusOptions& options);

// Canonicity test on labels 0..n-1, exposed for tests.
bool is_canonical_set(std::size_t n, const std::vector<Triangle>& triangles);

}  // namespace sk
