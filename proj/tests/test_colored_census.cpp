#include <doctest.h>

#include "bridge.hpp"
#include "sk/canonical.hpp"
#include "sk/census.hpp"
#include "sk/colored_graph.hpp"
#include "sk/constructions.hpp"
#include "sk/error.hpp"

using namespace sk;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

Simplex2Complex entry_complex(const CensusEntry& e) { return Simplex2Complex::validate(e.s0, e.canonical_triangles); }

}  // namespace

TEST_CASE("encode counts") {
  const auto g = encode(minimal_rp2().complex);
  CHECK(g.black() == 6);
  CHECK(g.green() == 15);
  CHECK(g.red() == 10);
  const auto r = check_properties(g, 10);
  CHECK(r.all());
  CHECK(r.failures.empty());
  for (const auto& row : g.dense_a()) CHECK(std::count(row.begin(), row.end(), 1) == 2);
  for (const auto& row : g.dense_b()) CHECK(std::count(row.begin(), row.end(), 1) == 3);
  CHECK(ColoredGraph::from_dense(g.black(), g.dense_a(), g.dense_b()) == g);
}

TEST_CASE("P1 fails when the graph is too big for T") {
  const auto g = encode(minimal_torus().complex);
  CHECK(check_properties(g, 14).all());
  const auto r = check_properties(g, 9);
  CHECK_FALSE(r.p1);
  CHECK(r.p2);
  CHECK(r.p3);
  CHECK(r.p4);
}

TEST_CASE("decode inverts encode") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto x = bridge::random_complex(rng, 4 + i % 7, 2 + i % 15);
    const auto y = decode(encode(x));
    CHECK(y == x);
    CHECK(isomorphic(x, y));
  }
}

TEST_CASE("decode diagnostics") {
  CHECK(code_of([] { decode(ColoredGraph::make(3, {{0, 1}, {1, 0}}, 2, {})); }) == ErrorCode::NotAComplex);
  // Three green vertices forming a star at black vertex 0.
  CHECK(code_of([] { decode(ColoredGraph::make(4, {{0, 1}, {0, 2}, {0, 3}}, 3, {{0, 1, 2}})); }) ==
        ErrorCode::NotAComplex);
  CHECK(code_of([] {
          decode(ColoredGraph::make(3, {{0, 1}, {0, 2}, {1, 2}}, 3, {{0, 1, 2}, {2, 1, 0}}));
        }) == ErrorCode::NotAComplex);
  CHECK(code_of([] { ColoredGraph::make(2, {{0, 0}}, 1, {}); }) == ErrorCode::InvalidColoredGraph);
  CHECK(code_of([] { ColoredGraph::make(2, {{0, 1}}, 1, {{0, 0, 0}}); }) == ErrorCode::InvalidColoredGraph);
  CHECK(code_of([] { ColoredGraph::from_dense(2, {{1, 1, 0}}, {}); }) == ErrorCode::InvalidColoredGraph);
}

TEST_CASE("count bounds") {
  const auto c = count_bounds(31);
  CHECK(c.lower_count == 4);
  for (std::size_t t = 3; t <= 200; ++t) {
    const auto b = count_bounds(t);
    // lower_count^14 <= 2^(t-3) < (lower_count + 1)^14
    const mpz_class p = mpz_class(1) << static_cast<mp_bitcnt_t>(t - 3);
    mpz_class lo, hi;
    mpz_pow_ui(lo.get_mpz_t(), b.lower_count.get_mpz_t(), 14);
    const mpz_class next = b.lower_count + 1;
    mpz_pow_ui(hi.get_mpz_t(), next.get_mpz_t(), 14);
    CHECK(lo <= p);
    CHECK(p < hi);
  }
  for (std::size_t t = 2; t <= 2000; t += 7) {
    const auto b = count_bounds(t);
    CHECK(b.log2_full.certainly_le(b.log2_simplified));
  }
  CHECK(count_bounds(2).lower_count == 0);
  CHECK_THROWS_AS(count_bounds(1), Error);
}

TEST_CASE("census below four triangles is empty") {
  for (std::size_t t = 1; t <= 3; ++t) {
    CensusOptions o;
    o.max_t = t;
    const auto r = census(o);
    CHECK(r.complete);
    CHECK(r.entries.empty());
  }
}

TEST_CASE("census has no torsion up to six triangles") {
  for (std::size_t t = 4; t <= 6; ++t) {
    CensusOptions o;
    o.max_t = t;
    for (const auto& e : census(o).entries) CHECK(e.torsion.empty());
  }
}

TEST_CASE("census matches brute force enumeration") {
  for (std::size_t t = 6; t <= 9; ++t) {
    INFO(t);
    CensusOptions o;
    o.max_t = t;
    const auto r = census(o);
    const auto brute = oracle::brute_census(t);
    std::set<std::vector<oracle::Tri>> got;
    for (const auto& e : r.entries) {
      std::vector<oracle::Tri> tris(e.canonical_triangles.begin(), e.canonical_triangles.end());
      got.insert(oracle::brute_canonical(tris));
    }
    CHECK(got.size() == r.entries.size());
    CHECK(got == brute);
  }
}

TEST_CASE("census entries are canonical and carry correct fingerprints") {
  CensusOptions o;
  o.max_t = 10;
  const auto r = census(o);
  REQUIRE(r.complete);
  std::size_t z2 = 0;
  for (const auto& e : r.entries) {
    const auto x = entry_complex(e);
    CHECK(canonical_form(x).complex.triangles() == e.canonical_triangles);
    CHECK(is_canonical_set(e.s0, e.canonical_triangles));
    CHECK(is_minimal_candidate(x).minimal_candidate);
    const auto h = oracle::homology(bridge::chains(x));
    CHECK(h.betti == e.betti);
    CHECK(h.torsion == e.torsion);
    mpz_class order = 1;
    for (const auto& f : e.torsion) order *= f;
    CHECK(e.s2 >= oracle::torsion_floor(order));
    if (e.torsion == std::vector<mpz_class>{2} && e.betti[1] == 0) {
      ++z2;
      CHECK(isomorphic(x, minimal_rp2().complex));
    }
  }
  CHECK(z2 == 1);
}

TEST_CASE("canonical sets are closed under removing the last triple") {
  CensusOptions o;
  o.max_t = 10;
  for (const auto& e : census(o).entries) {
    auto tris = e.canonical_triangles;
    std::sort(tris.begin(), tris.end(), [](const Triangle& a, const Triangle& b) { return colex_rank(a) < colex_rank(b); });
    while (!tris.empty()) {
      tris.pop_back();
      CHECK(is_canonical_set(e.s0, tris));
    }
  }
}

TEST_CASE("census is independent of the worker count") {
  CensusOptions o;
  o.max_t = 10;
  const auto one = census(o);
  for (unsigned w : {2u, 3u, 8u}) {
    o.workers = w;
    const auto r = census(o);
    CHECK(r.entries == one.entries);
  }
}

TEST_CASE("census budgets and ceiling") {
  CensusOptions o;
  o.max_t = 10;
  o.budget_nodes = 50;
  const auto r = census(o);
  CHECK_FALSE(r.complete);
  CHECK(r.stop_reason.find("node budget") != std::string::npos);
  CensusOptions big;
  big.max_t = 11;
  CHECK(code_of([&] { census(big); }) == ErrorCode::TooLarge);
  big.ceiling = 40;
  CHECK(code_of([&] { census(big); }) == ErrorCode::TooLarge);
}
