#include <doctest.h>

#include "bridge.hpp"
#include "sk/constructions.hpp"
#include "sk/error.hpp"
#include "sk/smith.hpp"

using namespace sk;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (auto& e : m.entries) e = d(rng);
  return m;
}

}  // namespace

TEST_CASE("smith form of small fixed matrices") {
  IntMatrix m(2, 2);
  m(0, 0) = 2;
  m(1, 1) = 3;
  auto s = smith_normal_form(m);
  CHECK(s.rank == 2);
  CHECK(s.invariant_factors == std::vector<mpz_class>{1, 6});

  IntMatrix z(3, 2);
  s = smith_normal_form(z);
  CHECK(s.rank == 0);
  CHECK(s.invariant_factors.empty());

  IntMatrix k(2, 3);
  k(0, 0) = 4;
  k(0, 1) = 6;
  k(1, 2) = 8;
  s = smith_normal_form(k);
  CHECK(s.invariant_factors == std::vector<mpz_class>{2, 8});
}

TEST_CASE("smith form against the determinantal divisors") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_matrix(rng, 1 + i % 5, 1 + (i / 5) % 5, -5, 5);
    const auto s = smith_normal_form(m);
    const auto om = bridge::mat(m);
    mpz_class prod = 1;
    for (std::size_t k = 1; k <= std::min(m.rows, m.cols); ++k) {
      const mpz_class g = oracle::minors_gcd(om, k);
      if (k <= s.rank) {
        prod *= s.invariant_factors[k - 1];
        CHECK(prod == g);
      } else {
        CHECK(g == 0);
      }
      CHECK(gcd_of_minors_oracle(m, k) == g);
    }
    CHECK(s.rank == oracle::rank_q(om));
  }
}

TEST_CASE("smith form falls back to big integers") {
  IntMatrix m(2, 2);
  m(0, 0) = mpz_class("100000000000000000000000000000");
  m(0, 1) = mpz_class("3");
  m(1, 0) = mpz_class("7");
  m(1, 1) = mpz_class("-99999999999999999999999999999");
  const auto s = smith_normal_form(m);
  CHECK(s.rank == 2);
  CHECK(s.invariant_factors[0] == 1);
  CHECK(abs(s.invariant_factors[1]) == abs(determinant(m)));

  IntMatrix big(3, 3);
  const mpz_class huge = mpz_class(1) << 62;
  big(0, 0) = huge;
  big(0, 1) = huge - 1;
  big(1, 0) = huge + 1;
  big(1, 1) = huge;
  big(2, 2) = 5;
  const auto b = smith_normal_form(big);
  CHECK(b.invariant_factors == oracle::smith_diagonal(bridge::mat(big)));
}

TEST_CASE("normalize_diagonal gives the chain of the same group") {
  CHECK(normalize_diagonal({4, 6}) == std::vector<mpz_class>{2, 12});
  CHECK(normalize_diagonal({-3, 5, 1}) == std::vector<mpz_class>{1, 1, 15});
  CHECK(normalize_diagonal({}).empty());
}

TEST_CASE("diagonalize_with_left really diagonalizes from the left") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto m = random_matrix(rng, 4, 3, -4, 4);
    const auto d = diagonalize_with_left(m);
    CHECK(abs(determinant(d.left)) == 1);
    // U M has a column space spanned by multiples of the first unit vectors.
    const auto um = multiply(d.left, m);
    for (std::size_t r = d.diagonal.size(); r < um.rows; ++r)
      for (std::size_t c = 0; c < um.cols; ++c) CHECK(um(r, c) == 0);
  }
}

TEST_CASE("boundary matrices compose to zero") {
  for (const auto& x : {minimal_rp2().complex, minimal_torus().complex, complex_for_cyclic(12).complex}) {
    const auto d1 = boundary_matrix(x, 1), d2 = boundary_matrix(x, 2);
    const auto zero = multiply(d1, d2);
    for (const auto& e : zero.entries) CHECK(e == 0);
    CHECK(bridge::mat(d2) == bridge::chains(x).d2);
    CHECK(bridge::mat(d1) == bridge::chains(x).d1);
  }
}

TEST_CASE("homology of standard spaces") {
  auto h = homology_summary(minimal_rp2().complex);
  CHECK(h.betti == std::array<std::size_t, 3>{1, 0, 0});
  CHECK(h.h1_torsion_factors == std::vector<mpz_class>{2});
  CHECK(h.torsion_order == 2);
  h = homology_summary(minimal_torus().complex);
  CHECK(h.betti == std::array<std::size_t, 3>{1, 2, 1});
  CHECK(h.h1_torsion_factors.empty());
  h = homology_summary(Simplex2Complex::validate(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  CHECK(h.betti == std::array<std::size_t, 3>{1, 0, 1});
  h = homology_summary(Simplex2Complex::validate(3, {}, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(h.betti == std::array<std::size_t, 3>{1, 1, 0});
  h = homology_summary(Simplex2Complex());
  CHECK(h.betti == std::array<std::size_t, 3>{0, 0, 0});
}

TEST_CASE("homology against the oracle on constructions") {
  for (const auto& name : {"rp2", "torus", "moebius", "telescope:3", "cyclic:6", "cyclic:9", "finite_abelian:2,4",
                           "abelian:2:(3)", "surface:2", "freeprod:(rp2;torus)"}) {
    INFO(name);
    CHECK(bridge::same_homology(build_named(name).complex));
  }
}

TEST_CASE("torsion lower bound") {
  CHECK(kappa_lower_torsion(1) == 0);
  CHECK(kappa_lower_torsion(2) == 2);
  CHECK(kappa_lower_torsion(3) == 2);
  CHECK(kappa_lower_torsion(4) == 3);
  CHECK(kappa_lower_torsion(9) == 4);
  for (int t = 1; t < 2000; ++t) CHECK(kappa_lower_torsion(t) == oracle::torsion_floor(t));
  CHECK_THROWS_AS(kappa_lower_torsion(0), Error);
}

TEST_CASE("boundary test over Z and Z/p") {
  const auto rp2 = minimal_rp2();
  const auto alpha = loop_chain(rp2.complex, rp2.loop("alpha"));
  const BoundaryTest z(rp2.complex);
  CHECK_FALSE(z.is_boundary(alpha));
  std::vector<mpz_class> twice = alpha;
  for (auto& v : twice) v *= 2;
  CHECK(z.is_boundary(twice));
  const BoundaryTest z2(rp2.complex, 2);
  CHECK_FALSE(z2.is_boundary(alpha));
  const BoundaryTest z3(rp2.complex, 3);
  CHECK(z3.is_boundary(alpha));
  CHECK_THROWS_AS(BoundaryTest(rp2.complex, 4), Error);
}

TEST_CASE("boundary test against the lattice oracle") {
  std::mt19937_64 rng(5);
  for (const auto& name : {"rp2", "torus", "cyclic:5", "cyclic:12", "finite_abelian:2,2"}) {
    const auto x = build_named(name).complex;
    const auto ch = bridge::chains(x);
    const oracle::Lattice lat(ch.d2);
    const BoundaryTest test(x);
    const auto d2 = boundary_matrix(x, 2);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int i = 0; i < 40; ++i) {
      // Half the samples are boundaries by construction, plus a random cycle.
      std::vector<mpz_class> z(d2.rows, 0);
      for (std::size_t j = 0; j < d2.cols; ++j) {
        const int c = coef(rng);
        for (std::size_t r = 0; r < d2.rows; ++r) z[r] += c * d2(r, j);
      }
      if (i % 2) {
        const auto m = build_named(name);
        for (const auto& [_, loop] : m.marked_loops) {
          const auto l = loop_chain(x, loop);
          const int c = coef(rng);
          for (std::size_t r = 0; r < z.size(); ++r) z[r] += c * l[r];
        }
      }
      CHECK(test.is_boundary(z) == lat.contains(z));
    }
  }
}
