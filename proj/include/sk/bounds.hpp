#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "sk/group_spec.hpp"
#include "sk/interval.hpp"

namespace sk {

struct Constants {
  mpq_class c;         // 1562500/3
  Interval cp;         // 1 + ln 25
  mpz_class b_log2;    // log2 B = 6 C = 3125000
  unsigned bp = 9;
};

const Constants& constants();

struct KappaBounds {
  mpz_class lo;
  std::string lo_reason;  // torsion | betti2_surface | z2_rank | free_zero
  mpz_class hi;
  std::string hi_witness;  // "construction:<name> s2=<n>" or "formula:<name>"
  std::optional<unsigned> exact;  // known minimal value, when tabulated
};

struct SigmaBounds {
  Interval lo;
  std::string lo_reason;  // universal_pi_16 | abelian_phi | free_zero
  Interval hi;
  std::string hi_reason;  // kappa_over_2pi | telescope_metric | free_zero
};

struct BoundCertificate {
  GroupSpec spec;
  KappaBounds kappa;
  std::optional<SigmaBounds> sigma;
  std::vector<std::string> notes;
};

// Throws UnsupportedSpec on an invalid spec.
BoundCertificate kappa_bounds(const GroupSpec& spec);
// kappa_bounds plus the sigma side.
BoundCertificate sigma_bounds(const GroupSpec& spec);

// phi(x) = 2 / (1 + sqrt(1 + 4 log2 x / Cp^2)), x >= 1.
Interval phi(const Interval& x);

// C sigma^(1 + Cp / sqrt(log2 sigma)); DomainError unless sigma > 1.
Interval kappa_upper_from_sigma(const Interval& sigma);
// kappa / (2 pi).
Interval sigma_upper_from_kappa(const Interval& kappa);

struct StableBounds {
  bool applicable = true;
  std::optional<Interval> lower;  // absent when only the symbolic branch applies
  std::string lower_reason;       // z2_free_factor | t_lower_over_3 | symbolic
  std::string lower_formula;
  std::optional<mpz_class> upper;  // kappa_hi - 1
  std::vector<std::string> notes;
};

// t_lower must be a certified lower bound for the minimal relator-triangle
// count; a presentation only gives an upper one, passed as t_upper for the
// record.
StableBounds stable_bounds(const GroupSpec& spec, std::optional<mpz_class> t_lower = std::nullopt,
                           std::optional<mpz_class> t_upper = std::nullopt);

enum class CountSide { Kappa, Sigma };

struct CountingBounds {
  CountSide side = CountSide::Kappa;
  Interval log2_lower;
  Interval log2_upper;
  std::optional<Interval> log2_upper_full;  // kappa side only
  std::optional<mpz_class> lower_count;     // kappa side only
};

CountingBounds counting_bounds(std::size_t t, CountSide side);

// pi / (1 + 2 sqrt 3).
Interval sigma_count_coefficient();

struct LensBounds {
  std::size_t n = 0;
  mpz_class m;
  mpz_class cube_count;
  mpq_class d_n;
  mpq_class sysvol_upper;
  mpz_class t1_lower;
  std::string sysvol_lower;  // symbolic, constants unknown
};

// Throws DomainError if n < 1 or m < 2.
LensBounds lens_bounds(std::size_t n, const mpz_class& m);

}  // namespace sk
