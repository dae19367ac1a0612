#include "sk/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "sk/colored_graph.hpp"
#include "sk/constructions.hpp"
#include "sk/error.hpp"
#include "sk/homology.hpp"
#include "sk/metric.hpp"

namespace sk {

namespace {

// Witnesses are built for real only below this many bits of group order;
// above it the triangle count of the same construction is summed directly.
constexpr std::size_t kBuildBits = 512;

std::size_t bits(const mpz_class& m) { return mpz_sizeinbase(m.get_mpz_t(), 2); }

mpz_class binom2(const mpz_class& n) { return n * (n - 1) / 2; }

// Triangle count of complex_for_cyclic(m): nine per strip plus the disk on
// the relator path of length 3 s.
mpz_class cyclic_count(const mpz_class& m) {
  const auto t = cyclic_target(m);
  const std::size_t s = t.exponents.size();
  const std::size_t disk = s == 1 ? 3 : (s == 2 ? 8 : 5 * s - 2);
  return mpz_class(static_cast<unsigned long>(9 * t.n + disk));
}

mpz_class abelian_count(std::size_t rank, const std::vector<mpz_class>& chain) {
  mpz_class total = 0;
  for (const auto& n : chain) total += cyclic_count(n);
  total += 14 * binom2(mpz_class(static_cast<unsigned long>(rank + chain.size())));
  return total;
}

struct Upper {
  mpz_class hi;
  std::string witness;
};

Upper abelian_upper(std::size_t rank, const std::vector<mpz_class>& chain) {
  if (chain.empty() && rank <= 1) return {0, "construction:free"};
  if (rank == 0 && chain.size() == 1 && chain[0] == 2) return {10, "construction:rp2 s2=10"};
  std::size_t total_bits = 0;
  for (const auto& n : chain) total_bits += bits(n);
  if (total_bits <= kBuildBits) {
    const auto x = complex_for_abelian(rank, chain);
    const auto s2 = x.complex.triangles().size();
    const std::string name = rank == 0 && chain.size() == 1 ? "cyclic" : "abelian";
    return {mpz_class(static_cast<unsigned long>(s2)), "construction:" + name + " s2=" + std::to_string(s2)};
  }
  const auto c = abelian_count(rank, chain);
  return {c, "formula:construction_count s2=" + c.get_str()};
}

Upper upper(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::Trivial:
    case GroupSpec::Kind::Free:
      return {0, "construction:free"};
    case GroupSpec::Kind::Cyclic:
    case GroupSpec::Kind::FiniteAbelian:
      return abelian_upper(0, g.chain);
    case GroupSpec::Kind::Abelian:
      return abelian_upper(g.rank, g.chain);
    case GroupSpec::Kind::Surface: {
      const auto b = surface_bounds(g.genus);
      return {mpz_class(static_cast<unsigned long>(b.kappa_hi)),
              "formula:jungerman_ringel s2=" + std::to_string(b.kappa_hi)};
    }
    case GroupSpec::Kind::FreeProduct: {
      mpz_class sum = 0;
      std::size_t positive = 0;
      std::string parts;
      for (const auto& f : g.factors) {
        const auto u = upper(f);
        if (u.hi > 0) {
          sum += u.hi;
          ++positive;
        }
        parts += (parts.empty() ? "" : ";") + u.witness;
      }
      if (positive > 1) sum -= static_cast<unsigned long>(positive - 1);
      return {sum, "glue(" + parts + ") s2=" + sum.get_str()};
    }
  }
  return {0, "construction:free"};
}

// dim H2(G; Z/2) for the abelian and surface building blocks, additive over
// free products.
mpz_class z2_rank(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::Trivial:
    case GroupSpec::Kind::Free:
      return 0;
    case GroupSpec::Kind::Surface:
      return 1;
    case GroupSpec::Kind::FreeProduct: {
      mpz_class s = 0;
      for (const auto& f : g.factors) s += z2_rank(f);
      return s;
    }
    default: {
      const mpz_class r = g.kind == GroupSpec::Kind::Abelian ? g.rank : 0;
      mpz_class e = 0;
      for (const auto& n : g.chain)
        if (n % 2 == 0) ++e;
      return binom2(r) + r * e + e * (e + 1) / 2;
    }
  }
}

// Largest surface lower bound among the factors (a surface group, or Z^2).
std::size_t surface_lower(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::Surface:
      return surface_bounds(g.genus).kappa_lo;
    case GroupSpec::Kind::Abelian:
      return g.rank == 2 && g.chain.empty() ? surface_bounds(1).kappa_lo : 0;
    case GroupSpec::Kind::FreeProduct: {
      std::size_t best = 0;
      for (const auto& f : g.factors) best = std::max(best, surface_lower(f));
      return best;
    }
    default:
      return 0;
  }
}

bool is_z(const GroupSpec& g, unsigned m) {
  return (g.kind == GroupSpec::Kind::Cyclic || g.kind == GroupSpec::Kind::FiniteAbelian ||
          (g.kind == GroupSpec::Kind::Abelian && g.rank == 0)) &&
         g.chain.size() == 1 && g.chain[0] == m;
}

bool is_z2_squared(const GroupSpec& g) {
  return (g.kind == GroupSpec::Kind::Abelian && g.rank == 2 && g.chain.empty()) ||
         (g.kind == GroupSpec::Kind::Surface && g.genus == 1);
}

std::optional<mpz_class> cyclic_order(const GroupSpec& g) {
  if ((g.kind == GroupSpec::Kind::Cyclic || g.kind == GroupSpec::Kind::FiniteAbelian ||
       (g.kind == GroupSpec::Kind::Abelian && g.rank == 0)) &&
      g.chain.size() == 1)
    return g.chain[0];
  return std::nullopt;
}

std::optional<mpz_class> finite_abelian_order(const GroupSpec& g) {
  if (g.kind != GroupSpec::Kind::Cyclic && g.kind != GroupSpec::Kind::FiniteAbelian &&
      !(g.kind == GroupSpec::Kind::Abelian && g.rank == 0))
    return std::nullopt;
  if (g.chain.empty()) return std::nullopt;
  mpz_class o = 1;
  for (const auto& n : g.chain) o *= n;
  return o;
}

}  // namespace

const Constants& constants() {
  static const Constants k = [] {
    Constants c;
    c.c = mpq_class(1562500, 3);
    c.cp = Interval(1L) + log(Interval(25L));
    c.b_log2 = 3125000;
    c.bp = 9;
    return c;
  }();
  return k;
}

BoundCertificate kappa_bounds(const GroupSpec& spec) {
  spec.validate();
  BoundCertificate cert;
  cert.spec = spec;
  auto& k = cert.kappa;

  if (is_free(spec)) {
    k.lo = 0;
    k.lo_reason = "free_zero";
    k.hi = 0;
    k.hi_witness = "construction:free s2=0";
    k.exact = 0u;
    cert.notes.push_back("kappa vanishes exactly on free groups");
    return cert;
  }

  const auto ab = abelian_invariants(spec);
  mpz_class order = 1;
  for (const auto& t : ab.torsion) order *= t;
  k.lo = kappa_lower_torsion(order);
  k.lo_reason = "torsion";
  const mpz_class surf = static_cast<unsigned long>(surface_lower(spec));
  if (surf > k.lo) {
    k.lo = surf;
    k.lo_reason = "betti2_surface";
  }
  const mpz_class z2 = z2_rank(spec);
  if (z2 > k.lo) {
    k.lo = z2;
    k.lo_reason = "z2_rank";
  }

  const auto u = upper(spec);
  k.hi = u.hi;
  k.hi_witness = u.witness;
  if (spec.kind == GroupSpec::Kind::Surface)
    cert.notes.push_back("surface_witness builds a triangulation with " +
                         std::to_string(12 * spec.genus + 2) + " triangles; the minimal one is smaller");

  if (is_z(spec, 2)) k.exact = 10u;
  if (is_z(spec, 3)) k.exact = 17u;
  if (is_z2_squared(spec)) k.exact = 14u;
  if (k.exact && (k.lo > *k.exact || k.hi < *k.exact))
    throw std::logic_error("tabulated kappa outside the certified interval");
  if (k.lo > k.hi) throw std::logic_error("kappa interval is empty");
  return cert;
}

BoundCertificate sigma_bounds(const GroupSpec& spec) {
  auto cert = kappa_bounds(spec);
  SigmaBounds s;
  if (is_free(spec)) {
    s.lo = Interval(0L);
    s.lo_reason = "free_zero";
    s.hi = Interval(0L);
    s.hi_reason = "free_zero";
    cert.sigma = s;
    return cert;
  }

  const Interval pi = Interval::pi();
  s.hi = sigma_upper_from_kappa(Interval(cert.kappa.hi));
  s.hi_reason = "kappa_over_2pi";
  if (const auto m = cyclic_order(spec)) {
    const auto t = telescope_sigma_upper(*m);
    if (t.bound.certainly_less(s.hi)) {
      s.hi = t.bound;
      s.hi_reason = "telescope_metric";
    }
  }

  s.lo = pi / Interval(16L);
  s.lo_reason = "universal_pi_16";
  if (const auto order = finite_abelian_order(spec)) {
    const Interval x = Interval(2L) * log3(Interval(*order)) / Interval(constants().c);
    if (Interval(1L).certainly_le(x)) {
      const Interval bound = pow(x, Interval(1L) - phi(x));
      if (s.lo.certainly_less(bound)) {
        s.lo = bound;
        s.lo_reason = "abelian_phi";
      } else {
        cert.notes.push_back("abelian phi bound does not exceed pi/16");
      }
    } else {
      cert.notes.push_back("abelian phi bound needs 2 log3|G| >= C; not reached");
    }
  }
  if (!s.lo.certainly_le(s.hi)) throw std::logic_error("sigma interval is empty");
  cert.sigma = s;
  return cert;
}

Interval phi(const Interval& x) {
  if (!Interval(1L).certainly_le(x)) throw Error(ErrorCode::DomainError, "phi needs x >= 1");
  const Interval& cp = constants().cp;
  return Interval(2L) / (Interval(1L) + sqrt(Interval(1L) + Interval(4L) * log2(x) / (cp * cp)));
}

Interval kappa_upper_from_sigma(const Interval& sigma) {
  if (!Interval(1L).certainly_less(sigma))
    throw Error(ErrorCode::DomainError, "the exponent form needs sigma > 1");
  const auto& k = constants();
  return Interval(k.c) * pow(sigma, Interval(1L) + k.cp / sqrt(log2(sigma)));
}

Interval sigma_upper_from_kappa(const Interval& kappa) {
  return kappa / (Interval(2L) * Interval::pi());
}

StableBounds stable_bounds(const GroupSpec& spec, std::optional<mpz_class> t_lower,
                           std::optional<mpz_class> t_upper) {
  StableBounds b;
  if (is_free(spec)) {
    b.applicable = false;
    b.notes.push_back("stable complexity bounds need a non-free group");
    return b;
  }
  b.upper = kappa_bounds(spec).kappa.hi - 1;
  if (has_z2_free_factor(spec)) {
    b.lower = Interval(2L) * log3(Interval(2L));
    b.lower_reason = "z2_free_factor";
    b.lower_formula = "2 log3 2";
  } else if (t_lower) {
    b.lower = Interval(mpq_class(*t_lower, 3));
    b.lower_reason = "t_lower_over_3";
    b.lower_formula = "T/3 with T >= " + t_lower->get_str();
  } else {
    b.lower_reason = "symbolic";
    b.lower_formula = "T(G)/3";
  }
  if (t_upper)
    b.notes.push_back("presentation gives T(G) <= " + t_upper->get_str() +
                      "; an upper bound on T cannot feed the lower bound");
  return b;
}

Interval sigma_count_coefficient() {
  return Interval::pi() / (Interval(1L) + Interval(2L) * sqrt(Interval(3L)));
}

CountingBounds counting_bounds(std::size_t t, CountSide side) {
  if (t < 2) throw Error(ErrorCode::DomainError, "counting bounds need T >= 2");
  CountingBounds c;
  c.side = side;
  const Interval T(static_cast<long>(t));
  if (side == CountSide::Kappa) {
    const auto cb = count_bounds(t);
    c.log2_lower = cb.log2_lower_abelian;
    c.log2_upper = cb.log2_simplified;
    c.log2_upper_full = cb.log2_full;
    c.lower_count = cb.lower_count;
    return c;
  }
  const auto& k = constants();
  c.log2_lower = sigma_count_coefficient() * T;
  c.log2_upper = Interval(k.b_log2) *
                 pow(T, Interval(1L) + Interval(static_cast<long>(k.bp)) / sqrt(log2(T)));
  return c;
}

LensBounds lens_bounds(std::size_t n, const mpz_class& m) {
  if (n < 1) throw Error(ErrorCode::DomainError, "lens bounds need n >= 1");
  if (m < 2) throw Error(ErrorCode::DomainError, "lens bounds need m >= 2");
  LensBounds b;
  b.n = n;
  b.m = m;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), 2 * n + 2);
  mpz_class mn;
  mpz_pow_ui(mn.get_mpz_t(), m.get_mpz_t(), n);
  const mpz_class np1 = static_cast<unsigned long>(n + 1);
  b.cube_count = (mpz_class(1) << static_cast<mp_bitcnt_t>(n + 1)) * fact * 2 * np1 * mn;
  b.d_n = mpq_class(fact * np1, mpz_class(1) << static_cast<mp_bitcnt_t>(n - 1));
  b.d_n.canonicalize();
  b.sysvol_upper = b.d_n * mn;
  mpq_class check(b.cube_count, mpz_class(1) << static_cast<mp_bitcnt_t>(2 * n + 1));
  check.canonicalize();
  if (check != b.sysvol_upper) throw std::logic_error("lens cube count identity failed");
  b.t1_lower = m;
  b.sysvol_lower = "C_n (ln t1)^(1 - C'_n / sqrt(ln ln t1)), C_n and C'_n unknown positive constants";
  return b;
}

}  // namespace sk
