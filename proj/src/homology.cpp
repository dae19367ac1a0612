#include "sk/homology.hpp"

#include "sk/error.hpp"

namespace sk {

IntMatrix boundary_matrix(const Simplex2Complex& x, int k) {
  const auto edges = x.edges();
  if (k == 1) {
    IntMatrix d(x.vertex_count(), edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j) {
      d(edges[j][0], j) = -1;
      d(edges[j][1], j) = 1;
    }
    return d;
  }
  if (k == 2) {
    IntMatrix d(edges.size(), x.triangles().size());
    for (std::size_t j = 0; j < x.triangles().size(); ++j) {
      const auto& t = x.triangles()[j];
      d(edge_index(edges, {t[1], t[2]}), j) = 1;
      d(edge_index(edges, {t[0], t[2]}), j) = -1;
      d(edge_index(edges, {t[0], t[1]}), j) = 1;
    }
    return d;
  }
  throw Error(ErrorCode::DomainError, "boundary_matrix: k must be 1 or 2");
}

HomologySummary homology_summary(const Simplex2Complex& x) {
  const auto st = stats(x);
  const auto snf = smith_normal_form(boundary_matrix(x, 2));
  const std::size_t b0 = component_count(x);
  const std::size_t r1 = st.s0 - b0;  // rank of d1 on a graph
  const std::size_t r2 = snf.rank;
  HomologySummary h;
  h.betti = {b0, st.s1 - r1 - r2, st.s2 - r2};
  for (const auto& f : snf.invariant_factors) {
    if (f > 1) {
      h.h1_torsion_factors.push_back(f);
      h.torsion_order *= f;
    }
  }
  return h;
}

unsigned kappa_lower_torsion(const mpz_class& t) {
  if (t < 1) throw Error(ErrorCode::DomainError, "torsion order must be positive");
  const mpz_class target = t * t;
  mpz_class p = 1;
  unsigned k = 0;
  while (p < target) {
    p *= 3;
    ++k;
  }
  return k;
}

std::vector<mpz_class> loop_chain(const Simplex2Complex& x, const std::vector<Vertex>& loop) {
  const auto edges = x.edges();
  std::vector<mpz_class> c(edges.size());
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Vertex a = loop[i], b = loop[(i + 1) % loop.size()];
    const auto idx = edge_index(edges, make_edge(a, b));
    if (idx == static_cast<std::size_t>(-1))
      throw Error(ErrorCode::InvalidMark, "loop_chain: consecutive vertices are not an edge");
    c[idx] += a < b ? 1 : -1;
  }
  return c;
}

BoundaryTest::BoundaryTest(const Simplex2Complex& x, unsigned p) : p_(p) {
  const auto d2 = boundary_matrix(x, 2);
  n_ = d2.rows;
  if (p == 0) {
    diag_ = diagonalize_with_left(d2);
    return;
  }
  if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0)
    throw Error(ErrorCode::DomainError, "coefficient modulus must be prime");
  for (std::size_t j = 0; j < d2.cols; ++j) {
    std::vector<std::uint32_t> v(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), d2(i, j).get_mpz_t(), p);
      v[i] = static_cast<std::uint32_t>(r.get_ui());
    }
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const std::uint64_t f = v[pivots_[b]];
      if (f == 0) continue;
      for (std::size_t i = 0; i < n_; ++i)
        v[i] = static_cast<std::uint32_t>((v[i] + (p - f) * basis_[b][i]) % p);
    }
    std::size_t piv = 0;
    while (piv < n_ && v[piv] == 0) ++piv;
    if (piv == n_) continue;
    mpz_class inv;
    mpz_class vp = v[piv];
    mpz_invert(inv.get_mpz_t(), vp.get_mpz_t(), mpz_class(p).get_mpz_t());
    const std::uint64_t s = inv.get_ui();
    for (auto& e : v) e = static_cast<std::uint32_t>(e * s % p);
    basis_.push_back(std::move(v));
    pivots_.push_back(piv);
  }
}

bool BoundaryTest::is_boundary(const std::vector<mpz_class>& chain) const {
  if (chain.size() != n_) throw Error(ErrorCode::DomainError, "chain length mismatch");
  if (p_ == 0) {
    const auto& u = diag_.left;
    const std::size_t r = diag_.diagonal.size();
    for (std::size_t i = 0; i < n_; ++i) {
      mpz_class y = 0;
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(chain[j]) != 0 && sgn(u(i, j)) != 0) y += u(i, j) * chain[j];
      if (i < r) {
        if (!mpz_divisible_p(y.get_mpz_t(), diag_.diagonal[i].get_mpz_t())) return false;
      } else if (sgn(y) != 0) {
        return false;
      }
    }
    return true;
  }
  std::vector<std::uint64_t> v(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), chain[i].get_mpz_t(), p_);
    v[i] = r.get_ui();
  }
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::uint64_t f = v[pivots_[b]];
    if (f == 0) continue;
    for (std::size_t i = 0; i < n_; ++i) v[i] = (v[i] + (p_ - f) * basis_[b][i]) % p_;
  }
  for (auto e : v)
    if (e != 0) return false;
  return true;
}

}  // namespace sk
