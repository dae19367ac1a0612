#include "sk/smith.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>

#include "sk/error.hpp"

namespace sk {

namespace {

struct Overflow {};

// Scalar hooks: int64 arithmetic is checked and bails out to mpz on overflow.
inline bool is_zero(std::int64_t x) { return x == 0; }
inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }

inline std::uint64_t mag(std::int64_t x) {
  return x < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}
inline bool smaller(std::int64_t a, std::int64_t b) { return mag(a) < mag(b); }
inline bool smaller(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
inline bool is_unit(std::int64_t a) { return a == 1 || a == -1; }
inline bool is_unit(const mpz_class& a) { return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0; }

inline std::int64_t quotient(std::int64_t a, std::int64_t p) {
  if (a == std::numeric_limits<std::int64_t>::min() && p == -1) throw Overflow{};
  return a / p;
}
inline mpz_class quotient(const mpz_class& a, const mpz_class& p) {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return q;
}

inline void submul(std::int64_t& a, std::int64_t q, std::int64_t b) {
  std::int64_t prod;
  if (__builtin_mul_overflow(q, b, &prod)) throw Overflow{};
  if (__builtin_sub_overflow(a, prod, &a)) throw Overflow{};
}
inline void submul(mpz_class& a, const mpz_class& q, const mpz_class& b) {
  mpz_submul(a.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
}

inline mpz_class to_mpz(std::int64_t x) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(x));
  return z;
}
inline mpz_class to_mpz(const mpz_class& x) { return x; }

template <class T>
struct Work {
  std::size_t rows, cols;
  std::vector<T> a;
  bool track;
  std::vector<T> u;  // rows x rows

  T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  T& uat(std::size_t i, std::size_t j) { return u[i * rows + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
    if (track)
      for (std::size_t j = 0; j < rows; ++j) std::swap(uat(i, j), uat(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, j), at(i, k));
  }
};

template <class T>
std::vector<T> eliminate(Work<T>& w) {
  std::vector<T> diag;
  const std::size_t lim = std::min(w.rows, w.cols);
  std::vector<std::size_t> nz;
  for (std::size_t t = 0; t < lim; ++t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < w.rows && !(best && is_unit(w.at(best->first, best->second))); ++i) {
      for (std::size_t j = t; j < w.cols; ++j) {
        const T& x = w.at(i, j);
        if (is_zero(x)) continue;
        if (!best || smaller(x, w.at(best->first, best->second))) {
          best = {i, j};
          if (is_unit(x)) break;
        }
      }
    }
    if (!best) break;
    w.swap_rows(t, best->first);
    w.swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      const T pivot = w.at(t, t);
      nz.clear();
      for (std::size_t j = t; j < w.cols; ++j)
        if (!is_zero(w.at(t, j))) nz.push_back(j);
      for (std::size_t i = t + 1; i < w.rows; ++i) {
        if (is_zero(w.at(i, t))) continue;
        const T q = quotient(w.at(i, t), pivot);
        if (!is_zero(q)) {
          for (std::size_t j : nz) submul(w.at(i, j), q, w.at(t, j));
          if (w.track)
            for (std::size_t j = 0; j < w.rows; ++j)
              if (!is_zero(w.uat(t, j))) submul(w.uat(i, j), q, w.uat(t, j));
        }
        if (!is_zero(w.at(i, t))) clean = false;
      }
      nz.clear();
      for (std::size_t i = t; i < w.rows; ++i)
        if (!is_zero(w.at(i, t))) nz.push_back(i);
      for (std::size_t j = t + 1; j < w.cols; ++j) {
        if (is_zero(w.at(t, j))) continue;
        const T q = quotient(w.at(t, j), pivot);
        if (!is_zero(q))
          for (std::size_t i : nz) submul(w.at(i, j), q, w.at(i, t));
        if (!is_zero(w.at(t, j))) clean = false;
      }
      if (clean) break;

      // Remainders are strictly smaller than the pivot; promote the least.
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < w.rows; ++i) {
        const T& x = w.at(i, t);
        if (!is_zero(x) && (bi == t && bj == t ? true : smaller(x, w.at(bi, bj)))) {
          bi = i;
          bj = t;
        }
      }
      for (std::size_t j = t + 1; j < w.cols; ++j) {
        const T& x = w.at(t, j);
        if (!is_zero(x) && (bi == t && bj == t ? true : smaller(x, w.at(bi, bj)))) {
          bi = t;
          bj = j;
        }
      }
      w.swap_rows(t, bi);
      w.swap_cols(t, bj);
    }
    diag.push_back(w.at(t, t));
  }
  return diag;
}

template <class T>
Work<T> load(const IntMatrix& m, bool track);

template <>
Work<mpz_class> load(const IntMatrix& m, bool track) {
  Work<mpz_class> w{m.rows, m.cols, m.entries, track, {}};
  if (track) {
    w.u.assign(m.rows * m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i) w.uat(i, i) = 1;
  }
  return w;
}

template <>
Work<std::int64_t> load(const IntMatrix& m, bool track) {
  Work<std::int64_t> w{m.rows, m.cols, {}, track, {}};
  w.a.reserve(m.entries.size());
  for (const auto& x : m.entries) {
    if (!x.fits_slong_p() || x == std::numeric_limits<long>::min()) throw Overflow{};
    w.a.push_back(x.get_si());
  }
  if (track) {
    w.u.assign(m.rows * m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i) w.uat(i, i) = 1;
  }
  return w;
}

template <class T>
Diagonalization run(const IntMatrix& m, bool track) {
  auto w = load<T>(m, track);
  auto diag = eliminate(w);
  Diagonalization d;
  for (const auto& x : diag) d.diagonal.push_back(to_mpz(x));
  if (track) {
    d.left = IntMatrix(m.rows, m.rows);
    for (std::size_t i = 0; i < w.u.size(); ++i) d.left.entries[i] = to_mpz(w.u[i]);
  }
  return d;
}

Diagonalization diagonalize(const IntMatrix& m, bool track) {
  try {
    return run<std::int64_t>(m, track);
  } catch (const Overflow&) {
    return run<mpz_class>(m, track);
  }
}

}  // namespace

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::DomainError, "matrix shapes do not agree");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<mpz_class> normalize_diagonal(std::vector<mpz_class> d) {
  for (auto& x : d) x = abs(x);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      mpz_class g = gcd(d[i], d[j]);
      mpz_class l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  return d;
}

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  auto d = diagonalize(m, false);
  SmithNormalForm snf;
  snf.rank = d.diagonal.size();
  snf.invariant_factors = normalize_diagonal(std::move(d.diagonal));
  return snf;
}

Diagonalization diagonalize_with_left(const IntMatrix& m) { return diagonalize(m, true); }

mpz_class determinant(IntMatrix m) {
  if (m.rows != m.cols) throw Error(ErrorCode::DomainError, "determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m(r, k)) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

mpz_class gcd_of_minors_oracle(const IntMatrix& m, std::size_t k) {
  if (k > m.rows || k > m.cols) throw Error(ErrorCode::DomainError, "minor order exceeds matrix size");
  if (k == 0) return 1;
  mpz_class count, c2;
  mpz_bin_uiui(count.get_mpz_t(), m.rows, k);
  mpz_bin_uiui(c2.get_mpz_t(), m.cols, k);
  count *= c2;
  if (count > 1000000) throw Error(ErrorCode::TooLarge, "too many minors to enumerate");

  auto first = [&](std::vector<std::size_t>& s) {
    s.resize(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
  };
  auto next = [&](std::vector<std::size_t>& s, std::size_t n) {
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (s[i] < n - k + i) {
        ++s[i];
        for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  mpz_class g = 0;
  std::vector<std::size_t> rs, cs;
  first(rs);
  do {
    first(cs);
    do {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
      g = gcd(g, determinant(std::move(sub)));
    } while (next(cs, m.cols));
  } while (next(rs, m.rows));
  return g;
}

}  // namespace sk
