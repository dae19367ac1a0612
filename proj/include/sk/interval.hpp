#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace sk {

// Closed real interval with MPFR endpoints rounded outward. Precision is
// fixed at 256 bits, enough for 70 decimal digits.
class Interval {
 public:
  static constexpr mpfr_prec_t kPrecision = 256;

  Interval();
  Interval(long v);  // NOLINT(google-explicit-constructor)
  explicit Interval(const mpz_class& v);
  explicit Interval(const mpq_class& v);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o) noexcept;
  ~Interval();

  static Interval pi();
  static Interval hull(const Interval& a, const Interval& b);

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

  friend Interval sqrt(const Interval& a);
  friend Interval log(const Interval& a);   // natural logarithm
  friend Interval log2(const Interval& a);
  friend Interval exp(const Interval& a);
  friend Interval exp2(const Interval& a);
  // a^b for a > 0.
  friend Interval pow(const Interval& a, const Interval& b);
  friend Interval min(const Interval& a, const Interval& b);
  friend Interval max(const Interval& a, const Interval& b);

  // Certain comparisons: true only if every point of a relates to every
  // point of b.
  bool certainly_less(const Interval& o) const;
  bool certainly_le(const Interval& o) const;
  bool contains(const mpq_class& q) const;
  bool contains_zero() const;
  bool positive() const;

  double lo_double() const;
  double hi_double() const;
  double mid_double() const;
  // Upper bound on hi - lo.
  double width() const;

  // Decimal rendering of the endpoints, `digits` significant digits,
  // rounded outward.
  std::string lo_string(int digits = 50) const;
  std::string hi_string(int digits = 50) const;

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval log3(const Interval& a);

}  // namespace sk
