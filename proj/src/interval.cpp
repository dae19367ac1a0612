#include "sk/interval.hpp"

#include <algorithm>
#include <stdexcept>

#include "sk/error.hpp"

namespace sk {

namespace {

std::string render(mpfr_srcptr x, int digits, bool up) {
  char* s = nullptr;
  if (up)
    mpfr_asprintf(&s, "%.*RUe", digits - 1, x);
  else
    mpfr_asprintf(&s, "%.*RDe", digits - 1, x);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace

Interval::Interval() : Interval(0L) {}

Interval::Interval(long v) {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const mpz_class& v) {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  mpfr_set_z(lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, v.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const mpq_class& v) {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o) {}

Interval& Interval::operator=(Interval o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::pi() {
  Interval r;
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r;
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  mpfr_t t;
  mpfr_init2(t, Interval::kPrecision);
  Interval r;
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Error(ErrorCode::DomainError, "interval division by zero");
  Interval inv;
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo_) < 0) throw Error(ErrorCode::DomainError, "sqrt of a negative interval");
  Interval r;
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw Error(ErrorCode::DomainError, "log of a nonpositive interval");
  Interval r;
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval log2(const Interval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw Error(ErrorCode::DomainError, "log2 of a nonpositive interval");
  Interval r;
  mpfr_log2(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log2(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval log3(const Interval& a) { return log(a) / log(Interval(3)); }

Interval exp(const Interval& a) {
  Interval r;
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval exp2(const Interval& a) {
  Interval r;
  mpfr_exp2(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp2(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval pow(const Interval& a, const Interval& b) { return exp(b * log(a)); }

Interval min(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

bool Interval::certainly_less(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }
bool Interval::certainly_le(const Interval& o) const { return mpfr_lessequal_p(hi_, o.lo_); }

bool Interval::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::positive() const { return mpfr_sgn(lo_) > 0; }

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
  mpfr_t t;
  mpfr_init2(t, kPrecision);
  mpfr_add(t, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(t, t, 1, MPFR_RNDN);
  const double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

double Interval::width() const {
  mpfr_t t;
  mpfr_init2(t, kPrecision);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  const double d = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return d;
}

std::string Interval::lo_string(int digits) const { return render(lo_, digits, false); }
std::string Interval::hi_string(int digits) const { return render(hi_, digits, true); }

}  // namespace sk
