#include "paley/bignum.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>

#include "paley/error.hpp"

namespace paley {

Frequency make_frequency(std::initializer_list<long> coords) {
  Frequency n;
  n.reserve(coords.size());
  for (long c : coords) n.emplace_back(c);
  return n;
}

Frequency negate(const Frequency& n) {
  Frequency out(n.size());
  for (std::size_t j = 0; j < n.size(); ++j) out[j] = -n[j];
  return out;
}

Frequency add(const Frequency& a, const Frequency& b) {
  if (a.size() != b.size())
    throw Error(Errc::dimension_mismatch, "frequency dimensions differ");
  Frequency out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] + b[j];
  return out;
}

Frequency sub(const Frequency& a, const Frequency& b) {
  if (a.size() != b.size())
    throw Error(Errc::dimension_mismatch, "frequency dimensions differ");
  Frequency out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] - b[j];
  return out;
}

Integer l1_norm(const Frequency& n) {
  Integer s = 0;
  for (const auto& c : n) s += abs(c);
  return s;
}

Integer l1_distance(const Frequency& a, const Frequency& b) {
  if (a.size() != b.size())
    throw Error(Errc::dimension_mismatch, "frequency dimensions differ");
  Integer s = 0;
  Integer diff;
  for (std::size_t j = 0; j < a.size(); ++j) {
    diff = a[j] - b[j];
    s += abs(diff);
  }
  return s;
}

Integer max_abs(const Frequency& n) {
  Integer m = 0;
  for (const auto& c : n) {
    Integer a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

std::string to_string(const Frequency& n) {
  std::string s = "(";
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (j) s += ",";
    s += n[j].get_str();
  }
  return s + ")";
}

double to_double(const Integer& v) {
  if (fits_int64(v) && abs(v) < Integer(1) << 53) return static_cast<double>(v.get_si());
  mpfr_t tmp;
  mpfr_init2(tmp, 64);
  mpfr_set_z(tmp, v.get_mpz_t(), MPFR_RNDN);
  double d = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return d;
}

double to_double(const Rational& v) {
  mpfr_t tmp;
  mpfr_init2(tmp, 128);
  mpfr_set_q(tmp, v.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return d;
}

bool fits_int64(const Integer& v) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return v >= lo && v <= hi && mpz_fits_slong_p(v.get_mpz_t());
}

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double v, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& v, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& v, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

Integer BigFloat::round_to_integer() const {
  Integer out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

namespace {
mpfr_prec_t joint_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

bool operator<(const BigFloat& a, const BigFloat& b) {
  return mpfr_less_p(a.get(), b.get()) != 0;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(mpfr_get_prec(value_));
  mpfr_sqrt(r.get(), value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(mpfr_get_prec(value_));
  mpfr_abs(r.get(), value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow(const Rational& e) const {
  if (mpfr_sgn(value_) <= 0)
    throw Error(Errc::invalid_argument, "BigFloat::pow requires a positive base");
  // t^(p/q) = exp((p/q) * log t); computed at the working precision.
  BigFloat lg(mpfr_get_prec(value_));
  mpfr_log(lg.get(), value_, MPFR_RNDN);
  BigFloat ex(e, mpfr_get_prec(value_));
  BigFloat prod = lg * ex;
  BigFloat r(mpfr_get_prec(value_));
  mpfr_exp(r.get(), prod.get(), MPFR_RNDN);
  return r;
}

bool BigFloat::is_zero() const { return mpfr_zero_p(value_) != 0; }

}  // namespace paley
