#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <vector>

namespace paley {

using Integer = mpz_class;
using Rational = mpq_class;

// Point of Z^d. Coordinates are unbounded: the lacunary frequencies grow
// doubly exponentially and leave int64 range after a handful of terms.
using Frequency = std::vector<Integer>;

Frequency make_frequency(std::initializer_list<long> coords);
Frequency negate(const Frequency& n);
Frequency add(const Frequency& a, const Frequency& b);
Frequency sub(const Frequency& a, const Frequency& b);
Integer l1_norm(const Frequency& n);
Integer l1_distance(const Frequency& a, const Frequency& b);
Integer max_abs(const Frequency& n);
std::string to_string(const Frequency& n);

// Round-to-nearest conversion (mpz_get_d truncates).
double to_double(const Integer& v);
double to_double(const Rational& v);

bool fits_int64(const Integer& v);

// Minimal RAII wrapper around an MPFR value. Precision is fixed per
// instance; all arithmetic rounds to nearest.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 256;

  explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision);
  explicit BigFloat(double v, mpfr_prec_t prec = kDefaultPrecision);
  explicit BigFloat(const Integer& v, mpfr_prec_t prec = kDefaultPrecision);
  explicit BigFloat(const Rational& v, mpfr_prec_t prec = kDefaultPrecision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  double to_double() const;
  Integer round_to_integer() const;
  std::string to_string(int digits = 30) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend bool operator<(const BigFloat& a, const BigFloat& b);

  BigFloat sqrt() const;
  BigFloat abs() const;
  // this^e for a rational exponent; requires this > 0.
  BigFloat pow(const Rational& e) const;
  bool is_zero() const;

 private:
  mpfr_t value_;
};

}  // namespace paley
