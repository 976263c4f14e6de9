#ifndef MICA_SCALAR_HPP
#define MICA_SCALAR_HPP

#include <gmpxx.h>

#include <string>

#include "mica/errors.hpp"

namespace mica {

/// Coefficient field descriptor: the rationals (modulus == 0) or a prime
/// field F_p.
struct Field {
  unsigned long modulus = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(unsigned long p);

  bool is_prime_field() const { return modulus != 0; }
  bool operator==(const Field&) const = default;

  std::string str() const;
};

/// Exact field element. Rationals are kept reduced with positive
/// denominator (mpq_class canonical form); prime-field values are integers
/// in [0, p).
class Scalar {
 public:
  Scalar(Field field, mpq_class value);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  static Scalar from_int(Field f, long n) { return Scalar(f, mpq_class(n)); }

  const Field& field() const { return field_; }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const {
    return field_ == o.field_ && value_ == o.value_;
  }

  std::string str() const;

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class value_;
};

}  // namespace mica

#endif
