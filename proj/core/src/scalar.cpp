#include "mica/scalar.hpp"

namespace mica {

Field Field::prime(unsigned long p) {
  mpz_class m(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(m.get_mpz_t(), 30) == 0) {
    throw InputError("field modulus " + std::to_string(p) + " is not prime");
  }
  return Field{p};
}

std::string Field::str() const {
  return is_prime_field() ? "Fp:" + std::to_string(modulus) : "Q";
}

namespace {

// a/b reduced mod p; b must be a unit mod p.
mpq_class reduce_mod(const mpq_class& v, unsigned long p) {
  mpz_class mod(p);
  mpz_class num = v.get_num() % mod;
  if (num < 0) num += mod;
  if (v.get_den() != 1) {
    mpz_class den = v.get_den() % mod;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0) {
      throw InputError("denominator not invertible modulo " +
                       std::to_string(p));
    }
    num = (num * inv) % mod;
  }
  return mpq_class(num);
}

}  // namespace

Scalar::Scalar(Field field, mpq_class value)
    : field_(field), value_(std::move(value)) {
  value_.canonicalize();
  if (field_.is_prime_field()) value_ = reduce_mod(value_, field_.modulus);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw InputError("scalar field mismatch: " + field_.str() + " vs " +
                     o.field_.str());
  }
}

Scalar Scalar::operator-() const { return Scalar(field_, -value_); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  return Scalar(field_, value_ + o.value_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  return Scalar(field_, value_ - o.value_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  return Scalar(field_, value_ * o.value_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero scalar");
  if (!field_.is_prime_field()) return Scalar(field_, 1 / value_);
  mpz_class mod(field_.modulus), inv;
  mpz_invert(inv.get_mpz_t(), value_.get_num().get_mpz_t(), mod.get_mpz_t());
  return Scalar(field_, mpq_class(inv));
}

std::string Scalar::str() const { return value_.get_str(); }

}  // namespace mica
