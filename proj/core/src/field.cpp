#include "seqcm/field.hpp"

namespace seqcm {

FieldSpec FieldSpec::prime_field(uint32_t p) {
  if (p < 2 || p >= (1u << 31))
    throw std::invalid_argument("field characteristic must be a prime below 2^31");
  mpz_class z(p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec{p};
}

namespace field {

mpq_class normalize(const FieldSpec& k, const mpq_class& a) {
  if (k.characteristic == 0) {
    mpq_class r = a;
    r.canonicalize();
    return r;
  }
  mpz_class p(k.characteristic);
  mpz_class den = a.get_den();
  mpz_class num = a.get_num();
  mpz_class deninv;
  if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible modulo " + p.get_str());
  mpz_class r = (num % p) * deninv % p;
  if (r < 0) r += p;
  return mpq_class(r);
}

mpq_class add(const FieldSpec& k, const mpq_class& a, const mpq_class& b) {
  return normalize(k, mpq_class(a + b));
}

mpq_class sub(const FieldSpec& k, const mpq_class& a, const mpq_class& b) {
  return normalize(k, mpq_class(a - b));
}

mpq_class mul(const FieldSpec& k, const mpq_class& a, const mpq_class& b) {
  return normalize(k, mpq_class(a * b));
}

mpq_class neg(const FieldSpec& k, const mpq_class& a) {
  return normalize(k, mpq_class(-a));
}

mpq_class inv(const FieldSpec& k, const mpq_class& a) {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (k.characteristic == 0) return mpq_class(1 / a);
  mpz_class p(k.characteristic);
  mpz_class v = normalize(k, a).get_num();
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("element not invertible modulo " + p.get_str());
  return mpq_class(r);
}

mpq_class div(const FieldSpec& k, const mpq_class& a, const mpq_class& b) {
  return mul(k, a, inv(k, b));
}

mpq_class from_int(const FieldSpec& k, long v) {
  return normalize(k, mpq_class(v));
}

std::string to_string(const mpq_class& a) {
  return a.get_str();
}

}  // namespace field
}  // namespace seqcm
