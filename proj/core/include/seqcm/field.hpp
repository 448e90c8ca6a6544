#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace seqcm {

// Coefficient field: Q (characteristic 0) or F_p for a prime p < 2^31.
// Values are carried as mpq_class; over F_p they are integers in [0, p).
struct FieldSpec {
  uint32_t characteristic = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime_field(uint32_t p);

  bool operator==(const FieldSpec&) const = default;
};

namespace field {

mpq_class normalize(const FieldSpec& k, const mpq_class& a);
mpq_class add(const FieldSpec& k, const mpq_class& a, const mpq_class& b);
mpq_class sub(const FieldSpec& k, const mpq_class& a, const mpq_class& b);
mpq_class mul(const FieldSpec& k, const mpq_class& a, const mpq_class& b);
mpq_class neg(const FieldSpec& k, const mpq_class& a);
mpq_class inv(const FieldSpec& k, const mpq_class& a);
mpq_class div(const FieldSpec& k, const mpq_class& a, const mpq_class& b);
mpq_class from_int(const FieldSpec& k, long v);

std::string to_string(const mpq_class& a);

}  // namespace field

}  // namespace seqcm
