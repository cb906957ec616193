#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qforms {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(int64_t num, int64_t den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

bool is_integer(const Rational& r);
bool fits_int64(const BigInt& z);
int64_t to_int64(const BigInt& z);
BigInt int_from(int64_t v);

/// r^e for any integer e (r must be nonzero when e < 0).
Rational rational_pow(const Rational& r, int64_t e);
BigInt big_pow(int64_t base, uint64_t e);

}  // namespace qforms
