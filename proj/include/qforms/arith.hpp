#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qforms/arith_seq.hpp"
#include "qforms/rational.hpp"

namespace qforms {

using Factorization = std::vector<std::pair<int64_t, int>>;

bool is_prime(int64_t n);
Factorization factor(int64_t n);
int64_t from_factorization(const Factorization& f);
std::vector<int64_t> divisors(int64_t n);

int moebius(int64_t n);
int64_t totient(int64_t n);
int64_t radical(int64_t n);
Rational sigma_nu(int64_t n, int64_t nu);
int liouville(int64_t n);

/// Classical Jacobi symbol (n|k); k must be odd and positive.
int jacobi_symbol(int64_t n, int64_t k);
/// (r|k) for rational r: 0 when r is not an integer.
int jacobi_symbol(const Rational& r, int64_t k);
/// Kronecker extension of the Jacobi symbol to any modulus.
int kronecker_symbol(int64_t a, int64_t n);

int64_t isqrt(int64_t n);
BigInt isqrt(const BigInt& n);
/// Exact k-th root of n if it exists.
std::optional<int64_t> exact_root(int64_t n, int k);
std::optional<BigInt> exact_sqrt(const BigInt& n);
bool is_square(int64_t n);
/// Floor of the k-th root of n >= 0.
int64_t iroot(int64_t n, int k);
/// b^e as a saturating 128-bit integer.
__int128 ipow_sat(int64_t b, int e);

struct NuSplit {
  int64_t nu_part = 1;
  bool nu_part_is_trivial = true;
  int64_t star_part = 1;
  int64_t n1 = 1;
  int64_t n2 = 1;
};

NuSplit nu_split(int64_t n, int nu);

int lambda_nu(int64_t n, int nu);
int X_nu(int64_t n, int nu);
int mu_nu(int64_t n, int nu);
int mu_star_nu(int64_t n, int nu);
Rational c_nu(int64_t n, int nu);

Rational Y_nu(int64_t n, int nu, const ArithSeq& chi);
Rational A_nu(int64_t n, int nu, const ArithSeq& chi);
Rational Y_nu_closed(int64_t n, int nu, const ArithSeq& chi);
Rational A_nu_closed(int64_t n, int nu, const ArithSeq& chi);
/// sum_{d|t} chi(n1(d)) mu(n2(d)), zero at t = 0.
Rational A_star_nu(int64_t t, int nu, const ArithSeq& chi);

Rational h_a(int64_t n, int64_t a);
int mu_k(int64_t n, int k);
Rational mu_kv(int64_t n, int k, int64_t v);

ArithSeq moebius_invert(const ArithSeq& f);
/// Dirichlet divisor sum n -> sum_{d|n} f(d).
ArithSeq divisor_sum(const ArithSeq& f);

}  // namespace qforms
