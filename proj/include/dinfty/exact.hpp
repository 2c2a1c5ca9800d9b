#pragma once

// Exact scalar arithmetic: arbitrary precision integers and rationals, plus
// the handful of integer-valued combinatorial functions used everywhere else.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dinfty {

using BigInt = mpz_class;

// mpq_class keeps itself canonical (lowest terms, positive denominator) as
// long as every value is built through make_rat / parse_rat or arithmetic.
using BigRat = mpq_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

enum class RatOp { Add, Sub, Mul, Div };

BigRat make_rat(const BigInt& num, const BigInt& den = 1);
BigRat make_rat(long num, long den = 1);

/// Applies op exactly. Throws DivisionByZero for a zero divisor.
BigRat rat_arith(const BigRat& a, const BigRat& b, RatOp op);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const BigRat& q);
std::string to_string(const BigInt& z);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed text
/// and DivisionByZero on q = 0.
BigRat parse_rat(std::string_view text);

bool is_integer(const BigRat& q);

BigInt factorial(unsigned k);

/// G(k) = (k-2)! (k-3)! ... 1!, so G(1) = G(2) = 1.
BigInt barnes_g(unsigned k);

/// C(n, k), zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// base^exp with 0^0 = 1.
BigInt int_pow(const BigInt& base, unsigned exp);
BigInt int_pow(long base, unsigned exp);

/// base^exp for any integer exponent; negative powers of zero throw.
BigRat rat_pow(const BigRat& base, long exp);

/// Sum of c^j over a < c <= b, with 0^0 = 1. Throws std::invalid_argument if a > b.
BigInt power_sum(unsigned j, long a, long b);

using RatMatrix = std::vector<std::vector<BigRat>>;

/// Determinant by Gaussian elimination over Q. Throws on a non-square matrix.
BigRat rational_det(const RatMatrix& m);

std::size_t rational_rank(const RatMatrix& m);

}  // namespace dinfty
