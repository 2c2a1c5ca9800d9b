#include "dinfty/exact.hpp"

#include <utility>

namespace dinfty {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

BigRat make_rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

BigRat rat_arith(const BigRat& a, const BigRat& b, RatOp op) {
  switch (op) {
    case RatOp::Add:
      return a + b;
    case RatOp::Sub:
      return a - b;
    case RatOp::Mul:
      return a * b;
    case RatOp::Div:
      if (b == 0) throw DivisionByZero();
      return a / b;
  }
  throw std::logic_error("unknown RatOp");
}

std::string to_string(const BigRat& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigRat parse_rat(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_decimal_integer(num)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return make_rat(parse_int(num));
  const auto den = text.substr(slash + 1);
  if (!is_decimal_integer(den) || den.front() == '-')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  return make_rat(parse_int(num), parse_int(den));
}

bool is_integer(const BigRat& q) { return q.get_den() == 1; }

BigInt factorial(unsigned k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

BigInt barnes_g(unsigned k) {
  if (k < 1) throw std::invalid_argument("barnes_g: k must be >= 1");
  BigInt r = 1;
  BigInt f = 1;
  for (unsigned j = 1; j + 2 <= k; ++j) {
    f *= j;
    r *= f;
  }
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt int_pow(const BigInt& base, unsigned exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt int_pow(long base, unsigned exp) { return int_pow(BigInt(base), exp); }

BigRat rat_pow(const BigRat& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DivisionByZero();
    return rat_pow(BigRat(1) / base, -exp);
  }
  const auto e = static_cast<unsigned>(exp);
  return make_rat(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
}

BigInt power_sum(unsigned j, long a, long b) {
  if (a > b) throw std::invalid_argument("power_sum: requires a <= b");
  BigInt total = 0;
  for (long c = a + 1; c <= b; ++c) total += int_pow(c, j);
  return total;
}

BigRat rational_det(const RatMatrix& input) {
  const std::size_t k = input.size();
  for (const auto& row : input)
    if (row.size() != k) throw std::invalid_argument("rational_det: matrix is not square");
  RatMatrix m = input;
  BigRat det = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < k; ++r) {
      if (m[r][col] == 0) continue;
      const BigRat factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < k; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

std::size_t rational_rank(const RatMatrix& input) {
  RatMatrix m = input;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const BigRat factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace dinfty
