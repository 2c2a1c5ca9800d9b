#include "dinfty/exact.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace dinfty;

namespace {

// Leibniz expansion over all permutations.
BigRat leibniz_det(const RatMatrix& m) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  BigRat total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    BigRat term = inversions % 2 ? -1 : 1;
    for (std::size_t r = 0; r < m.size(); ++r) term *= m[r][perm[r]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("rational arithmetic and printing") {
  const BigRat a = make_rat(3, 4);
  const BigRat b = make_rat(-5, 6);
  CHECK(rat_arith(a, b, RatOp::Add) == make_rat(-1, 12));
  CHECK(rat_arith(a, b, RatOp::Sub) == make_rat(19, 12));
  CHECK(rat_arith(a, b, RatOp::Mul) == make_rat(-5, 8));
  CHECK(rat_arith(a, b, RatOp::Div) == make_rat(-9, 10));
  CHECK_THROWS_AS(rat_arith(a, 0, RatOp::Div), DivisionByZero);
  CHECK_THROWS_AS(make_rat(1, 0), DivisionByZero);

  CHECK(make_rat(6, -4) == make_rat(-3, 2));
  CHECK(to_string(make_rat(6, -4)) == "-3/2");
  CHECK(to_string(make_rat(8, 4)) == "2");
  CHECK(is_integer(make_rat(8, 4)));
  CHECK_FALSE(is_integer(a));
}

TEST_CASE("parse_rat") {
  CHECK(parse_rat("5/7") == make_rat(5, 7));
  CHECK(parse_rat("-3") == -3);
  CHECK(parse_rat("4/6") == make_rat(2, 3));
  CHECK_THROWS(parse_rat(""));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("abc"));
}

TEST_CASE("factorial, Barnes G and binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  // G(k+1) = G(k) (k-1)!
  CHECK(barnes_g(1) == 1);
  CHECK(barnes_g(2) == 1);
  for (unsigned k = 2; k < 12; ++k) CHECK(barnes_g(k + 1) == barnes_g(k) * factorial(k - 1));
  CHECK(barnes_g(6) == 288);

  // Pascal's rule as the oracle.
  for (long n = 1; n < 20; ++n)
    for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
}

TEST_CASE("powers and power sums") {
  CHECK(int_pow(0, 0) == 1);
  CHECK(int_pow(-2, 5) == -32);
  CHECK(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
  CHECK(rat_pow(0, 0) == 1);
  CHECK_THROWS_AS(rat_pow(0, -1), DivisionByZero);

  for (unsigned j = 0; j < 5; ++j)
    for (long a = -4; a <= 4; ++a)
      for (long b = a; b <= 6; ++b) {
        BigInt brute = 0;
        for (long i = a + 1; i <= b; ++i) brute += int_pow(i, j);  // half-open (a, b]
        CHECK(power_sum(j, a, b) == brute);
      }
  CHECK_THROWS(power_sum(1, 3, 2));
}

TEST_CASE("rational determinant matches Leibniz on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    RatMatrix m(n, std::vector<BigRat>(n));
    for (auto& row : m)
      for (auto& v : row) v = make_rat(num(rng), den(rng));
    CHECK(rational_det(m) == leibniz_det(m));
    CHECK((rational_rank(m) == n) == (leibniz_det(m) != 0));
  }
}

TEST_CASE("rank of singular matrices") {
  const RatMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rational_det(m) == 0);
  CHECK(rational_rank(m) == 2);
  CHECK(rational_rank(RatMatrix{{0, 0}, {0, 0}}) == 0);
  CHECK_THROWS(rational_det(RatMatrix{{1, 2}}));
}
