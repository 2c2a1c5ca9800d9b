#include "dinfty/vandermonde.hpp"

#include <doctest.h>

#include <bit>
#include <map>

using namespace dinfty;

namespace {

BigInt brute_vandermonde(const std::vector<long>& xs) {
  BigInt v = 1;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b) v *= xs[b] - xs[a];
  return v;
}

}  // namespace

TEST_CASE("SubsetX validation and complement") {
  const SubsetX x({1, 3, 4}, 3, 2);
  CHECK(x.sum() == 8);
  CHECK(x.complement() == std::vector<long>{2, 5});
  CHECK_THROWS(SubsetX({1, 1, 2}, 3, 2));
  CHECK_THROWS(SubsetX({3, 2}, 2, 2));
  CHECK_THROWS(SubsetX({1, 6}, 2, 3));
  CHECK_THROWS(SubsetX({1, 2}, 3, 2));
  CHECK_THROWS(SubsetX({0, 2}, 2, 2));
}

TEST_CASE("Vandermonde") {
  const std::vector<long> xs{1, 3, 4, 7};
  CHECK(vandermonde(xs) == brute_vandermonde(xs));
  CHECK(vandermonde(std::vector<long>{}) == 1);
  CHECK(vandermonde(std::vector<long>{5}) == 1);
  CHECK_THROWS(vandermonde(std::vector<long>{2, 2}));
}

TEST_CASE("subset enumeration matches bitmask enumeration") {
  for (long m = 1; m <= 5; ++m)
    for (long n = 1; n <= 5; ++n) {
      std::map<long, std::vector<std::vector<long>>> by_sum;
      for (unsigned mask = 0; mask < (1u << (m + n)); ++mask) {
        if (std::popcount(mask) != m) continue;
        std::vector<long> x;
        long s = 0;
        for (long e = 1; e <= m + n; ++e)
          if (mask & (1u << (e - 1))) {
            x.push_back(e);
            s += e;
          }
        by_sum[s].push_back(x);
      }
      for (long t = min_subset_sum(m) - 1; t <= max_subset_sum(m, n) + 1; ++t) {
        std::vector<std::vector<long>> got;
        for (const auto& x : subsets_with_sum(m, n, t)) got.push_back(x.elements());
        auto want = by_sum[t];
        std::sort(want.begin(), want.end());
        CHECK(got == want);  // lexicographic order
      }
    }
  CHECK_THROWS(subsets_with_sum(0, 3, 0));
}

TEST_CASE("theorem1 small cases") {
  // m = n = 1: X = {1} or {2}; both products are 1.
  CHECK(theorem1_lhs(1, 1, 1) == 1);
  CHECK(theorem1_lhs(1, 1, 2) == 1);
  // Outside the range both sides vanish.
  CHECK(theorem1_lhs(2, 2, 2) == 0);
  CHECK(theorem1_rhs(2, 2, 2) == 0);
  for (long t = 3; t <= 7; ++t) CHECK(theorem1_lhs(2, 2, t) == theorem1_rhs(2, 2, t));
  // Symmetric in t* -> mn - t*.
  for (long t = 6; t <= 18; ++t) CHECK(theorem1_lhs(3, 4, t) == theorem1_lhs(3, 4, 6 + 18 - t));
}

TEST_CASE("squared Vandermonde sums are reflection-symmetric") {
  for (long m = 1; m <= 4; ++m)
    for (long n = 1; n <= 4; ++n)
      for (long t = min_subset_sum(m); t <= max_subset_sum(m, n); ++t)
        CHECK(discrete_gamma_sq(m, n, t) == discrete_gamma_sq(m, n, m * (m + n + 1) - t));
  CHECK(discrete_gamma_sq(2, 2, 5) == 1 + 9);  // {1,4}, {2,3}
}

TEST_CASE("lattice gamma demo") {
  CHECK(riemann_gamma_demo(1, make_rat(1, 2), 10) == 1);
  CHECK_THROWS(riemann_gamma_demo(2, 2, 10));
  // m = 2: pairs a < b in {1..N} with a + b = round(cN), (b - a)^2 / (G(3)^2 N^3).
  for (long big_n : {4L, 9L, 20L}) {
    const BigRat c = make_rat(3, 4);
    const BigRat cn = c * big_n + make_rat(1, 2);
    const long target = mpz_class(cn.get_num() / cn.get_den()).get_si();
    BigInt s = 0;
    for (long a = 1; a <= big_n; ++a)
      for (long b = a + 1; b <= big_n; ++b)
        if (a + b == target) s += (b - a) * (b - a);
    CHECK(riemann_gamma_demo(2, c, big_n) == make_rat(s, BigInt(big_n) * big_n * big_n));
  }
  CHECK(riemann_gamma_demo(2, 1, 4) == make_rat(1, 16));
}

TEST_CASE("interleaved Vandermonde sums") {
  const std::vector<long> a{1, 3, 5};
  const auto r = lemma21_check(a);
  // b1 in {2,3}, b2 in {4,5}: sum of (b2 - b1) = 2+3+1+2 = 8 = V_A / 2!
  CHECK(r.lhs == 8);
  CHECK(r.rhs == 8);
  CHECK(r.equal);
  CHECK_THROWS(lemma21_check(std::vector<long>{}));
  CHECK_THROWS(lemma21_check(std::vector<long>{3, 1}));
}
