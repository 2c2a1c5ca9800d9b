#pragma once

// Sums of Vandermonde products over subsets of U(m, n) = {1, ..., m+n} with a
// fixed element sum, and the closed form they are compared against.

#include "dinfty/exact.hpp"

#include <functional>
#include <span>
#include <vector>

namespace dinfty {

/// An m-element subset of {1, ..., m+n}, stored strictly increasing.
class SubsetX {
 public:
  /// Throws std::invalid_argument unless elements is strictly increasing,
  /// has m entries, and lies inside {1, ..., m+n}.
  SubsetX(std::vector<long> elements, long m, long n);

  const std::vector<long>& elements() const { return elements_; }
  long m() const { return m_; }
  long n() const { return n_; }
  long sum() const;

  /// Y = U - X, increasing.
  std::vector<long> complement() const;

  friend bool operator==(const SubsetX&, const SubsetX&) = default;

 private:
  std::vector<long> elements_;
  long m_;
  long n_;
};

/// prod_{i<j} (x_j - x_i). Empty and singleton input give 1.
/// Throws std::invalid_argument when the input is not strictly increasing.
BigInt vandermonde(std::span<const long> xs);
BigInt vandermonde(const SubsetX& x);

/// Smallest and largest possible element sum of an m-subset of U(m, n).
long min_subset_sum(long m);
long max_subset_sum(long m, long n);

/// Visits the m-subsets of U(m, n) with element sum t in lexicographic order.
void for_each_subset_with_sum(long m, long n, long t, const std::function<void(const SubsetX&)>& visit);
std::vector<SubsetX> subsets_with_sum(long m, long n, long t);

/// Sum of V_X * V_Y over subsets with sum t. Zero outside the valid range.
BigInt theorem1_lhs(long m, long n, long t);

/// G(m+1) G(n+1) C(mn, t - m(m+1)/2).
BigInt theorem1_rhs(long m, long n, long t);

/// Sum of V_X^2 over subsets with sum t.
BigInt discrete_gamma_sq(long m, long n, long t);

/// Lattice approximation of the normalized integral
///   1/(m! G(m+1)^2) * int_{[0,1]^m} delta(s_1+...+s_m - c) prod_{i<j}(s_i-s_j)^2 ds
/// using s_i in {1/N, ..., N/N} and the constraint sum s_i = round(cN)/N.
/// Demo output only; there is no closed form it is pinned to.
BigRat riemann_gamma_demo(long m, const BigRat& c, long big_n);

struct Lemma21Result {
  BigRat lhs;
  BigRat rhs;
  bool equal;
};

/// Brute-force sum of V_B over a_1 < b_1 <= a_2 < ... < b_{k-1} <= a_k,
/// against V_A / (k-1)!.
Lemma21Result lemma21_check(std::span<const long> a);

}  // namespace dinfty
