#include "dinfty/vandermonde.hpp"

#include <numeric>
#include <stdexcept>

namespace dinfty {

SubsetX::SubsetX(std::vector<long> elements, long m, long n) : elements_(std::move(elements)), m_(m), n_(n) {
  if (m < 1 || n < 0) throw std::invalid_argument("SubsetX: need m >= 1 and n >= 0");
  if (static_cast<long>(elements_.size()) != m) throw std::invalid_argument("SubsetX: expected exactly m elements");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > m + n) throw std::invalid_argument("SubsetX: element outside {1..m+n}");
    if (i > 0 && elements_[i] <= elements_[i - 1]) throw std::invalid_argument("SubsetX: elements not strictly increasing");
  }
}

long SubsetX::sum() const { return std::accumulate(elements_.begin(), elements_.end(), 0L); }

std::vector<long> SubsetX::complement() const {
  std::vector<long> y;
  y.reserve(static_cast<std::size_t>(n_));
  std::size_t k = 0;
  for (long v = 1; v <= m_ + n_; ++v) {
    if (k < elements_.size() && elements_[k] == v)
      ++k;
    else
      y.push_back(v);
  }
  return y;
}

BigInt vandermonde(std::span<const long> xs) {
  BigInt prod = 1;
  for (std::size_t j = 1; j < xs.size(); ++j) {
    if (xs[j] <= xs[j - 1]) throw std::invalid_argument("vandermonde: input must be strictly increasing");
    for (std::size_t i = 0; i < j; ++i) prod *= xs[j] - xs[i];
  }
  return prod;
}

BigInt vandermonde(const SubsetX& x) { return vandermonde(std::span<const long>(x.elements())); }

long min_subset_sum(long m) { return m * (m + 1) / 2; }
long max_subset_sum(long m, long n) { return min_subset_sum(m) + m * n; }

namespace {

// Sum of the r consecutive integers starting at first.
long run_sum(long first, long r) { return r * (2 * first + r - 1) / 2; }

void enumerate(long m, long n, long remaining_sum, std::vector<long>& prefix,
               const std::function<void(const SubsetX&)>& visit) {
  const long size = m + n;
  const long placed = static_cast<long>(prefix.size());
  if (placed == m) {
    if (remaining_sum == 0) visit(SubsetX(prefix, m, n));
    return;
  }
  const long after = m - placed - 1;  // elements still to place after this one
  const long lo = prefix.empty() ? 1 : prefix.back() + 1;
  for (long v = lo; v <= size - after; ++v) {
    const long rest = remaining_sum - v;
    if (rest < run_sum(v + 1, after)) break;  // minimal completion only grows with v
    if (rest > run_sum(size - after + 1, after)) continue;
    prefix.push_back(v);
    enumerate(m, n, rest, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_subset_with_sum(long m, long n, long t, const std::function<void(const SubsetX&)>& visit) {
  if (m < 1 || n < 1) throw std::invalid_argument("subsets_with_sum: need m, n >= 1");
  if (t < min_subset_sum(m) || t > max_subset_sum(m, n)) return;
  std::vector<long> prefix;
  prefix.reserve(static_cast<std::size_t>(m));
  enumerate(m, n, t, prefix, visit);
}

std::vector<SubsetX> subsets_with_sum(long m, long n, long t) {
  std::vector<SubsetX> out;
  for_each_subset_with_sum(m, n, t, [&](const SubsetX& x) { out.push_back(x); });
  return out;
}

BigInt theorem1_lhs(long m, long n, long t) {
  BigInt total = 0;
  for_each_subset_with_sum(m, n, t, [&](const SubsetX& x) {
    const auto y = x.complement();
    total += vandermonde(x) * vandermonde(std::span<const long>(y));
  });
  return total;
}

BigInt theorem1_rhs(long m, long n, long t) {
  if (m < 1 || n < 1) throw std::invalid_argument("theorem1_rhs: need m, n >= 1");
  const long t_star = t - min_subset_sum(m);
  return barnes_g(static_cast<unsigned>(m + 1)) * barnes_g(static_cast<unsigned>(n + 1)) * binomial(m * n, t_star);
}

BigInt discrete_gamma_sq(long m, long n, long t) {
  BigInt total = 0;
  for_each_subset_with_sum(m, n, t, [&](const SubsetX& x) {
    const BigInt v = vandermonde(x);
    total += v * v;
  });
  return total;
}

BigRat riemann_gamma_demo(long m, const BigRat& c, long big_n) {
  if (m < 1 || big_n < m) throw std::invalid_argument("riemann_gamma_demo: need m >= 1 and N >= m");
  if (c <= 0 || c >= m) throw std::invalid_argument("riemann_gamma_demo: need 0 < c < m");
  // round(cN), halves rounded up
  const BigRat scaled = c * big_n + BigRat(1, 2);
  BigInt target;
  mpz_fdiv_q(target.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());

  // Increasing tuples in {1..N} with the target sum are exactly the subsets
  // of U(m, N - m) with that sum. Each unordered tuple stands for m! ordered
  // ones, which cancels the m! of the normalization.
  BigInt lattice_sum = 0;
  const long t = target.get_si();
  if (t >= min_subset_sum(m) && t <= max_subset_sum(m, big_n - m)) {
    std::vector<long> prefix;
    enumerate(m, big_n - m, t, prefix, [&](const SubsetX& x) {
      const BigInt v = vandermonde(x);
      lattice_sum += v * v;
    });
  }
  const BigInt g = barnes_g(static_cast<unsigned>(m + 1));
  const BigInt scale = int_pow(big_n, static_cast<unsigned>(m * m - 1));
  return make_rat(lattice_sum, g * g * scale);
}

Lemma21Result lemma21_check(std::span<const long> a) {
  const std::size_t k = a.size();
  if (k == 0) throw std::invalid_argument("lemma21_check: A must be nonempty");
  const BigInt va = vandermonde(a);  // also validates ordering

  BigInt lhs = 0;
  std::vector<long> b(k - 1);
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i + 1 == k) {
      lhs += vandermonde(std::span<const long>(b));
      return;
    }
    for (long v = a[i] + 1; v <= a[i + 1]; ++v) {
      b[i] = v;
      fill(i + 1);
    }
  };
  fill(0);

  Lemma21Result r{make_rat(lhs), make_rat(va, factorial(static_cast<unsigned>(k - 1))), false};
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace dinfty
