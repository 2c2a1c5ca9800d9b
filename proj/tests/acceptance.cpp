// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "dinfty/determinant.hpp"
#include "dinfty/hopf.hpp"
#include "dinfty/hopf_checks.hpp"
#include "dinfty/tableaux.hpp"
#include "dinfty/vandermonde.hpp"

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace dinfty;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// --- independent oracles ----------------------------------------------------

BigInt oracle_vandermonde(const std::vector<long>& xs) {
  BigInt v = 1;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b) v *= xs[b] - xs[a];
  return v;
}

BigInt oracle_g(long k) {  // prod_{j=0}^{k-2} j!
  BigInt g = 1, f = 1;
  for (long j = 1; j <= k - 2; ++j) {
    f *= j;
    g *= f;
  }
  return g;
}

BigInt oracle_binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<long> subset_of_mask(unsigned mask, long total) {
  std::vector<long> out;
  for (long e = 1; e <= total; ++e)
    if (mask & (1u << (e - 1))) out.push_back(e);
  return out;
}

// Every X subset of {1..m+n} with |X| = m, for m, n >= 1 and m + n <= max_total
// (or m, n <= max_each when max_total < 0).
void for_each_x(long max_total, long max_each, const std::function<void(const SubsetX&)>& visit) {
  for (long m = 1; m <= (max_total > 0 ? max_total - 1 : max_each); ++m)
    for (long n = 1; max_total > 0 ? m + n <= max_total : n <= max_each; ++n)
      for (unsigned mask = 0; mask < (1u << (m + n)); ++mask)
        if (std::popcount(mask) == m) visit(SubsetX(subset_of_mask(mask, m + n), m, n));
}

// Brute-force count of fillings with weak rows and strict columns.
long oracle_ssyt_count(const std::vector<long>& shape, long max_entry) {
  std::vector<std::vector<long>> t;
  for (long len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
  long count = 0;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == t.size()) {
      ++count;
      return;
    }
    if (c == t[r].size()) {
      fill(r + 1, 0);
      return;
    }
    long lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (long v = lo; v <= max_entry; ++v) {
      t[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return count;
}

// --- criteria ---------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  for (long m = 1; m <= 5; ++m)
    for (long n = 1; n <= 5; ++n) {
      const long lo = m * (m + 1) / 2;
      std::vector<BigInt> brute(static_cast<std::size_t>(m * n + 1), 0);
      if (m + n <= 10) {
        for (unsigned mask = 0; mask < (1u << (m + n)); ++mask) {
          if (std::popcount(mask) != m) continue;
          std::vector<long> x, y;
          long sum = 0;
          for (long e = 1; e <= m + n; ++e) (mask & (1u << (e - 1)) ? (sum += e, x) : y).push_back(e);
          brute[static_cast<std::size_t>(sum - lo)] += oracle_vandermonde(x) * oracle_vandermonde(y);
        }
      }
      for (long t = lo; t <= lo + m * n; ++t) {
        const BigInt lhs = theorem1_lhs(m, n, t);
        const BigInt rhs = theorem1_rhs(m, n, t);
        const BigInt closed = oracle_g(m + 1) * oracle_g(n + 1) * oracle_binomial(m * n, t - lo);
        const std::string at = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " t=" + std::to_string(t);
        o.require(lhs == rhs, "lhs != rhs at " + at);
        o.require(rhs == closed, "rhs != oracle closed form at " + at);
        if (m + n <= 10) o.require(lhs == brute[static_cast<std::size_t>(t - lo)], "lhs != brute force at " + at);
      }
    }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (unsigned mask = 1; mask < (1u << 9); ++mask) {
    if (std::popcount(mask) > 4) continue;
    const auto a = subset_of_mask(mask, 9);
    const auto r = lemma21_check(a);
    // Oracle: nested loops over b_i in (a_i, a_{i+1}].
    BigInt brute = 0;
    std::vector<long> b(a.size() - 1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i + 1 >= a.size()) {
        brute += oracle_vandermonde(b);
        return;
      }
      for (long v = a[i] + 1; v <= a[i + 1]; ++v) {
        b[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    BigInt fact = 1;
    for (std::size_t k = 2; k < a.size(); ++k) fact *= static_cast<unsigned long>(k);
    BigRat expected(oracle_vandermonde(a), fact);
    expected.canonicalize();
    o.require(r.equal && r.lhs == BigRat(brute) && r.rhs == expected, "mismatch at mask " + std::to_string(mask));
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for_each_x(7, 0, [&](const SubsetX& x) {
    const auto c = lemma_22_23_24_check(x);
    const auto y = x.complement();
    const BigInt vx = oracle_vandermonde(x.elements());
    const BigInt vy = oracle_vandermonde(y);
    const std::string at = "X=" + nlohmann::json(x.elements()).dump() + " n=" + std::to_string(x.n());
    o.require(c.holds, "lemma counts fail at " + at);
    o.require(vx % oracle_g(x.m() + 1) == 0 && c.vx_over_g == vx / oracle_g(x.m() + 1), "V_X/G(m+1) at " + at);
    o.require(vy % oracle_g(x.n() + 1) == 0 && c.vy_over_g == vy / oracle_g(x.n() + 1), "V_Y/G(n+1) at " + at);
    o.require(BigInt(oracle_ssyt_count(shape_from_subset(x).parts(), x.m())) == c.vx_over_g,
              "brute SSYT(X) count at " + at);
    o.require(BigInt(oracle_ssyt_count(complement_shape(y, x.m()).parts(), x.n())) == c.vy_over_g,
              "brute SSYT(Y) count at " + at);
  });

  const auto arrays = enumerate_triangular_arrays(SubsetX({1, 3, 4}, 3, 1));
  const std::vector<TriangularArray> listed{
      {{{3, 4, 4}, {2, 3}, {1}}}, {{{4, 4, 4}, {2, 3}, {1}}}, {{{4, 4, 4}, {3, 3}, {1}}}};
  o.require(arrays == listed, "X={1,3,4} arrays differ from the worked example");

  const Ssyt mapped = array_to_ssyt(TriangularArray{{{5, 7, 7}, {3, 5}, {1}}});
  o.require(mapped.rows == std::vector<std::vector<long>>{{1, 1, 2, 2}, {2, 3, 3}},
            "[[5,7,7],[3,5],[1]] does not map to [1,1,2,2],[2,3,3]");
  return o;
}

Outcome criterion4() {
  Outcome o;
  for_each_x(7, 0, [&](const SubsetX& x) {
    const std::string at = "X=" + nlohmann::json(x.elements()).dump() + " n=" + std::to_string(x.n());
    const auto arrays = enumerate_triangular_arrays(x);
    const auto ssyts = enumerate_ssyt(shape_from_subset(x), x.m());
    const std::set<Ssyt> targets(ssyts.begin(), ssyts.end());
    std::set<Ssyt> image;
    for (const auto& a : arrays) {
      o.require(a.valid_for(x), "invalid array at " + at);
      const Ssyt t = array_to_ssyt(a);
      o.require(t.valid() && targets.count(t) == 1, "forward image outside SSYT set at " + at);
      o.require(ssyt_to_array(t, x) == a, "array roundtrip fails at " + at);
      image.insert(t);
    }
    o.require(image.size() == arrays.size(), "forward map not injective at " + at);
    o.require(image == targets, "forward map not onto at " + at);
    for (const auto& t : ssyts) o.require(array_to_ssyt(ssyt_to_array(t, x)) == t, "SSYT roundtrip fails at " + at);
  });
  return o;
}

Outcome criterion5() {
  Outcome o;
  for_each_x(0, 4, [&](const SubsetX& x) {
    // Oracle: transpose by counting parts >= i.
    const auto lam = shape_from_subset(x).parts();
    std::vector<long> transposed;
    for (long i = 1; !lam.empty() && i <= lam.front(); ++i) {
      long c = 0;
      for (long p : lam) c += p >= i;
      transposed.push_back(c);
    }
    o.require(lemma25_check(x) && complement_shape(x.complement(), x.m()).parts() == transposed,
              "complement shape != transpose at X=" + nlohmann::json(x.elements()).dump());
  });
  o.require(Shape({5, 3, 3}).transpose() == Shape({3, 3, 3, 1, 1}), "(5,3,3)^T != (3,3,3,1,1)");
  o.require(Shape({3, 3, 3, 1, 1}).transpose() == Shape({5, 3, 3}), "(3,3,3,1,1)^T != (5,3,3)");
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (long m = 1; m <= 3; ++m)
    for (long n = 1; n <= 3; ++n) {
      const std::string at = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      for (long ts = 0; ts <= m * n; ++ts)
        o.require(count_pairs(m, n, ts) == oracle_binomial(m * n, ts), "count_pairs at " + at);
      std::set<std::pair<Ssyt, Ssyt>> seen;
      const auto cells = static_cast<unsigned>(m * n);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        const ZeroOneMatrix mat(static_cast<std::size_t>(n), static_cast<std::size_t>(m), mask);
        const auto [p, q] = dual_rsk(mat);
        o.require(p.valid() && q.valid(), "invalid tableau at " + at);
        o.require(p.max_entry == m && q.max_entry == n, "entry bounds at " + at);
        o.require(q.shape == p.shape.transpose(), "shape(Q) != shape(P)^T at " + at);
        o.require(p.shape.size() == std::popcount(mask), "|shape| != number of ones at " + at);
        o.require(seen.insert({p, q}).second, "dual_rsk not injective at " + at);
      }
    }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (unsigned m = 1; m <= 5; ++m) {
    const auto res = hopf::corollary_check(m);
    o.require(res.match && res.computed == res.expected, "symbolic mismatch at m=" + std::to_string(m));
    // Oracle: numeric determinant at x = 3 against G(m+1)^2 (1/3 - 3)^(m^2).
    const auto a = hopf::corollary_matrix(m);
    RatMatrix num(a.size(), std::vector<BigRat>(a.size()));
    for (std::size_t r = 0; r < a.size(); ++r)
      for (std::size_t c = 0; c < a.size(); ++c) num[r][c] = a[r][c].evaluate(3);
    BigRat expected = BigRat(oracle_g(m + 1) * oracle_g(m + 1));
    for (unsigned k = 0; k < m * m; ++k) expected *= BigRat(-8, 3);
    o.require(res.computed.evaluate(3) == expected, "computed det at x=3 at m=" + std::to_string(m));
    o.require(rational_det(num) == expected, "numeric det at x=3 at m=" + std::to_string(m));
  }
  return o;
}

const std::vector<BigRat> kSixPoints{2, BigRat(1, 2), 3, BigRat(1, 3), -2, BigRat(5, 7)};

Outcome criterion8() {
  Outcome o;
  const auto gens = hopf::generator_sample(kSixPoints);
  const auto gen_report = hopf::hopf_axiom_suite(gens);
  o.require(gen_report.passed() && gen_report.checked == gens.size(),
            gen_report.passed() ? "sample size" : "generator fails " + gen_report.first_failure->axiom);
  const auto mons = hopf::random_monomials(50, 3, kSixPoints, 20240601);
  const auto mon_report = hopf::hopf_axiom_suite(mons);
  o.require(mon_report.passed() && mon_report.checked == 50,
            mon_report.passed() ? "sample size" : "monomial fails " + mon_report.first_failure->axiom);
  return o;
}

Outcome criterion9() {
  using hopf::Generator;
  Outcome o;
  const std::vector<BigRat> lams{2, BigRat(1, 2), -3, BigRat(5, 7)};
  const long window = 12;
  for (const auto& lam : lams) {
    const std::string at = " at lambda=" + to_string(lam);
    for (auto g : {Generator::E, Generator::Phi, Generator::Psi}) {
      o.require(hopf::coproduct_pairing_check(g, window, lam).passed, "coproduct pairing" + at);
      o.require(hopf::antipode_pairing_check(g, window, lam).passed, "antipode pairing" + at);
    }
    for (auto a : {hopf::Kind::Phi, hopf::Kind::Psi})
      for (auto b : {hopf::Kind::Phi, hopf::Kind::Psi})
        o.require(hopf::pointwise_product_check(hopf::dual_basis(1, a, lam), hopf::dual_basis(2, b, BigRat(1) / lam),
                                                window)
                      .passed,
                  "pointwise product" + at);
    o.require(hopf::coalgebra_pairing_check(hopf::abstract_monomial(2, hopf::Kind::Psi, lam), window).passed,
              "coalgebra pairing of F^2 psi" + at);
  }

  std::vector<hopf::AbstractHopfElem> basis;
  for (unsigned a = 0; a <= 3; ++a)
    for (auto k : {hopf::Kind::Phi, hopf::Kind::Psi})
      for (const auto& lam : {BigRat(1), BigRat(2), BigRat(1, 2), BigRat(-3), BigRat(5, 7)})
        basis.push_back(hopf::abstract_monomial(a, k, lam));
  for (const auto& x : basis)
    for (const auto& y : basis)
      o.require(hopf::theta_product_check(x, y).passed, "theta product " + hopf::to_string(x) + " * " +
                                                            hopf::to_string(y));
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (unsigned t = 0; t <= 10; ++t) {
    BigInt fact = 1;
    for (unsigned k = 2; k <= t; ++k) fact *= k;
    for (unsigned s = 0; s <= t; ++s) {
      const BigInt v = hopf::stirling_vanishing(s, t);
      o.require(s < t ? v == 0 : v == fact, "stirling at s=" + std::to_string(s) + " t=" + std::to_string(t));
    }
  }
  for (const auto& lam : {BigRat(2), BigRat(3, 2), BigRat(-2)})
    for (unsigned r = 1; r <= 3; ++r) {
      const std::string at = " at lambda=" + to_string(lam) + " r=" + std::to_string(r);
      for (auto kind : {hopf::Kind::Phi, hopf::Kind::Psi})
        for (const auto& l : {lam, BigRat(BigRat(1) / lam)})
          for (unsigned s = 0; s < r; ++s)
            o.require(hopf::ideal_vanishing_check(kind, s, l, r).passed, "ideal vanishing" + at);
      BigRat expected = BigRat(oracle_g(r + 1) * oracle_g(r + 1));
      const BigRat base = BigRat(1) / lam - lam;
      for (unsigned k = 0; k < r * r; ++k) expected *= base;
      o.require(hopf::evaluation_matrix_det(lam, r) == expected, "evaluation det" + at);
      const auto q = hopf::quotient_dual_rank(lam, r);
      o.require(q.rank == 4 * r && !q.note, "quotient dual rank" + at);
    }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"theorem1 exhaustive, m,n <= 5", criterion1},
      {"interleaved Vandermonde sum, A in {1..9}, |A| <= 4", criterion2},
      {"array and SSYT counts, m+n <= 7, worked examples", criterion3},
      {"array <-> SSYT bijection, m+n <= 7", criterion4},
      {"complement shape = transpose, m,n <= 4", criterion5},
      {"dual RSK counts and injectivity, m,n <= 3", criterion6},
      {"symbolic determinant, m = 1..5", criterion7},
      {"Hopf axioms on generators and 50 random monomials", criterion8},
      {"pairing consistency, window 12", criterion9},
      {"Stirling vanishing, ideal vanishing, evaluation det and rank", criterion10},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%2zu] %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                o.ok ? "" : ": ", o.detail.c_str());
    failures += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
