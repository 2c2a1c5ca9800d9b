#include "dinfty/suites.hpp"

#include "dinfty/tableaux.hpp"
#include "dinfty/vandermonde.hpp"

#include <functional>
#include <set>

namespace dinfty {

namespace {

void for_each_subset(long m, long n, const std::function<void(const SubsetX&)>& visit) {
  for (long t = min_subset_sum(m); t <= max_subset_sum(m, n); ++t) for_each_subset_with_sum(m, n, t, visit);
}

nlohmann::json subset_json(const SubsetX& x) { return {{"X", x.elements()}, {"m", x.m()}, {"n", x.n()}}; }

}  // namespace

CheckResult theorem1_sweep(long max_m, long max_n) {
  CheckResult r{"theorem1", {{"max_m", max_m}, {"max_n", max_n}}, true, {}};
  for (long m = 1; m <= max_m; ++m)
    for (long n = 1; n <= max_n; ++n)
      for (long t = min_subset_sum(m); t <= max_subset_sum(m, n); ++t) {
        const BigInt lhs = theorem1_lhs(m, n, t);
        const BigInt rhs = theorem1_rhs(m, n, t);
        if (lhs != rhs) {
          r.passed = false;
          r.witness = {{"m", m}, {"n", n}, {"t", t}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
          return r;
        }
      }
  return r;
}

CheckResult lemma21_sweep(long max_elem, long max_k) {
  CheckResult r{"lemma21", {{"max_elem", max_elem}, {"max_k", max_k}}, true, {}};
  const auto universe = static_cast<unsigned>(max_elem);
  for (unsigned mask = 1; mask < (1u << universe); ++mask) {
    std::vector<long> a;
    for (unsigned b = 0; b < universe; ++b)
      if (mask & (1u << b)) a.push_back(static_cast<long>(b) + 1);
    if (static_cast<long>(a.size()) > max_k) continue;
    const auto res = lemma21_check(a);
    if (!res.equal) {
      r.passed = false;
      r.witness = {{"A", a}, {"lhs", to_string(res.lhs)}, {"rhs", to_string(res.rhs)}};
      return r;
    }
  }
  return r;
}

CheckResult lemma_counts_sweep(long max_total) {
  CheckResult r{"lemma22_23_24_counts", {{"max_m_plus_n", max_total}}, true, {}};
  for (long m = 1; m < max_total; ++m)
    for (long n = 1; m + n <= max_total; ++n)
      for_each_subset(m, n, [&](const SubsetX& x) {
        if (!r.passed) return;
        const auto c = lemma_22_23_24_check(x);
        if (!c.holds) {
          r.passed = false;
          r.witness = subset_json(x);
          (*r.witness)["arrays"] = to_string(c.arrays);
          (*r.witness)["vx_over_g"] = to_string(c.vx_over_g);
          (*r.witness)["ssyt_x"] = to_string(c.ssyt_x);
          (*r.witness)["ssyt_y"] = to_string(c.ssyt_y);
          (*r.witness)["vy_over_g"] = to_string(c.vy_over_g);
        }
      });
  return r;
}

CheckResult bijection_sweep(long max_total) {
  CheckResult r{"lemma23_bijection", {{"max_m_plus_n", max_total}}, true, {}};
  for (long m = 1; m < max_total; ++m)
    for (long n = 1; m + n <= max_total; ++n)
      for_each_subset(m, n, [&](const SubsetX& x) {
        if (!r.passed) return;
        const auto arrays = enumerate_triangular_arrays(x);
        const auto tableaux = enumerate_ssyt(shape_from_subset(x), m);
        std::set<Ssyt> image;
        for (const auto& a : arrays) {
          const Ssyt t = array_to_ssyt(a);
          if (!t.valid() || ssyt_to_array(t, x) != a) {
            r.passed = false;
            r.witness = subset_json(x);
            (*r.witness)["array"] = to_json(a);
            return;
          }
          image.insert(t);
        }
        if (image != std::set<Ssyt>(tableaux.begin(), tableaux.end()) || image.size() != arrays.size()) {
          r.passed = false;
          r.witness = subset_json(x);
          (*r.witness)["reason"] = "image differs from enumerated SSYT set";
        }
      });
  return r;
}

CheckResult lemma25_sweep(long max_mn) {
  CheckResult r{"lemma25", {{"max_m", max_mn}, {"max_n", max_mn}}, true, {}};
  for (long m = 1; m <= max_mn; ++m)
    for (long n = 1; n <= max_mn; ++n)
      for_each_subset(m, n, [&](const SubsetX& x) {
        if (r.passed && !lemma25_check(x)) {
          r.passed = false;
          r.witness = subset_json(x);
        }
      });
  return r;
}

CheckResult rsk_sweep(long max_mn) {
  CheckResult r{"rsk", {{"max_m", max_mn}, {"max_n", max_mn}}, true, {}};
  for (long m = 1; m <= max_mn; ++m)
    for (long n = 1; n <= max_mn; ++n) {
      for (long ts = 0; ts <= m * n; ++ts) {
        const BigInt pairs = count_pairs(m, n, ts);
        if (pairs != binomial(m * n, ts)) {
          r.passed = false;
          r.witness = {{"m", m}, {"n", n}, {"t_star", ts}, {"pairs", to_string(pairs)}};
          return r;
        }
      }
      std::set<std::pair<Ssyt, Ssyt>> seen;
      const auto cells = static_cast<unsigned>(m * n);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        const ZeroOneMatrix mat(static_cast<std::size_t>(n), static_cast<std::size_t>(m), mask);
        const auto [p, q] = dual_rsk(mat);
        const bool ok = p.valid() && q.valid() && p.max_entry == m && q.max_entry == n &&
                        q.shape == p.shape.transpose() &&
                        p.shape.size() == static_cast<long>(mat.ones_count());
        if (!ok || !seen.emplace(p, q).second) {
          r.passed = false;
          r.witness = {{"m", m}, {"n", n}, {"mask", mask}, {"reason", ok ? "collision" : "constraint"}};
          return r;
        }
      }
    }
  return r;
}

std::vector<CheckResult> default_lemma_suite() {
  return {lemma21_sweep(9, 4), lemma_counts_sweep(7), bijection_sweep(7), lemma25_sweep(4), rsk_sweep(3)};
}

}  // namespace dinfty
