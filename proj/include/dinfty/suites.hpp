#pragma once

// Exhaustive sweeps over the combinatorial statements, each folded into a
// single CheckResult whose witness is the first counterexample.

#include "dinfty/report.hpp"

#include <vector>

namespace dinfty {

/// lhs == rhs for every 1 <= m, n <= max_mn and every valid t.
CheckResult theorem1_sweep(long max_m, long max_n);

/// Interleaved Vandermonde sums for every A in {1..max_elem} with 1 <= |A| <= max_k.
CheckResult lemma21_sweep(long max_elem, long max_k);

/// Array, SSYT and complement counts for every X in U(m, n), m + n <= max_total.
CheckResult lemma_counts_sweep(long max_total);

/// Array <-> SSYT bijection for every X in U(m, n), m + n <= max_total.
CheckResult bijection_sweep(long max_total);

/// Complement shape == transposed shape for every X in U(m, n), m, n <= max_mn.
CheckResult lemma25_sweep(long max_mn);

/// count_pairs == C(mn, t*) and dual RSK injective with correct pair constraints
/// over all n x m 0-1 matrices, m, n <= max_mn.
CheckResult rsk_sweep(long max_mn);

std::vector<CheckResult> default_lemma_suite();

}  // namespace dinfty
