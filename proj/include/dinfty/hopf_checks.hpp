#pragma once

// Checks that tie the abstract Hopf algebra to the functionals on the group
// algebra, and the finite-quotient machinery showing those functionals span
// the whole finite dual.
//
// Identities quantified over all of D or over all lambda are checked on
// windows |i| <= N and at finite sets of rational lambda. With everything but
// one exponent fixed, a failure is a nonzero exponential polynomial
// sum_mu P_mu(i) mu^i, which satisfies a linear recurrence of order
// sum (deg P_mu + 1) and so cannot vanish on that many consecutive integers.
// For monomials with a <= 3 that order is at most 8, well below 2N + 1 = 25.

#include "dinfty/determinant.hpp"
#include "dinfty/hopf.hpp"
#include "dinfty/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dinfty::hopf {

enum class Generator { E, Phi, Psi };

Generator parse_generator(const std::string& name);
const char* to_string(Generator g);

/// The abstract generator F, phi_lam or psi_lam.
AbstractHopfElem abstract_generator(Generator gen, const BigRat& lam);

/// eval(f h, w) == eval(f, w) eval(h, w) for all words with |i| <= window.
CheckResult pointwise_product_check(const DualElem& f, const DualElem& h, long window);

/// eval(theta b, w v) == sum c theta(b')(w) theta(b'')(v) over Delta(b) = sum c b' (x) b'',
/// for all w, v with |i|, |i'| <= window.
CheckResult coalgebra_pairing_check(const AbstractHopfElem& b, long window);
CheckResult coproduct_pairing_check(Generator gen, long window, const BigRat& lam);

/// eval(theta S(b), w) == eval(theta b, w^-1).
CheckResult antipode_pairing_check(const AbstractHopfElem& b, long window);
CheckResult antipode_pairing_check(Generator gen, long window, const BigRat& lam);

/// theta(x y) == dual_mul(theta x, theta y).
CheckResult theta_product_check(const AbstractHopfElem& x, const AbstractHopfElem& y);

/// sum_{i=0}^{t} (-1)^{t-i} C(t, i) i^s  (= t! S(s, t)).
BigInt stirling_vanishing(unsigned s, unsigned t);

/// (g - lam)^r (g - 1/lam)^r expanded in powers of g.
std::vector<BigRat> claim3_polynomial(const BigRat& lam, unsigned r);

/// Evaluates E^s K_lam on g^k p(g) x^l and x g^k p(g) x^l for k in [-5, 5],
/// l in {0, 1}, with p = claim3_polynomial(lam, r), plus the base conditions
/// sum_i a_i i^s' lam^i = 0 for s' <= s. params.precondition_met records s < r.
CheckResult ideal_vanishing_check(Kind kind, unsigned s, const BigRat& lam, unsigned r);

/// Rows j = 0..2r-1, columns j^s lam^j (s < r) then j^s lam^-j (s < r).
/// Throws std::domain_error for lam in {0, 1, -1}.
RatMatrix evaluation_matrix(const BigRat& lam, unsigned r);
BigRat evaluation_matrix_det(const BigRat& lam, unsigned r);

/// G(r+1)^2 (1/lam - lam)^(r^2).
BigRat evaluation_matrix_expected(const BigRat& lam, unsigned r);

/// The 2m x 2m matrix with row j = (j^s x^j)_{s<m} followed by (j^s x^-j)_{s<m}.
LaurentMatrix corollary_matrix(unsigned m);

struct CorollaryResult {
  LaurentPoly computed;
  LaurentPoly expected;  // G(m+1)^2 (x^-1 - x)^(m^2)
  bool match = false;
};

/// Throws std::invalid_argument unless 1 <= m <= 6.
CorollaryResult corollary_check(unsigned m);

struct QuotientRank {
  std::size_t rank = 0;
  std::size_t expected = 0;  // 4r
  std::optional<std::string> note;
};

/// Rank of E^s Phi_lam, E^s Phi_{1/lam}, E^s Psi_lam, E^s Psi_{1/lam} (s < r)
/// evaluated on g^i x^j, 0 <= i < 2r. lam = +-1 is reported, not rejected.
QuotientRank quotient_dual_rank(const BigRat& lam, unsigned r);

struct CofiniteProbe {
  std::vector<BigRat> generator;  // monic q(g) with I cap k[g, g^-1] = (q)
  std::size_t dim = 0;            // 2 deg q
  std::vector<GroupWord> basis;   // g^i x^j, 0 <= i < deg q
};

/// Quotient of kD by the two-sided ideal generated by p(g); coefficients are
/// in ascending powers of g. Throws std::invalid_argument for p = 0.
CofiniteProbe cofinite_ideal_probe(const std::vector<BigRat>& p_coeffs);

}  // namespace dinfty::hopf
