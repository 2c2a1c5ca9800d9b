#pragma once

// The infinite dihedral group D = <g, x | x^2 = 1, xgx = g^-1>, its group
// algebra, the functionals E^s Phi_lambda / E^s Psi_lambda on it, and the
// abstract Hopf algebra on generators F, phi_lambda, psi_lambda that they
// realize.

#include "dinfty/exact.hpp"
#include "dinfty/linear_combination.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace dinfty::hopf {

// ---------------------------------------------------------------------------
// Group and group algebra

/// g^i x^j in canonical form, j in {0, 1}.
struct GroupWord {
  long i = 0;
  int j = 0;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;
};

/// (i, j)(i', j') = (i + (-1)^j i', j xor j').
GroupWord word_mul(GroupWord w, GroupWord v);
GroupWord word_inverse(GroupWord w);
std::string to_string(GroupWord w);

/// Words g^i x^j with |i| <= window, j in {0, 1}, ordered by (i, j).
std::vector<GroupWord> window_words(long window);

using GroupAlgElem = LinearCombination<GroupWord>;

GroupAlgElem convolve(const GroupAlgElem& a, const GroupAlgElem& b);

/// sum_k coeffs[k] g^k.
GroupAlgElem poly_in_g(const std::vector<BigRat>& coeffs);

// ---------------------------------------------------------------------------
// Functionals on the group algebra

enum class Kind { Phi, Psi };

/// Phi.Phi = Psi.Psi = Phi, Phi.Psi = Psi.Phi = Psi.
Kind compose(Kind a, Kind b);
const char* to_string(Kind k);

/// E^s Phi_lam or E^s Psi_lam. Evaluates to i^s lam^i (and an extra (-1)^j
/// for Psi) on g^i x^j, with 0^0 = 1.
struct DualBasisElem {
  unsigned s = 0;
  Kind kind = Kind::Phi;
  BigRat lam = 1;

  friend bool operator==(const DualBasisElem& a, const DualBasisElem& b) {
    return a.s == b.s && a.kind == b.kind && a.lam == b.lam;
  }
  friend bool operator<(const DualBasisElem& a, const DualBasisElem& b) {
    return std::tie(a.s, a.kind, a.lam) < std::tie(b.s, b.kind, b.lam);
  }
};

using DualElem = LinearCombination<DualBasisElem>;

DualElem dual_basis(unsigned s, Kind kind, const BigRat& lam);
DualElem dual_unit();  // Phi_1
DualElem dual_E();     // E = E^1 Phi_1
DualElem dual_Phi(const BigRat& lam);
DualElem dual_Psi(const BigRat& lam);

BigRat eval(const DualBasisElem& f, GroupWord w);
BigRat eval(const DualElem& f, GroupWord w);
BigRat eval(const DualElem& f, const GroupAlgElem& u);

/// Product in the dual algebra; pointwise on group words.
DualElem dual_mul(const DualElem& f, const DualElem& h);

std::string to_string(const DualElem& f);

// ---------------------------------------------------------------------------
// Abstract Hopf algebra with basis F^a phi_lam, F^a psi_lam

struct Monomial {
  unsigned a = 0;
  Kind kind = Kind::Phi;
  BigRat lam = 1;

  friend bool operator==(const Monomial& x, const Monomial& y) {
    return x.a == y.a && x.kind == y.kind && x.lam == y.lam;
  }
  friend bool operator<(const Monomial& x, const Monomial& y) {
    return std::tie(x.a, x.kind, x.lam) < std::tie(y.a, y.kind, y.lam);
  }
};

using AbstractHopfElem = LinearCombination<Monomial>;

template <std::size_t N>
using Tensor = LinearCombination<std::array<Monomial, N>>;
using TensorElem = Tensor<2>;

AbstractHopfElem abstract_monomial(unsigned a, Kind kind, const BigRat& lam);
AbstractHopfElem abstract_unit();
AbstractHopfElem abstract_F();
AbstractHopfElem abstract_phi(const BigRat& lam);
AbstractHopfElem abstract_psi(const BigRat& lam);
AbstractHopfElem abstract_e(const BigRat& lam);  // (phi + psi) / 2
AbstractHopfElem abstract_f(const BigRat& lam);  // (phi - psi) / 2

Monomial monomial_mul(const Monomial& x, const Monomial& y);
AbstractHopfElem abstract_mul(const AbstractHopfElem& x, const AbstractHopfElem& y);
AbstractHopfElem abstract_pow(const AbstractHopfElem& x, unsigned e);

TensorElem tensor(const AbstractHopfElem& left, const AbstractHopfElem& right);

template <std::size_t N>
Tensor<N> tensor_mul(const Tensor<N>& x, const Tensor<N>& y) {
  Tensor<N> r;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      std::array<Monomial, N> k;
      for (std::size_t i = 0; i < N; ++i) k[i] = monomial_mul(kx[i], ky[i]);
      r.add(k, cx * cy);
    }
  return r;
}

/// Delta(F) = F(x)1 + psi_1(x)F, Delta(phi_lam) = e_lam(x)phi_lam + f_lam(x)phi_{1/lam},
/// Delta(psi_lam) = e_lam(x)psi_lam - f_lam(x)psi_{1/lam}; multiplicative.
TensorElem coproduct_abstract(const AbstractHopfElem& b);
TensorElem coproduct_abstract(const Monomial& m);

/// eps(F) = 0, eps(phi_lam) = eps(psi_lam) = 1.
BigRat counit_abstract(const AbstractHopfElem& b);

/// S(F) = -psi_1 F, S(phi_lam) = e_{1/lam} + f_lam, S(psi_lam) = e_{1/lam} - f_lam.
AbstractHopfElem antipode_abstract(const AbstractHopfElem& b);

Tensor<3> coproduct_left(const TensorElem& t);   // (Delta (x) id)
Tensor<3> coproduct_right(const TensorElem& t);  // (id (x) Delta)

std::string to_string(const Monomial& m);
std::string to_string(const AbstractHopfElem& b);

struct AxiomFailure {
  std::size_t index;
  std::string axiom;
};

struct AxiomReport {
  std::size_t checked = 0;
  std::optional<AxiomFailure> first_failure;
  bool passed() const { return !first_failure.has_value(); }
};

inline constexpr std::array<const char*, 5> kAxiomNames = {
    "coassociativity", "left_counit", "right_counit", "left_antipode", "right_antipode"};

/// Checks every axiom in kAxiomNames on every sample element, exactly.
/// Elements are processed in parallel; the report follows input order.
/// Throws std::invalid_argument on an empty sample.
AxiomReport hopf_axiom_suite(const std::vector<AbstractHopfElem>& sample);

/// F, phi, psi, e, f at each lam.
std::vector<AbstractHopfElem> generator_sample(const std::vector<BigRat>& lams);

/// count monomials F^a k_lam with a <= max_a, kind and lam drawn uniformly.
std::vector<AbstractHopfElem> random_monomials(std::size_t count, unsigned max_a, const std::vector<BigRat>& lams,
                                               std::uint64_t seed);

// ---------------------------------------------------------------------------
// The comparison map F -> E, phi -> Phi, psi -> Psi

DualBasisElem theta(const Monomial& m);
DualElem theta(const AbstractHopfElem& b);

}  // namespace dinfty::hopf
