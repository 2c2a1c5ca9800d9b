#include "dinfty/hopf.hpp"

#include <future>
#include <random>
#include <sstream>
#include <thread>

namespace dinfty::hopf {

AbstractHopfElem abstract_monomial(unsigned a, Kind kind, const BigRat& lam) {
  if (lam == 0) throw std::invalid_argument("abstract generator needs lambda != 0");
  return AbstractHopfElem::single(Monomial{a, kind, lam});
}

AbstractHopfElem abstract_unit() { return abstract_monomial(0, Kind::Phi, 1); }
AbstractHopfElem abstract_F() { return abstract_monomial(1, Kind::Phi, 1); }
AbstractHopfElem abstract_phi(const BigRat& lam) { return abstract_monomial(0, Kind::Phi, lam); }
AbstractHopfElem abstract_psi(const BigRat& lam) { return abstract_monomial(0, Kind::Psi, lam); }

AbstractHopfElem abstract_e(const BigRat& lam) { return (abstract_phi(lam) + abstract_psi(lam)) * BigRat(1, 2); }
AbstractHopfElem abstract_f(const BigRat& lam) { return (abstract_phi(lam) - abstract_psi(lam)) * BigRat(1, 2); }

// F is central and phi_1 = 1, so monomials multiply componentwise.
Monomial monomial_mul(const Monomial& x, const Monomial& y) {
  return Monomial{x.a + y.a, compose(x.kind, y.kind), x.lam * y.lam};
}

AbstractHopfElem abstract_mul(const AbstractHopfElem& x, const AbstractHopfElem& y) {
  AbstractHopfElem r;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) r.add(monomial_mul(mx, my), cx * cy);
  return r;
}

AbstractHopfElem abstract_pow(const AbstractHopfElem& x, unsigned e) {
  AbstractHopfElem r = abstract_unit();
  for (unsigned k = 0; k < e; ++k) r = abstract_mul(r, x);
  return r;
}

TensorElem tensor(const AbstractHopfElem& left, const AbstractHopfElem& right) {
  TensorElem t;
  for (const auto& [ml, cl] : left.terms())
    for (const auto& [mr, cr] : right.terms()) t.add({ml, mr}, cl * cr);
  return t;
}

namespace {

TensorElem coproduct_F() { return tensor(abstract_F(), abstract_unit()) + tensor(abstract_psi(1), abstract_F()); }

TensorElem coproduct_group_part(Kind kind, const BigRat& lam) {
  const BigRat inv = BigRat(1) / lam;
  if (kind == Kind::Phi) return tensor(abstract_e(lam), abstract_phi(lam)) + tensor(abstract_f(lam), abstract_phi(inv));
  return tensor(abstract_e(lam), abstract_psi(lam)) - tensor(abstract_f(lam), abstract_psi(inv));
}

AbstractHopfElem antipode_group_part(Kind kind, const BigRat& lam) {
  const BigRat inv = BigRat(1) / lam;
  if (kind == Kind::Phi) return abstract_e(inv) + abstract_f(lam);
  return abstract_e(inv) - abstract_f(lam);
}

}  // namespace

TensorElem coproduct_abstract(const Monomial& m) {
  TensorElem result = coproduct_group_part(m.kind, m.lam);
  const TensorElem df = coproduct_F();
  for (unsigned k = 0; k < m.a; ++k) result = tensor_mul(df, result);
  return result;
}

TensorElem coproduct_abstract(const AbstractHopfElem& b) {
  TensorElem r;
  for (const auto& [m, c] : b.terms()) r += coproduct_abstract(m) * c;
  return r;
}

BigRat counit_abstract(const AbstractHopfElem& b) {
  BigRat total = 0;
  for (const auto& [m, c] : b.terms())
    if (m.a == 0) total += c;
  return total;
}

// The algebra is commutative, so the anti-homomorphism S is also multiplicative.
AbstractHopfElem antipode_abstract(const AbstractHopfElem& b) {
  const AbstractHopfElem sf = -abstract_mul(abstract_psi(1), abstract_F());
  AbstractHopfElem r;
  for (const auto& [m, c] : b.terms()) {
    AbstractHopfElem term = antipode_group_part(m.kind, m.lam);
    for (unsigned k = 0; k < m.a; ++k) term = abstract_mul(term, sf);
    r += term * c;
  }
  return r;
}

Tensor<3> coproduct_left(const TensorElem& t) {
  Tensor<3> r;
  for (const auto& [k, c] : t.terms())
  {
    const TensorElem dk = coproduct_abstract(k[0]);
    for (const auto& [inner, d] : dk.terms()) r.add({inner[0], inner[1], k[1]}, c * d);
  }
  return r;
}

Tensor<3> coproduct_right(const TensorElem& t) {
  Tensor<3> r;
  for (const auto& [k, c] : t.terms())
  {
    const TensorElem dk = coproduct_abstract(k[1]);
    for (const auto& [inner, d] : dk.terms()) r.add({k[0], inner[0], inner[1]}, c * d);
  }
  return r;
}

std::string to_string(const Monomial& m) {
  std::ostringstream out;
  if (m.a == 1) out << "F*";
  if (m.a > 1) out << "F^" << m.a << '*';
  out << (m.kind == Kind::Phi ? "phi_" : "psi_") << dinfty::to_string(m.lam);
  return out.str();
}

std::string to_string(const AbstractHopfElem& b) {
  if (b.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : b.terms()) {
    if (!first) out << " + ";
    first = false;
    if (c != 1) out << '(' << dinfty::to_string(c) << ")*";
    out << to_string(m);
  }
  return out.str();
}

namespace {

// Index into kAxiomNames of the first violated axiom, or -1.
int first_violated_axiom(const AbstractHopfElem& b) {
  const TensorElem d = coproduct_abstract(b);
  if (!(coproduct_left(d) == coproduct_right(d))) return 0;

  AbstractHopfElem left_counit;
  AbstractHopfElem right_counit;
  for (const auto& [k, c] : d.terms()) {
    left_counit += AbstractHopfElem::single(k[1], c * counit_abstract(AbstractHopfElem::single(k[0])));
    right_counit += AbstractHopfElem::single(k[0], c * counit_abstract(AbstractHopfElem::single(k[1])));
  }
  if (!(left_counit == b)) return 1;
  if (!(right_counit == b)) return 2;

  const AbstractHopfElem unit_eps = abstract_unit() * counit_abstract(b);
  AbstractHopfElem left_antipode;
  AbstractHopfElem right_antipode;
  for (const auto& [k, c] : d.terms()) {
    const auto first = AbstractHopfElem::single(k[0]);
    const auto second = AbstractHopfElem::single(k[1]);
    left_antipode += abstract_mul(antipode_abstract(first), second) * c;
    right_antipode += abstract_mul(first, antipode_abstract(second)) * c;
  }
  if (!(left_antipode == unit_eps)) return 3;
  if (!(right_antipode == unit_eps)) return 4;
  return -1;
}

}  // namespace

AxiomReport hopf_axiom_suite(const std::vector<AbstractHopfElem>& sample) {
  if (sample.empty()) throw std::invalid_argument("hopf_axiom_suite: empty sample");
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<int> verdicts(sample.size(), -1);
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers && w < sample.size(); ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < sample.size(); i += workers) verdicts[i] = first_violated_axiom(sample[i]);
    }));
  }
  for (auto& j : jobs) j.get();

  AxiomReport report;
  report.checked = sample.size();
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (verdicts[i] >= 0) {
      report.first_failure = AxiomFailure{i, kAxiomNames[static_cast<std::size_t>(verdicts[i])]};
      break;
    }
  }
  return report;
}

std::vector<AbstractHopfElem> generator_sample(const std::vector<BigRat>& lams) {
  std::vector<AbstractHopfElem> out{abstract_F()};
  for (const auto& lam : lams) {
    out.push_back(abstract_phi(lam));
    out.push_back(abstract_psi(lam));
    out.push_back(abstract_e(lam));
    out.push_back(abstract_f(lam));
  }
  return out;
}

std::vector<AbstractHopfElem> random_monomials(std::size_t count, unsigned max_a, const std::vector<BigRat>& lams,
                                               std::uint64_t seed) {
  if (lams.empty()) throw std::invalid_argument("random_monomials: empty lambda set");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> pick_a(0, max_a);
  std::uniform_int_distribution<int> pick_kind(0, 1);
  std::uniform_int_distribution<std::size_t> pick_lam(0, lams.size() - 1);
  std::vector<AbstractHopfElem> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const unsigned a = pick_a(rng);
    const Kind kind = pick_kind(rng) ? Kind::Psi : Kind::Phi;
    out.push_back(abstract_monomial(a, kind, lams[pick_lam(rng)]));
  }
  return out;
}

DualBasisElem theta(const Monomial& m) { return DualBasisElem{m.a, m.kind, m.lam}; }

DualElem theta(const AbstractHopfElem& b) {
  DualElem r;
  for (const auto& [m, c] : b.terms()) r.add(theta(m), c);
  return r;
}

}  // namespace dinfty::hopf
