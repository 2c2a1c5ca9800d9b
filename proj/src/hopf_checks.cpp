#include "dinfty/hopf_checks.hpp"

#include <algorithm>
#include <map>

namespace dinfty::hopf {

using dinfty::to_string;

namespace {

nlohmann::json word_json(GroupWord w) { return nlohmann::json::array({w.i, w.j}); }

GroupAlgElem word_elem(GroupWord w) { return GroupAlgElem::single(w); }

bool is_plus_minus_one(const BigRat& lam) { return lam == 1 || lam == -1; }

}  // namespace

Generator parse_generator(const std::string& name) {
  if (name == "E" || name == "F") return Generator::E;
  if (name == "Phi" || name == "phi") return Generator::Phi;
  if (name == "Psi" || name == "psi") return Generator::Psi;
  throw std::invalid_argument("unknown generator '" + name + "' (expected E, Phi or Psi)");
}

const char* to_string(Generator g) {
  switch (g) {
    case Generator::E:
      return "E";
    case Generator::Phi:
      return "Phi";
    case Generator::Psi:
      return "Psi";
  }
  return "?";
}

AbstractHopfElem abstract_generator(Generator gen, const BigRat& lam) {
  switch (gen) {
    case Generator::E:
      return abstract_F();
    case Generator::Phi:
      return abstract_phi(lam);
    case Generator::Psi:
      return abstract_psi(lam);
  }
  throw std::logic_error("unknown generator");
}

CheckResult pointwise_product_check(const DualElem& f, const DualElem& h, long window) {
  if (window < 1) throw std::invalid_argument("pointwise_product_check: window must be >= 1");
  CheckResult r{"pointwise_product", {{"f", to_string(f)}, {"h", to_string(h)}, {"window", window}}, true, {}};
  const DualElem fh = dual_mul(f, h);
  for (const auto w : window_words(window)) {
    const BigRat lhs = eval(fh, w);
    const BigRat rhs = eval(f, w) * eval(h, w);
    if (lhs != rhs) {
      r.passed = false;
      r.witness = {{"w", word_json(w)}, {"product", to_string(lhs)}, {"pointwise", to_string(rhs)}};
      break;
    }
  }
  return r;
}

CheckResult coalgebra_pairing_check(const AbstractHopfElem& b, long window) {
  if (window < 1) throw std::invalid_argument("coalgebra_pairing_check: window must be >= 1");
  CheckResult r{"coproduct_pairing", {{"element", to_string(b)}, {"window", window}}, true, {}};
  const auto words = window_words(window);
  const DualElem image = theta(b);
  const TensorElem delta = coproduct_abstract(b);

  // Values of every tensor factor on every window word, computed once.
  std::map<Monomial, std::vector<BigRat>> table;
  for (const auto& [k, c] : delta.terms())
    for (const auto& m : k) {
      if (table.count(m)) continue;
      std::vector<BigRat> values;
      values.reserve(words.size());
      for (const auto w : words) values.push_back(eval(theta(m), w));
      table.emplace(m, std::move(values));
    }

  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b2 = 0; b2 < words.size(); ++b2) {
      const BigRat lhs = eval(image, word_mul(words[a], words[b2]));
      BigRat rhs = 0;
      for (const auto& [k, c] : delta.terms()) rhs += c * table.at(k[0])[a] * table.at(k[1])[b2];
      if (lhs != rhs) {
        r.passed = false;
        r.witness = {{"w", word_json(words[a])},
                     {"v", word_json(words[b2])},
                     {"on_product", to_string(lhs)},
                     {"coproduct_pairing", to_string(rhs)}};
        return r;
      }
    }
  }
  return r;
}

CheckResult coproduct_pairing_check(Generator gen, long window, const BigRat& lam) {
  if (lam == 0) throw std::invalid_argument("coproduct_pairing_check: lambda must be nonzero");
  CheckResult r = coalgebra_pairing_check(abstract_generator(gen, lam), window);
  r.params["generator"] = to_string(gen);
  r.params["lambda"] = dinfty::to_string(lam);
  return r;
}

CheckResult antipode_pairing_check(const AbstractHopfElem& b, long window) {
  if (window < 1) throw std::invalid_argument("antipode_pairing_check: window must be >= 1");
  CheckResult r{"antipode_pairing", {{"element", to_string(b)}, {"window", window}}, true, {}};
  const DualElem image = theta(b);
  const DualElem s_image = theta(antipode_abstract(b));
  for (const auto w : window_words(window)) {
    const BigRat lhs = eval(s_image, w);
    const BigRat rhs = eval(image, word_inverse(w));
    if (lhs != rhs) {
      r.passed = false;
      r.witness = {{"w", word_json(w)}, {"antipode", to_string(lhs)}, {"on_inverse", to_string(rhs)}};
      break;
    }
  }
  return r;
}

CheckResult antipode_pairing_check(Generator gen, long window, const BigRat& lam) {
  if (lam == 0) throw std::invalid_argument("antipode_pairing_check: lambda must be nonzero");
  CheckResult r = antipode_pairing_check(abstract_generator(gen, lam), window);
  r.params["generator"] = to_string(gen);
  r.params["lambda"] = dinfty::to_string(lam);
  return r;
}

CheckResult theta_product_check(const AbstractHopfElem& x, const AbstractHopfElem& y) {
  CheckResult r{"theta_product", {{"x", to_string(x)}, {"y", to_string(y)}}, true, {}};
  const DualElem lhs = theta(abstract_mul(x, y));
  const DualElem rhs = dual_mul(theta(x), theta(y));
  if (!(lhs == rhs)) {
    r.passed = false;
    r.witness = {{"theta_of_product", to_string(lhs)}, {"product_of_thetas", to_string(rhs)}};
  }
  return r;
}

BigInt stirling_vanishing(unsigned s, unsigned t) {
  BigInt total = 0;
  for (unsigned i = 0; i <= t; ++i) {
    const BigInt term = binomial(t, i) * int_pow(static_cast<long>(i), s);
    if ((t - i) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

std::vector<BigRat> claim3_polynomial(const BigRat& lam, unsigned r) {
  if (lam == 0) throw std::invalid_argument("claim3_polynomial: lambda must be nonzero");
  const LaurentPoly g = LaurentPoly::x();
  const LaurentPoly p = ((g - LaurentPoly(lam)) * (g - LaurentPoly(BigRat(1) / lam))).pow(r);
  std::vector<BigRat> coeffs(static_cast<std::size_t>(p.max_exp()) + 1, BigRat(0));
  for (const auto& [e, c] : p.terms()) coeffs[static_cast<std::size_t>(e)] = c;
  return coeffs;
}

CheckResult ideal_vanishing_check(Kind kind, unsigned s, const BigRat& lam, unsigned r) {
  if (lam == 0) throw std::invalid_argument("ideal_vanishing_check: lambda must be nonzero");
  CheckResult res{"ideal_vanishing",
                  {{"kind", to_string(kind)},
                   {"s", s},
                   {"lambda", dinfty::to_string(lam)},
                   {"r", r},
                   {"precondition_met", s < r}},
                  true,
                  {}};
  const GroupAlgElem p = poly_in_g(claim3_polynomial(lam, r));

  for (unsigned sp = 0; sp <= s; ++sp) {
    const BigRat base = eval(dual_basis(sp, Kind::Phi, lam), p);
    if (base != 0) {
      res.passed = false;
      res.witness = {{"base_condition_s", sp}, {"value", to_string(base)}};
      return res;
    }
  }

  const DualElem f = dual_basis(s, kind, lam);
  const GroupAlgElem x = word_elem({0, 1});
  for (long k = -5; k <= 5; ++k) {
    for (int l = 0; l <= 1; ++l) {
      const GroupAlgElem u = convolve(convolve(word_elem({k, 0}), p), word_elem({0, l}));
      for (int left_x = 0; left_x <= 1; ++left_x) {
        const GroupAlgElem elem = left_x ? convolve(x, u) : u;
        const BigRat v = eval(f, elem);
        if (v != 0) {
          res.passed = false;
          res.witness = {{"k", k}, {"l", l}, {"left_x", left_x == 1}, {"value", to_string(v)}};
          return res;
        }
      }
    }
  }
  return res;
}

RatMatrix evaluation_matrix(const BigRat& lam, unsigned r) {
  if (lam == 0) throw std::domain_error("evaluation matrix undefined at lambda = 0");
  if (is_plus_minus_one(lam))
    throw std::domain_error("evaluation matrix is singular at lambda = " + dinfty::to_string(lam) +
                            " (lambda = 1/lambda, the factor (1/lambda - lambda)^(r^2) vanishes)");
  if (r < 1) throw std::invalid_argument("evaluation matrix needs r >= 1");
  RatMatrix m(2 * r, std::vector<BigRat>(2 * r));
  for (unsigned j = 0; j < 2 * r; ++j) {
    const BigRat up = rat_pow(lam, static_cast<long>(j));
    const BigRat down = rat_pow(lam, -static_cast<long>(j));
    for (unsigned s = 0; s < r; ++s) {
      const BigInt js = int_pow(static_cast<long>(j), s);
      m[j][s] = js * up;
      m[j][r + s] = js * down;
    }
  }
  return m;
}

BigRat evaluation_matrix_det(const BigRat& lam, unsigned r) { return rational_det(evaluation_matrix(lam, r)); }

BigRat evaluation_matrix_expected(const BigRat& lam, unsigned r) {
  const BigInt g = barnes_g(r + 1);
  return BigRat(g * g) * rat_pow(BigRat(1) / lam - lam, static_cast<long>(r) * r);
}

LaurentMatrix corollary_matrix(unsigned m) {
  LaurentMatrix a(2 * m, std::vector<LaurentPoly>(2 * m));
  for (unsigned j = 0; j < 2 * m; ++j)
    for (unsigned s = 0; s < m; ++s) {
      const BigRat js(int_pow(static_cast<long>(j), s));
      a[j][s] = LaurentPoly::monomial(js, static_cast<long>(j));
      a[j][m + s] = LaurentPoly::monomial(js, -static_cast<long>(j));
    }
  return a;
}

CorollaryResult corollary_check(unsigned m) {
  if (m < 1 || m > 6) throw std::invalid_argument("corollary_check: m must be in [1, 6]");
  CorollaryResult r;
  r.computed = laurent_det(corollary_matrix(m));
  const BigInt g = barnes_g(m + 1);
  const LaurentPoly base = LaurentPoly::monomial(1, -1) - LaurentPoly::x();
  r.expected = base.pow(m * m) * BigRat(g * g);
  r.match = r.computed == r.expected;
  return r;
}

QuotientRank quotient_dual_rank(const BigRat& lam, unsigned r) {
  if (lam == 0) throw std::invalid_argument("quotient_dual_rank: lambda must be nonzero");
  if (r < 1) throw std::invalid_argument("quotient_dual_rank: r must be >= 1");
  const BigRat inv = BigRat(1) / lam;
  std::vector<DualBasisElem> functionals;
  for (unsigned s = 0; s < r; ++s) {
    functionals.push_back({s, Kind::Phi, lam});
    functionals.push_back({s, Kind::Phi, inv});
    functionals.push_back({s, Kind::Psi, lam});
    functionals.push_back({s, Kind::Psi, inv});
  }
  std::vector<GroupWord> basis;
  for (long i = 0; i < 2 * static_cast<long>(r); ++i) {
    basis.push_back({i, 0});
    basis.push_back({i, 1});
  }
  RatMatrix m;
  for (const auto& f : functionals) {
    std::vector<BigRat> row;
    for (const auto w : basis) row.push_back(eval(f, w));
    m.push_back(std::move(row));
  }
  QuotientRank q{rational_rank(m), 4 * static_cast<std::size_t>(r), std::nullopt};
  if (is_plus_minus_one(lam))
    q.note = "degenerate at lambda = " + dinfty::to_string(lam) +
             ": lambda = 1/lambda, so the listed functionals repeat; the ideal ((g -/+ 1)^(2r)) is a separate case";
  else if (q.rank < q.expected)
    q.note = "rank deficient";
  return q;
}

namespace {

using DensePoly = std::vector<BigRat>;  // ascending powers

void trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

DensePoly poly_mod(DensePoly a, const DensePoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const BigRat factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    trim(a);
  }
  return a;
}

DensePoly make_monic(DensePoly p) {
  const BigRat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

}  // namespace

CofiniteProbe cofinite_ideal_probe(const std::vector<BigRat>& p_coeffs) {
  DensePoly p = p_coeffs;
  trim(p);
  if (p.empty()) throw std::invalid_argument("cofinite_ideal_probe: zero polynomial");
  // Powers of g are units in kD.
  p.erase(p.begin(), std::find_if(p.begin(), p.end(), [](const BigRat& c) { return c != 0; }));

  // x p(g) x = p(g^-1), so the ideal also contains the reversed polynomial;
  // its intersection with k[g, g^-1] is generated by the gcd of the two.
  DensePoly a = make_monic(p);
  DensePoly b = make_monic(DensePoly(p.rbegin(), p.rend()));
  while (!b.empty()) {
    DensePoly rem = poly_mod(a, b);
    a = std::move(b);
    b = std::move(rem);
  }
  a = make_monic(a);

  CofiniteProbe probe;
  probe.generator = a;
  const long deg = static_cast<long>(a.size()) - 1;
  probe.dim = 2 * static_cast<std::size_t>(deg);
  for (long i = 0; i < deg; ++i) {
    probe.basis.push_back({i, 0});
    probe.basis.push_back({i, 1});
  }
  return probe;
}

}  // namespace dinfty::hopf
