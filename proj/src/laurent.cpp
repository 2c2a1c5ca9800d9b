#include "dinfty/laurent.hpp"

#include <sstream>

namespace dinfty {

LaurentPoly::LaurentPoly(const BigRat& constant) { add_term(0, constant); }
LaurentPoly::LaurentPoly(long constant) { add_term(0, BigRat(constant)); }

LaurentPoly LaurentPoly::monomial(const BigRat& coeff, long exp) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

void LaurentPoly::add_term(long exp, const BigRat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigRat LaurentPoly::coefficient(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigRat(0) : it->second;
}

long LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

BigRat LaurentPoly::evaluate(const BigRat& at) const {
  BigRat total = 0;
  for (const auto& [e, c] : terms_) total += c * rat_pow(at, e);
  return total;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw DivisionByZero();
  if (p.is_zero()) return LaurentPoly();
  // Monomials are units, so shift both to ordinary polynomials with a nonzero
  // constant term and run long division from the top degree down.
  const long p_low = p.min_exp();
  const long q_low = q.min_exp();
  const long q_deg = q.max_exp() - q_low;
  const BigRat& q_lead = q.terms_.rbegin()->second;

  Terms rem;
  for (const auto& [e, c] : p.terms_) rem.emplace(e - p_low, c);

  LaurentPoly quotient;
  while (!rem.empty()) {
    const auto [top, top_c] = *rem.rbegin();
    if (top < q_deg) return std::nullopt;
    const long shift = top - q_deg;
    const BigRat factor = top_c / q_lead;
    quotient.add_term(shift, factor);
    for (const auto& [e, c] : q.terms_) {
      const long target = e - q_low + shift;
      auto [it, inserted] = rem.try_emplace(target, -factor * c);
      if (!inserted) {
        it->second -= factor * c;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  LaurentPoly shifted;
  for (const auto& [e, c] : quotient.terms_) shifted.add_term(e + p_low - q_low, c);
  return shifted;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigRat mag = negative ? BigRat(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (e == 0) {
      out << dinfty::to_string(mag);
      continue;
    }
    if (mag != 1) out << dinfty::to_string(mag) << '*';
    out << 'x';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

LaurentPoly laurent_arith(const LaurentPoly& p, const LaurentPoly& q, LaurentOp op) {
  switch (op) {
    case LaurentOp::Add:
      return p + q;
    case LaurentOp::Sub:
      return p - q;
    case LaurentOp::Mul:
      return p * q;
  }
  throw std::logic_error("unknown LaurentOp");
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_string(c);
  return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("LaurentPoly JSON must be an object");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    const long e = std::stol(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad exponent key '" + key + "'");
    if (!value.is_string()) throw std::invalid_argument("coefficient must be a \"p/q\" string");
    p += LaurentPoly::monomial(parse_rat(value.get<std::string>()), e);
  }
  return p;
}

}  // namespace dinfty
