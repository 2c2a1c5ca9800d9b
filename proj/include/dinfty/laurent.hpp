#pragma once

#include "dinfty/exact.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dinfty {

/// Laurent polynomial in one indeterminate x with rational coefficients.
/// Zero coefficients are never stored, so equality is map equality.
class LaurentPoly {
 public:
  using Terms = std::map<long, BigRat>;

  LaurentPoly() = default;
  LaurentPoly(const BigRat& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant);           // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const BigRat& coeff, long exp);
  static LaurentPoly x() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigRat coefficient(long exp) const;

  /// Lowest and highest exponent; both throw on the zero polynomial.
  long min_exp() const;
  long max_exp() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigRat& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const BigRat& c) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned e) const;
  BigRat evaluate(const BigRat& at) const;

  /// Quotient p / q when it is again a Laurent polynomial, nullopt otherwise.
  /// Throws DivisionByZero when q is zero.
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& q);

  /// Ascending exponents, e.g. "x^-1 - x".
  std::string to_string() const;

 private:
  void add_term(long exp, const BigRat& c);
  Terms terms_;
};

enum class LaurentOp { Add, Sub, Mul };
LaurentPoly laurent_arith(const LaurentPoly& p, const LaurentPoly& q, LaurentOp op);

/// {"exp": "p/q", ...}; exponent keys are decimal strings.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace dinfty
