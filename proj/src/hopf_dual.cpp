#include "dinfty/hopf.hpp"

#include <sstream>

namespace dinfty::hopf {

Kind compose(Kind a, Kind b) { return a == b ? Kind::Phi : Kind::Psi; }

const char* to_string(Kind k) { return k == Kind::Phi ? "Phi" : "Psi"; }

DualElem dual_basis(unsigned s, Kind kind, const BigRat& lam) {
  if (lam == 0) throw std::invalid_argument("dual functional needs lambda != 0");
  return DualElem::single(DualBasisElem{s, kind, lam});
}

DualElem dual_unit() { return dual_basis(0, Kind::Phi, 1); }
DualElem dual_E() { return dual_basis(1, Kind::Phi, 1); }
DualElem dual_Phi(const BigRat& lam) { return dual_basis(0, Kind::Phi, lam); }
DualElem dual_Psi(const BigRat& lam) { return dual_basis(0, Kind::Psi, lam); }

BigRat eval(const DualBasisElem& f, GroupWord w) {
  BigRat v = rat_pow(f.lam, w.i) * int_pow(w.i, f.s);
  if (f.kind == Kind::Psi && w.j) v = -v;
  return v;
}

BigRat eval(const DualElem& f, GroupWord w) {
  BigRat total = 0;
  for (const auto& [b, c] : f.terms()) total += c * eval(b, w);
  return total;
}

BigRat eval(const DualElem& f, const GroupAlgElem& u) {
  BigRat total = 0;
  for (const auto& [w, c] : u.terms()) total += c * eval(f, w);
  return total;
}

DualElem dual_mul(const DualElem& f, const DualElem& h) {
  DualElem r;
  for (const auto& [bf, cf] : f.terms())
    for (const auto& [bh, ch] : h.terms())
      r.add(DualBasisElem{bf.s + bh.s, compose(bf.kind, bh.kind), bf.lam * bh.lam}, cf * ch);
  return r;
}

std::string to_string(const DualElem& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [b, c] : f.terms()) {
    if (!first) out << " + ";
    first = false;
    if (c != 1) out << '(' << dinfty::to_string(c) << ")*";
    if (b.s == 1) out << "E*";
    if (b.s > 1) out << "E^" << b.s << '*';
    out << to_string(b.kind) << '_' << dinfty::to_string(b.lam);
  }
  return out.str();
}

}  // namespace dinfty::hopf
