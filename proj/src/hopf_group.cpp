#include "dinfty/hopf.hpp"

#include <sstream>

namespace dinfty::hopf {

GroupWord word_mul(GroupWord w, GroupWord v) { return {w.i + (w.j ? -v.i : v.i), w.j ^ v.j}; }

GroupWord word_inverse(GroupWord w) { return w.j ? w : GroupWord{-w.i, 0}; }

std::string to_string(GroupWord w) {
  std::ostringstream out;
  out << "g^" << w.i;
  if (w.j) out << " x";
  return out.str();
}

std::vector<GroupWord> window_words(long window) {
  std::vector<GroupWord> out;
  for (long i = -window; i <= window; ++i) {
    out.push_back({i, 0});
    out.push_back({i, 1});
  }
  return out;
}

GroupAlgElem convolve(const GroupAlgElem& a, const GroupAlgElem& b) {
  GroupAlgElem r;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r.add(word_mul(wa, wb), ca * cb);
  return r;
}

GroupAlgElem poly_in_g(const std::vector<BigRat>& coeffs) {
  GroupAlgElem r;
  for (std::size_t k = 0; k < coeffs.size(); ++k) r.add({static_cast<long>(k), 0}, coeffs[k]);
  return r;
}

}  // namespace dinfty::hopf
