#pragma once
/* Expansion of a palindromic graded virtual representation f of degree d in
 * the basis x^j (1+x)^(d-2j), j = 0..floor(d/2).  The expansion always
 * exists and is unique; f is called gamma-positive when every coefficient is
 * an honest (nonnegative) representation. */

#include <vector>

#include "errors.hpp"
#include "rep.hpp"

namespace equikl {

struct GammaExpansion {
  std::vector<VirtualRep> coefficients;  // entry j multiplies x^j (1+x)^(d-2j)
  bool positive = true;
};

inline GammaExpansion gamma_expansion(const GradedVirtualRep& f, int d) {
  require(d >= 0, "the reference degree must be nonnegative");
  require(is_palindromic(f, d), "the gamma basis only spans palindromic polynomials");
  GammaExpansion out;
  GradedVirtualRep rem = f;
  for (int j = 0; 2 * j <= d; ++j) {
    const VirtualRep g = rem.coefficient(j);
    out.coefficients.push_back(g);
    out.positive = out.positive && g.is_honest();
    rem -= scale_by_binomial(graded_constant(g), d - 2 * j).shifted(j);
  }
  ensure(rem.is_zero(), "the gamma elimination must leave no remainder");
  return out;
}

}  // namespace equikl
