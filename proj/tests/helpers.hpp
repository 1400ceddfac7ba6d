#pragma once

#include "dnjt/core.hpp"

namespace testing {

inline dnjt::ZPolynomial z(int idx, bool barred, int offset) { return dnjt::ZPolynomial::var({idx, barred}, offset); }
inline dnjt::ZPolynomial one() { return dnjt::ZPolynomial::constant(1); }

// h_{1,a} (= e_{1,a}) at rank n: every entry once, offset k
inline dnjt::ZPolynomial linear_sum(int n, int k = 0)
{
  dnjt::ZPolynomial p;
  for (int i = 1; i <= n; ++i) p += z(i, false, k) + z(i, true, k);
  return p;
}

}  // namespace testing
