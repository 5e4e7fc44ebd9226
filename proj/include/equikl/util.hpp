#pragma once
/* Small shared numeric helpers. */

#include <cstdint>

#include "errors.hpp"

namespace equikl {

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= static_cast<unsigned>(n - k + j);
    r /= static_cast<unsigned>(j);
  }
  ensure(r <= static_cast<unsigned __int128>(INT64_MAX), "binomial overflow");
  return static_cast<long long>(r);
}

}  // namespace equikl
