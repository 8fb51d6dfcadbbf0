// Exact binomial coefficients (64-bit), standard and generalized conventions.
#pragma once

#include <cassert>
#include <cstdint>

namespace relsr {

using i64 = long long;

// Standard binomial: C(n, k) = 0 for k < 0 or (0 <= n < k); C(n, 0) = 1 for
// every n (including negative n).  Negative n with k > 0 yields 0 under this
// convention; use gbinom for the generalized (polynomial-in-n) coefficient.
inline i64 binom(i64 n, i64 k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < k) return 0;
    if (k > n - k) k = n - k;
    i64 r = 1;
    for (i64 i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact at each step: product of i consecutive ints
    }
    return r;
}

// Generalized binomial: C(x, k) = x(x-1)...(x-k+1)/k! for any integer x and
// k >= 0.  For negative x this is (-1)^k C(k - x - 1, k).
inline i64 gbinom(i64 x, i64 k) {
    if (k < 0) return 0;
    if (x >= 0) return binom(x, k);
    i64 v = binom(k - x - 1, k);
    return (k % 2 == 0) ? v : -v;
}

}  // namespace relsr
