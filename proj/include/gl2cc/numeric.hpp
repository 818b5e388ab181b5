#ifndef GL2CC_NUMERIC_HPP_
#define GL2CC_NUMERIC_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace gl2cc {

using i64 = std::int64_t;

bool is_prime(i64 n);

// (prime, exponent) pairs with primes ascending; factorize(1) is empty.
std::vector<std::pair<i64, int>> factorize(i64 n);

i64 euler_phi(i64 n);

// true when no prime cube divides n
bool is_cube_free(i64 n);

i64 ipow(i64 base, int exp);

// largest e with p^e | n
int valuation(i64 n, i64 p);

}  // namespace gl2cc

#endif
