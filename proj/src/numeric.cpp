#include "gl2cc/numeric.hpp"

#include <stdexcept>

namespace gl2cc {

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<i64, int>> out;
  for (i64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) { n /= d; ++e; }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

i64 euler_phi(i64 n) {
  i64 r = n;
  for (auto [p, e] : factorize(n)) r -= r / p;
  return r;
}

bool is_cube_free(i64 n) {
  if (n < 1) return false;
  for (auto [p, e] : factorize(n))
    if (e >= 3) return false;
  return true;
}

i64 ipow(i64 base, int exp) {
  i64 r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

int valuation(i64 n, i64 p) {
  int v = 0;
  while (n % p == 0) { n /= p; ++v; }
  return v;
}

}  // namespace gl2cc
