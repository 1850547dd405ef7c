// Copyright 2026 The rayclass Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rayclass/arith.hpp"

#include <cmath>

#include "rayclass/error.hpp"

namespace rayclass::arith {

std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a,
                                                             std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) {
    return {-old_r, -old_s, -old_t};
  }
  return {old_r, old_s, old_t};
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) {
    return 0;
  }
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) {
      result = mul_mod(result, base, m);
    }
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::optional<std::uint64_t> inv_mod(std::uint64_t a, std::uint64_t m) {
  auto [g, x, y] = ext_gcd(static_cast<std::int64_t>(a % m),
                           static_cast<std::int64_t>(m));
  (void)y;
  if (g != 1) {
    return std::nullopt;
  }
  return static_cast<std::uint64_t>(mod(x, static_cast<std::int64_t>(m)));
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  auto take = [&](std::uint64_t p) {
    if (n % p != 0) {
      return;
    }
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  };
  take(2);
  take(3);
  for (std::uint64_t p = 5; p * p <= n; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) {
    out.push_back({n, 1, n});
  }
  return out;
}

unsigned omega(std::uint64_t n) {
  return static_cast<unsigned>(factorize(n).size());
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& pp : factorize(n)) {
    phi = phi / pp.prime * (pp.prime - 1);
  }
  return phi;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) {
      return n == p;
    }
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) {
      continue;
    }
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

bool is_squarefree(std::uint64_t n) {
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) {
      return false;
    }
  }
  return true;
}

int kronecker(std::int64_t a, std::uint64_t n) {
  if (n == 0) {
    return (a == 1 || a == -1) ? 1 : 0;
  }
  int result = 1;
  // Factor out powers of two from n; (a/2) depends on a mod 8.
  while ((n & 1U) == 0) {
    n >>= 1U;
    if ((a & 1) == 0) {
      return 0;
    }
    const std::int64_t r8 = mod(a, 8);
    if (r8 == 3 || r8 == 5) {
      result = -result;
    }
  }
  // Now n is odd: Jacobi symbol (a mod n / n).
  std::uint64_t x = static_cast<std::uint64_t>(
      mod(a, static_cast<std::int64_t>(n)));
  while (x != 0) {
    while ((x & 1U) == 0) {
      x >>= 1U;
      const std::uint64_t r8 = n % 8;
      if (r8 == 3 || r8 == 5) {
        result = -result;
      }
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) {
      result = -result;
    }
    x %= n;
  }
  return n == 1 ? result : 0;
}

std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
  if (p == 2) {
    return a & 1U;
  }
  a %= p;
  if (a == 0) {
    return 0;
  }
  if (pow_mod(a, (p - 1) / 2, p) != 1) {
    return std::nullopt;
  }
  std::uint64_t root = 0;
  if (p % 4 == 3) {
    root = pow_mod(a, (p + 1) / 4, p);
  } else {
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1U) == 0) {
      q >>= 1U;
      ++s;
    }
    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) {
      ++z;
    }
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
    std::uint64_t t = pow_mod(a, q, p);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      std::uint64_t t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      std::uint64_t b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) {
        b = mul_mod(b, b, p);
      }
      r = mul_mod(r, b, p);
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      m = i;
    }
    root = r;
  }
  return std::min(root, p - root);
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) {
    return false;
  }
  const std::int64_t r4 = mod(d, 4);
  const std::uint64_t abs_d = static_cast<std::uint64_t>(d < 0 ? -d : d);
  if (r4 == 1) {
    return is_squarefree(abs_d);
  }
  if (r4 == 0) {
    const std::int64_t q = d / 4;
    const std::int64_t q4 = mod(q, 4);
    if (q4 != 2 && q4 != 3) {
      return false;
    }
    return is_squarefree(abs_d / 4);
  }
  return false;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) {
    --r;
  }
  while ((r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

}  // namespace rayclass::arith
