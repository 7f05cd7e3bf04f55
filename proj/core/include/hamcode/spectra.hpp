#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamcode/bigint.hpp"
#include "hamcode/code.hpp"

namespace hamcode {

// C(n, k), with C(n, k) = 0 for k < 0 or k > n. Exact.
BigInt binomial(long long n, long long k);

bool is_prime_power(long long q);

// |Γ_i(v)| in H(m, q): C(m, i) (q-1)^i.
BigInt sphere_size(int m, int q, int i);

// K_k(x) = Σ_j (-1)^j C(x, j) C(m-x, k-j) (q-1)^{k-j}. Exact integer;
// 0 <= k <= m and 0 <= x <= m enforced.
BigInt krawtchouk(int m, int q, int k, int x);

// Whether the radius-2 sphere size C(m,2)(q-1)^2 divides group_order —
// a divisibility constraint every group transitive on the 2-neighbours of
// a codeword must satisfy.
bool sphere2_divides_order(int m, int q, const BigInt& group_order);

// q^{m - delta + 1}: the Singleton ceiling on |C| for minimum distance delta.
BigInt singleton_bound(int m, int q, int delta);

// a_i = (#ordered codeword pairs at distance i) / |C|, exact.
struct DistanceDistribution {
  int m = 0;
  int q = 0;
  std::vector<BigRat> a;  // indices 0..m
};
DistanceDistribution distance_distribution(const Code& c);

// a'_k = Σ_i a_i K_k(i). Nonnegativity of every a'_k is necessary for the
// distribution to come from a code; defined here only for prime-power q.
struct TransformResult {
  std::vector<BigRat> aprime;  // indices 0..m
  bool nonnegative = true;
  std::optional<int> first_negative_index;
};
TransformResult macwilliams_transform(const DistanceDistribution& d);

// "p/q" for non-integers, plain integer rendering otherwise.
std::string rational_to_string(const BigRat& r);

}  // namespace hamcode
