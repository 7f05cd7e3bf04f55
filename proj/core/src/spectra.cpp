#include "hamcode/spectra.hpp"

#include <map>
#include <stdexcept>

#include "hamcode/errors.hpp"

namespace hamcode {

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

bool is_prime_power(long long q) {
  if (q < 2) return false;
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return true;  // q itself prime
}

BigInt sphere_size(int m, int q, int i) {
  if (i < 0 || i > m) throw std::domain_error("sphere_size: radius out of range");
  BigInt p = 1;
  for (int j = 0; j < i; ++j) p *= q - 1;
  return binomial(m, i) * p;
}

BigInt krawtchouk(int m, int q, int k, int x) {
  if (k < 0 || k > m) throw std::domain_error("krawtchouk: k out of range");
  if (x < 0 || x > m) throw std::domain_error("krawtchouk: x out of range");
  BigInt sum = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = binomial(x, j) * binomial(m - x, k - j);
    for (int t = 0; t < k - j; ++t) term *= q - 1;
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

bool sphere2_divides_order(int m, int q, const BigInt& group_order) {
  if (group_order < 1) throw PreconditionError("group order must be positive");
  return group_order % sphere_size(m, q, 2) == 0;
}

BigInt singleton_bound(int m, int q, int delta) {
  if (delta < 1 || delta > m) throw std::domain_error("singleton_bound: delta out of range");
  BigInt r = 1;
  for (int i = 0; i < m - delta + 1; ++i) r *= q;
  return r;
}

DistanceDistribution distance_distribution(const Code& c) {
  DistanceDistribution d;
  d.m = c.m();
  d.q = c.q();
  std::vector<BigInt> counts(static_cast<std::size_t>(c.m() + 1), 0);
  for (const Vertex& u : c.codewords()) {
    for (const Vertex& v : c.codewords()) {
      ++counts[static_cast<std::size_t>(hamming_distance(u, v))];
    }
  }
  const BigInt n = static_cast<long long>(c.size());
  d.a.reserve(counts.size());
  for (const BigInt& ct : counts) d.a.emplace_back(BigRat(ct, n));
  return d;
}

TransformResult macwilliams_transform(const DistanceDistribution& d) {
  if (!is_prime_power(d.q)) {
    throw std::domain_error("macwilliams_transform: alphabet size must be a prime power");
  }
  if (d.a.size() != static_cast<std::size_t>(d.m + 1)) {
    throw DimensionError("distribution must have m + 1 entries");
  }
  TransformResult t;
  t.aprime.reserve(d.a.size());
  for (int k = 0; k <= d.m; ++k) {
    BigRat s = 0;
    for (int i = 0; i <= d.m; ++i) {
      s += d.a[static_cast<std::size_t>(i)] * BigRat(krawtchouk(d.m, d.q, k, i));
    }
    if (s < 0 && t.nonnegative) {
      t.nonnegative = false;
      t.first_negative_index = k;
    }
    t.aprime.push_back(std::move(s));
  }
  return t;
}

std::string rational_to_string(const BigRat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace hamcode
