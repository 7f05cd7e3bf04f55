#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace hamcode {

// Permutation of {0, ..., n-1}, stored as the image table p[i] = i^p.
// Composition is left-to-right: (p * q) sends i to q[p[i]].
class Perm {
 public:
  Perm() = default;  // degree 0
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  // Cycle on the listed points (each maps to the next, last to first),
  // fixing everything else in {0..n-1}.
  static Perm cycle(int n, const std::vector<int>& points);
  static Perm transposition(int n, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm compose(const Perm& other) const;  // this first, then other
  Perm inverse() const;
  // +1 for even permutations, -1 for odd.
  int sign() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

Perm operator*(const Perm& a, const Perm& b);

}  // namespace hamcode
