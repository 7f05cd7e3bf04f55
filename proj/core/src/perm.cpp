#include "hamcode/perm.hpp"

#include <numeric>
#include <string>

#include "hamcode/errors.hpp"

namespace hamcode {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw PreconditionError("image table is not a bijection on {0..n-1}");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::cycle(int n, const std::vector<int>& points) {
  Perm p = identity(n);
  if (points.empty()) return p;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    p.images_[static_cast<std::size_t>(points[i])] = points[i + 1];
  }
  p.images_[static_cast<std::size_t>(points.back())] = points.front();
  return Perm(p.images_);  // re-validate: rejects repeated points
}

Perm Perm::transposition(int n, int a, int b) { return cycle(n, {a, b}); }

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Perm Perm::compose(const Perm& other) const {
  if (degree() != other.degree()) {
    throw DimensionError("composing permutations of different degree");
  }
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    img[i] = other.images_[static_cast<std::size_t>(images_[i])];
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    img[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return Perm(std::move(img));
}

int Perm::sign() const {
  std::vector<char> seen(images_.size(), 0);
  int sgn = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t j = i;
    int len = 0;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<std::size_t>(images_[j]);
      ++len;
    }
    if (len % 2 == 0) sgn = -sgn;
  }
  return sgn;
}

Perm operator*(const Perm& a, const Perm& b) { return a.compose(b); }

}  // namespace hamcode
