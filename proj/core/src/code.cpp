#include "hamcode/code.hpp"

#include <algorithm>
#include <string>

#include "hamcode/errors.hpp"

namespace hamcode {

Code::Code(int m, int q, std::vector<Vertex> words) : m_(m), q_(q), words_(std::move(words)) {
  if (m_ < 1) throw PreconditionError("code requires word length >= 1");
  if (q_ < 2) throw PreconditionError("code requires alphabet size >= 2");
  if (words_.empty()) throw PreconditionError("code must be nonempty");
  for (const Vertex& w : words_) {
    if (w.m() != m_ || w.q() != q_) {
      throw DimensionError("codeword does not live in H(m, q)");
    }
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw PreconditionError("duplicate codeword");
  }
}

bool Code::contains(const Vertex& v) const {
  return std::binary_search(words_.begin(), words_.end(), v);
}

int min_distance(const Code& c) {
  if (c.size() < 2) {
    throw PreconditionError("minimum distance undefined on a code with fewer than two words");
  }
  int best = c.m();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      best = std::min(best, hamming_distance(c.word(i), c.word(j)));
    }
  }
  return best;
}

Code apply(const HammingAutomorphism& x, const Code& c) {
  if (c.m() != x.m() || c.q() != x.q()) {
    throw DimensionError("apply: code and automorphism from different spaces");
  }
  std::vector<Vertex> out;
  out.reserve(c.size());
  for (const Vertex& w : c.codewords()) out.push_back(apply(x, w));
  return Code(c.m(), c.q(), std::move(out));
}

DistancePartition::DistancePartition(const Code& c, std::uint64_t cap)
    : m_(c.m()), q_(c.q()), rho_(0) {
  const std::uint64_t n = vertex_space_size(m_, q_, cap);
  dist_.assign(n, std::uint8_t{0xFF});

  // Place values of each coordinate, most significant first (rank order).
  std::vector<std::uint64_t> place(static_cast<std::size_t>(m_), 1);
  for (int i = m_ - 2; i >= 0; --i) {
    place[static_cast<std::size_t>(i)] =
        place[static_cast<std::size_t>(i + 1)] * static_cast<std::uint64_t>(q_);
  }

  std::vector<std::uint64_t> frontier;
  frontier.reserve(c.size());
  for (const Vertex& w : c.codewords()) {
    const std::uint64_t r = vertex_rank(w);
    dist_[r] = 0;
    frontier.push_back(r);
  }
  cell_sizes_.push_back(frontier.size());

  std::vector<std::uint64_t> next;
  std::uint8_t level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (std::uint64_t r : frontier) {
      for (int i = 0; i < m_; ++i) {
        const std::uint64_t pv = place[static_cast<std::size_t>(i)];
        const std::uint64_t digit = (r / pv) % static_cast<std::uint64_t>(q_);
        const std::uint64_t base = r - digit * pv;
        for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(q_); ++s) {
          if (s == digit) continue;
          const std::uint64_t nb = base + s * pv;
          if (dist_[nb] == 0xFF) {
            dist_[nb] = level;
            next.push_back(nb);
          }
        }
      }
    }
    if (!next.empty()) {
      cell_sizes_.push_back(next.size());
      rho_ = level;
    }
    frontier.swap(next);
  }
}

int DistancePartition::distance_to_code(const Vertex& v) const {
  if (v.m() != m_ || v.q() != q_) {
    throw DimensionError("distance_to_code: vertex from a different space");
  }
  return static_cast<int>(dist_[vertex_rank(v)]);
}

std::vector<Vertex> DistancePartition::cell(int i) const {
  if (i < 0 || i > rho_) throw PreconditionError("cell index out of range");
  std::vector<Vertex> out;
  for (std::uint64_t r = 0; r < dist_.size(); ++r) {
    if (dist_[r] == static_cast<std::uint8_t>(i)) out.push_back(vertex_unrank(r, m_, q_));
  }
  return out;
}

DistancePartition distance_partition(const Code& c, std::uint64_t cap) {
  return DistancePartition(c, cap);
}

std::vector<int> diff_entries(const Vertex& u, const Vertex& v) {
  if (u.m() != v.m() || u.q() != v.q()) {
    throw DimensionError("diff_entries: vertices from different spaces");
  }
  std::vector<int> d;
  for (int i = 0; i < u.m(); ++i) {
    if (u[i] != v[i]) d.push_back(i);
  }
  return d;
}

std::vector<Vertex> diff_class(const Vertex& alpha, const Vertex& beta, const Code& c) {
  if (!c.contains(alpha)) throw MembershipError("diff_class: alpha is not a codeword");
  if (!c.contains(beta)) throw MembershipError("diff_class: beta is not a codeword");
  if (alpha == beta) throw PreconditionError("diff_class: alpha and beta must differ");
  const std::vector<int> ref = diff_entries(alpha, beta);
  std::vector<Vertex> out;
  for (const Vertex& g : c.codewords()) {
    if (diff_entries(alpha, g) == ref) out.push_back(g);
  }
  return out;
}

Normalization normalize(const Code& c, const Vertex& alpha, const Vertex& beta, int a) {
  if (a < 0 || a >= c.q()) throw PreconditionError("normalize: target symbol out of range");
  if (!c.contains(alpha) || !c.contains(beta)) {
    throw MembershipError("normalize: alpha and beta must be codewords");
  }
  const int d = hamming_distance(alpha, beta);
  if (c.size() < 2 || d != min_distance(c)) {
    throw PreconditionError("normalize: alpha, beta must realize the minimum distance");
  }
  const int m = c.m();
  const int q = c.q();

  const std::vector<Vertex> cls = diff_class(alpha, beta, c);  // lex-sorted
  const std::vector<int> diff = diff_entries(alpha, beta);     // ascending
  if (cls.size() > static_cast<std::size_t>(q - 1)) {
    throw PreconditionError("normalize: difference class larger than q - 1");
  }

  // Targets c_1 < c_2 < ... for the class members: smallest symbols != a.
  std::vector<int> targets;
  for (int s = 0; s < q && static_cast<int>(targets.size()) < static_cast<int>(cls.size()); ++s) {
    if (s != a) targets.push_back(s);
  }

  std::vector<char> in_diff(static_cast<std::size_t>(m), 0);
  for (int k : diff) in_diff[static_cast<std::size_t>(k)] = 1;

  std::vector<Perm> entry_maps;
  entry_maps.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    if (!in_diff[static_cast<std::size_t>(k)]) {
      entry_maps.push_back(Perm::transposition(q, a, alpha[k]));
      continue;
    }
    // Partial map: alpha_k -> a and the i-th class member's entry -> c_i.
    // Distinct class members differ in every difference coordinate, so the
    // sources are pairwise distinct; extend order-preservingly elsewhere.
    std::vector<int> img(static_cast<std::size_t>(q), -1);
    std::vector<char> used(static_cast<std::size_t>(q), 0);
    img[static_cast<std::size_t>(alpha[k])] = a;
    used[static_cast<std::size_t>(a)] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      img[static_cast<std::size_t>(cls[i][k])] = targets[i];
      used[static_cast<std::size_t>(targets[i])] = 1;
    }
    int next_free = 0;
    for (int s = 0; s < q; ++s) {
      if (img[static_cast<std::size_t>(s)] >= 0) continue;
      while (used[static_cast<std::size_t>(next_free)]) ++next_free;
      img[static_cast<std::size_t>(s)] = next_free;
      used[static_cast<std::size_t>(next_free)] = 1;
    }
    entry_maps.emplace_back(std::move(img));
  }

  // Difference coordinates move order-preservingly onto 0..d-1, the rest
  // onto d..m-1.
  std::vector<int> sigma_img(static_cast<std::size_t>(m), -1);
  int lo = 0, hi = d;
  for (int k = 0; k < m; ++k) {
    sigma_img[static_cast<std::size_t>(k)] = in_diff[static_cast<std::size_t>(k)] ? lo++ : hi++;
  }

  HammingAutomorphism x(std::move(entry_maps), Perm(std::move(sigma_img)));
  Code image = apply(x, c);
  return Normalization{std::move(x), std::move(image), d};
}

}  // namespace hamcode
