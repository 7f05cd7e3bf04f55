#include "word_perm.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <stdexcept>

namespace hamcode::internal {
namespace {

struct Search {
  int m = 0;
  std::size_t n = 0;
  const std::function<void(const std::vector<int>&)>* sink = nullptr;
  std::vector<std::uint64_t> col_c, col_d;      // word-index mask per position
  std::vector<std::vector<int>> fp_c, fp_d;     // per-position weight-class counts
  std::vector<std::vector<int>> pair_c, pair_d; // co-incidence degrees
  std::vector<int> sigma;
  std::uint32_t used = 0;
  std::uint64_t full_mask = 0;

  void descend(int i, const std::vector<std::uint64_t>& masks) {
    if (i == m) {
      (*sink)(sigma);
      return;
    }
    std::vector<std::uint64_t> next(n);
    for (int j = 0; j < m; ++j) {
      if (used & (std::uint32_t{1} << j)) continue;
      if (fp_d[static_cast<std::size_t>(i)] != fp_c[static_cast<std::size_t>(j)]) continue;
      bool pairs_ok = true;
      for (int prev = 0; prev < i; ++prev) {
        if (pair_d[static_cast<std::size_t>(i)][static_cast<std::size_t>(prev)] !=
            pair_c[static_cast<std::size_t>(j)][static_cast<std::size_t>(sigma[static_cast<std::size_t>(prev)])]) {
          pairs_ok = false;
          break;
        }
      }
      if (!pairs_ok) continue;
      bool alive = true;
      for (std::size_t x = 0; x < n; ++x) {
        const bool has = (col_d[static_cast<std::size_t>(i)] >> x) & 1;
        next[x] = masks[x] & (has ? col_c[static_cast<std::size_t>(j)]
                                  : (full_mask & ~col_c[static_cast<std::size_t>(j)]));
        if (next[x] == 0) {
          alive = false;
          break;
        }
      }
      if (!alive) continue;
      sigma[static_cast<std::size_t>(i)] = j;
      used |= std::uint32_t{1} << j;
      descend(i + 1, next);
      used &= ~(std::uint32_t{1} << j);
      sigma[static_cast<std::size_t>(i)] = -1;
    }
  }
};

std::vector<std::uint64_t> column_masks(int m, const std::vector<std::uint64_t>& words) {
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(m), 0);
  for (std::size_t x = 0; x < words.size(); ++x) {
    for (int j = 0; j < m; ++j) {
      if ((words[x] >> j) & 1) cols[static_cast<std::size_t>(j)] |= std::uint64_t{1} << x;
    }
  }
  return cols;
}

std::vector<std::vector<int>> fingerprints(int m, const std::vector<std::uint64_t>& words,
                                           const std::vector<int>& weight_class, int n_classes) {
  std::vector<std::vector<int>> fp(static_cast<std::size_t>(m),
                                   std::vector<int>(static_cast<std::size_t>(n_classes), 0));
  for (std::size_t x = 0; x < words.size(); ++x) {
    const int cls = weight_class[static_cast<std::size_t>(std::popcount(words[x]))];
    for (int j = 0; j < m; ++j) {
      if ((words[x] >> j) & 1) ++fp[static_cast<std::size_t>(j)][static_cast<std::size_t>(cls)];
    }
  }
  return fp;
}

std::vector<std::vector<int>> pair_degrees(int m, const std::vector<std::uint64_t>& words) {
  std::vector<std::vector<int>> deg(static_cast<std::size_t>(m),
                                    std::vector<int>(static_cast<std::size_t>(m), 0));
  for (const std::uint64_t w : words) {
    for (int a = 0; a < m; ++a) {
      if (!((w >> a) & 1)) continue;
      for (int b = 0; b < m; ++b) {
        if ((w >> b) & 1) ++deg[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      }
    }
  }
  return deg;
}

}  // namespace

void for_each_word_permutation(int m, const std::vector<std::uint64_t>& c_words,
                               const std::vector<std::uint64_t>& d_words,
                               const std::function<void(const std::vector<int>&)>& sink) {
  if (m < 1 || m > 16 || c_words.empty() || c_words.size() > 64 ||
      c_words.size() != d_words.size()) {
    throw std::logic_error("word permutation search called outside its capacity");
  }
  // Weight classes shared by both lists; a mismatch just yields no leaves.
  std::vector<int> weight_class(65, -1);
  int n_classes = 0;
  for (const std::uint64_t w : c_words) {
    const int wt = std::popcount(w);
    if (weight_class[static_cast<std::size_t>(wt)] < 0) {
      weight_class[static_cast<std::size_t>(wt)] = n_classes++;
    }
  }
  for (const std::uint64_t w : d_words) {
    if (weight_class[static_cast<std::size_t>(std::popcount(w))] < 0) return;
  }

  Search s;
  s.m = m;
  s.n = c_words.size();
  s.sink = &sink;
  s.col_c = column_masks(m, c_words);
  s.col_d = column_masks(m, d_words);
  s.fp_c = fingerprints(m, c_words, weight_class, n_classes);
  s.fp_d = fingerprints(m, d_words, weight_class, n_classes);
  s.pair_c = pair_degrees(m, c_words);
  s.pair_d = pair_degrees(m, d_words);
  s.sigma.assign(static_cast<std::size_t>(m), -1);
  s.full_mask = s.n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << s.n) - 1);

  std::vector<std::uint64_t> root(s.n, s.full_mask);
  s.descend(0, root);
}

}  // namespace hamcode::internal
