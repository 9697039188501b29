#include "bkn/block_permutation.hpp"

#include "bkn/error.hpp"

namespace bkn {

namespace {

// Block index of point v, 1-based.
inline int block_of(int v, int k) { return (v - 1) / k + 1; }

Perm induced_blocks_permutation(int k, const Perm& sigma) {
  const int kn = sigma.degree();
  if (k < 1) fail(errc::parse_error, "block size k must be positive");
  if (kn % k != 0)
    fail(errc::dimension_mismatch,
         "degree " + std::to_string(kn) + " is not a multiple of k=" + std::to_string(k));
  const int n = kn / k;
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int j = block_of(sigma(k * (i - 1) + 1), k);
    for (int b = 2; b <= k; ++b) {
      if (block_of(sigma(k * (i - 1) + b), k) != j)
        fail(errc::not_block_preserving,
             "block " + std::to_string(i) + " is not mapped onto a block", i);
    }
    img[i - 1] = j;
  }
  return Perm(std::move(img));  // bijectivity of sigma makes this a bijection
}

}  // namespace

BlockPermutation::BlockPermutation(int k, Perm sigma)
    : k_(k),
      perm_(std::move(sigma)),
      blocks_(induced_blocks_permutation(k, perm_)),
      blocks_inv_(blocks_.inverse()) {}

BlockPermutation BlockPermutation::identity(int k, int n) {
  return BlockPermutation(k, Perm::identity(k * n));
}

BlockPermutation BlockPermutation::from_one_line(int k, std::vector<int> images) {
  return BlockPermutation(k, Perm(std::move(images)));
}

BlockPermutation BlockPermutation::parse(int k, const std::string& text) {
  return BlockPermutation(k, Perm::parse_one_line(text));
}

Perm BlockPermutation::restriction(int i) const {
  const int src = blocks_inv_(i);
  std::vector<int> img(static_cast<size_t>(k_));
  for (int b = 1; b <= k_; ++b) {
    int v = perm_(k_ * (src - 1) + b) % k_;
    img[b - 1] = (v == 0) ? k_ : v;
  }
  return Perm(std::move(img));
}

BlockPermutation BlockPermutation::inverse() const {
  return BlockPermutation(k_, perm_.inverse());
}

BlockPermutation compose(const BlockPermutation& a, const BlockPermutation& b) {
  if (a.k() != b.k())
    fail(errc::dimension_mismatch, "cannot compose block permutations with k=" +
                                       std::to_string(a.k()) + " and k=" +
                                       std::to_string(b.k()));
  return BlockPermutation(a.k(), compose(a.perm(), b.perm()));
}

BlockPermutation conjugate(const BlockPermutation& g, const BlockPermutation& h) {
  return compose(compose(h, g), h.inverse());
}

BlockPermutation extend(const BlockPermutation& g, int n_prime) {
  if (n_prime < g.n())
    fail(errc::shrink_not_allowed,
         "cannot extend to " + std::to_string(n_prime) + " blocks from " +
             std::to_string(g.n()));
  std::vector<int> img = g.perm().images();
  for (int v = g.degree() + 1; v <= g.k() * n_prime; ++v) img.push_back(v);
  return BlockPermutation(g.k(), Perm(std::move(img)));
}

}  // namespace bkn
