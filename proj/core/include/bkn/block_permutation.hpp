#pragma once

#include <string>
#include <vector>

#include "bkn/permutation.hpp"

namespace bkn {

// Element of the subgroup of S_{kn} whose elements map each of the n
// consecutive k-blocks {(i-1)k+1, ..., ik} onto a block. Construction
// validates block preservation and reports the first violating block.
class BlockPermutation {
 public:
  BlockPermutation(int k, Perm sigma);
  static BlockPermutation identity(int k, int n);
  static BlockPermutation from_one_line(int k, std::vector<int> images);
  static BlockPermutation parse(int k, const std::string& text);

  int k() const noexcept { return k_; }
  int n() const noexcept { return blocks_.degree(); }
  int degree() const noexcept { return perm_.degree(); }

  const Perm& perm() const noexcept { return perm_; }
  int operator()(int i) const { return perm_(i); }
  std::string one_line() const { return perm_.one_line(); }

  // Permutation of the block indices: i -> j iff the i-th block maps onto
  // the j-th.
  const Perm& blocks_permutation() const noexcept { return blocks_; }

  // Local action on the block that lands at position i, normalized to S_k.
  Perm restriction(int i) const;

  BlockPermutation inverse() const;
  bool is_identity() const noexcept { return perm_.is_identity(); }

  bool operator==(const BlockPermutation& o) const noexcept {
    return k_ == o.k_ && perm_ == o.perm_;
  }
  bool operator<(const BlockPermutation& o) const noexcept {
    if (k_ != o.k_) return k_ < o.k_;
    return perm_ < o.perm_;
  }

 private:
  int k_ = 1;
  Perm perm_;
  Perm blocks_;
  Perm blocks_inv_;
};

// (a o b)(i) = a(b(i)); k and degree must agree.
BlockPermutation compose(const BlockPermutation& a, const BlockPermutation& b);

// h g h^{-1}
BlockPermutation conjugate(const BlockPermutation& g, const BlockPermutation& h);

// Embed into the group on n_prime >= n blocks, fixing the new points.
BlockPermutation extend(const BlockPermutation& g, int n_prime);

}  // namespace bkn
