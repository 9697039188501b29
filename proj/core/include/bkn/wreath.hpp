#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bkn/block_permutation.hpp"
#include "bkn/numeric.hpp"

namespace bkn {

// Element ((s_1, ..., s_n); p) with s_i in S_k and p in S_n.
class WreathElement {
 public:
  WreathElement(int k, std::vector<Perm> locals, Perm outer);

  int k() const noexcept { return k_; }
  int n() const noexcept { return outer_.degree(); }
  const std::vector<Perm>& locals() const noexcept { return locals_; }
  const Perm& local(int i) const { return locals_[static_cast<size_t>(i) - 1]; }
  const Perm& outer() const noexcept { return outer_; }

  bool operator==(const WreathElement& o) const noexcept = default;

  // "((3 2 1, 2 3 1); 2 1)": locals in one-line notation, then the outer part.
  std::string to_string() const;
  // "(((1,3), (1,2,3)); (1,2))" with identity locals printed as 1.
  std::string cycle_form() const;

 private:
  int k_ = 1;
  std::vector<Perm> locals_;
  Perm outer_;
};

// The isomorphism onto the wreath product: locals are the normalized
// restrictions, the outer part is the blocks permutation.
WreathElement psi(const BlockPermutation& g);

// Its inverse: ((s; p)) acts by k(a-1)+b -> k(p(a)-1)+s_{p(a)}(b).
BlockPermutation phi(const WreathElement& w);

// ((s; p)) ((e; q)) = ((s_1 e_{p^{-1}(1)}, ..., s_n e_{p^{-1}(n)}); p q)
WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b);
WreathElement wreath_inverse(const WreathElement& a);
WreathElement wreath_identity(int k, int n);

// (k!)^n n!
BigInt group_order(int k, int n);

// Visit the whole group once, in lexicographic order of the tuple
// (outer one-line, local one-lines with the first block most significant).
// The visitor returns false to stop early. The full order must fit the
// budget before enumeration starts.
void enumerate_group(int k, int n,
                     const std::function<bool(const BlockPermutation&)>& visit,
                     Budget budget = {});

}  // namespace bkn
