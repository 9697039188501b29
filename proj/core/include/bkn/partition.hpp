#pragma once

#include <string>
#include <vector>

#include "bkn/numeric.hpp"

namespace bkn {

// Integer partition with weakly decreasing parts. Construction sorts, so
// parts may be given in any order; every part must be positive.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }    // sum of parts
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int multiplicity(int part) const noexcept;

  bool operator==(const Partition& o) const noexcept = default;

  // Enumeration order: smaller size first; within a size, parts compared
  // lexicographically with larger leading parts first, so (3) < (2,1) < (1,1,1).
  bool operator<(const Partition& o) const noexcept;

  // "[3,1,1]", "[]"
  std::string to_string() const;
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// z(lambda) = prod_i i^{m_i} m_i!, the centralizer order of a cycle type in
// the symmetric group on |lambda| points.
BigInt z(const Partition& p);

// Multiset union of the parts.
Partition union_of(const Partition& a, const Partition& b);

// Multiset difference; every part of b must occur in a at least as often.
Partition subtract(const Partition& a, const Partition& b);

// The partition with all parts equal to 1 removed.
Partition proper_part(const Partition& p);

// All partitions of m in the order induced by Partition::operator<:
// 3 -> [3], [2,1], [1,1,1].
std::vector<Partition> enumerate_partitions(int m);

}  // namespace bkn
