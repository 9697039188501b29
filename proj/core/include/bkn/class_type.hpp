#pragma once

#include <string>
#include <vector>

#include "bkn/block_permutation.hpp"
#include "bkn/partition.hpp"

namespace bkn {

// Conjugacy invariant: one partition slot per cycle type rho of S_k, the
// slot sizes summing to the number of blocks n. Slots are kept in the
// canonical order of enumerate_partitions(k).
class ClassType {
 public:
  explicit ClassType(int k);  // all slots empty, n = 0
  ClassType(int k, std::vector<Partition> slots_in_canonical_order);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }  // sum of slot sizes

  const std::vector<Partition>& slot_keys() const noexcept { return keys_; }
  const std::vector<Partition>& slots() const noexcept { return slots_; }
  const Partition& slot(const Partition& rho) const;

  // Replace one slot; used when padding and by the extraction routine.
  ClassType with_slot(const Partition& rho, Partition value) const;

  // x(1^k) has no part 1, so the family labels a class for every n' >= n.
  bool is_proper() const;

  bool operator==(const ClassType& o) const noexcept {
    return k_ == o.k_ && slots_ == o.slots_;
  }
  bool operator<(const ClassType& o) const noexcept {
    if (k_ != o.k_) return k_ < o.k_;
    return slots_ < o.slots_;
  }

  // "{[1,1,1]:[1]; [2,1]:[2,1]; [3]:[2,2]}": keys ascending, empty slots
  // omitted, "{}" for n = 0.
  std::string to_string() const;
  static ClassType parse(int k, const std::string& text);

 private:
  int k_ = 1;
  int n_ = 0;
  std::vector<Partition> keys_;
  std::vector<Partition> slots_;
};

// The conjugacy type of a block permutation: every cycle of the blocks
// permutation contributes its length as a part of the slot labelled by the
// cycle type of the composite of its normalized restrictions.
ClassType type_of(const BlockPermutation& g);

}  // namespace bkn
