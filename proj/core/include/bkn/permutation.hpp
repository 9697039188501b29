#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bkn/partition.hpp"

namespace bkn {

// Permutation of [m] in one-line notation: images()[i-1] is the image of i.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);  // must be a bijection of [m]

  static Perm identity(int m);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Perm inverse() const;
  bool is_identity() const noexcept;

  bool operator==(const Perm& o) const noexcept = default;
  bool operator<(const Perm& o) const noexcept { return images_ < o.images_; }

  // "12 10 11 20"
  std::string one_line() const;
  // Degree is the number of images unless given explicitly.
  static Perm parse_one_line(const std::string& text,
                             std::optional<int> degree = std::nullopt);

  // Disjoint cycles, each rotated to start at its minimum, ordered by that
  // minimum; fixed points included.
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;  // "(1,4)(2,7)(3)"
  static Perm from_cycles(int m, const std::vector<std::vector<int>>& cycles);

  Partition cycle_type() const;

 private:
  std::vector<int> images_;
};

// (a o b)(i) = a(b(i)); degrees must agree.
Perm compose(const Perm& a, const Perm& b);

}  // namespace bkn
