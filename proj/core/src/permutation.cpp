#include "bkn/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "bkn/error.hpp"

namespace bkn {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int m = degree();
  std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > m)
      fail(errc::not_bijection,
           "image " + std::to_string(v) + " outside [1," + std::to_string(m) + "]",
           v);
    if (seen[v])
      fail(errc::not_bijection, "image " + std::to_string(v) + " repeated", v);
    seen[v] = 1;
  }
}

Perm Perm::identity(int m) {
  std::vector<int> img(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) img[i] = i + 1;
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[images_[i - 1] - 1] = i;
  return Perm(std::move(inv));
}

bool Perm::is_identity() const noexcept {
  for (int i = 1; i <= degree(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

std::string Perm::one_line() const {
  std::ostringstream out;
  for (size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ' ';
    out << images_[i];
  }
  return out.str();
}

Perm Perm::parse_one_line(const std::string& text, std::optional<int> degree) {
  std::istringstream in(text);
  std::vector<int> img;
  long long v;
  while (in >> v) {
    if (v < 1 || v > 1'000'000'000)
      fail(errc::parse_error, "image out of range in one-line permutation");
    img.push_back(static_cast<int>(v));
  }
  if (!in.eof()) fail(errc::parse_error, "malformed one-line permutation: " + text);
  if (degree && static_cast<int>(img.size()) != *degree)
    fail(errc::dimension_mismatch,
         "expected " + std::to_string(*degree) + " images, got " +
             std::to_string(img.size()));
  return Perm(std::move(img));
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size() + 1, 0);
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      seen[j] = 1;
      cyc.push_back(j);
      j = images_[j - 1];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::cycle_string() const {
  std::ostringstream out;
  for (const auto& cyc : cycles()) {
    out << '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out << ',';
      out << cyc[i];
    }
    out << ')';
  }
  return out.str();
}

Perm Perm::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) img[i] = i + 1;
  for (const auto& cyc : cycles) {
    for (size_t t = 0; t < cyc.size(); ++t) {
      int from = cyc[t];
      int to = cyc[(t + 1) % cyc.size()];
      if (from < 1 || from > m)
        fail(errc::not_bijection, "cycle entry outside [1,m]", from);
      img[from - 1] = to;
    }
  }
  return Perm(std::move(img));
}

Partition Perm::cycle_type() const {
  std::vector<int> lens;
  for (const auto& cyc : cycles()) lens.push_back(static_cast<int>(cyc.size()));
  return Partition(std::move(lens));
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    fail(errc::dimension_mismatch,
         "cannot compose permutations of degrees " + std::to_string(a.degree()) +
             " and " + std::to_string(b.degree()));
  std::vector<int> img(static_cast<size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) img[i - 1] = a(b(i));
  return Perm(std::move(img));
}

}  // namespace bkn
