#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace commgraph {

using Point = std::uint16_t;

// A bijection of {0..degree-1}, stored as its image array. Text forms use
// 1-based cycle notation, e.g. "(1 2)(3 4)"; the identity prints as "()".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<Point> images);

  // Throws NonBijectiveGenerator unless the images form a bijection.
  static Permutation from_images(std::vector<Point> images);
  // Parses 1-based cycle notation on `degree` points. Cycles may be empty
  // "()" and are separated by optional whitespace.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

// (lhs * rhs)(p) = lhs(rhs(p)), i.e. rhs acts first.
Permutation compose(const Permutation& lhs, const Permutation& rhs);
inline Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  return compose(lhs, rhs);
}

// Raw-array variants used by the hot loops.
inline bool images_commute(const Point* a, const Point* b, std::size_t degree) {
  for (std::size_t p = 0; p < degree; ++p) {
    if (a[b[p]] != b[a[p]]) return false;
  }
  return true;
}

}  // namespace commgraph
