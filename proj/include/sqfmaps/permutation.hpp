#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqf {

using Point = std::uint32_t;

// A bijection on {0, ..., degree-1}. Composition acts left to right:
// (a * b)(p) = b(a(p)), so that a^b = b^-1 a b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Skips the bijection check; callers guarantee `images` is a bijection.
  static Permutation from_images_unchecked(std::vector<Point> images);
  // Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);
  // Parses "(0 1 2)(3 4)" or "()" for the given degree.
  static Permutation parse(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(long long k) const;
  // Least k >= 1 with g^k = 1 (lcm of cycle lengths).
  std::uint64_t order() const;
  std::vector<std::vector<Point>> cycles() const;
  // Disjoint cycle notation, fixed points omitted, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

// Left-to-right product: compose(a, b)(p) = b(a(p)). Throws InvalidArgument
// on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}
// a^b = b^-1 a b.
Permutation conjugate(const Permutation& a, const Permutation& b);
// [a, b] = a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

// Embeds g into a larger degree by shifting its support by `offset` points.
Permutation shift(const Permutation& g, std::size_t offset, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const noexcept;
};

}  // namespace sqf
