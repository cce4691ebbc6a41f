#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidcert {

// A letter +i stands for the Artin generator sigma_i, -i for its inverse.
using Letter = int;

// Hard cap on the length of any word the library builds, including the
// intermediate words of handle reduction.
inline constexpr std::size_t kMaxWordLength = 1'000'000;

// Element of the braid group B_m written as a freely reduced word in the
// Artin generators. Words are immutable; every constructor free-reduces.
//
// Products read left to right: in u * v the braid u sits on top of v, so the
// letters of u are traversed first.
class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<Letter> letters);

  // sigma_i^power in B_m.
  static BraidWord generator(int strands, int index, std::int64_t power = 1);

  int strands() const { return strands_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord pow(std::int64_t exponent) const;

  // Literal equality of the reduced words; group equality is is_trivial().
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

BraidWord compose(const BraidWord& u, const BraidWord& v);
inline BraidWord operator*(const BraidWord& u, const BraidWord& v) { return compose(u, v); }
inline BraidWord inverse(const BraidWord& u) { return u.inverse(); }

// Free reduction of a raw letter sequence; idempotent.
std::vector<Letter> free_reduce(std::span<const Letter> letters);

// Garside half twist (s1 ... s_{m-1})(s1 ... s_{m-2}) ... (s1 s2)(s1).
BraidWord delta(int strands);
// Delta_m^power, built by repetition of delta(m) or its inverse.
BraidWord delta_power(int strands, std::int64_t power);

std::int64_t exponent_sum(const BraidWord& u);

// Strand permutation. images()[p] is the bottom position (0-based) reached by
// the strand that starts at top position p. For products,
// permutation(u * v) == permutation(u).then(permutation(v)).
class Permutation {
 public:
  explicit Permutation(std::size_t size);  // identity
  explicit Permutation(std::vector<int> images);

  std::size_t size() const { return images_.size(); }
  const std::vector<int>& images() const { return images_; }
  int operator()(int p) const { return images_[p]; }

  // First this, then `next`.
  Permutation then(const Permutation& next) const;
  std::size_t cycle_count() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Permutation permutation(const BraidWord& u);
// Number of components of the closed braid; the closure is a knot iff 1.
std::size_t closure_components(const BraidWord& u);

// Text format "m: i1 i2 ...", e.g. "3: 1 2 -1". The empty word is "3:".
std::string to_string(const BraidWord& u);
BraidWord parse_braid(std::string_view text);

std::ostream& operator<<(std::ostream& os, const BraidWord& u);

}  // namespace braidcert
