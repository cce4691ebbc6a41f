#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "braidcert/braid.hpp"
#include "braidcert/rational.hpp"

namespace braidcert {

// Conjugacy class data for B_3, with C = Delta_3^2 = (s1 s2)^3:
//   PseudoAnosov  C^d s1 s2^-a1 ... s1 s2^-an   (a_i >= 0, some a_i > 0)
//   Reducible     C^d s2^m                      (m == 0: the central braid C^d)
//   Periodic      C^d s1^m s2^-1                (m in {-1, -2, -3})
struct PseudoAnosovForm {
  std::int64_t d = 0;
  std::vector<std::int64_t> a;  // lexicographically least cyclic rotation
  friend bool operator==(const PseudoAnosovForm&, const PseudoAnosovForm&) = default;
};

struct ReducibleForm {
  std::int64_t d = 0;
  std::int64_t m = 0;
  bool central() const { return m == 0; }
  friend bool operator==(const ReducibleForm&, const ReducibleForm&) = default;
};

struct PeriodicForm {
  std::int64_t d = 0;
  int m = -1;
  friend bool operator==(const PeriodicForm&, const PeriodicForm&) = default;
};

struct ThreeBraidNormalForm {
  std::variant<PseudoAnosovForm, ReducibleForm, PeriodicForm> form;

  std::int64_t d() const;
  bool central() const;
  friend bool operator==(const ThreeBraidNormalForm&, const ThreeBraidNormalForm&) = default;
};

enum class NtType { kPseudoAnosov, kReducible, kPeriodic };
enum class LSpaceStatus { kLSpace, kNotLSpace };

std::string_view to_string(NtType t);
std::string_view to_string(LSpaceStatus s);
std::string to_string(const ThreeBraidNormalForm& nf);

// Conjugacy class of b. Works in B_3 = <x, y | x^2 = y^3> with x = Delta,
// y = s1 s2 and x^2 = y^3 = C central: the word is brought to the
// amalgamated-product normal form C^p (alternating x, y^{1|2}), cyclically
// reduced, then matched against the three families.
ThreeBraidNormalForm normal_form(const BraidWord& b);

// The family's canonical word, e.g. C^d s2^m for Reducible.
BraidWord representative(const ThreeBraidNormalForm& nf);

// Central braids are reported as Reducible; check nf.central() separately.
NtType nt_type(const ThreeBraidNormalForm& nf);

struct Matrix2x2 {
  BigInt a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

  BigInt trace() const { return a + d; }
  BigInt det() const { return a * d - b * c; }
  friend Matrix2x2 operator*(const Matrix2x2& x, const Matrix2x2& y);
  friend bool operator==(const Matrix2x2&, const Matrix2x2&) = default;
};

// s1 -> [[1,1],[0,1]], s2 -> [[1,0],[-1,1]]; Delta^2 maps to -I.
Matrix2x2 sl2_image(const BraidWord& b);

// Whether the double branched cover of the closure of the class is an L-space
// (Baldwin's classification of closed 3-braids).
LSpaceStatus baldwin_lspace_double_cover(const ThreeBraidNormalForm& nf);

void require_three_strands(const BraidWord& b);

}  // namespace braidcert
