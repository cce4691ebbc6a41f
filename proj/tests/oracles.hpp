#pragma once

// Test-only reference computations, independent of the library's word
// problem, normal forms and floor search.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <vector>

#include "braidcert/braid.hpp"
#include "braidcert/dehornoy.hpp"

namespace oracle {

using braidcert::BraidWord;
using braidcert::Letter;

using FreeWord = std::vector<int>;  // +j = x_j, -j = x_j^-1, j in 1..m

inline void push_reduced(FreeWord& w, int x) {
  if (!w.empty() && w.back() == -x) {
    w.pop_back();
  } else {
    w.push_back(x);
  }
}

// Artin's faithful action of B_m on the free group F_m:
//   s_i:    x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
//   s_i^-1: x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
// Returns whether b acts trivially, or nullopt if images outgrow `cap`.
inline std::optional<bool> artin_trivial(const BraidWord& b, std::size_t cap = 200000) {
  const int m = b.strands();
  std::vector<FreeWord> img(m + 1);
  for (int j = 1; j <= m; ++j) img[j] = {j};
  for (Letter l : b.letters()) {
    const int i = std::abs(l);
    auto image_of = [&](int gen) -> FreeWord {
      const int g = std::abs(gen);
      FreeWord w;
      if (g != i && g != i + 1) {
        w = {g};
      } else if (l > 0) {
        w = g == i ? FreeWord{i, i + 1, -i} : FreeWord{i};
      } else {
        w = g == i ? FreeWord{i + 1} : FreeWord{-(i + 1), i, i + 1};
      }
      if (gen < 0) {
        FreeWord inv(w.rbegin(), w.rend());
        for (int& x : inv) x = -x;
        return inv;
      }
      return w;
    };
    for (int j = 1; j <= m; ++j) {
      FreeWord next;
      for (int x : img[j]) {
        for (int y : image_of(x)) push_reduced(next, y);
      }
      if (next.size() > cap) return std::nullopt;
      img[j] = std::move(next);
    }
  }
  for (int j = 1; j <= m; ++j) {
    if (img[j] != FreeWord{j}) return false;
  }
  return true;
}

// B_3 embeds in SL(2, Z) x Z via (Burau at t = -1, exponent sum): the kernel
// of the matrix part is generated by Delta^4, which has exponent sum 12.
struct B3Key {
  long long a, b, c, d, e;
  friend bool operator==(const B3Key&, const B3Key&) = default;
};

inline B3Key b3_key(const BraidWord& w) {
  long long a = 1, b = 0, c = 0, d = 1, e = 0;
  for (Letter l : w.letters()) {
    long long x[4];
    switch (l) {
      case 1: x[0] = 1; x[1] = 1; x[2] = 0; x[3] = 1; break;
      case -1: x[0] = 1; x[1] = -1; x[2] = 0; x[3] = 1; break;
      case 2: x[0] = 1; x[1] = 0; x[2] = -1; x[3] = 1; break;
      default: x[0] = 1; x[1] = 0; x[2] = 1; x[3] = 1; break;
    }
    const long long na = a * x[0] + b * x[2], nb = a * x[1] + b * x[3];
    const long long nc = c * x[0] + d * x[2], nd = c * x[1] + d * x[3];
    a = na; b = nb; c = nc; d = nd;
    e += l > 0 ? 1 : -1;
  }
  return {a, b, c, d, e};
}

inline bool b3_equal(const BraidWord& u, const BraidWord& v) { return b3_key(u) == b3_key(v); }

inline BraidWord random_word(std::mt19937_64& rng, int strands, std::size_t max_len,
                             std::size_t min_len = 0) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> raw(len(rng));
  for (auto& x : raw) x = sign(rng) ? gen(rng) : -gen(rng);
  return BraidWord(strands, std::move(raw));
}

inline BraidWord random_positive_word(std::mt19937_64& rng, int strands, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::vector<Letter> raw(len(rng));
  for (auto& x : raw) x = gen(rng);
  return BraidWord(strands, std::move(raw));
}

// Rewrites w with braid relations and inserted cancelling pairs; the result
// represents the same braid as w.
inline BraidWord scramble(std::mt19937_64& rng, const BraidWord& w, int moves) {
  std::vector<Letter> x(w.letters().begin(), w.letters().end());
  const int m = w.strands();
  std::uniform_int_distribution<int> gen(1, m - 1);
  for (int step = 0; step < moves; ++step) {
    std::uniform_int_distribution<std::size_t> at(0, x.size());
    const std::size_t p = at(rng);
    if (step % 3 == 0 || x.size() < 3) {
      const int g = gen(rng);
      x.insert(x.begin() + static_cast<std::ptrdiff_t>(p), {g, -g});
      continue;
    }
    const std::size_t q = std::min(p, x.size() - 2);
    const int a = x[q], b = x[q + 1];
    if (std::abs(std::abs(a) - std::abs(b)) >= 2) {
      std::swap(x[q], x[q + 1]);  // far commutation
    } else if (q + 2 < x.size() && a == x[q + 2] && std::abs(std::abs(a) - std::abs(b)) == 1 &&
               (a > 0) == (b > 0)) {
      // s_i s_j s_i -> s_j s_i s_j (same signs)
      x[q] = b; x[q + 1] = a; x[q + 2] = b;
    }
  }
  return BraidWord(m, std::move(x));
}

// Floor by the definition: smallest k with Delta^(-2k-2) < b < Delta^(2k+2),
// both sides checked with compare().
inline std::int64_t floor_by_definition(const BraidWord& b) {
  using braidcert::Ordering;
  for (std::int64_t k = 0;; ++k) {
    const auto upper = braidcert::delta_power(b.strands(), 2 * k + 2);
    const auto lower = braidcert::delta_power(b.strands(), -2 * k - 2);
    if (braidcert::compare(lower, b) == Ordering::kLess && braidcert::compare(b, upper) == Ordering::kLess) {
      return k;
    }
  }
}

}  // namespace oracle
