#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "braidcert/braid.hpp"

namespace braidcert {

// Length cap applied to the intermediate words of handle reduction.
struct ReductionBudget {
  std::size_t max_length = kMaxWordLength;
};

enum class OrderSign { kNegative = -1, kTrivial = 0, kPositive = 1 };
enum class Ordering { kLess = -1, kEqual = 0, kGreater = 1 };

std::string_view to_string(OrderSign s);
std::string_view to_string(Ordering o);

// Dehornoy handle reduction. Repeatedly replaces the handle that ends
// leftmost,
//   s_i^e w0 s_{i+1}^d w1 ... s_{i+1}^d wk s_i^-e
//     -> w0 s_{i+1}^-e s_i^d s_{i+1}^e w1 ... s_{i+1}^-e s_i^d s_{i+1}^e wk,
// until no handle remains. The result is empty, sigma-positive or
// sigma-negative. Throws ReductionBudgetExceeded past the cap.
std::vector<Letter> handle_reduce(std::span<const Letter> letters, int strands,
                                  ReductionBudget budget = {});

// Sign of u in the Dehornoy order: Positive iff some representative contains
// s_j but no s_j^-1 and no s_i^{+-1} for i < j.
OrderSign sigma_sign(const BraidWord& u, ReductionBudget budget = {});

// u <_D v iff u^-1 v >_D 1.
Ordering compare(const BraidWord& u, const BraidWord& v, ReductionBudget budget = {});

// Word problem: u represents the identity of B_m.
bool is_trivial(const BraidWord& u, ReductionBudget budget = {});

// min { k >= 0 : Delta^(-2k-2) <_D u <_D Delta^(2k+2) }.
std::int64_t dehornoy_floor(const BraidWord& u, ReductionBudget budget = {});

}  // namespace braidcert
