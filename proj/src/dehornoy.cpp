#include "braidcert/dehornoy.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "braidcert/error.hpp"

namespace braidcert {

std::string_view to_string(OrderSign s) {
  switch (s) {
    case OrderSign::kNegative: return "Negative";
    case OrderSign::kTrivial: return "Trivial";
    case OrderSign::kPositive: return "Positive";
  }
  return "?";
}

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::kLess: return "Less";
    case Ordering::kEqual: return "Equal";
    case Ordering::kGreater: return "Greater";
  }
  return "?";
}

namespace {

constexpr std::ptrdiff_t kNone = -1;

// Scan state: open[i] is the position of the last s_i^{+-1} with no letter of
// index <= i after it, i.e. the only possible left end of a s_i-handle.
class HandleReducer {
 public:
  HandleReducer(std::span<const Letter> letters, int strands, ReductionBudget budget)
      : word_(letters.begin(), letters.end()), open_(strands, kNone), budget_(budget) {}

  std::vector<Letter> run() {
    std::size_t pos = 0;
    while (pos < word_.size()) {
      const Letter x = word_[pos];
      const int i = std::abs(x);
      const std::ptrdiff_t start = open_[i];
      if (start != kNone && word_[start] == -x) {
        reduce(static_cast<std::size_t>(start), pos);
        pos = static_cast<std::size_t>(start);
        rebuild_state(pos);
        continue;
      }
      open_[i] = static_cast<std::ptrdiff_t>(pos);
      for (std::size_t j = i + 1; j < open_.size(); ++j) open_[j] = kNone;
      ++pos;
    }
    return std::move(word_);
  }

 private:
  void reduce(std::size_t start, std::size_t end) {
    const Letter head = word_[start];
    const int i = std::abs(head);
    const int e = head > 0 ? 1 : -1;

    scratch_.clear();
    for (std::size_t p = start + 1; p < end; ++p) {
      const Letter y = word_[p];
      if (std::abs(y) == i + 1) {
        const int d = y > 0 ? 1 : -1;
        scratch_.push_back(-e * (i + 1));
        scratch_.push_back(d * i);
        scratch_.push_back(e * (i + 1));
      } else {
        scratch_.push_back(y);
      }
    }

    const std::size_t old_span = end - start + 1;
    const std::size_t new_size = word_.size() - old_span + scratch_.size();
    if (new_size > budget_.max_length) {
      throw BraidError(ErrorCode::kReductionBudgetExceeded,
                       "handle reduction exceeded " + std::to_string(budget_.max_length) + " letters");
    }
    if (scratch_.size() <= old_span) {
      std::copy(scratch_.begin(), scratch_.end(), word_.begin() + start);
      word_.erase(word_.begin() + start + scratch_.size(), word_.begin() + end + 1);
    } else {
      std::copy(scratch_.begin(), scratch_.begin() + old_span, word_.begin() + start);
      word_.insert(word_.begin() + end + 1, scratch_.begin() + old_span, scratch_.end());
    }
  }

  // Recompute open_ for the prefix [0, pos) by scanning backward; the scan
  // stops once s_1 is seen since nothing before it can stay open.
  void rebuild_state(std::size_t pos) {
    std::fill(open_.begin(), open_.end(), kNone);
    int lowest = std::numeric_limits<int>::max();
    for (std::size_t p = pos; p-- > 0;) {
      const int x = std::abs(word_[p]);
      if (x < lowest) {
        open_[x] = static_cast<std::ptrdiff_t>(p);
        lowest = x;
        if (lowest == 1) break;
      }
    }
  }

  std::vector<Letter> word_;
  std::vector<Letter> scratch_;
  std::vector<std::ptrdiff_t> open_;
  ReductionBudget budget_;
};

OrderSign sign_of_reduced(std::span<const Letter> reduced) {
  if (reduced.empty()) return OrderSign::kTrivial;
  Letter lowest = reduced[0];
  for (Letter x : reduced) {
    if (std::abs(x) < std::abs(lowest)) lowest = x;
  }
  return lowest > 0 ? OrderSign::kPositive : OrderSign::kNegative;
}

OrderSign sign_of_letters(std::span<const Letter> letters, int strands, ReductionBudget budget) {
  if (letters.size() > budget.max_length) {
    throw BraidError(ErrorCode::kReductionBudgetExceeded,
                     "input of " + std::to_string(letters.size()) + " letters exceeds reduction budget");
  }
  HandleReducer reducer(letters, strands, budget);
  const auto reduced = reducer.run();
  return sign_of_reduced(reduced);
}

void require_same_strands(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw BraidError(ErrorCode::kStrandMismatch, "cannot compare B_" + std::to_string(u.strands()) +
                                                     " with B_" + std::to_string(v.strands()));
  }
}

// Letters of Delta^(2j) followed by `tail`; Delta^2 is central so the side it
// is placed on does not matter.
std::vector<Letter> twist_then(int strands, std::int64_t j, std::span<const Letter> tail,
                               ReductionBudget budget) {
  const BraidWord half = delta(strands);
  const auto reps = static_cast<std::size_t>(2 * std::llabs(j));
  const std::size_t total = reps * half.length() + tail.size();
  if (total > budget.max_length) {
    throw BraidError(ErrorCode::kReductionBudgetExceeded,
                     "comparison word of " + std::to_string(total) + " letters exceeds reduction budget");
  }
  std::vector<Letter> out;
  out.reserve(total);
  for (std::size_t r = 0; r < reps; ++r) {
    for (Letter x : half.letters()) out.push_back(j >= 0 ? x : -x);
  }
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace

std::vector<Letter> handle_reduce(std::span<const Letter> letters, int strands,
                                  ReductionBudget budget) {
  if (letters.size() > budget.max_length) {
    throw BraidError(ErrorCode::kReductionBudgetExceeded,
                     "input of " + std::to_string(letters.size()) + " letters exceeds reduction budget");
  }
  HandleReducer reducer(letters, strands, budget);
  return reducer.run();
}

OrderSign sigma_sign(const BraidWord& u, ReductionBudget budget) {
  return sign_of_letters(u.letters(), u.strands(), budget);
}

Ordering compare(const BraidWord& u, const BraidWord& v, ReductionBudget budget) {
  require_same_strands(u, v);
  std::vector<Letter> w;
  w.reserve(u.length() + v.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) w.push_back(-*it);
  w.insert(w.end(), v.letters().begin(), v.letters().end());
  switch (sign_of_letters(free_reduce(w), u.strands(), budget)) {
    case OrderSign::kPositive: return Ordering::kLess;
    case OrderSign::kNegative: return Ordering::kGreater;
    case OrderSign::kTrivial: return Ordering::kEqual;
  }
  return Ordering::kEqual;
}

bool is_trivial(const BraidWord& u, ReductionBudget budget) {
  return sigma_sign(u, budget) == OrderSign::kTrivial;
}

std::int64_t dehornoy_floor(const BraidWord& u, ReductionBudget budget) {
  const int m = u.strands();
  const OrderSign sign = sigma_sign(u, budget);
  if (sign == OrderSign::kTrivial) return 0;

  // For u > 1 the lower bound Delta^(-2k-2) < u is automatic, and dually for
  // u < 1, so one comparison per k suffices:
  //   u > 1:  u < Delta^(2j)   iff  Delta^(2j) u^-1 > 1
  //   u < 1:  Delta^(-2j) < u  iff  Delta^(2j) u   > 1
  const BraidWord probe = sign == OrderSign::kPositive ? u.inverse() : u;
  auto inside = [&](std::int64_t k) {
    auto w = twist_then(m, k + 1, probe.letters(), budget);
    return sign_of_letters(free_reduce(w), m, budget) == OrderSign::kPositive;
  };

  std::int64_t k = std::llabs(exponent_sum(u)) / (static_cast<std::int64_t>(m) * (m - 1));
  if (inside(k)) {
    while (k > 0 && inside(k - 1)) --k;
  } else {
    do {
      ++k;
    } while (!inside(k));
  }
  return k;
}

}  // namespace braidcert
