#include "braidcert/braid.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "braidcert/error.hpp"

namespace braidcert {

namespace {

void check_strands(int strands) {
  if (strands < 2) {
    throw BraidError(ErrorCode::kBadStrands,
                     "braid needs at least 2 strands, got " + std::to_string(strands));
  }
}

void check_length(std::size_t length) {
  if (length > kMaxWordLength) {
    throw BraidError(ErrorCode::kWordTooLong,
                     "word length " + std::to_string(length) + " exceeds cap " +
                         std::to_string(kMaxWordLength));
  }
}

}  // namespace

std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter x : letters) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<Letter> letters) : strands_(strands) {
  check_strands(strands);
  check_length(letters.size());
  for (Letter x : letters) {
    if (x == 0 || std::abs(x) >= strands) {
      throw BraidError(ErrorCode::kBadLetter, "generator index " + std::to_string(x) +
                                                  " out of range for B_" + std::to_string(strands));
    }
  }
  letters_ = free_reduce(letters);
}

BraidWord BraidWord::generator(int strands, int index, std::int64_t power) {
  check_length(static_cast<std::size_t>(std::llabs(power)));
  Letter x = power >= 0 ? index : -index;
  return BraidWord(strands, std::vector<Letter>(static_cast<std::size_t>(std::llabs(power)), x));
}

BraidWord BraidWord::inverse() const {
  BraidWord r(strands_);
  r.letters_.assign(letters_.rbegin(), letters_.rend());
  for (Letter& x : r.letters_) x = -x;
  return r;
}

BraidWord BraidWord::pow(std::int64_t exponent) const {
  const BraidWord base = exponent >= 0 ? *this : inverse();
  const auto times = static_cast<std::size_t>(std::llabs(exponent));
  if (base.empty() || times == 0) return BraidWord(strands_);
  if (times > kMaxWordLength / base.length()) check_length(kMaxWordLength + 1);
  std::vector<Letter> raw;
  raw.reserve(base.length() * times);
  for (std::size_t k = 0; k < times; ++k) {
    raw.insert(raw.end(), base.letters_.begin(), base.letters_.end());
  }
  return BraidWord(strands_, std::move(raw));
}

BraidWord compose(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw BraidError(ErrorCode::kStrandMismatch, "cannot compose B_" + std::to_string(u.strands()) +
                                                     " with B_" + std::to_string(v.strands()));
  }
  std::vector<Letter> raw(u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(raw));
}

BraidWord delta(int strands) {
  check_strands(strands);
  std::vector<Letter> raw;
  raw.reserve(static_cast<std::size_t>(strands) * (strands - 1) / 2);
  for (int top = strands - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) raw.push_back(i);
  }
  return BraidWord(strands, std::move(raw));
}

BraidWord delta_power(int strands, std::int64_t power) { return delta(strands).pow(power); }

std::int64_t exponent_sum(const BraidWord& u) {
  std::int64_t sum = 0;
  for (Letter x : u.letters()) sum += x > 0 ? 1 : -1;
  return sum;
}

Permutation::Permutation(std::size_t size) : images_(size) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int p : images_) {
    if (p < 0 || static_cast<std::size_t>(p) >= images_.size() || seen[p]) {
      throw BraidError(ErrorCode::kBadParameters, "permutation images are not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) {
    throw BraidError(ErrorCode::kStrandMismatch, "permutation sizes differ");
  }
  std::vector<int> out(size());
  for (std::size_t p = 0; p < size(); ++p) out[p] = next.images_[images_[p]];
  return Permutation(std::move(out));
}

std::size_t Permutation::cycle_count() const {
  std::vector<bool> seen(size(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (auto p = static_cast<int>(start); !seen[p]; p = images_[p]) seen[p] = true;
  }
  return cycles;
}

Permutation permutation(const BraidWord& u) {
  // at[q] = strand currently at position q.
  std::vector<int> at(u.strands());
  std::iota(at.begin(), at.end(), 0);
  for (Letter x : u.letters()) {
    int i = std::abs(x);
    std::swap(at[i - 1], at[i]);
  }
  std::vector<int> images(u.strands());
  for (int q = 0; q < u.strands(); ++q) images[at[q]] = q;
  return Permutation(std::move(images));
}

std::size_t closure_components(const BraidWord& u) { return permutation(u).cycle_count(); }

std::string to_string(const BraidWord& u) {
  std::string out = std::to_string(u.strands()) + ":";
  for (Letter x : u.letters()) {
    out += ' ';
    out += std::to_string(x);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BraidWord& u) { return os << to_string(u); }

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& why) {
  throw BraidError(ErrorCode::kParseError, "column " + std::to_string(pos + 1) + ": " + why +
                                               " in braid '" + std::string(text) + "'");
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](long long& value) {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) parse_fail(text, start, "expected an integer");
    const char* first = text.data() + (text[start] == '+' ? start + 1 : start);
    auto [ptr, ec] = std::from_chars(first, text.data() + pos, value);
    if (ec != std::errc()) parse_fail(text, start, "integer out of range");
    (void)ptr;
    return start;
  };

  skip_space();
  long long strands = 0;
  std::size_t strands_at = read_int(strands);
  skip_space();
  if (pos >= text.size() || text[pos] != ':') parse_fail(text, pos, "expected ':' after strand count");
  ++pos;
  if (strands < 2 || strands > 1'000'000) parse_fail(text, strands_at, "strand count must be at least 2");

  std::vector<Letter> letters;
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    long long x = 0;
    std::size_t at = read_int(x);
    if (x == 0 || std::llabs(x) >= strands) {
      parse_fail(text, at, "generator " + std::to_string(x) + " out of range for " +
                               std::to_string(strands) + " strands");
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      parse_fail(text, pos, "unexpected character");
    }
    letters.push_back(static_cast<Letter>(x));
  }
  return BraidWord(static_cast<int>(strands), std::move(letters));
}

}  // namespace braidcert
