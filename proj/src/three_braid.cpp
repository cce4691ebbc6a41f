#include "braidcert/three_braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "braidcert/error.hpp"

namespace braidcert {

namespace {

// Syllables of the amalgamated product: x, y or y^2.
enum Syllable : int { kX = 0, kY = 1, kY2 = 2 };

class Amalgam {
 public:
  void append_x() {
    if (!word_.empty() && word_.back() == kX) {
      word_.pop_back();
      ++central_;
    } else {
      word_.push_back(kX);
    }
  }

  void append_y(int e) {
    if (!word_.empty() && word_.back() != kX) {
      int s = word_.back() + e;
      word_.pop_back();
      if (s >= 3) {
        ++central_;
        s -= 3;
      }
      if (s > 0) word_.push_back(s);
    } else {
      word_.push_back(e);
    }
  }

  // s1 = C^-1 y^2 x, s2 = C^-1 x y^2, s1^-1 = C^-1 x y, s2^-1 = C^-1 y x.
  void append_letter(Letter l) {
    --central_;
    switch (l) {
      case 1: append_y(2); append_x(); break;
      case 2: append_x(); append_y(2); break;
      case -1: append_x(); append_y(1); break;
      case -2: append_y(1); append_x(); break;
      default: break;
    }
  }

  // Conjugate until the first and last syllables differ in kind.
  void cyclically_reduce() {
    while (word_.size() >= 2) {
      const bool front_x = word_.front() == kX;
      const bool back_x = word_.back() == kX;
      if (front_x != back_x) break;
      if (front_x) {
        word_.pop_front();
        word_.pop_back();
        ++central_;
      } else {
        int s = word_.front() + word_.back();
        word_.pop_front();
        word_.pop_back();
        if (s >= 3) {
          ++central_;
          s -= 3;
        }
        if (s > 0) word_.push_front(s);
      }
    }
  }

  std::int64_t central() const { return central_; }
  const std::deque<int>& word() const { return word_; }

 private:
  std::int64_t central_ = 0;
  std::deque<int> word_;
};

std::vector<std::int64_t> least_rotation(const std::vector<std::int64_t>& a) {
  std::vector<std::int64_t> best = a;
  std::vector<std::int64_t> r = a;
  for (std::size_t s = 1; s < a.size(); ++s) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    if (r < best) best = r;
  }
  return best;
}

}  // namespace

void require_three_strands(const BraidWord& b) {
  if (b.strands() != 3) {
    throw BraidError(ErrorCode::kNotThreeBraid,
                     "expected a 3-braid, got " + std::to_string(b.strands()) + " strands");
  }
}

std::int64_t ThreeBraidNormalForm::d() const {
  return std::visit([](const auto& f) { return f.d; }, form);
}

bool ThreeBraidNormalForm::central() const {
  const auto* r = std::get_if<ReducibleForm>(&form);
  return r != nullptr && r->central();
}

std::string_view to_string(NtType t) {
  switch (t) {
    case NtType::kPseudoAnosov: return "PseudoAnosov";
    case NtType::kReducible: return "Reducible";
    case NtType::kPeriodic: return "Periodic";
  }
  return "?";
}

std::string_view to_string(LSpaceStatus s) {
  return s == LSpaceStatus::kLSpace ? "LSpace" : "NotLSpace";
}

std::string to_string(const ThreeBraidNormalForm& nf) {
  if (const auto* pa = std::get_if<PseudoAnosovForm>(&nf.form)) {
    std::string out = "PseudoAnosov d=" + std::to_string(pa->d) + " a=[";
    for (std::size_t i = 0; i < pa->a.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(pa->a[i]);
    }
    return out + "]";
  }
  if (const auto* r = std::get_if<ReducibleForm>(&nf.form)) {
    std::string out = "Reducible d=" + std::to_string(r->d) + " m=" + std::to_string(r->m);
    if (r->central()) out += " central";
    return out;
  }
  const auto& p = std::get<PeriodicForm>(nf.form);
  return "Periodic d=" + std::to_string(p.d) + " m=" + std::to_string(p.m);
}

ThreeBraidNormalForm normal_form(const BraidWord& b) {
  require_three_strands(b);
  Amalgam w;
  for (Letter l : b.letters()) w.append_letter(l);
  w.cyclically_reduce();

  const std::int64_t p = w.central();
  const auto& syl = w.word();
  if (syl.empty()) return {ReducibleForm{p, 0}};
  if (syl.size() == 1) {
    // x ~ C s1^-2 s2^-1, y ~ C s1^-3 s2^-1, y^2 ~ C s1^-1 s2^-1.
    switch (syl.front()) {
      case kX: return {PeriodicForm{p + 1, -2}};
      case kY: return {PeriodicForm{p + 1, -3}};
      default: return {PeriodicForm{p + 1, -1}};
    }
  }

  // Alternating cyclic word of k (x, y^e) pairs; every family has d = p + k.
  std::vector<int> exps;
  for (int s : syl) {
    if (s != kX) exps.push_back(s);
  }
  const auto k = static_cast<std::int64_t>(exps.size());
  const bool all_two = std::all_of(exps.begin(), exps.end(), [](int e) { return e == kY2; });
  const bool all_one = std::all_of(exps.begin(), exps.end(), [](int e) { return e == kY; });
  // (x y^2)^k ~ C^k s1^k ~ C^k s2^k and (x y)^k ~ C^k s2^-k.
  if (all_two) return {ReducibleForm{p + k, k}};
  if (all_one) return {ReducibleForm{p + k, -k}};

  // s1 s2^-a = C^(-1-a) (y^2 x)(y x)^a: each y^2 opens a block whose a counts
  // the following y's.
  auto first_two = std::find(exps.begin(), exps.end(), kY2);
  std::rotate(exps.begin(), first_two, exps.end());
  std::vector<std::int64_t> a;
  for (int e : exps) {
    if (e == kY2) {
      a.push_back(0);
    } else {
      ++a.back();
    }
  }
  return {PseudoAnosovForm{p + k, least_rotation(a)}};
}

BraidWord representative(const ThreeBraidNormalForm& nf) {
  const BraidWord c_power = delta_power(3, 2 * nf.d());
  std::vector<Letter> tail;
  if (const auto* pa = std::get_if<PseudoAnosovForm>(&nf.form)) {
    for (std::int64_t ai : pa->a) {
      tail.push_back(1);
      tail.insert(tail.end(), static_cast<std::size_t>(ai), -2);
    }
  } else if (const auto* r = std::get_if<ReducibleForm>(&nf.form)) {
    tail.assign(static_cast<std::size_t>(std::llabs(r->m)), r->m >= 0 ? 2 : -2);
  } else {
    const auto& per = std::get<PeriodicForm>(nf.form);
    tail.assign(static_cast<std::size_t>(-per.m), -1);
    tail.push_back(-2);
  }
  return c_power * BraidWord(3, std::move(tail));
}

NtType nt_type(const ThreeBraidNormalForm& nf) {
  switch (nf.form.index()) {
    case 0: return NtType::kPseudoAnosov;
    case 1: return NtType::kReducible;
    default: return NtType::kPeriodic;
  }
}

Matrix2x2 operator*(const Matrix2x2& x, const Matrix2x2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

Matrix2x2 sl2_image(const BraidWord& b) {
  require_three_strands(b);
  const Matrix2x2 s1{1, 1, 0, 1};
  const Matrix2x2 s1_inv{1, -1, 0, 1};
  const Matrix2x2 s2{1, 0, -1, 1};
  const Matrix2x2 s2_inv{1, 0, 1, 1};
  Matrix2x2 m;
  for (Letter l : b.letters()) {
    switch (l) {
      case 1: m = m * s1; break;
      case -1: m = m * s1_inv; break;
      case 2: m = m * s2; break;
      default: m = m * s2_inv; break;
    }
  }
  return m;
}

LSpaceStatus baldwin_lspace_double_cover(const ThreeBraidNormalForm& nf) {
  const std::int64_t d = nf.d();
  bool lspace = false;
  switch (nt_type(nf)) {
    case NtType::kPseudoAnosov: lspace = d >= -1 && d <= 1; break;
    case NtType::kReducible: lspace = d == 1 || d == -1; break;
    case NtType::kPeriodic: lspace = d >= -1 && d <= 2; break;
  }
  return lspace ? LSpaceStatus::kLSpace : LSpaceStatus::kNotLSpace;
}

}  // namespace braidcert
