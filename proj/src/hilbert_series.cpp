#include "facering/hilbert_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "facering/combinatorics.hpp"

namespace facering {

namespace {

void trim(std::vector<std::int64_t>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p * (1-λ)^k
std::vector<std::int64_t> times_one_minus(std::vector<std::int64_t> p, int k) {
  for (int step = 0; step < k; ++step) {
    p.push_back(0);
    for (std::size_t i = p.size() - 1; i > 0; --i) p[i] -= p[i - 1];
  }
  return p;
}

}  // namespace

HilbertSeries::HilbertSeries(std::vector<std::int64_t> numerator, int denom_power)
    : numerator_(std::move(numerator)), denom_power_(denom_power) {
  if (denom_power_ < 0) throw std::invalid_argument("HilbertSeries: negative denominator power");
  reduce();
}

HilbertSeries HilbertSeries::from_face_terms(const std::vector<std::pair<std::int64_t, int>>& terms) {
  int top = 0;
  for (const auto& [c, s] : terms) {
    if (c != 0) top = std::max(top, s);
  }
  std::vector<std::int64_t> num(top + 1, 0);
  for (const auto& [c, s] : terms) {
    if (c == 0) continue;
    std::vector<std::int64_t> mono(s + 1, 0);
    mono[s] = c;
    auto part = times_one_minus(std::move(mono), top - s);
    if (part.size() > num.size()) num.resize(part.size(), 0);
    for (std::size_t i = 0; i < part.size(); ++i) num[i] += part[i];
  }
  return HilbertSeries(std::move(num), top);
}

void HilbertSeries::reduce() {
  trim(numerator_);
  if (numerator_.empty()) {
    denom_power_ = 0;
    return;
  }
  // Synthetic division by (1-λ) while p(1) = 0.
  while (denom_power_ > 0) {
    std::int64_t at_one = 0;
    for (auto c : numerator_) at_one += c;
    if (at_one != 0) break;
    // p = (1-λ) q  with q_i = sum_{k<=i} p_k.
    std::vector<std::int64_t> q(numerator_.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < numerator_.size(); ++i) {
      run += numerator_[i];
      q[i] = run;
    }
    numerator_ = std::move(q);
    trim(numerator_);
    --denom_power_;
  }
}

std::int64_t HilbertSeries::coefficient(int j) const {
  if (j < 0) return 0;
  // 1/(1-λ)^e = sum_k C(k+e-1, e-1) λ^k; for e = 0 only k = 0 survives.
  std::int64_t total = 0;
  for (std::size_t i = 0; i < numerator_.size() && static_cast<int>(i) <= j; ++i) {
    const int k = j - static_cast<int>(i);
    const std::int64_t series = denom_power_ == 0 ? (k == 0 ? 1 : 0) : binomial(k + denom_power_ - 1, denom_power_ - 1);
    total += numerator_[i] * series;
  }
  return total;
}

std::string HilbertSeries::to_string() const {
  if (is_zero()) return "0";
  std::string num;
  for (std::size_t i = 0; i < numerator_.size(); ++i) {
    const auto c = numerator_[i];
    if (c == 0) continue;
    if (!num.empty()) num += c < 0 ? " - " : " + ";
    else if (c < 0) num += "-";
    const auto a = c < 0 ? -c : c;
    if (i == 0 || a != 1) num += std::to_string(a);
    if (i >= 1) num += "λ";
    if (i >= 2) num += "^" + std::to_string(i);
  }
  if (denom_power_ == 0) return num;
  std::string den = denom_power_ == 1 ? "(1-λ)" : "(1-λ)^" + std::to_string(denom_power_);
  return "(" + num + ")/" + den;
}

}  // namespace facering
