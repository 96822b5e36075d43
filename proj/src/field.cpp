#include "facering/field.hpp"

#include <charconv>
#include <stdexcept>

namespace facering {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
  FieldSpec f;
  f.kind_ = Kind::prime;
  f.p_ = static_cast<std::uint32_t>(p);
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rational();
  constexpr std::string_view prefix = "fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return prime(p);
    }
  }
  throw std::invalid_argument("unrecognized field '" + std::string(text) +
                              "' (expected q or fp:<prime>)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "q" : "fp:" + std::to_string(p_);
}

}  // namespace facering
