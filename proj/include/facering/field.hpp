#ifndef FACERING_FIELD_HPP
#define FACERING_FIELD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace facering {

bool is_prime(std::uint64_t p);

/// Coefficient field: the rationals or a prime field F_p (p < 2^31).
class FieldSpec {
 public:
  enum class Kind { rational, prime };

  constexpr FieldSpec() = default;

  static constexpr FieldSpec rational() { return FieldSpec(); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "q" or "fp:<p>".
  static FieldSpec parse(std::string_view text);

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_rational() const { return kind_ == Kind::rational; }
  /// 0 for the rationals.
  constexpr std::uint32_t characteristic() const { return p_; }

  std::string to_string() const;

  friend constexpr bool operator==(const FieldSpec&, const FieldSpec&) = default;
  friend constexpr auto operator<=>(const FieldSpec&, const FieldSpec&) = default;

 private:
  Kind kind_ = Kind::rational;
  std::uint32_t p_ = 0;
};

}  // namespace facering

#endif  // FACERING_FIELD_HPP
