#ifndef FACERING_DETAIL_DENSE_HPP
#define FACERING_DETAIL_DENSE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace facering::detail {

struct RationalField {
  using Elem = mpq_class;

  Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static std::string to_string(const Elem& a) { return a.get_str(); }
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

struct PrimeField {
  using Elem = std::uint32_t;
  std::uint32_t p = 2;

  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<Elem>(r < 0 ? r + p : r);
  }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p ? s - p : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : static_cast<Elem>(a + (p - b)); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return static_cast<Elem>(result);
  }
  static bool is_zero(Elem a) { return a == 0; }
  static std::string to_string(Elem a) { return std::to_string(a); }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

/// Row-major dense matrix over a field F.
template <class F>
struct Dense {
  using Elem = typename F::Elem;

  F field;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Dense() = default;
  Dense(F f, std::size_t r, std::size_t c) : field(f), rows(r), cols(c), data(r * c, f.from_int(0)) {}

  Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  friend bool operator==(const Dense&, const Dense&) = default;
};

}  // namespace facering::detail

#endif  // FACERING_DETAIL_DENSE_HPP
