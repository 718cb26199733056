#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include "semimorph/error.hpp"

namespace semimorph {

// ---------------------------------------------------------------------------
// Carriers
// ---------------------------------------------------------------------------

/// Integer extended with two distinguished infinities. Finite values live in
/// [min()+1, max()-1]; the raw extremes are reserved as the sentinels, so the
/// built-in ordering of the raw representation is already the intended total
/// order -inf < finite < +inf.
class ExtInt {
 public:
  constexpr ExtInt() = default;

  static constexpr ExtInt neg_inf() { return ExtInt(kNegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(kPosInf); }

  /// Finite constructor; clamps into the finite band.
  static constexpr ExtInt finite(std::int64_t v) {
    if (v <= kNegInf) v = kNegInf + 1;
    if (v >= kPosInf) v = kPosInf - 1;
    return ExtInt(v);
  }

  constexpr bool is_neg_inf() const { return raw_ == kNegInf; }
  constexpr bool is_pos_inf() const { return raw_ == kPosInf; }
  constexpr bool is_finite() const { return !is_neg_inf() && !is_pos_inf(); }

  /// Finite value; only meaningful when is_finite().
  constexpr std::int64_t value() const { return raw_; }

  friend constexpr bool operator==(ExtInt, ExtInt) = default;
  friend constexpr auto operator<=>(ExtInt, ExtInt) = default;

 private:
  static constexpr std::int64_t kNegInf =
      std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t kPosInf =
      std::numeric_limits<std::int64_t>::max();

  constexpr explicit ExtInt(std::int64_t raw) : raw_(raw) {}

  std::int64_t raw_ = kNegInf;
};

/// Saturating extended addition. -inf annihilates (even against +inf), then
/// +inf dominates; finite sums clamp into the finite band.
constexpr ExtInt sat_add(ExtInt a, ExtInt b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtInt::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtInt::pos_inf();
  // 128-bit intermediate avoids overflow UB before clamping.
  __int128 sum = static_cast<__int128>(a.value()) + b.value();
  if (sum <= std::numeric_limits<std::int64_t>::min())
    return ExtInt::finite(std::numeric_limits<std::int64_t>::min() + 1);
  if (sum >= std::numeric_limits<std::int64_t>::max())
    return ExtInt::finite(std::numeric_limits<std::int64_t>::max() - 1);
  return ExtInt::finite(static_cast<std::int64_t>(sum));
}

/// Saturating extended subtraction a - b over finite operands.
constexpr ExtInt sat_sub_finite(ExtInt a, ExtInt b) {
  __int128 diff = static_cast<__int128>(a.value()) - b.value();
  if (diff <= std::numeric_limits<std::int64_t>::min())
    return ExtInt::finite(std::numeric_limits<std::int64_t>::min() + 1);
  if (diff >= std::numeric_limits<std::int64_t>::max())
    return ExtInt::finite(std::numeric_limits<std::int64_t>::max() - 1);
  return ExtInt::finite(static_cast<std::int64_t>(diff));
}

/// Fixed-point fraction num/255 on the unit interval. 8-bit quantisation
/// keeps every comparison and law check exact.
struct UnitFixed {
  std::uint8_t num = 0;

  friend constexpr bool operator==(UnitFixed, UnitFixed) = default;
  friend constexpr auto operator<=>(UnitFixed, UnitFixed) = default;
};

/// Result of parsing one textual value. `quantized` is set when the input was
/// legal but did not land exactly on the carrier grid (min-max decimals).
template <class V>
struct Parsed {
  V value{};
  bool quantized = false;
};

namespace detail {

inline std::optional<std::int64_t> parse_int64(std::string_view s) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

inline std::optional<std::uint64_t> parse_uint64(std::string_view s) {
  std::uint64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

inline std::optional<double> parse_double(std::string_view s) {
  double v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Built-in semirings
// ---------------------------------------------------------------------------

/// ({0,1}, or, and). Enriching matrices over it gives ordinary relations, and
/// its dilation/erosion are the classical binary operators.
struct BooleanSemiring {
  using value_type = std::uint8_t;  // 0 or 1

  static constexpr std::string_view name = "boolean";
  static constexpr bool add_idempotent = true;

  static constexpr value_type add(value_type a, value_type b) {
    return a | b;
  }
  static constexpr value_type mul(value_type a, value_type b) {
    return a & b;
  }
  static constexpr value_type zero() { return 0; }
  static constexpr value_type one() { return 1; }

  // Heyting implication: largest x with (a and x) <= b.
  static constexpr value_type residual(value_type a, value_type b) {
    return (a == 0 || b == 1) ? 1 : 0;
  }

  static std::optional<Parsed<value_type>> parse(std::string_view s) {
    if (s == "0") return Parsed<value_type>{0, false};
    if (s == "1") return Parsed<value_type>{1, false};
    return std::nullopt;
  }
  static std::string format(value_type v) { return v ? "1" : "0"; }
};

/// Tropical (max,+) over extended integers. zero = -inf, one = 0. Gray-scale
/// morphology is convolution over this semiring.
struct MaxPlusSemiring {
  using value_type = ExtInt;

  static constexpr std::string_view name = "maxplus";
  static constexpr bool add_idempotent = true;

  static constexpr value_type add(value_type a, value_type b) {
    return a < b ? b : a;
  }
  static constexpr value_type mul(value_type a, value_type b) {
    return sat_add(a, b);
  }
  static constexpr value_type zero() { return ExtInt::neg_inf(); }
  static constexpr value_type one() { return ExtInt::finite(0); }

  // Largest x with a + x <= b. The infinity cases are forced by that
  // characterisation together with -inf annihilating +.
  static constexpr value_type residual(value_type a, value_type b) {
    if (a.is_neg_inf()) return ExtInt::pos_inf();
    if (b.is_neg_inf()) return ExtInt::neg_inf();
    if (a.is_pos_inf()) return b.is_pos_inf() ? ExtInt::pos_inf()
                                              : ExtInt::neg_inf();
    if (b.is_pos_inf()) return ExtInt::pos_inf();
    return sat_sub_finite(b, a);
  }

  static std::optional<Parsed<value_type>> parse(std::string_view s) {
    if (s == "-inf") return Parsed<value_type>{ExtInt::neg_inf(), false};
    if (s == "+inf") return Parsed<value_type>{ExtInt::pos_inf(), false};
    auto v = detail::parse_int64(s);
    if (!v) return std::nullopt;
    return Parsed<value_type>{ExtInt::finite(*v), false};
  }
  static std::string format(value_type v) {
    if (v.is_neg_inf()) return "-inf";
    if (v.is_pos_inf()) return "+inf";
    return std::to_string(v.value());
  }
};

/// Fuzzy (max,min) on the quantised unit interval. zero = 0, one = 1; the
/// residual is the Goedel implication.
struct MinMaxSemiring {
  using value_type = UnitFixed;

  static constexpr std::string_view name = "minmax";
  static constexpr bool add_idempotent = true;

  static constexpr value_type add(value_type a, value_type b) {
    return a < b ? b : a;
  }
  static constexpr value_type mul(value_type a, value_type b) {
    return a < b ? a : b;
  }
  static constexpr value_type zero() { return UnitFixed{0}; }
  static constexpr value_type one() { return UnitFixed{255}; }

  static constexpr value_type residual(value_type a, value_type b) {
    return a <= b ? one() : b;
  }

  /// Accepts the canonical "k/255" form or a decimal in [0,1]; decimals are
  /// rounded to the nearest 1/255 step and flagged when the rounding moved
  /// the value.
  static std::optional<Parsed<value_type>> parse(std::string_view s) {
    if (auto pos = s.rfind("/255"); pos != std::string_view::npos &&
                                    pos + 4 == s.size() && pos > 0) {
      auto k = detail::parse_uint64(s.substr(0, pos));
      if (!k || *k > 255) return std::nullopt;
      return Parsed<value_type>{UnitFixed{static_cast<std::uint8_t>(*k)},
                                false};
    }
    auto v = detail::parse_double(s);
    if (!v || !(*v >= 0.0) || !(*v <= 1.0)) return std::nullopt;
    auto k = static_cast<std::uint8_t>(std::llround(*v * 255.0));
    bool quantized = (static_cast<double>(k) / 255.0) != *v;
    return Parsed<value_type>{UnitFixed{k}, quantized};
  }
  static std::string format(value_type v) {
    return std::to_string(v.num) + "/255";
  }
};

/// Ordinary (+,*) on the naturals. Not idempotent, no residual: dilation over
/// it is plain 2D integer convolution, erosion is undefined.
struct CountingSemiring {
  using value_type = std::uint64_t;

  static constexpr std::string_view name = "counting";
  static constexpr bool add_idempotent = false;

  static constexpr value_type add(value_type a, value_type b) {
    return a + b;
  }
  static constexpr value_type mul(value_type a, value_type b) {
    return a * b;
  }
  static constexpr value_type zero() { return 0; }
  static constexpr value_type one() { return 1; }

  static std::optional<Parsed<value_type>> parse(std::string_view s) {
    auto v = detail::parse_uint64(s);
    if (!v) return std::nullopt;
    return Parsed<value_type>{*v, false};
  }
  static std::string format(value_type v) { return std::to_string(v); }
};

// ---------------------------------------------------------------------------
// Concepts
// ---------------------------------------------------------------------------

template <class S>
concept Semiring = requires(typename S::value_type a, typename S::value_type b) {
  { S::name } -> std::convertible_to<std::string_view>;
  { S::add(a, b) } -> std::same_as<typename S::value_type>;
  { S::mul(a, b) } -> std::same_as<typename S::value_type>;
  { S::zero() } -> std::same_as<typename S::value_type>;
  { S::one() } -> std::same_as<typename S::value_type>;
  { a == b } -> std::convertible_to<bool>;
  { S::add_idempotent } -> std::convertible_to<bool>;
};

/// Idempotent addition induces the partial order a <= b iff a (+) b = b.
template <class S>
concept OrderedSemiring = Semiring<S> && S::add_idempotent;

template <class S>
concept ResiduatedSemiring =
    OrderedSemiring<S> &&
    requires(typename S::value_type a, typename S::value_type b) {
      { S::residual(a, b) } -> std::same_as<typename S::value_type>;
    };

/// Derived natural order of an idempotent semiring.
template <OrderedSemiring S>
constexpr bool sr_leq(typename S::value_type a, typename S::value_type b) {
  return S::add(a, b) == b;
}

/// Meet of the derived order. The built-in idempotent carriers are totally
/// ordered, so the meet is just the order minimum.
template <OrderedSemiring S>
constexpr typename S::value_type sr_meet(typename S::value_type a,
                                         typename S::value_type b) {
  return sr_leq<S>(a, b) ? a : b;
}

// ---------------------------------------------------------------------------
// Runtime selection by name
// ---------------------------------------------------------------------------

enum class SemiringKind { boolean, maxplus, minmax, counting };

constexpr std::string_view semiring_name(SemiringKind k) {
  switch (k) {
    case SemiringKind::boolean: return BooleanSemiring::name;
    case SemiringKind::maxplus: return MaxPlusSemiring::name;
    case SemiringKind::minmax: return MinMaxSemiring::name;
    case SemiringKind::counting: return CountingSemiring::name;
  }
  return "?";
}

inline SemiringKind semiring_from_name(std::string_view name) {
  if (name == BooleanSemiring::name) return SemiringKind::boolean;
  if (name == MaxPlusSemiring::name) return SemiringKind::maxplus;
  if (name == MinMaxSemiring::name) return SemiringKind::minmax;
  if (name == CountingSemiring::name) return SemiringKind::counting;
  fail(Errc::unknown_semiring, "unknown semiring '" + std::string(name) +
                                   "' (expected boolean, maxplus, minmax or "
                                   "counting)");
}

/// Calls `f` with a std::type_identity tag carrying the selected semiring
/// type, e.g. with_semiring(kind, [&](auto tag) { using S = typename
/// decltype(tag)::type; ... }).
template <class F>
decltype(auto) with_semiring(SemiringKind kind, F&& f) {
  switch (kind) {
    case SemiringKind::boolean:
      return f(std::type_identity<BooleanSemiring>{});
    case SemiringKind::maxplus:
      return f(std::type_identity<MaxPlusSemiring>{});
    case SemiringKind::minmax:
      return f(std::type_identity<MinMaxSemiring>{});
    case SemiringKind::counting:
      return f(std::type_identity<CountingSemiring>{});
  }
  fail(Errc::unknown_semiring, "invalid semiring kind");
}

}  // namespace semimorph
