#pragma once

#include <string>
#include <utility>
#include <variant>

#include "semimorph/image.hpp"
#include "semimorph/morph.hpp"
#include "semimorph/semiring.hpp"

namespace semimorph {

/// Runtime-tagged image for the file and CLI boundary, where the semiring is
/// only known from input data. The templated core makes carrier mixing
/// uncompilable; these wrappers surface the same misuses as errors instead.
using AnyImage = std::variant<Image<BooleanSemiring>, Image<MaxPlusSemiring>,
                              Image<MinMaxSemiring>, Image<CountingSemiring>>;

inline SemiringKind kind_of(const AnyImage& img) {
  return std::visit(
      [](const auto& i) {
        using S = typename std::decay_t<decltype(i)>::semiring;
        return semiring_from_name(S::name);
      },
      img);
}

inline std::string_view semiring_name_of(const AnyImage& img) {
  return semiring_name(kind_of(img));
}

/// Visits two images that must share a carrier.
template <class F>
decltype(auto) visit_same(const AnyImage& a, const AnyImage& b, F&& f) {
  if (a.index() != b.index())
    fail(Errc::carrier_mismatch,
         "images use different semirings (" +
             std::string(semiring_name_of(a)) + " vs " +
             std::string(semiring_name_of(b)) + ")");
  return std::visit(
      [&](const auto& x) -> decltype(auto) {
        using ImgT = std::decay_t<decltype(x)>;
        return f(x, std::get<ImgT>(b));
      },
      a);
}

inline AnyImage any_dilate(const AnyImage& f, const AnyImage& g, Mode mode) {
  return visit_same(f, g, [&](const auto& x, const auto& y) {
    return AnyImage{dilate(x, y, mode).image};
  });
}

namespace detail {
[[noreturn]] inline void no_residual_error(std::string_view op,
                                           std::string_view name) {
  fail(Errc::no_residual, std::string(op) + " undefined for semiring '" +
                              std::string(name) + "' (no residual)");
}
}  // namespace detail

inline AnyImage any_erode(const AnyImage& f, const AnyImage& g, Mode mode) {
  return visit_same(f, g, [&](const auto& x, const auto& y) -> AnyImage {
    using S = typename std::decay_t<decltype(x)>::semiring;
    if constexpr (ResiduatedSemiring<S>)
      return AnyImage{erode(x, y, mode).image};
    else
      detail::no_residual_error("erosion", S::name);
  });
}

inline AnyImage any_opening(const AnyImage& f, const AnyImage& g) {
  return visit_same(f, g, [&](const auto& x, const auto& y) -> AnyImage {
    using S = typename std::decay_t<decltype(x)>::semiring;
    if constexpr (ResiduatedSemiring<S>)
      return AnyImage{opening(x, y)};
    else
      detail::no_residual_error("opening", S::name);
  });
}

inline AnyImage any_closing(const AnyImage& f, const AnyImage& g) {
  return visit_same(f, g, [&](const auto& x, const auto& y) -> AnyImage {
    using S = typename std::decay_t<decltype(x)>::semiring;
    if constexpr (ResiduatedSemiring<S>)
      return AnyImage{closing(x, y)};
    else
      detail::no_residual_error("closing", S::name);
  });
}

inline AnyImage any_complement(const AnyImage& f) {
  return std::visit(
    [](const auto& x) -> AnyImage {
      using S = typename std::decay_t<decltype(x)>::semiring;
      if constexpr (std::same_as<S, BooleanSemiring>)
        return AnyImage{complement(x)};
      else
        fail(Errc::unsupported_semiring,
             "complement requires a boolean image, got '" +
                 std::string(S::name) + "'");
    },
    f);
}

inline PointSet any_to_point_set(const AnyImage& f) {
  return std::visit(
    [](const auto& x) -> PointSet {
      using S = typename std::decay_t<decltype(x)>::semiring;
      if constexpr (std::same_as<S, BooleanSemiring>)
        return to_point_set(x);
      else
        fail(Errc::unsupported_semiring,
             "point-set view requires a boolean image, got '" +
                 std::string(S::name) + "'");
    },
    f);
}

inline bool any_image_leq(const AnyImage& a, const AnyImage& b) {
  return visit_same(a, b, [](const auto& x, const auto& y) -> bool {
    using S = typename std::decay_t<decltype(x)>::semiring;
    if constexpr (OrderedSemiring<S>)
      return image_leq(x, y);
    else
      fail(Errc::order_undefined,
           "no derived order: addition of semiring '" + std::string(S::name) +
               "' is not idempotent");
  });
}

inline AnyImage any_pointwise_join(const AnyImage& a, const AnyImage& b) {
  return visit_same(a, b, [](const auto& x, const auto& y) -> AnyImage {
    using S = typename std::decay_t<decltype(x)>::semiring;
    if constexpr (OrderedSemiring<S>)
      return AnyImage{pointwise_join(x, y)};
    else
      fail(Errc::order_undefined,
           "no derived order: addition of semiring '" + std::string(S::name) +
               "' is not idempotent");
  });
}

}  // namespace semimorph
