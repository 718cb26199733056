#pragma once

#include <cstdint>
#include <random>

#include "semimorph/image.hpp"
#include "semimorph/semiring.hpp"

namespace semimorph {

/// Seeded uniform draw from [lo, hi]. The modulo bias is irrelevant at test
/// scale and keeps the stream identical across standard libraries.
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Per-semiring value windows used by every randomised suite:
/// boolean fair coin; maxplus -inf with probability 1/8 else [-16,16];
/// minmax uniform k/255; counting uniform 0..9.
template <Semiring S>
typename S::value_type sample_value(std::mt19937_64& rng) {
  using V = typename S::value_type;
  if constexpr (std::same_as<V, std::uint8_t>) {
    return static_cast<std::uint8_t>(rng() & 1);
  } else if constexpr (std::same_as<V, ExtInt>) {
    if (rng() % 8 == 0) return ExtInt::neg_inf();
    return ExtInt::finite(uniform_int(rng, -16, 16));
  } else if constexpr (std::same_as<V, UnitFixed>) {
    return UnitFixed{static_cast<std::uint8_t>(rng() % 256)};
  } else {
    static_assert(std::same_as<V, std::uint64_t>, "no sampler for carrier");
    return static_cast<std::uint64_t>(rng() % 10);
  }
}

template <Semiring S>
Image<S> sample_image(std::mt19937_64& rng, int rows, int cols,
                      bool random_origin = false) {
  Image<S> img(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) img.at(r, c) = sample_value<S>(rng);
  if (random_origin)
    img.set_origin(uniform_int(rng, 0, rows - 1), uniform_int(rng, 0, cols - 1));
  return img;
}

/// Random dimensions in [1, max_*] first, then values.
template <Semiring S>
Image<S> sample_image_up_to(std::mt19937_64& rng, int max_rows, int max_cols,
                            bool random_origin = false) {
  return sample_image<S>(rng, uniform_int(rng, 1, max_rows),
                         uniform_int(rng, 1, max_cols), random_origin);
}

/// Nonempty support inside [0,rows) x [0,cols).
inline PointSet sample_support(std::mt19937_64& rng, int rows, int cols) {
  PointSet out;
  int n = uniform_int(rng, 1, rows * cols);
  for (int i = 0; i < n; ++i)
    out.emplace(uniform_int(rng, 0, rows - 1), uniform_int(rng, 0, cols - 1));
  return out;
}

/// Random binary structuring element whose support touches all four edges of
/// its matrix, so the matrix extent equals the support bounding box. Set
/// erosion quantifies its shift over all of Z^2; bounding-box-tight elements
/// make the valid-mode window cover every solution.
inline Image<BooleanSemiring> sample_tight_binary_se(std::mt19937_64& rng,
                                                     int rows, int cols,
                                                     bool random_origin = false) {
  Image<BooleanSemiring> se(rows, cols, 0);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) se.at(r, c) = static_cast<std::uint8_t>(rng() & 1);
  se.at(0, uniform_int(rng, 0, cols - 1)) = 1;
  se.at(rows - 1, uniform_int(rng, 0, cols - 1)) = 1;
  se.at(uniform_int(rng, 0, rows - 1), 0) = 1;
  se.at(uniform_int(rng, 0, rows - 1), cols - 1) = 1;
  if (random_origin)
    se.set_origin(uniform_int(rng, 0, rows - 1), uniform_int(rng, 0, cols - 1));
  return se;
}

}  // namespace semimorph
