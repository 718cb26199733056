#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "semimorph/io.hpp"
#include "semimorph/morph.hpp"
#include "semimorph/oracle.hpp"
#include "semimorph/sampling.hpp"

// Randomised image-level law suites. Every suite is deterministic in its
// seed: sizes are drawn from the ranges fixed here (images up to 8x8,
// structuring elements up to 3x3) and values from the sampling windows in
// sampling.hpp.
namespace semimorph {

namespace detail {

constexpr int kMaxImage = 8;
constexpr int kMaxSe = 3;

template <Semiring S, class... Imgs>
std::string law_counterexample(const std::string& law, int trial,
                               const Imgs&... imgs) {
  nlohmann::json j{{"law", law}, {"trial", trial}};
  nlohmann::json docs = nlohmann::json::array();
  (docs.push_back(matrix_document(imgs)), ...);
  j["images"] = std::move(docs);
  return j.dump(2) + "\n";
}

}  // namespace detail

/// dilate(f,g) <= e iff f <= erode(e,g), on random triples. Half of the
/// sampled e are forced above the dilation so both branches of the
/// equivalence get exercised.
template <ResiduatedSemiring S>
LawReport adjunction_law(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xad0115c7u);
  LawReport report{"adjunction", trials, true, {}};
  for (int t = 0; t < trials; ++t) {
    auto f = sample_image_up_to<S>(rng, detail::kMaxImage, detail::kMaxImage);
    auto g = sample_image_up_to<S>(rng, detail::kMaxSe, detail::kMaxSe);
    auto full = dilate(f, g, Mode::full).image;
    auto e = sample_image<S>(rng, full.rows(), full.cols());
    if (t % 2 == 0) e = pointwise_join(e, full);

    bool lhs = image_leq(full, e);
    bool rhs = image_leq(f, erode(e, g, Mode::valid).image);
    if (lhs != rhs) {
      report.passed = false;
      report.counterexample =
          detail::law_counterexample<S>("adjunction", t, f, g, e);
      break;
    }
  }
  return report;
}

/// Full-mode dilation is associative.
template <Semiring S>
LawReport associativity_law(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xa550c147u);
  LawReport report{"associativity", trials, true, {}};
  for (int t = 0; t < trials; ++t) {
    auto f = sample_image_up_to<S>(rng, detail::kMaxImage, detail::kMaxImage,
                                   true);
    auto g = sample_image_up_to<S>(rng, detail::kMaxSe, detail::kMaxSe, true);
    auto h = sample_image_up_to<S>(rng, detail::kMaxSe, detail::kMaxSe, true);
    auto left = dilate(dilate(f, g, Mode::full).image, h, Mode::full).image;
    auto right = dilate(f, dilate(g, h, Mode::full).image, Mode::full).image;
    if (!(left == right)) {
      report.passed = false;
      report.counterexample =
          detail::law_counterexample<S>("associativity", t, f, g, h);
      break;
    }
  }
  return report;
}

/// The 1x1 multiplicative-unit image is a two-sided unit of dilation.
template <Semiring S>
LawReport unit_law(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x0171a3b5u);
  LawReport report{"unit", trials, true, {}};
  Image<S> unit(1, 1, S::one());
  for (int t = 0; t < trials; ++t) {
    auto f = sample_image_up_to<S>(rng, detail::kMaxImage, detail::kMaxImage,
                                   true);
    if (!(dilate(f, unit, Mode::full).image == f) ||
        !(dilate(unit, f, Mode::full).image == f)) {
      report.passed = false;
      report.counterexample = detail::law_counterexample<S>("unit", t, f);
      break;
    }
  }
  return report;
}

/// Dilation distributes over pointwise joins; dually, valid-mode erosion
/// distributes over pointwise meets.
template <ResiduatedSemiring S>
LawReport sup_preservation_law(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x50b90e55u);
  LawReport report{"sup_preservation", trials, true, {}};
  for (int t = 0; t < trials; ++t) {
    int rows = uniform_int(rng, 1, detail::kMaxImage);
    int cols = uniform_int(rng, 1, detail::kMaxImage);
    auto g = sample_image<S>(rng, uniform_int(rng, 1, std::min(rows, detail::kMaxSe)),
                             uniform_int(rng, 1, std::min(cols, detail::kMaxSe)));
    auto f1 = sample_image<S>(rng, rows, cols);
    auto f2 = sample_image<S>(rng, rows, cols);

    auto join_then_dilate = dilate(pointwise_join(f1, f2), g, Mode::full).image;
    auto dilate_then_join = pointwise_join(dilate(f1, g, Mode::full).image,
                                           dilate(f2, g, Mode::full).image);
    auto meet_then_erode = erode(pointwise_meet(f1, f2), g, Mode::valid).image;
    auto erode_then_meet = pointwise_meet(erode(f1, g, Mode::valid).image,
                                          erode(f2, g, Mode::valid).image);
    if (!(join_then_dilate == dilate_then_join) ||
        !(meet_then_erode == erode_then_meet)) {
      report.passed = false;
      report.counterexample =
          detail::law_counterexample<S>("sup_preservation", t, f1, f2, g);
      break;
    }
  }
  return report;
}

/// Binary duality: complementing a same-mode erosion equals same-mode
/// dilation of the complement by the reflected element, away from the border
/// band where the canvas edge interferes.
inline LawReport duality_law(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xd0a117b3u);
  LawReport report{"duality", trials, true, {}};
  for (int t = 0; t < trials; ++t) {
    auto g = sample_image_up_to<BooleanSemiring>(rng, detail::kMaxSe,
                                                 detail::kMaxSe, true);
    int margin_r = g.rows() - 1, margin_c = g.cols() - 1;
    auto inner = sample_image_up_to<BooleanSemiring>(rng, detail::kMaxImage,
                                                     detail::kMaxImage);
    Image<BooleanSemiring> f(inner.rows() + 2 * margin_r,
                             inner.cols() + 2 * margin_c, 0);
    for (int r = 0; r < inner.rows(); ++r)
      for (int c = 0; c < inner.cols(); ++c)
        f.at(r + margin_r, c + margin_c) = inner.at(r, c);

    auto lhs = complement(erode(f, g, Mode::same).image);
    auto rhs = dilate(complement(f), reflect(g), Mode::same).image;
    bool ok = true;
    for (int r = margin_r; ok && r < f.rows() - margin_r; ++r)
      for (int c = margin_c; ok && c < f.cols() - margin_c; ++c)
        ok = lhs.at(r, c) == rhs.at(r, c);
    if (!ok) {
      report.passed = false;
      report.counterexample =
          detail::law_counterexample<BooleanSemiring>("duality", t, f, g);
      break;
    }
  }
  return report;
}

/// The suites applicable to the chosen semiring, in a fixed order.
inline std::vector<LawReport> run_laws(SemiringKind kind, int trials,
                                       std::uint64_t seed) {
  return with_semiring(kind, [&](auto tag) {
    using S = typename decltype(tag)::type;
    std::vector<LawReport> out;
    if constexpr (ResiduatedSemiring<S>)
      out.push_back(adjunction_law<S>(trials, seed));
    out.push_back(associativity_law<S>(trials, seed));
    out.push_back(unit_law<S>(trials, seed));
    if constexpr (ResiduatedSemiring<S>)
      out.push_back(sup_preservation_law<S>(trials, seed));
    if constexpr (std::same_as<S, BooleanSemiring>)
      out.push_back(duality_law(trials, seed));
    return out;
  });
}

}  // namespace semimorph
