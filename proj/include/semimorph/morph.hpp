#pragma once

#include <string>
#include <utility>

#include "semimorph/image.hpp"
#include "semimorph/semiring.hpp"

namespace semimorph {

/// Morphological operator output plus its alignment. `out_origin_*` extends
/// the image origin convention to the output index grid: index (i,j) of
/// `image` sits at coordinate (i - out_origin_row, j - out_origin_col). The
/// pair may fall outside the matrix (e.g. valid-mode erosion); the image's
/// own origin field is set to it only when it is a legal in-image origin and
/// defaults to (0,0) otherwise.
template <Semiring S>
struct MorphResult {
  Image<S> image;
  Mode mode;
  int out_origin_row = 0;
  int out_origin_col = 0;
};

namespace detail {

template <Semiring S>
MorphResult<S> make_result(Image<S> img, Mode mode, int oor, int ooc) {
  if (oor >= 0 && oor < img.rows() && ooc >= 0 && ooc < img.cols())
    img.set_origin(oor, ooc);
  return MorphResult<S>{std::move(img), mode, oor, ooc};
}

template <Semiring S>
void require_se_fits(const Image<S>& f, const Image<S>& g, Mode mode) {
  if (g.rows() > f.rows() || g.cols() > f.cols())
    fail(Errc::shape_mismatch,
         std::string(mode_name(mode)) + " mode requires the structuring "
         "element (" + std::to_string(g.rows()) + "x" +
             std::to_string(g.cols()) + ") to fit inside the image (" +
             std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + ")");
}

}  // namespace detail

/// Semiring convolution of f with g: out[r][s] joins f[m][n] (*) g[p][q] over
/// all splits m+p=r, n+q=s. Full keeps the whole grown index range; same
/// crops it so the pixel under g's origin stays put; valid keeps only the
/// outputs whose every term exists.
template <Semiring S>
MorphResult<S> dilate(const Image<S>& f, const Image<S>& g,
                      Mode mode = Mode::full) {
  const int fr = f.rows(), fc = f.cols(), gr = g.rows(), gc = g.cols();
  Image<S> full(fr + gr - 1, fc + gc - 1, S::zero());
  for (int m = 0; m < fr; ++m)
    for (int n = 0; n < fc; ++n)
      for (int p = 0; p < gr; ++p)
        for (int q = 0; q < gc; ++q)
          full.at(m + p, n + q) =
              S::add(full.at(m + p, n + q), S::mul(f.at(m, n), g.at(p, q)));

  const int oor = f.origin_row() + g.origin_row();
  const int ooc = f.origin_col() + g.origin_col();
  switch (mode) {
    case Mode::full:
      return detail::make_result(std::move(full), mode, oor, ooc);
    case Mode::same:
      detail::require_se_fits(f, g, mode);
      return detail::make_result(
          crop(full, g.origin_row(), g.origin_col(), fr, fc), mode,
          f.origin_row(), f.origin_col());
    case Mode::valid:
      detail::require_se_fits(f, g, mode);
      return detail::make_result(
          crop(full, gr - 1, gc - 1, fr - gr + 1, fc - gc + 1), mode,
          oor - (gr - 1), ooc - (gc - 1));
  }
  fail(Errc::shape_mismatch, "invalid mode");
}

/// Right adjoint of dilation: out[r][s] meets residual(g[p][q], f[r+p][s+q])
/// over g's index range. Valid sweeps exactly the windows that fit; same and
/// full read semiring zero outside f.
template <ResiduatedSemiring S>
MorphResult<S> erode(const Image<S>& f, const Image<S>& g,
                     Mode mode = Mode::valid) {
  const int fr = f.rows(), fc = f.cols(), gr = g.rows(), gc = g.cols();

  // Meet-accumulate residual(g[p][q], f(read_r+p, read_c+q)) over g.
  auto sweep_at = [&](int base_r, int base_c, bool padded) {
    typename S::value_type acc{};
    bool first = true;
    for (int p = 0; p < gr; ++p)
      for (int q = 0; q < gc; ++q) {
        typename S::value_type fv =
            padded ? f.at_or(base_r + p, base_c + q, S::zero())
                   : f.at(base_r + p, base_c + q);
        typename S::value_type v = S::residual(g.at(p, q), fv);
        acc = first ? v : sr_meet<S>(acc, v);
        first = false;
      }
    return acc;
  };

  switch (mode) {
    case Mode::valid: {
      detail::require_se_fits(f, g, mode);
      Image<S> out(fr - gr + 1, fc - gc + 1);
      for (int r = 0; r < out.rows(); ++r)
        for (int s = 0; s < out.cols(); ++s)
          out.at(r, s) = sweep_at(r, s, false);
      return detail::make_result(std::move(out), mode,
                                 f.origin_row() - g.origin_row(),
                                 f.origin_col() - g.origin_col());
    }
    case Mode::same: {
      Image<S> out(fr, fc);
      for (int r = 0; r < fr; ++r)
        for (int s = 0; s < fc; ++s)
          out.at(r, s) = sweep_at(r - g.origin_row(), s - g.origin_col(), true);
      return detail::make_result(std::move(out), mode, f.origin_row(),
                                 f.origin_col());
    }
    case Mode::full: {
      Image<S> out(fr + gr - 1, fc + gc - 1);
      for (int r = 0; r < out.rows(); ++r)
        for (int s = 0; s < out.cols(); ++s)
          out.at(r, s) = sweep_at(r - (gr - 1), s - (gc - 1), true);
      return detail::make_result(
          std::move(out), mode, f.origin_row() - g.origin_row() + (gr - 1),
          f.origin_col() - g.origin_col() + (gc - 1));
    }
  }
  fail(Errc::shape_mismatch, "invalid mode");
}

/// Erode then dilate back. The erosion runs on the full window so that every
/// fitting translate contributes, even when the element's support does not
/// reach its matrix edges; the valid-mode dilation lands back on f's shape
/// and alignment.
template <ResiduatedSemiring S>
Image<S> opening(const Image<S>& f, const Image<S>& g) {
  Image<S> out = dilate(erode(f, g, Mode::full).image, g, Mode::valid).image;
  out.set_origin(f.origin_row(), f.origin_col());
  return out;
}

/// Dilate then erode back; dual composite of opening.
template <ResiduatedSemiring S>
Image<S> closing(const Image<S>& f, const Image<S>& g) {
  Image<S> out = erode(dilate(f, g, Mode::full).image, g, Mode::valid).image;
  out.set_origin(f.origin_row(), f.origin_col());
  return out;
}

/// Outcome of one law-verification run.
struct LawReport {
  std::string law;
  int trials = 0;
  bool passed = true;
  /// Empty when the law held; otherwise a serialized description of the first
  /// failing instance.
  std::string counterexample;
};

/// Galois-connection check for one triple: dilate(f,g) <= e iff
/// f <= erode(e,g). e must be shaped like the full dilation output.
template <ResiduatedSemiring S>
LawReport adjunction_holds(const Image<S>& f, const Image<S>& e,
                           const Image<S>& g) {
  if (e.rows() != f.rows() + g.rows() - 1 ||
      e.cols() != f.cols() + g.cols() - 1)
    fail(Errc::shape_mismatch,
         "adjunction check needs e shaped like the full dilation output");
  bool lhs = image_leq(dilate(f, g, Mode::full).image, e);
  bool rhs = image_leq(f, erode(e, g, Mode::valid).image);
  LawReport report{"adjunction", 1, lhs == rhs, {}};
  if (!report.passed)
    report.counterexample = "f:\n" + to_text(f) + "g:\n" + to_text(g) +
                            "e:\n" + to_text(e);
  return report;
}

}  // namespace semimorph
