#pragma once

#include <algorithm>

#include "semimorph/image.hpp"
#include "semimorph/semiring.hpp"

// Brute-force transcriptions of the classical set-based and flat gray-scale
// definitions. Deliberately slow and single-minded: these exist as ground
// truth for equivalence tests against the semiring convolution path, so they
// must not share code with it.
namespace semimorph::oracle {

/// Minkowski sum {a + b | a in A, b in B} by double enumeration.
inline PointSet set_dilate(const PointSet& a, const PointSet& b) {
  PointSet out;
  for (const auto& [ar, ac] : a)
    for (const auto& [br, bc] : b) out.emplace(ar + br, ac + bc);
  return out;
}

/// Point reflection of a set through the origin.
inline PointSet reflect(const PointSet& b) {
  PointSet out;
  for (const auto& [r, c] : b) out.emplace(-r, -c);
  return out;
}

/// {h | translate(B,h) subset-of A}. The shift h is quantified over all of
/// Z^2; every solution must put B's bounding box inside A's, so scanning A's
/// bounding box expanded by B's is exhaustive.
inline PointSet set_erode(const PointSet& a, const PointSet& b) {
  if (b.empty())
    fail(Errc::empty_structuring_element, "set erosion needs a nonempty B");
  PointSet out;
  if (a.empty()) return out;

  int amin_r = a.begin()->first, amax_r = amin_r;
  int amin_c = a.begin()->second, amax_c = amin_c;
  for (const auto& [r, c] : a) {
    amin_r = std::min(amin_r, r);
    amax_r = std::max(amax_r, r);
    amin_c = std::min(amin_c, c);
    amax_c = std::max(amax_c, c);
  }
  int bmin_r = b.begin()->first, bmax_r = bmin_r;
  int bmin_c = b.begin()->second, bmax_c = bmin_c;
  for (const auto& [r, c] : b) {
    bmin_r = std::min(bmin_r, r);
    bmax_r = std::max(bmax_r, r);
    bmin_c = std::min(bmin_c, c);
    bmax_c = std::max(bmax_c, c);
  }

  for (int hr = amin_r - bmax_r; hr <= amax_r - bmin_r; ++hr)
    for (int hc = amin_c - bmax_c; hc <= amax_c - bmin_c; ++hc) {
      bool inside = true;
      for (const auto& [br, bc] : b)
        if (!a.count({br + hr, bc + hc})) {
          inside = false;
          break;
        }
      if (inside) out.emplace(hr, hc);
    }
  return out;
}

/// Flat gray-scale dilation (f (+) B)(x,y) = max over (s,t) in B of
/// f(x-s, y-t), with off-image reads as -inf. Output is indexed like f.
inline Image<MaxPlusSemiring> gray_dilate_flat(const Image<MaxPlusSemiring>& f,
                                               const PointSet& b) {
  if (b.empty())
    fail(Errc::empty_structuring_element, "flat dilation needs a nonempty B");
  Image<MaxPlusSemiring> out(f.rows(), f.cols());
  out.set_origin(f.origin_row(), f.origin_col());
  for (int x = 0; x < f.rows(); ++x)
    for (int y = 0; y < f.cols(); ++y) {
      ExtInt best = ExtInt::neg_inf();
      for (const auto& [s, t] : b) {
        ExtInt v = f.at_or(x - s, y - t, ExtInt::neg_inf());
        best = std::max(best, v);
      }
      out.at(x, y) = best;
    }
  return out;
}

/// Flat gray-scale erosion (f (-) B)(x,y) = min over (s,t) in B of
/// f(x+s, y+t); off-image reads are left out of the min, and a pixel whose
/// every read falls outside gets +inf (the empty min). Output is indexed
/// like f.
inline Image<MaxPlusSemiring> gray_erode_flat(const Image<MaxPlusSemiring>& f,
                                              const PointSet& b) {
  if (b.empty())
    fail(Errc::empty_structuring_element, "flat erosion needs a nonempty B");
  Image<MaxPlusSemiring> out(f.rows(), f.cols());
  out.set_origin(f.origin_row(), f.origin_col());
  for (int x = 0; x < f.rows(); ++x)
    for (int y = 0; y < f.cols(); ++y) {
      ExtInt best = ExtInt::pos_inf();
      for (const auto& [s, t] : b)
        if (f.in_bounds(x + s, y + t)) best = std::min(best, f.at(x + s, y + t));
      out.at(x, y) = best;
    }
  return out;
}

}  // namespace semimorph::oracle
