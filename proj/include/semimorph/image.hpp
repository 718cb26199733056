#pragma once

#include <cassert>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semimorph/error.hpp"
#include "semimorph/semiring.hpp"

namespace semimorph {

/// Output-domain convention of a morphological operator: grown output (index
/// sums), input-sized output (origin-aligned crop), or fully-covered output
/// (index differences).
enum class Mode { full, same, valid };

constexpr std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::full: return "full";
    case Mode::same: return "same";
    case Mode::valid: return "valid";
  }
  return "?";
}

inline std::optional<Mode> mode_from_name(std::string_view s) {
  if (s == "full") return Mode::full;
  if (s == "same") return Mode::same;
  if (s == "valid") return Mode::valid;
  return std::nullopt;
}

/// (row, col) displacement or coordinate. Rows grow downward, matching matrix
/// print order.
using Point = std::pair<int, int>;

/// Finite set of integer coordinates; the representation the classical
/// set-based operators work on.
using PointSet = std::set<Point>;

inline PointSet translate(const PointSet& a, Point h) {
  PointSet out;
  for (const auto& [r, c] : a) out.emplace(r + h.first, c + h.second);
  return out;
}

/// Rectangular semiring-valued matrix with an origin. The origin names the
/// matrix index that sits at coordinate (0,0); index (i,j) is coordinate
/// (i - origin_row, j - origin_col). Immutable in spirit: operations return
/// fresh images.
template <Semiring S>
class Image {
 public:
  using semiring = S;
  using value_type = typename S::value_type;

  Image(int rows, int cols, value_type fill = S::zero())
      : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
      fail(Errc::empty_image, "image dimensions must be positive, got " +
                                  std::to_string(rows) + "x" +
                                  std::to_string(cols));
    data_.assign(static_cast<std::size_t>(rows) * cols, fill);
  }

  static Image from_data(int rows, int cols, std::vector<value_type> data,
                         int origin_r = 0, int origin_c = 0) {
    Image img(rows, cols);
    if (data.size() != static_cast<std::size_t>(rows) * cols)
      fail(Errc::shape_mismatch,
           "data length " + std::to_string(data.size()) + " does not match " +
               std::to_string(rows) + "x" + std::to_string(cols));
    img.data_ = std::move(data);
    img.set_origin(origin_r, origin_c);
    return img;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int origin_row() const { return origin_r_; }
  int origin_col() const { return origin_c_; }

  void set_origin(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      fail(Errc::out_of_bounds, "origin (" + std::to_string(r) + "," +
                                    std::to_string(c) +
                                    ") outside image of size " +
                                    std::to_string(rows_) + "x" +
                                    std::to_string(cols_));
    origin_r_ = r;
    origin_c_ = c;
  }

  bool in_bounds(int r, int c) const {
    return r >= 0 && r < rows_ && c >= 0 && c < cols_;
  }

  value_type at(int r, int c) const {
    assert(in_bounds(r, c));
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  value_type& at(int r, int c) {
    assert(in_bounds(r, c));
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  value_type at_or(int r, int c, value_type fallback) const {
    return in_bounds(r, c) ? at(r, c) : fallback;
  }

  const std::vector<value_type>& data() const { return data_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  int rows_;
  int cols_;
  int origin_r_ = 0;
  int origin_c_ = 0;
  std::vector<value_type> data_;
};

/// Rectangular crop. The new origin is given explicitly.
template <Semiring S>
Image<S> crop(const Image<S>& img, int r0, int c0, int rows, int cols,
              int origin_r = 0, int origin_c = 0) {
  if (r0 < 0 || c0 < 0 || r0 + rows > img.rows() || c0 + cols > img.cols())
    fail(Errc::out_of_bounds, "crop window outside image");
  Image<S> out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out.at(r, c) = img.at(r0 + r, c0 + c);
  out.set_origin(origin_r, origin_c);
  return out;
}

/// Point reflection through the coordinate origin: the result holds at
/// coordinate (x,y) the input's value at (-x,-y).
template <Semiring S>
Image<S> reflect(const Image<S>& b) {
  Image<S> out(b.rows(), b.cols());
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c)
      out.at(r, c) = b.at(b.rows() - 1 - r, b.cols() - 1 - c);
  out.set_origin(b.rows() - 1 - b.origin_row(), b.cols() - 1 - b.origin_col());
  return out;
}

namespace detail {
template <Semiring S>
void require_same_shape(const Image<S>& a, const Image<S>& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::shape_mismatch,
         std::string(what) + ": " + std::to_string(a.rows()) + "x" +
             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
             "x" + std::to_string(b.cols()));
}
}  // namespace detail

/// Elementwise join (semiring addition) of equally shaped images.
template <OrderedSemiring S>
Image<S> pointwise_join(const Image<S>& a, const Image<S>& b) {
  detail::require_same_shape(a, b, "pointwise_join");
  Image<S> out = a;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      out.at(r, c) = S::add(a.at(r, c), b.at(r, c));
  return out;
}

/// Elementwise meet of the derived order.
template <OrderedSemiring S>
Image<S> pointwise_meet(const Image<S>& a, const Image<S>& b) {
  detail::require_same_shape(a, b, "pointwise_meet");
  Image<S> out = a;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      out.at(r, c) = sr_meet<S>(a.at(r, c), b.at(r, c));
  return out;
}

/// Indexwise derived order on equally shaped images.
template <OrderedSemiring S>
bool image_leq(const Image<S>& a, const Image<S>& b) {
  detail::require_same_shape(a, b, "image_leq");
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!sr_leq<S>(a.at(r, c), b.at(r, c))) return false;
  return true;
}

/// Binary negation; foreground and background swap roles.
template <class S>
  requires std::same_as<S, BooleanSemiring>
Image<S> complement(const Image<S>& f) {
  Image<S> out = f;
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c) out.at(r, c) = f.at(r, c) ? 0 : 1;
  return out;
}

/// Kronecker (tensor) product: block (i,j) is R[i,j] (*) S elementwise.
template <Semiring Sr>
Image<Sr> kronecker(const Image<Sr>& r, const Image<Sr>& s) {
  Image<Sr> out(r.rows() * s.rows(), r.cols() * s.cols());
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      for (int p = 0; p < s.rows(); ++p)
        for (int q = 0; q < s.cols(); ++q)
          out.at(i * s.rows() + p, j * s.cols() + q) =
              Sr::mul(r.at(i, j), s.at(p, q));
  return out;
}

/// Foreground coordinates of a binary image, measured relative to its origin.
template <class S>
  requires std::same_as<S, BooleanSemiring>
PointSet to_point_set(const Image<S>& f) {
  PointSet out;
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c)
      if (f.at(r, c)) out.emplace(r - f.origin_row(), c - f.origin_col());
  return out;
}

/// Inverse of to_point_set for points that fit the given bounds.
inline Image<BooleanSemiring> from_point_set(const PointSet& pts, int rows,
                                             int cols, int origin_r = 0,
                                             int origin_c = 0) {
  Image<BooleanSemiring> out(rows, cols, 0);
  out.set_origin(origin_r, origin_c);
  for (const auto& [x, y] : pts) {
    int r = x + origin_r;
    int c = y + origin_c;
    if (!out.in_bounds(r, c))
      fail(Errc::out_of_bounds, "point (" + std::to_string(x) + "," +
                                    std::to_string(y) +
                                    ") outside bounds " + std::to_string(rows) +
                                    "x" + std::to_string(cols));
    out.at(r, c) = 1;
  }
  return out;
}

/// One-line-per-row rendering, mainly for error messages and reports.
template <Semiring S>
std::string to_text(const Image<S>& img) {
  std::string out;
  for (int r = 0; r < img.rows(); ++r) {
    for (int c = 0; c < img.cols(); ++c) {
      if (c) out += ' ';
      out += S::format(img.at(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace semimorph
