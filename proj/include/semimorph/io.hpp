#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <json.hpp>

#include "semimorph/anyimage.hpp"
#include "semimorph/error.hpp"
#include "semimorph/image.hpp"
#include "semimorph/semiring.hpp"

namespace semimorph {

namespace detail {

struct PnmCursor {
  std::string_view data;
  std::size_t pos = 0;

  bool eof() const { return pos >= data.size(); }

  // Netpbm allows '#' comments wherever whitespace may appear.
  void skip_space() {
    while (!eof()) {
      char ch = data[pos];
      if (ch == '#') {
        while (!eof() && data[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  int next_uint(const std::string& what) {
    skip_space();
    if (eof())
      fail(Errc::truncated_image, "unexpected end of file, expected " + what);
    if (!std::isdigit(static_cast<unsigned char>(data[pos])))
      fail(Errc::bad_token, "expected " + what + ", got '" +
                                std::string(1, data[pos]) + "'");
    long long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(data[pos]))) {
      v = v * 10 + (data[pos] - '0');
      if (v > 1'000'000'000LL)
        fail(Errc::value_out_of_range, what + " is absurdly large");
      ++pos;
    }
    return static_cast<int>(v);
  }

  // P1 rasters may pack digits without separators.
  char next_raster_char(const std::string& where) {
    skip_space();
    if (eof())
      fail(Errc::truncated_image, "unexpected end of file at " + where);
    return data[pos++];
  }
};

}  // namespace detail

/// Parses ASCII netpbm: P1 loads as a boolean image (1 = foreground), P2 as a
/// max-plus image with finite values 0..maxval (maxval at most 255). Origin
/// is always (0,0); comments and arbitrary token whitespace are accepted.
inline AnyImage read_netpbm(std::string_view bytes) {
  detail::PnmCursor cur{bytes};
  cur.skip_space();
  if (cur.pos + 2 > bytes.size() || bytes[cur.pos] != 'P')
    fail(Errc::unsupported_format, "not a netpbm file (bad magic)");
  char kind = bytes[cur.pos + 1];
  cur.pos += 2;
  if (kind == '4' || kind == '5')
    fail(Errc::unsupported_format,
         "binary netpbm (P4/P5) is not supported; use ASCII P1/P2");
  if (kind != '1' && kind != '2')
    fail(Errc::unsupported_format,
         std::string("unsupported netpbm magic 'P") + kind + "'");

  int cols = cur.next_uint("width");
  int rows = cur.next_uint("height");
  if (rows < 1 || cols < 1)
    fail(Errc::empty_image, "netpbm image has zero dimension");

  if (kind == '1') {
    Image<BooleanSemiring> img(rows, cols, 0);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        std::string where =
            "row " + std::to_string(r) + ", col " + std::to_string(c);
        char ch = cur.next_raster_char(where);
        if (ch == '0' || ch == '1') {
          img.at(r, c) = static_cast<std::uint8_t>(ch - '0');
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
          fail(Errc::value_out_of_range, "pixel value " + std::string(1, ch) +
                                             " exceeds maxval 1 at " + where);
        } else {
          fail(Errc::bad_token,
               "unexpected character '" + std::string(1, ch) + "' at " + where);
        }
      }
    return AnyImage{std::move(img)};
  }

  int maxval = cur.next_uint("maxval");
  if (maxval < 1 || maxval > 255)
    fail(Errc::unsupported_format,
         "PGM maxval " + std::to_string(maxval) + " out of supported 1..255");
  Image<MaxPlusSemiring> img(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      std::string where =
          "row " + std::to_string(r) + ", col " + std::to_string(c);
      int v = cur.next_uint("pixel at " + where);
      if (v > maxval)
        fail(Errc::value_out_of_range, "pixel value " + std::to_string(v) +
                                           " exceeds maxval " +
                                           std::to_string(maxval) + " at " +
                                           where);
      img.at(r, c) = ExtInt::finite(v);
    }
  return AnyImage{std::move(img)};
}

/// Canonical P1: single spaces, one raster row per line.
inline std::string write_netpbm(const Image<BooleanSemiring>& img) {
  std::string out = "P1\n" + std::to_string(img.cols()) + " " +
                    std::to_string(img.rows()) + "\n";
  for (int r = 0; r < img.rows(); ++r) {
    for (int c = 0; c < img.cols(); ++c) {
      if (c) out += ' ';
      out += img.at(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

/// Canonical P2 with maxval 255; every value must be finite in 0..255.
inline std::string write_netpbm(const Image<MaxPlusSemiring>& img) {
  std::string out = "P2\n" + std::to_string(img.cols()) + " " +
                    std::to_string(img.rows()) + "\n255\n";
  for (int r = 0; r < img.rows(); ++r) {
    for (int c = 0; c < img.cols(); ++c) {
      ExtInt v = img.at(r, c);
      if (!v.is_finite() || v.value() < 0 || v.value() > 255)
        fail(Errc::value_out_of_range,
             "pixel value " + MaxPlusSemiring::format(v) +
                 " not representable in PGM at row " + std::to_string(r) +
                 ", col " + std::to_string(c));
      if (c) out += ' ';
      out += std::to_string(v.value());
    }
    out += '\n';
  }
  return out;
}

inline std::string write_netpbm(const AnyImage& img) {
  return std::visit(
      [](const auto& x) -> std::string {
        using S = typename std::decay_t<decltype(x)>::semiring;
        if constexpr (std::same_as<S, BooleanSemiring> ||
                      std::same_as<S, MaxPlusSemiring>)
          return write_netpbm(x);
        else
          fail(Errc::unsupported_semiring,
               "netpbm cannot hold '" + std::string(S::name) +
                   "' values; use the JSON matrix format");
      },
      img);
}

/// Reinterprets 8-bit gray levels k as the fuzzy values k/255.
inline Image<MinMaxSemiring> pgm_as_minmax(const Image<MaxPlusSemiring>& img) {
  Image<MinMaxSemiring> out(img.rows(), img.cols());
  out.set_origin(img.origin_row(), img.origin_col());
  for (int r = 0; r < img.rows(); ++r)
    for (int c = 0; c < img.cols(); ++c) {
      ExtInt v = img.at(r, c);
      if (!v.is_finite() || v.value() < 0 || v.value() > 255)
        fail(Errc::value_out_of_range,
             "value " + MaxPlusSemiring::format(v) +
                 " cannot be read as k/255 at row " + std::to_string(r) +
                 ", col " + std::to_string(c));
      out.at(r, c) = UnitFixed{static_cast<std::uint8_t>(v.value())};
    }
  return out;
}

/// JSON matrix document: {"semiring", "rows", "cols", "origin", "data"} with
/// values as their textual tokens. Lossless for every built-in carrier.
template <Semiring S>
nlohmann::json matrix_document(const Image<S>& img) {
  nlohmann::json data = nlohmann::json::array();
  for (int r = 0; r < img.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < img.cols(); ++c) row.push_back(S::format(img.at(r, c)));
    data.push_back(std::move(row));
  }
  return nlohmann::json{{"semiring", std::string(S::name)},
                        {"rows", img.rows()},
                        {"cols", img.cols()},
                        {"origin", {img.origin_row(), img.origin_col()}},
                        {"data", std::move(data)}};
}

template <Semiring S>
std::string write_matrix_json(const Image<S>& img) {
  return matrix_document(img).dump() + "\n";
}

inline std::string write_matrix_json(const AnyImage& img) {
  return std::visit([](const auto& x) { return write_matrix_json(x); }, img);
}

struct JsonReadResult {
  AnyImage image;
  /// Set when some legal token was rounded onto the carrier grid (min-max
  /// decimals that miss the 1/255 steps).
  bool quantization_note = false;
};

inline JsonReadResult read_matrix_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    fail(Errc::unsupported_format, "input is not a JSON matrix document");

  if (!j.contains("semiring") || !j["semiring"].is_string())
    fail(Errc::unsupported_format, "missing string field 'semiring'");
  SemiringKind kind = semiring_from_name(j["semiring"].get<std::string>());

  auto dim_field = [&](const char* name) {
    if (!j.contains(name) || !j[name].is_number_integer())
      fail(Errc::unsupported_format,
           std::string("missing integer field '") + name + "'");
    long long v = j[name].get<long long>();
    if (v < 1) fail(Errc::empty_image, std::string(name) + " must be positive");
    if (v > 100000)
      fail(Errc::value_out_of_range, std::string(name) + " is absurdly large");
    return static_cast<int>(v);
  };
  int rows = dim_field("rows");
  int cols = dim_field("cols");

  int origin_r = 0, origin_c = 0;
  if (j.contains("origin")) {
    const auto& o = j["origin"];
    if (!o.is_array() || o.size() != 2 || !o[0].is_number_integer() ||
        !o[1].is_number_integer())
      fail(Errc::unsupported_format, "'origin' must be [row, col]");
    origin_r = o[0].get<int>();
    origin_c = o[1].get<int>();
  }

  if (!j.contains("data") || !j["data"].is_array())
    fail(Errc::unsupported_format, "missing array field 'data'");
  const auto& data = j["data"];
  if (static_cast<int>(data.size()) != rows)
    fail(Errc::shape_mismatch, "data has " + std::to_string(data.size()) +
                                   " rows, expected " + std::to_string(rows));

  return with_semiring(kind, [&](auto tag) {
    using S = typename decltype(tag)::type;
    Image<S> img(rows, cols);
    bool quantized = false;
    for (int r = 0; r < rows; ++r) {
      const auto& row = data[r];
      if (!row.is_array() || static_cast<int>(row.size()) != cols)
        fail(Errc::shape_mismatch, "data row " + std::to_string(r) + " has " +
                                       std::to_string(row.size()) +
                                       " entries, expected " +
                                       std::to_string(cols));
      for (int c = 0; c < cols; ++c) {
        std::string where =
            "row " + std::to_string(r) + ", col " + std::to_string(c);
        if (!row[c].is_string())
          fail(Errc::bad_token, "data entry at " + where +
                                    " must be a string token");
        std::string token = row[c].get<std::string>();
        auto parsed = S::parse(token);
        if (!parsed)
          fail(Errc::bad_token, "unparsable token '" + token +
                                    "' for semiring '" + std::string(S::name) +
                                    "' at " + where);
        img.at(r, c) = parsed->value;
        quantized |= parsed->quantized;
      }
    }
    img.set_origin(origin_r, origin_c);
    return JsonReadResult{AnyImage{std::move(img)}, quantized};
  });
}

}  // namespace semimorph
