#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semimorph {

/// Domain error categories. Every throwing operation in the library uses one
/// of these so callers can react to the category rather than the message.
enum class Errc {
  unknown_semiring,
  carrier_mismatch,
  order_undefined,
  no_residual,
  shape_mismatch,
  empty_image,
  unsupported_semiring,
  out_of_bounds,
  empty_structuring_element,
  unsupported_format,
  truncated_image,
  value_out_of_range,
  bad_token,
  io_error,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::unknown_semiring: return "UnknownSemiring";
    case Errc::carrier_mismatch: return "CarrierMismatch";
    case Errc::order_undefined: return "OrderUndefined";
    case Errc::no_residual: return "NoResidual";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::empty_image: return "EmptyImage";
    case Errc::unsupported_semiring: return "UnsupportedSemiring";
    case Errc::out_of_bounds: return "OutOfBounds";
    case Errc::empty_structuring_element: return "EmptyStructuringElement";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::truncated_image: return "TruncatedImage";
    case Errc::value_out_of_range: return "ValueOutOfRange";
    case Errc::bad_token: return "BadToken";
    case Errc::io_error: return "IoError";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace semimorph
