#include "flexproofs/error.hpp"

namespace flexproofs {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::length_mismatch: return "length mismatch";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::out_of_range: return "out of range";
    case Errc::malformed: return "malformed input";
    case Errc::io: return "i/o error";
    case Errc::bad_format: return "bad format";
  }
  return "unknown error";
}

}  // namespace flexproofs
