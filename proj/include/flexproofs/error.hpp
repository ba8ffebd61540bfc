#pragma once

#include <stdexcept>
#include <string>

namespace flexproofs {

enum class Errc {
  length_mismatch,
  invalid_argument,
  out_of_range,
  malformed,
  io,
  bad_format,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline void require(bool cond, Errc code, const char* what) {
  if (!cond) throw Error(code, what);
}

}  // namespace flexproofs
