#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace atlas {

enum class Errc {
  kNotSkewSymmetric,
  kEmptyMatrix,
  kNotSquare,
  kVertexOutOfRange,
  kOverflow,
  kParseError,
  kCapZero,
  kInvalidSpec,
  kNotSpherical,
  kNoTreeRepresentative,
  kCacheCorrupt,
};

std::string_view to_string(Errc code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::kParseError,
              "parse error at offset " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace atlas
