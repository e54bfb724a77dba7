#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dickson {

enum class Errc {
  CompositeP,
  SmallChar,
  Overflow,
  DivByZero,
  InternalInconsistency,
  ZeroParam,
  BadRange,
  InconsistentRecursion,
  OutOfRange,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dickson
