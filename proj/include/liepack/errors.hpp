#pragma once

#include <stdexcept>
#include <string>

namespace liepack {

/// Base for all computation errors. `name()` is stable and machine-readable;
/// the CLI echoes it on exit code 1.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string &msg)
      : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
  const std::string &name() const { return name_; }

private:
  std::string name_;
};

#define LIEPACK_ERROR(Name)                                                    \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &msg) : Error(#Name, msg) {}               \
  }

LIEPACK_ERROR(DimensionMismatch);
LIEPACK_ERROR(EmptyList);
LIEPACK_ERROR(SquareMismatch);
LIEPACK_ERROR(NotInNonIdentityComponent);
LIEPACK_ERROR(UnsupportedGroup);
LIEPACK_ERROR(NormalizationViolated);
LIEPACK_ERROR(UnsupportedGeometry);
LIEPACK_ERROR(BlockMismatch);
LIEPACK_ERROR(SL2NotInLevi);
LIEPACK_ERROR(InvalidParameter);
LIEPACK_ERROR(UnsupportedFixture);
LIEPACK_ERROR(ParseError);

#undef LIEPACK_ERROR

} // namespace liepack
