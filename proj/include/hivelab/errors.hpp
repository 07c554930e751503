#pragma once

#include <stdexcept>
#include <string>

namespace hivelab {

/// Base of every domain error. `name()` is the stable identifier used in
/// machine-readable error payloads.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

#define HIVELAB_DEFINE_ERROR(Type)                                             \
  class Type : public Error {                                                  \
  public:                                                                      \
    explicit Type(const std::string& detail) : Error(#Type, detail) {}        \
  }

HIVELAB_DEFINE_ERROR(InvalidWeight);
HIVELAB_DEFINE_ERROR(NonDominant);
HIVELAB_DEFINE_ERROR(Incompatible);
HIVELAB_DEFINE_ERROR(NegativeShift);
HIVELAB_DEFINE_ERROR(ResourceLimit);
HIVELAB_DEFINE_ERROR(RankMismatch);
HIVELAB_DEFINE_ERROR(TraceMismatch);
HIVELAB_DEFINE_ERROR(DegenerateOrbit);
HIVELAB_DEFINE_ERROR(Unsupported);
HIVELAB_DEFINE_ERROR(ValidationFailure);
HIVELAB_DEFINE_ERROR(ParseError);

#undef HIVELAB_DEFINE_ERROR

} // namespace hivelab
