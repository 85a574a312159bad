#pragma once

#include <stdexcept>
#include <string>

namespace flipcube {

enum class Errc {
  DuplicatePoint,
  CollinearCircle,
  DegenerateInput,
  CrossingInput,
  NotFlippable,
  AlreadyDelaunay,
  NotInTriangulation,
  PentagonExists,
  BudgetExceeded,
  Disconnected,
  MismatchedPointSets,
  NotADiagonal,
  InvalidParams,
  MaskNotOnHull,
  Io,
  Internal,
};

const char* errc_name(Errc c);

/// Structured error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace flipcube
