#pragma once

#include <stdexcept>
#include <string>

namespace leflab {

// All library failures carry a stable machine-readable class string so the
// CLI can surface them without parsing messages.
class Error : public std::runtime_error {
public:
  Error(std::string cls, const std::string& msg)
      : std::runtime_error(msg), cls_(std::move(cls)) {}
  const std::string& cls() const { return cls_; }

private:
  std::string cls_;
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error("dimension", msg) {}
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& msg) : Error("shape", msg) {}
};

struct NonArtinianError : Error {
  explicit NonArtinianError(const std::string& msg) : Error("non-artinian", msg) {}
};

struct HypothesisError : Error {
  explicit HypothesisError(const std::string& msg) : Error("hypothesis", msg) {}
};

struct CharacterizationError : Error {
  explicit CharacterizationError(const std::string& msg)
      : Error("characterization", msg) {}
};

struct ResourceError : Error {
  explicit ResourceError(const std::string& msg) : Error("resource", msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error("config", msg) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error("internal", msg) {}
};

// Parse errors report 1-based line/column of the offending character.
struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error("parse", msg + " (line " + std::to_string(line) + ", column " +
                            std::to_string(col) + ")"),
        line(line), col(col) {}
  int line;
  int col;
};

} // namespace leflab
