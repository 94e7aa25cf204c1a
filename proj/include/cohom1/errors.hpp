#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cohom1 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedSubgroupShape : public Error {
 public:
  using Error::Error;
};

class NotASphere : public Error {
 public:
  using Error::Error;
};

class NotInTable : public Error {
 public:
  using Error::Error;
};

class WrongFamily : public Error {
 public:
  using Error::Error;
};

class MalformedPresentation : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

class LiftAmbiguous : public Error {
 public:
  using Error::Error;
};

/// Raised by classify() when the instance fails its side conditions.
class InvalidFamily : public Error {
 public:
  explicit InvalidFamily(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "invalid family instance:";
    for (const auto& s : v) out += " [" + s + "]";
    return out;
  }
  std::vector<std::string> violations_;
};

}  // namespace cohom1
