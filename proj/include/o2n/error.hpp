#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace o2n {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Highest weight violates parity or the dominance chain.
class InvalidWeight : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

class ExpansionError : public Error {
 public:
  using Error::Error;
};

class RegularizationError : public Error {
 public:
  RegularizationError(int k, std::size_t source, std::size_t target, const std::string& detail)
      : Error("F(" + std::to_string(k - 1) + "," + std::to_string(k) + "): pole at u=0 in entry (source " +
              std::to_string(source) + ", target " + std::to_string(target) + "): " + detail),
        k_(k), source_(source), target_(target) {}
  int k() const { return k_; }
  std::size_t source() const { return source_; }
  std::size_t target() const { return target_; }

 private:
  int k_;
  std::size_t source_, target_;
};

// The linear system used to recover F(k-1,k) on degenerate columns was
// inconsistent or underdetermined.
class CompletionError : public Error {
 public:
  using Error::Error;
};

class ClosureIncomplete : public Error {
 public:
  ClosureIncomplete(std::vector<std::string> missing)
      : Error(message(missing)), missing_(std::move(missing)) {}
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  static std::string message(const std::vector<std::string>& m) {
    std::string s = "bracket closure stalled; missing";
    for (const auto& g : m) s += " " + g;
    return s;
  }
  std::vector<std::string> missing_;
};

class ArchiveError : public Error {
 public:
  using Error::Error;
};

}  // namespace o2n
