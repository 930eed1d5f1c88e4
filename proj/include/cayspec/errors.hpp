#pragma once

#include <stdexcept>
#include <string>

namespace cayspec {

// Table/arity problems when building a group from a raw multiplication table.
// reason is one of: "no-identity", "missing-inverse", "non-associative", "not-latin-square".
class NotAGroupError : public std::runtime_error {
 public:
  NotAGroupError(std::string reason, const std::string& detail)
      : std::runtime_error("NotAGroup(" + reason + "): " + detail), reason_(std::move(reason)) {}
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

class OrderCapExceededError : public std::runtime_error {
 public:
  OrderCapExceededError(long long order, int cap)
      : std::runtime_error("OrderCapExceeded: order " + std::to_string(order) +
                           " exceeds cap " + std::to_string(cap)) {}
};

// Generating-set validation failures. code names the failed flag, witness the offending element.
class SetValidationError : public std::runtime_error {
 public:
  enum class Code { NotSymmetric, ContainsIdentity, NotConjugationClosed, NotGenerating };

  SetValidationError(Code code, int witness)
      : std::runtime_error(code_name(code) + (witness >= 0 ? " (witness element " +
                           std::to_string(witness) + ")" : std::string())),
        code_(code), witness_(witness) {}

  Code code() const { return code_; }
  int witness() const { return witness_; }

  static std::string code_name(Code c) {
    switch (c) {
      case Code::NotSymmetric: return "NotSymmetric";
      case Code::ContainsIdentity: return "ContainsIdentity";
      case Code::NotConjugationClosed: return "NotConjugationClosed";
      case Code::NotGenerating: return "NotGenerating";
    }
    return "?";
  }

 private:
  Code code_;
  int witness_;
};

class TooLargeError : public std::runtime_error {
 public:
  TooLargeError(int n, int cap)
      : std::runtime_error("TooLarge: n = " + std::to_string(n) +
                           " exceeds exact-enumeration cap " + std::to_string(cap)) {}
};

class DisconnectedError : public std::runtime_error {
 public:
  DisconnectedError() : std::runtime_error("Disconnected: graph is not connected") {}
};

class TooSmallError : public std::runtime_error {
 public:
  explicit TooSmallError(const std::string& what) : std::runtime_error("TooSmall: " + what) {}
};

class NotSymmetricMatrixError : public std::runtime_error {
 public:
  explicit NotSymmetricMatrixError(double asym)
      : std::runtime_error("NotSymmetric: max asymmetry " + std::to_string(asym)) {}
};

class NoConvergenceError : public std::runtime_error {
 public:
  NoConvergenceError() : std::runtime_error("NoConvergence: eigensolver did not converge") {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error("ParseError: " + what) {}
};

class NoValidSetError : public std::runtime_error {
 public:
  explicit NoValidSetError(const std::string& what)
      : std::runtime_error("NoValidSet: " + what) {}
};

class ManifestError : public std::runtime_error {
 public:
  explicit ManifestError(const std::string& what) : std::runtime_error("ManifestError: " + what) {}
};

}  // namespace cayspec
