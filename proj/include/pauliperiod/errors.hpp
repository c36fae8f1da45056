#pragma once

#include <stdexcept>
#include <string>

namespace pauliperiod {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

class NotNilpotentError : public Error {
 public:
  explicit NotNilpotentError(const std::string& msg) : Error(msg) {}
};

class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

class NonCliffordError : public Error {
 public:
  explicit NonCliffordError(const std::string& msg) : Error(msg) {}
};

class RingUnrepresentableError : public Error {
 public:
  explicit RingUnrepresentableError(const std::string& msg) : Error(msg) {}
};

class UnsupportedControlError : public Error {
 public:
  explicit UnsupportedControlError(const std::string& msg) : Error(msg) {}
};

class UnsupportedGateError : public Error {
 public:
  explicit UnsupportedGateError(const std::string& msg) : Error(msg) {}
};

class NonPermutationGateError : public Error {
 public:
  explicit NonPermutationGateError(const std::string& msg) : Error(msg) {}
};

class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(const std::string& msg) : Error(msg) {}
};

class MismatchError : public Error {
 public:
  explicit MismatchError(const std::string& msg) : Error(msg) {}
};

class NoFiniteOrderError : public Error {
 public:
  explicit NoFiniteOrderError(const std::string& msg) : Error(msg) {}
};

class NoSuchEigenphaseError : public Error {
 public:
  explicit NoSuchEigenphaseError(const std::string& msg) : Error(msg) {}
};

class PostSelectImpossibleError : public Error {
 public:
  explicit PostSelectImpossibleError(const std::string& msg) : Error(msg) {}
};

class NotAnEigenstateError : public Error {
 public:
  explicit NotAnEigenstateError(const std::string& msg) : Error(msg) {}
};

class ZeroProjectionError : public Error {
 public:
  explicit ZeroProjectionError(const std::string& msg) : Error(msg) {}
};

class MalformedTableauError : public Error {
 public:
  explicit MalformedTableauError(const std::string& msg) : Error(msg) {}
};

}  // namespace pauliperiod
