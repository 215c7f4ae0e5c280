#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ghostnum {

enum class ErrorKind {
  NotAGroup,
  OrderNotPrimePower,
  WrongPrime,
  IndexOutOfRange,
  NotNormal,
  PrimeMismatch,
  NotCentral,
  OrderMismatch,
  TrivialGroup,
  InvalidSpec,
  SizeCapExceeded,
  DimensionMismatch,
  NotEquivariant,
  ShapeMismatch,
  BudgetExceeded,
  InvalidModulus,
};

std::string_view to_string(ErrorKind kind);

// Every library failure carries one of the kinds above; callers that only
// care about the message can treat it as a std::runtime_error.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::OrderNotPrimePower: return "OrderNotPrimePower";
    case ErrorKind::WrongPrime: return "WrongPrime";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::TrivialGroup: return "TrivialGroup";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
  }
  return "Unknown";
}

}  // namespace ghostnum
