#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pltower {

enum class ErrorKind {
  DivisionByZero,
  IncompatibleFields,
  InfiniteOperand,
  AllCoefficientsZero,
  NonPositive,
  OutOfDomain,
  Syntax,
  Semantic,
  LeafCountMismatch,
  NotInF,
  UnboundName,
  PoleInPiece,
  NotFixed,
  Precondition,
  SearchExhausted,
};

std::string_view to_string(ErrorKind kind);

struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Every failure in the library surfaces as this exception. The message names
/// the violated invariant; parse failures also carry a 1-based position.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, const std::string& message, SourcePosition where);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourcePosition>& position() const noexcept { return position_; }
  /// The message without the kind and position prefix.
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorKind kind_;
  std::string detail_;
  std::optional<SourcePosition> position_;
};

}  // namespace pltower
