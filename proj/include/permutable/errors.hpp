#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace permutable {

enum class ErrorKind {
  BadTable,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotBijectiveRows,
  NotPermutation,
  OrderCapExceeded,
  InvalidAction,
  NotHomomorphism,
  NotASubgroup,
  NotNormal,
  SubgroupLimitExceeded,
  NotASupplement,
  NoComplementFound,
  HypothesisViolated,
  NotAbelianNormal,
  NotSemidirect,
  LineNotInvariant,
  InvalidSystem,
  NoChainFound,
  BadParams,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Level of an inverse system the error refers to, when there is one.
  std::optional<std::size_t> level() const noexcept { return level_; }
  Error& at_level(std::size_t level) {
    level_ = level;
    return *this;
  }

  /// Cap errors map to a distinct CLI exit status.
  bool is_cap_error() const noexcept {
    return kind_ == ErrorKind::OrderCapExceeded || kind_ == ErrorKind::SubgroupLimitExceeded;
  }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> level_;
};

}  // namespace permutable
