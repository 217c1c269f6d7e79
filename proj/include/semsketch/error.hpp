#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semsketch {

enum class ErrorCode {
  kUnknownClass,
  kFormat,
  kDuplicateSentence,
  kVersion,
  kChecksum,
  kNotFound,
  kBelowThreshold,
  kDomain,
  kEmpty,
  kEmptyClass,
  kIo,
  kUsage,
};

// Stable wire name, e.g. "E_NOT_FOUND".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

// Raised by build_sketch when a lexeme has fewer links than min_links.
class BelowThresholdError : public Error {
 public:
  BelowThresholdError(std::uint64_t links, std::uint64_t min_links);

  std::uint64_t links() const { return links_; }
  std::uint64_t min_links() const { return min_links_; }

 private:
  std::uint64_t links_;
  std::uint64_t min_links_;
};

}  // namespace semsketch
