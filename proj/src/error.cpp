#include "semsketch/error.hpp"

namespace semsketch {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownClass: return "E_UNKNOWN_CLASS";
    case ErrorCode::kFormat: return "E_FORMAT";
    case ErrorCode::kDuplicateSentence: return "E_DUP_SENT";
    case ErrorCode::kVersion: return "E_VERSION";
    case ErrorCode::kChecksum: return "E_CHECKSUM";
    case ErrorCode::kNotFound: return "E_NOT_FOUND";
    case ErrorCode::kBelowThreshold: return "E_BELOW_THRESHOLD";
    case ErrorCode::kDomain: return "E_DOMAIN";
    case ErrorCode::kEmpty: return "E_EMPTY";
    case ErrorCode::kEmptyClass: return "E_EMPTY_CLASS";
    case ErrorCode::kIo: return "E_IO";
    case ErrorCode::kUsage: return "E_USAGE";
  }
  return "E_UNKNOWN";
}

BelowThresholdError::BelowThresholdError(std::uint64_t links,
                                         std::uint64_t min_links)
    : Error(ErrorCode::kBelowThreshold,
            "lexeme has " + std::to_string(links) + " links, min_links is " +
                std::to_string(min_links)),
      links_(links),
      min_links_(min_links) {}

}  // namespace semsketch
