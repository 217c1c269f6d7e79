#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semsketch {

// NFC form of a UTF-8 string. Returns nullopt for ill-formed UTF-8.
std::optional<std::string> normalize_nfc(std::string_view utf8);

// Like normalize_nfc, but throws Error(E_FORMAT) on ill-formed input.
std::string nfc_or_throw(std::string_view utf8);

// Splits on '\t' without collapsing empty fields.
std::vector<std::string_view> split_tabs(std::string_view line);

// Non-negative decimal integer; rejects signs, blanks and overflow.
std::optional<std::int64_t> parse_index(std::string_view field);

// Keeps [A-Za-z0-9_-] and escapes every other byte as %XX (uppercase hex).
std::string percent_encode(std::string_view raw);
std::optional<std::string> percent_decode(std::string_view encoded);

// 64-bit FNV-1a, used for content and hierarchy checksums.
class Fnv1a {
 public:
  void update(std::string_view bytes);
  std::uint64_t value() const { return state_; }
  std::string hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace semsketch
