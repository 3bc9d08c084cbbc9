#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cotsel::text {

// UTF-8 <-> code points. Invalid byte sequences decode to U+FFFD.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view cps);

// Unicode NFC (ICU-backed).
std::u32string nfc(const std::u32string& cps);

bool is_space(char32_t cp) noexcept;  // Unicode whitespace
bool is_punct(char32_t cp) noexcept;  // Unicode general category P*

// String normalization applied before character n-gram extraction:
// NFC, then surrounding whitespace trimmed. No case folding, since
// pattern names are not restricted to Latin script.
std::u32string normalize_for_ngrams(std::string_view s);

// Tokenizer for exact n-gram decontamination: lowercase (simple per-code-point
// mapping), split on Unicode whitespace, strip leading/trailing punctuation
// from each token. Tokens that end up empty are dropped. This exact procedure
// is the bit-exact contract for decontamination matching.
std::vector<std::string> tokenize(std::string_view s);

}  // namespace cotsel::text
