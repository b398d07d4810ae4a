#pragma once

#include <optional>
#include <string_view>

#include "model.hpp"

namespace mw {

enum class AddressError { BadLength, BadPrefix, BadCharset, BadDecode };

const char* to_string(AddressError e);

// Chain-aware address validation.
//
// EVM chains (ethereum, bsc, base): exactly 42 characters, leading "0x",
// remaining 40 characters hex.  Checks run in that order, so a 40-char hex
// string without the prefix reports BadLength, and "0xZZ..." (right length)
// reports BadCharset.
//
// Solana: base58 (Bitcoin alphabet) decoding to exactly 32 bytes.  An empty
// string is BadLength, a character outside the alphabet is BadCharset, and a
// decode to the wrong byte count is BadDecode.
std::optional<AddressError> validate_address(Chain chain, std::string_view address);

}  // namespace mw
