#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mw {

// Base58 with the Bitcoin alphabet
// (123456789ABCDEFGHJKLMNPQRSTUVWXYZabcdefghijkmnopqrstuvwxyz).
// Solana addresses are the base58 encoding of a 32-byte public key.

std::string base58_encode(const std::vector<std::uint8_t>& bytes);

// nullopt if s contains a character outside the alphabet.  Empty input
// decodes to an empty byte string.
std::optional<std::vector<std::uint8_t>> base58_decode(std::string_view s);

}  // namespace mw
