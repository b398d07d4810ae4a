#include "address.hpp"

#include "base58.hpp"

namespace mw {

namespace {

bool is_hex(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

}  // namespace

const char* to_string(AddressError e) {
  switch (e) {
    case AddressError::BadLength: return "address-bad-length";
    case AddressError::BadPrefix: return "address-bad-prefix";
    case AddressError::BadCharset: return "address-bad-charset";
    case AddressError::BadDecode: return "address-bad-decode";
  }
  return "?";
}

std::optional<AddressError> validate_address(Chain chain, std::string_view address) {
  if (chain == Chain::Solana) {
    if (address.empty()) return AddressError::BadLength;
    auto bytes = base58_decode(address);
    if (!bytes) return AddressError::BadCharset;
    if (bytes->size() != 32) return AddressError::BadDecode;
    return std::nullopt;
  }
  // EVM
  if (address.size() != 42) return AddressError::BadLength;
  if (address[0] != '0' || address[1] != 'x') return AddressError::BadPrefix;
  for (std::size_t i = 2; i < address.size(); ++i)
    if (!is_hex(address[i])) return AddressError::BadCharset;
  return std::nullopt;
}

}  // namespace mw
