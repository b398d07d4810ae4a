#include <doctest.h>

#include <string>

#include "address.hpp"

using namespace mw;

TEST_CASE("evm addresses: valid forms pass on every evm chain") {
  const std::string addr = "0x00000000219ab540356cBB839Cbe05303d7705Fa";
  for (Chain chain : {Chain::Ethereum, Chain::Bsc, Chain::Base}) {
    CHECK(!validate_address(chain, addr));
    CHECK(!validate_address(chain, "0xdead00000000000000000000000000000000beef"));
    CHECK(!validate_address(chain, "0xABCDEF0123456789abcdef0123456789ABCDEF01"));
  }
}

TEST_CASE("evm addresses: error precedence is length, then prefix, then charset") {
  // Wrong length dominates even when there is no 0x and bad characters.
  CHECK(*validate_address(Chain::Ethereum, "") == AddressError::BadLength);
  CHECK(*validate_address(Chain::Ethereum, "0x1234") == AddressError::BadLength);
  CHECK(*validate_address(Chain::Bsc, std::string(43, 'f')) == AddressError::BadLength);
  // 40 hex chars with no prefix is a length problem, not a prefix problem.
  CHECK(*validate_address(Chain::Ethereum, std::string(40, 'a')) == AddressError::BadLength);
  // Right length, wrong prefix.
  CHECK(*validate_address(Chain::Ethereum, "1x" + std::string(40, 'a')) == AddressError::BadPrefix);
  CHECK(*validate_address(Chain::Base, "0X" + std::string(40, 'a')) == AddressError::BadPrefix);
  // Right length and prefix, non-hex payload.
  CHECK(*validate_address(Chain::Ethereum, "0x" + std::string(40, 'g')) == AddressError::BadCharset);
  CHECK(*validate_address(Chain::Bsc, "0x" + std::string(39, 'a') + "Z") == AddressError::BadCharset);
}

TEST_CASE("solana addresses") {
  CHECK(!validate_address(Chain::Solana, "So11111111111111111111111111111111111111112"));
  CHECK(!validate_address(Chain::Solana, std::string(32, '1')));  // 32 zero bytes
  CHECK(*validate_address(Chain::Solana, "") == AddressError::BadLength);
  CHECK(*validate_address(Chain::Solana, "So1l") == AddressError::BadCharset);
  CHECK(*validate_address(Chain::Solana, "abcO") == AddressError::BadCharset);
  // Valid alphabet but wrong decoded size.
  CHECK(*validate_address(Chain::Solana, "abc") == AddressError::BadDecode);
  CHECK(*validate_address(Chain::Solana, std::string(50, '2')) == AddressError::BadDecode);
}

TEST_CASE("address errors render stable reason keys") {
  CHECK(std::string(to_string(AddressError::BadLength)) == "address-bad-length");
  CHECK(std::string(to_string(AddressError::BadPrefix)) == "address-bad-prefix");
  CHECK(std::string(to_string(AddressError::BadCharset)) == "address-bad-charset");
  CHECK(std::string(to_string(AddressError::BadDecode)) == "address-bad-decode");
}
