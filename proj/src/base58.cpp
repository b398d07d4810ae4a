#include "base58.hpp"

#include <array>

namespace mw {

namespace {

constexpr char kAlphabet[] = "123456789ABCDEFGHJKLMNPQRSTUVWXYZabcdefghijkmnopqrstuvwxyz";

std::array<std::int8_t, 256> build_rev() {
  std::array<std::int8_t, 256> rev;
  rev.fill(-1);
  for (int i = 0; i < 58; ++i) rev[static_cast<unsigned char>(kAlphabet[i])] = static_cast<std::int8_t>(i);
  return rev;
}

const std::array<std::int8_t, 256> kRev = build_rev();

}  // namespace

std::string base58_encode(const std::vector<std::uint8_t>& bytes) {
  std::size_t zeros = 0;
  while (zeros < bytes.size() && bytes[zeros] == 0) ++zeros;

  // big-number base conversion, digits little-endian in `digits`
  std::vector<std::uint8_t> digits;
  for (std::size_t i = zeros; i < bytes.size(); ++i) {
    int carry = bytes[i];
    for (auto& d : digits) {
      carry += d << 8;
      d = static_cast<std::uint8_t>(carry % 58);
      carry /= 58;
    }
    while (carry) {
      digits.push_back(static_cast<std::uint8_t>(carry % 58));
      carry /= 58;
    }
  }

  std::string out(zeros, '1');
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) out.push_back(kAlphabet[*it]);
  return out;
}

std::optional<std::vector<std::uint8_t>> base58_decode(std::string_view s) {
  std::size_t zeros = 0;
  while (zeros < s.size() && s[zeros] == '1') ++zeros;

  std::vector<std::uint8_t> bytes;  // little-endian while accumulating
  for (std::size_t i = zeros; i < s.size(); ++i) {
    std::int8_t v = kRev[static_cast<unsigned char>(s[i])];
    if (v < 0) return std::nullopt;
    int carry = v;
    for (auto& b : bytes) {
      carry += b * 58;
      b = static_cast<std::uint8_t>(carry & 0xff);
      carry >>= 8;
    }
    while (carry) {
      bytes.push_back(static_cast<std::uint8_t>(carry & 0xff));
      carry >>= 8;
    }
  }

  std::vector<std::uint8_t> out(zeros, 0);
  out.insert(out.end(), bytes.rbegin(), bytes.rend());
  return out;
}

}  // namespace mw
