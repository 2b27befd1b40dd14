#include "equivguard/support/hex.hpp"

#include "equivguard/support/keccak.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace equivguard::support {

namespace {
int nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
} // namespace

std::vector<uint8_t> hex_decode(std::string_view hex) {
  if (hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0) hex.remove_prefix(2);
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
  std::vector<uint8_t> out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("bad hex digit");
    out.push_back(static_cast<uint8_t>(hi << 4 | lo));
  }
  return out;
}

std::string hex_encode(const uint8_t* data, size_t len) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (size_t i = 0; i < len; ++i) {
    out.push_back(digits[data[i] >> 4]);
    out.push_back(digits[data[i] & 0xf]);
  }
  return out;
}

std::string hex_encode(const std::vector<uint8_t>& data) {
  return hex_encode(data.data(), data.size());
}

bool is_address(std::string_view address) {
  if (address.rfind("0x", 0) == 0 || address.rfind("0X", 0) == 0)
    address.remove_prefix(2);
  return address.size() == 40 &&
         std::all_of(address.begin(), address.end(),
                     [](char c) { return nibble(c) >= 0; });
}

std::string checksum_address(std::string_view address) {
  if (!is_address(address)) throw std::invalid_argument("malformed address");
  if (address.rfind("0x", 0) == 0 || address.rfind("0X", 0) == 0)
    address.remove_prefix(2);
  std::string lower(address);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  Hash256 h = keccak256(lower);
  std::string out = "0x";
  for (size_t i = 0; i < 40; ++i) {
    char c = lower[i];
    int hash_nibble = (h[i / 2] >> (i % 2 ? 0 : 4)) & 0xf;
    out.push_back(c >= 'a' && hash_nibble >= 8 ? static_cast<char>(std::toupper(c)) : c);
  }
  return out;
}

} // namespace equivguard::support
