#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace equivguard::support {

std::vector<uint8_t> hex_decode(std::string_view hex); // optional 0x prefix
std::string hex_encode(const uint8_t* data, size_t len);
std::string hex_encode(const std::vector<uint8_t>& data);

// EIP-55 mixed-case checksum encoding of a 20-byte address.
// Input accepts any casing, with or without 0x; throws on malformed input.
std::string checksum_address(std::string_view address);
bool is_address(std::string_view address);

} // namespace equivguard::support
