#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace equivguard::support {

using Hash256 = std::array<uint8_t, 32>;

Hash256 keccak256(const uint8_t* data, size_t len);
Hash256 keccak256(std::string_view data);
Hash256 keccak256(const std::vector<uint8_t>& data);

// First four bytes of keccak256 over the canonical function signature,
// e.g. "transfer(address,uint256)" -> a9059cbb.
std::array<uint8_t, 4> function_selector(std::string_view canonical_signature);

} // namespace equivguard::support
