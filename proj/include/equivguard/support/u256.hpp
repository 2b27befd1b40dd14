#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace equivguard::support {

// 256-bit machine word. Fixed-width unsigned backend gives EVM wrap-around
// semantics for +, -, * out of the box.
using U256 = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    256, 256, boost::multiprecision::unsigned_magnitude,
    boost::multiprecision::unchecked, void>>;

inline const U256 kU256Max = ~U256(0);

U256 u256_from_hex(std::string_view hex);           // accepts optional 0x prefix
U256 u256_from_bytes(const uint8_t* data, size_t n); // big-endian, n <= 32
std::string u256_to_hex(const U256& v);              // minimal form, 0x-prefixed
std::array<uint8_t, 32> u256_to_bytes(const U256& v);

// Two's-complement helpers for the signed EVM ops.
bool u256_is_neg(const U256& v);
U256 u256_neg(const U256& v);

// EVM arithmetic. Division and modulo by zero yield zero.
U256 evm_add(const U256& a, const U256& b);
U256 evm_sub(const U256& a, const U256& b);
U256 evm_mul(const U256& a, const U256& b);
U256 evm_div(const U256& a, const U256& b);
U256 evm_sdiv(const U256& a, const U256& b);
U256 evm_mod(const U256& a, const U256& b);
U256 evm_smod(const U256& a, const U256& b);
U256 evm_addmod(const U256& a, const U256& b, const U256& n);
U256 evm_mulmod(const U256& a, const U256& b, const U256& n);
U256 evm_exp(const U256& base, const U256& exp);
U256 evm_signextend(const U256& byte_index, const U256& value);
U256 evm_lt(const U256& a, const U256& b);
U256 evm_gt(const U256& a, const U256& b);
U256 evm_slt(const U256& a, const U256& b);
U256 evm_sgt(const U256& a, const U256& b);
U256 evm_eq(const U256& a, const U256& b);
U256 evm_iszero(const U256& a);
U256 evm_and(const U256& a, const U256& b);
U256 evm_or(const U256& a, const U256& b);
U256 evm_xor(const U256& a, const U256& b);
U256 evm_not(const U256& a);
U256 evm_byte(const U256& index, const U256& value);
U256 evm_shl(const U256& shift, const U256& value);
U256 evm_shr(const U256& shift, const U256& value);
U256 evm_sar(const U256& shift, const U256& value);

} // namespace equivguard::support
