#include "equivguard/support/u256.hpp"

#include <stdexcept>

namespace equivguard::support {

namespace {
const U256 kSignBit = U256(1) << 255;
}

U256 u256_from_hex(std::string_view hex) {
  if (hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0) hex.remove_prefix(2);
  if (hex.empty()) return U256(0);
  if (hex.size() > 64) throw std::invalid_argument("hex literal wider than 256 bits");
  U256 v = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw std::invalid_argument("bad hex digit");
    v = (v << 4) | d;
  }
  return v;
}

U256 u256_from_bytes(const uint8_t* data, size_t n) {
  if (n > 32) throw std::invalid_argument("more than 32 bytes");
  U256 v = 0;
  for (size_t i = 0; i < n; ++i) v = (v << 8) | data[i];
  return v;
}

std::string u256_to_hex(const U256& v) {
  if (v == 0) return "0x0";
  static const char* digits = "0123456789abcdef";
  std::string out;
  U256 x = v;
  while (x != 0) {
    out.push_back(digits[static_cast<unsigned>(x & 0xf)]);
    x >>= 4;
  }
  out += "x0";
  return std::string(out.rbegin(), out.rend());
}

std::array<uint8_t, 32> u256_to_bytes(const U256& v) {
  std::array<uint8_t, 32> out{};
  U256 x = v;
  for (int i = 31; i >= 0; --i) {
    out[i] = static_cast<uint8_t>(x & 0xff);
    x >>= 8;
  }
  return out;
}

bool u256_is_neg(const U256& v) { return (v & kSignBit) != 0; }

U256 u256_neg(const U256& v) { return evm_sub(U256(0), v); }

U256 evm_add(const U256& a, const U256& b) { return a + b; }
U256 evm_sub(const U256& a, const U256& b) { return a - b; }
U256 evm_mul(const U256& a, const U256& b) { return a * b; }

U256 evm_div(const U256& a, const U256& b) { return b == 0 ? U256(0) : U256(a / b); }

U256 evm_sdiv(const U256& a, const U256& b) {
  if (b == 0) return 0;
  bool na = u256_is_neg(a), nb = u256_is_neg(b);
  U256 ua = na ? u256_neg(a) : a;
  U256 ub = nb ? u256_neg(b) : b;
  U256 q = ua / ub;
  return (na != nb) ? u256_neg(q) : q;
}

U256 evm_mod(const U256& a, const U256& b) { return b == 0 ? U256(0) : U256(a % b); }

U256 evm_smod(const U256& a, const U256& b) {
  if (b == 0) return 0;
  bool na = u256_is_neg(a);
  U256 ua = na ? u256_neg(a) : a;
  U256 ub = u256_is_neg(b) ? u256_neg(b) : b;
  U256 r = ua % ub;
  return na ? u256_neg(r) : r;
}

U256 evm_addmod(const U256& a, const U256& b, const U256& n) {
  if (n == 0) return 0;
  using Wide = boost::multiprecision::uint512_t;
  Wide s = Wide(a) + Wide(b);
  return U256(s % Wide(n));
}

U256 evm_mulmod(const U256& a, const U256& b, const U256& n) {
  if (n == 0) return 0;
  using Wide = boost::multiprecision::uint512_t;
  Wide p = Wide(a) * Wide(b);
  return U256(p % Wide(n));
}

U256 evm_exp(const U256& base, const U256& exp) {
  U256 result = 1, b = base, e = exp;
  while (e != 0) {
    if ((e & 1) != 0) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

U256 evm_signextend(const U256& byte_index, const U256& value) {
  if (byte_index >= 31) return value;
  unsigned bit = static_cast<unsigned>(byte_index) * 8 + 7;
  U256 mask = (U256(1) << (bit + 1)) - 1;
  if ((value & (U256(1) << bit)) != 0) return value | ~mask;
  return value & mask;
}

U256 evm_lt(const U256& a, const U256& b) { return a < b ? 1 : 0; }
U256 evm_gt(const U256& a, const U256& b) { return a > b ? 1 : 0; }

U256 evm_slt(const U256& a, const U256& b) {
  bool na = u256_is_neg(a), nb = u256_is_neg(b);
  if (na != nb) return na ? 1 : 0;
  return a < b ? 1 : 0;
}

U256 evm_sgt(const U256& a, const U256& b) {
  bool na = u256_is_neg(a), nb = u256_is_neg(b);
  if (na != nb) return nb ? 1 : 0;
  return a > b ? 1 : 0;
}

U256 evm_eq(const U256& a, const U256& b) { return a == b ? 1 : 0; }
U256 evm_iszero(const U256& a) { return a == 0 ? 1 : 0; }
U256 evm_and(const U256& a, const U256& b) { return a & b; }
U256 evm_or(const U256& a, const U256& b) { return a | b; }
U256 evm_xor(const U256& a, const U256& b) { return a ^ b; }
U256 evm_not(const U256& a) { return ~a; }

U256 evm_byte(const U256& index, const U256& value) {
  if (index >= 32) return 0;
  unsigned shift = (31 - static_cast<unsigned>(index)) * 8;
  return (value >> shift) & 0xff;
}

U256 evm_shl(const U256& shift, const U256& value) {
  if (shift >= 256) return 0;
  return value << static_cast<unsigned>(shift);
}

U256 evm_shr(const U256& shift, const U256& value) {
  if (shift >= 256) return 0;
  return value >> static_cast<unsigned>(shift);
}

U256 evm_sar(const U256& shift, const U256& value) {
  bool neg = u256_is_neg(value);
  if (shift >= 256) return neg ? kU256Max : U256(0);
  unsigned s = static_cast<unsigned>(shift);
  U256 r = value >> s;
  if (neg && s > 0) r |= ~(kU256Max >> s);
  return r;
}

} // namespace equivguard::support
