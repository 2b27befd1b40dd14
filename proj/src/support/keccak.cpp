#include "equivguard/support/keccak.hpp"

#include <cstring>

namespace equivguard::support {

namespace {

constexpr uint64_t kRoundConstants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL};

constexpr unsigned kRotations[24] = {1,  3,  6,  10, 15, 21, 28, 36,
                                     45, 55, 2,  14, 27, 41, 56, 8,
                                     25, 43, 62, 18, 39, 61, 20, 44};

constexpr unsigned kPiLanes[24] = {10, 7,  11, 17, 18, 3,  5,  16,
                                   8,  21, 24, 4,  15, 23, 19, 13,
                                   12, 2,  20, 14, 22, 9,  6,  1};

inline uint64_t rotl64(uint64_t x, unsigned n) {
  return (x << n) | (x >> (64 - n));
}

void keccak_f1600(uint64_t state[25]) {
  for (int round = 0; round < 24; ++round) {
    uint64_t c[5], d;
    for (int i = 0; i < 5; ++i)
      c[i] = state[i] ^ state[i + 5] ^ state[i + 10] ^ state[i + 15] ^ state[i + 20];
    for (int i = 0; i < 5; ++i) {
      d = c[(i + 4) % 5] ^ rotl64(c[(i + 1) % 5], 1);
      for (int j = 0; j < 25; j += 5) state[j + i] ^= d;
    }
    uint64_t last = state[1];
    for (int i = 0; i < 24; ++i) {
      unsigned lane = kPiLanes[i];
      uint64_t tmp = state[lane];
      state[lane] = rotl64(last, kRotations[i]);
      last = tmp;
    }
    for (int j = 0; j < 25; j += 5) {
      uint64_t row[5];
      std::memcpy(row, &state[j], sizeof(row));
      for (int i = 0; i < 5; ++i)
        state[j + i] = row[i] ^ (~row[(i + 1) % 5] & row[(i + 2) % 5]);
    }
    state[0] ^= kRoundConstants[round];
  }
}

} // namespace

Hash256 keccak256(const uint8_t* data, size_t len) {
  constexpr size_t kRate = 136; // 1600/8 - 2*256/8
  uint64_t state[25] = {0};
  uint8_t block[kRate];

  while (len >= kRate) {
    for (size_t i = 0; i < kRate / 8; ++i) {
      uint64_t lane;
      std::memcpy(&lane, data + i * 8, 8);
      state[i] ^= lane; // little-endian hosts only
    }
    keccak_f1600(state);
    data += kRate;
    len -= kRate;
  }

  std::memset(block, 0, sizeof(block));
  std::memcpy(block, data, len);
  block[len] = 0x01; // keccak (pre-SHA3) domain padding
  block[kRate - 1] |= 0x80;
  for (size_t i = 0; i < kRate / 8; ++i) {
    uint64_t lane;
    std::memcpy(&lane, block + i * 8, 8);
    state[i] ^= lane;
  }
  keccak_f1600(state);

  Hash256 out;
  std::memcpy(out.data(), state, 32);
  return out;
}

Hash256 keccak256(std::string_view data) {
  return keccak256(reinterpret_cast<const uint8_t*>(data.data()), data.size());
}

Hash256 keccak256(const std::vector<uint8_t>& data) {
  return keccak256(data.data(), data.size());
}

std::array<uint8_t, 4> function_selector(std::string_view canonical_signature) {
  Hash256 h = keccak256(canonical_signature);
  return {h[0], h[1], h[2], h[3]};
}

} // namespace equivguard::support
