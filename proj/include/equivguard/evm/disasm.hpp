#pragma once

#include "equivguard/evm/opcodes.hpp"
#include "equivguard/support/diag.hpp"

#include <cstdint>
#include <vector>

namespace equivguard::evm {

struct Instruction {
  uint32_t offset = 0;
  Opcode opcode = Opcode::INVALID;
  std::vector<uint8_t> immediate; // PUSH payload, width bytes exactly
  uint8_t stack_in = 0;
  uint8_t stack_out = 0;

  unsigned size() const { return 1 + static_cast<unsigned>(immediate.size()); }
  bool is(Opcode op) const { return opcode == op; }
};

// Splits off the length-suffixed CBOR metadata trailer solc appends to
// deployed bytecode. Returns the code length; bytes past it are metadata.
// When the trailer is not recognizable the full length is returned and the
// suffix decodes as ordinary (likely Invalid) instructions.
size_t code_length_without_metadata(const std::vector<uint8_t>& bytecode);

// Decodes the full byte stream. Unknown opcodes become Invalid with width 1.
// Throws TruncatedPush when a PUSH immediate overruns the end of the code.
std::vector<Instruction> disassemble(const std::vector<uint8_t>& bytecode);

} // namespace equivguard::evm
