#include "equivguard/evm/disasm.hpp"

namespace equivguard::evm {

size_t code_length_without_metadata(const std::vector<uint8_t>& bytecode) {
  // Trailer layout: <cbor map> <2-byte big-endian length of the map>.
  if (bytecode.size() < 4) return bytecode.size();
  size_t n = bytecode.size();
  size_t cbor_len = (static_cast<size_t>(bytecode[n - 2]) << 8) | bytecode[n - 1];
  if (cbor_len == 0 || cbor_len + 2 > n) return n;
  uint8_t head = bytecode[n - 2 - cbor_len];
  // Maps of 1..4 pairs cover every solc release ("ipfs"/"bzzr"/"solc"/"experimental").
  if (head < 0xa1 || head > 0xa4) return n;
  return n - 2 - cbor_len;
}

std::vector<Instruction> disassemble(const std::vector<uint8_t>& bytecode) {
  std::vector<Instruction> instrs;
  size_t code_len = code_length_without_metadata(bytecode);
  size_t pos = 0;
  while (pos < code_len) {
    uint8_t byte = bytecode[pos];
    const OpcodeInfo& info = opcode_info(byte);
    Instruction ins;
    ins.offset = static_cast<uint32_t>(pos);
    ins.opcode = info.known ? static_cast<Opcode>(byte) : Opcode::INVALID;
    ins.stack_in = info.known ? info.stack_in : 0;
    ins.stack_out = info.known ? info.stack_out : 0;
    unsigned width = info.known ? push_width(byte) : 0;
    if (width > 0) {
      if (pos + 1 + width > code_len)
        throw support::TruncatedPush(static_cast<uint32_t>(pos));
      ins.immediate.assign(bytecode.begin() + static_cast<long>(pos) + 1,
                           bytecode.begin() + static_cast<long>(pos) + 1 + width);
    }
    pos += 1 + width;
    instrs.push_back(std::move(ins));
  }
  return instrs;
}

} // namespace equivguard::evm
