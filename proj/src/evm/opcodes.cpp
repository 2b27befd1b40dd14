#include "equivguard/evm/opcodes.hpp"

#include <array>

namespace equivguard::evm {

namespace {

struct Table {
  std::array<OpcodeInfo, 256> rows;

  constexpr void set(uint8_t b, std::string_view name, uint8_t in, uint8_t out) {
    rows[b] = {name, in, out, true};
  }

  constexpr Table() : rows{} {
    for (auto& r : rows) r = {"INVALID", 0, 0, false};

    set(0x00, "STOP", 0, 0);
    set(0x01, "ADD", 2, 1); set(0x02, "MUL", 2, 1); set(0x03, "SUB", 2, 1);
    set(0x04, "DIV", 2, 1); set(0x05, "SDIV", 2, 1); set(0x06, "MOD", 2, 1);
    set(0x07, "SMOD", 2, 1); set(0x08, "ADDMOD", 3, 1); set(0x09, "MULMOD", 3, 1);
    set(0x0a, "EXP", 2, 1); set(0x0b, "SIGNEXTEND", 2, 1);
    set(0x10, "LT", 2, 1); set(0x11, "GT", 2, 1); set(0x12, "SLT", 2, 1);
    set(0x13, "SGT", 2, 1); set(0x14, "EQ", 2, 1); set(0x15, "ISZERO", 1, 1);
    set(0x16, "AND", 2, 1); set(0x17, "OR", 2, 1); set(0x18, "XOR", 2, 1);
    set(0x19, "NOT", 1, 1); set(0x1a, "BYTE", 2, 1); set(0x1b, "SHL", 2, 1);
    set(0x1c, "SHR", 2, 1); set(0x1d, "SAR", 2, 1);
    set(0x20, "SHA3", 2, 1);
    set(0x30, "ADDRESS", 0, 1); set(0x31, "BALANCE", 1, 1); set(0x32, "ORIGIN", 0, 1);
    set(0x33, "CALLER", 0, 1); set(0x34, "CALLVALUE", 0, 1);
    set(0x35, "CALLDATALOAD", 1, 1); set(0x36, "CALLDATASIZE", 0, 1);
    set(0x37, "CALLDATACOPY", 3, 0); set(0x38, "CODESIZE", 0, 1);
    set(0x39, "CODECOPY", 3, 0); set(0x3a, "GASPRICE", 0, 1);
    set(0x3b, "EXTCODESIZE", 1, 1); set(0x3c, "EXTCODECOPY", 4, 0);
    set(0x3d, "RETURNDATASIZE", 0, 1); set(0x3e, "RETURNDATACOPY", 3, 0);
    set(0x3f, "EXTCODEHASH", 1, 1);
    set(0x40, "BLOCKHASH", 1, 1); set(0x41, "COINBASE", 0, 1);
    set(0x42, "TIMESTAMP", 0, 1); set(0x43, "NUMBER", 0, 1);
    set(0x44, "PREVRANDAO", 0, 1); set(0x45, "GASLIMIT", 0, 1);
    set(0x46, "CHAINID", 0, 1); set(0x47, "SELFBALANCE", 0, 1);
    set(0x48, "BASEFEE", 0, 1); set(0x49, "BLOBHASH", 1, 1);
    set(0x4a, "BLOBBASEFEE", 0, 1);
    set(0x50, "POP", 1, 0); set(0x51, "MLOAD", 1, 1); set(0x52, "MSTORE", 2, 0);
    set(0x53, "MSTORE8", 2, 0); set(0x54, "SLOAD", 1, 1); set(0x55, "SSTORE", 2, 0);
    set(0x56, "JUMP", 1, 0); set(0x57, "JUMPI", 2, 0); set(0x58, "PC", 0, 1);
    set(0x59, "MSIZE", 0, 1); set(0x5a, "GAS", 0, 1); set(0x5b, "JUMPDEST", 0, 0);
    set(0x5c, "TLOAD", 1, 1); set(0x5d, "TSTORE", 2, 0); set(0x5e, "MCOPY", 3, 0);

    constexpr std::string_view push_names[] = {
        "PUSH0", "PUSH1", "PUSH2", "PUSH3", "PUSH4", "PUSH5", "PUSH6", "PUSH7",
        "PUSH8", "PUSH9", "PUSH10", "PUSH11", "PUSH12", "PUSH13", "PUSH14",
        "PUSH15", "PUSH16", "PUSH17", "PUSH18", "PUSH19", "PUSH20", "PUSH21",
        "PUSH22", "PUSH23", "PUSH24", "PUSH25", "PUSH26", "PUSH27", "PUSH28",
        "PUSH29", "PUSH30", "PUSH31", "PUSH32"};
    for (int i = 0; i <= 32; ++i) set(static_cast<uint8_t>(0x5f + i), push_names[i], 0, 1);

    constexpr std::string_view dup_names[] = {
        "DUP1", "DUP2", "DUP3", "DUP4", "DUP5", "DUP6", "DUP7", "DUP8",
        "DUP9", "DUP10", "DUP11", "DUP12", "DUP13", "DUP14", "DUP15", "DUP16"};
    for (int i = 0; i < 16; ++i)
      set(static_cast<uint8_t>(0x80 + i), dup_names[i],
          static_cast<uint8_t>(i + 1), static_cast<uint8_t>(i + 2));

    constexpr std::string_view swap_names[] = {
        "SWAP1", "SWAP2", "SWAP3", "SWAP4", "SWAP5", "SWAP6", "SWAP7", "SWAP8",
        "SWAP9", "SWAP10", "SWAP11", "SWAP12", "SWAP13", "SWAP14", "SWAP15",
        "SWAP16"};
    for (int i = 0; i < 16; ++i)
      set(static_cast<uint8_t>(0x90 + i), swap_names[i],
          static_cast<uint8_t>(i + 2), static_cast<uint8_t>(i + 2));

    set(0xa0, "LOG0", 2, 0); set(0xa1, "LOG1", 3, 0); set(0xa2, "LOG2", 4, 0);
    set(0xa3, "LOG3", 5, 0); set(0xa4, "LOG4", 6, 0);
    set(0xf0, "CREATE", 3, 1); set(0xf1, "CALL", 7, 1); set(0xf2, "CALLCODE", 7, 1);
    set(0xf3, "RETURN", 2, 0); set(0xf4, "DELEGATECALL", 6, 1);
    set(0xf5, "CREATE2", 4, 1); set(0xfa, "STATICCALL", 6, 1);
    set(0xfd, "REVERT", 2, 0); set(0xfe, "INVALID", 0, 0);
    set(0xff, "SELFDESTRUCT", 1, 0);
    // 0xfe is a defined opcode (designated invalid) rather than a hole.
    rows[0xfe].known = true;
  }
};

constexpr Table kTable;

} // namespace

const OpcodeInfo& opcode_info(uint8_t byte) { return kTable.rows[byte]; }

bool is_terminator(Opcode op) {
  switch (op) {
    case Opcode::STOP:
    case Opcode::JUMP:
    case Opcode::JUMPI:
    case Opcode::RETURN:
    case Opcode::REVERT:
    case Opcode::INVALID:
    case Opcode::SELFDESTRUCT:
      return true;
    default:
      return false;
  }
}

bool is_env_input(Opcode op) {
  switch (op) {
    case Opcode::ADDRESS:
    case Opcode::BALANCE:
    case Opcode::ORIGIN:
    case Opcode::CALLER:
    case Opcode::CALLVALUE:
    case Opcode::CALLDATALOAD:
    case Opcode::CALLDATASIZE:
    case Opcode::GASPRICE:
    case Opcode::EXTCODESIZE:
    case Opcode::EXTCODEHASH:
    case Opcode::RETURNDATASIZE:
    case Opcode::BLOCKHASH:
    case Opcode::COINBASE:
    case Opcode::TIMESTAMP:
    case Opcode::NUMBER:
    case Opcode::PREVRANDAO:
    case Opcode::GASLIMIT:
    case Opcode::CHAINID:
    case Opcode::SELFBALANCE:
    case Opcode::BASEFEE:
    case Opcode::BLOBHASH:
    case Opcode::BLOBBASEFEE:
    case Opcode::GAS:
      return true;
    default:
      return false;
  }
}

} // namespace equivguard::evm
