#pragma once

#include "equivguard/evm/disasm.hpp"
#include "equivguard/support/u256.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

namespace equivguard::evm {

using support::U256;

using ValueId = uint32_t;
inline constexpr ValueId kNoValue = std::numeric_limits<ValueId>::max();

// Single-assignment value produced by simulating the operand stack.
struct SsaValue {
  enum class Kind {
    Constant, // PUSH immediates and folded PC
    OpResult, // computation over operand values
    Phi,      // block entry slot, merged over predecessors
    EnvInput, // read of the execution environment
    Unknown,  // stack underflow past the contract entry
  };

  ValueId id = kNoValue;
  Kind kind = Kind::Unknown;
  U256 constant;                  // Constant
  Opcode op = Opcode::INVALID;    // OpResult / EnvInput
  std::vector<ValueId> operands;  // OpResult / EnvInput
  uint32_t block = 0;             // defining block id
  uint32_t entry_depth = 0;       // Phi: depth below the block's entry top
  std::map<uint32_t, ValueId> incoming; // Phi: predecessor block -> value
};

// Side-effecting instruction retained for inspection (MSTORE, SSTORE, ...).
struct BlockEffect {
  uint32_t offset = 0;
  Opcode op = Opcode::INVALID;
  std::vector<ValueId> operands;
};

enum class TermKind {
  Jump, JumpI, Fallthrough, Stop, Return, Revert, SelfDestruct, Invalid
};

enum class Resolution { ResolvedConstant, Unresolved };

struct BasicBlock {
  uint32_t id = 0; // == start offset
  uint32_t start_offset = 0;
  uint32_t end_offset = 0;  // offset of the last instruction
  size_t first_instr = 0;   // index range into SsaProgram::instructions
  size_t instr_count = 0;

  TermKind terminator = TermKind::Stop;
  ValueId jump_target = kNoValue; // Jump / JumpI
  ValueId jump_cond = kNoValue;   // JumpI

  // SSA summary. entry_args[i] is the Phi for depth i below the entry top;
  // exit_stack holds the simulated stack at block end (back() is the top).
  // Entry slots deeper than `consumed` pass through unchanged; entry_args
  // may grow past `consumed` when successors demand pass-through slots.
  std::vector<ValueId> entry_args;
  uint32_t consumed = 0; // entry args materialized during local simulation
  std::vector<ValueId> exit_stack;
  std::vector<ValueId> defs;
  std::vector<BlockEffect> effects;
  int max_growth = 0; // peak stack height relative to block entry

  std::vector<uint32_t> successors;
  Resolution resolution = Resolution::ResolvedConstant;
  bool invalid = false;
  bool reached = false;
  int entry_height = -1; // -1 until a predecessor provides a stack
};

struct SsaProgram {
  std::vector<Instruction> instructions;
  std::vector<SsaValue> values;          // indexed by ValueId
  std::map<uint32_t, BasicBlock> blocks; // keyed by start offset
  support::Diagnostics diagnostics;

  const SsaValue& value(ValueId id) const { return values[id]; }
  SsaValue& value(ValueId id) { return values[id]; }
  bool has_block(uint32_t id) const { return blocks.count(id) != 0; }
};

// Partitions the instruction stream into basic blocks and simulates each
// block's stack effect once, with lazily materialized Phi entry slots.
// Jump edges are left for resolve_jumps.
SsaProgram to_ssa(std::vector<Instruction> instrs);

} // namespace equivguard::evm
