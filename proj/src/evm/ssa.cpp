#include "equivguard/evm/ssa.hpp"

#include <algorithm>

namespace equivguard::evm {

namespace {

class BlockSimulator {
public:
  BlockSimulator(SsaProgram& prog, BasicBlock& block) : prog_(prog), block_(block) {}

  void run() {
    for (size_t i = 0; i < block_.instr_count; ++i) {
      const Instruction& ins = prog_.instructions[block_.first_instr + i];
      step(ins);
      block_.max_growth = std::max(
          block_.max_growth,
          static_cast<int>(stack_.size()) - static_cast<int>(block_.entry_args.size()));
    }
    block_.exit_stack = stack_;
    block_.consumed = static_cast<uint32_t>(block_.entry_args.size());
  }

private:
  SsaProgram& prog_;
  BasicBlock& block_;
  std::vector<ValueId> stack_; // back() is the top

  ValueId new_value(SsaValue v) {
    v.id = static_cast<ValueId>(prog_.values.size());
    v.block = block_.id;
    prog_.values.push_back(std::move(v));
    block_.defs.push_back(prog_.values.back().id);
    return prog_.values.back().id;
  }

  // Depth i below the current top; materializes entry Phis on underflow.
  ValueId at_depth(size_t i) {
    while (i >= stack_.size()) {
      SsaValue phi;
      phi.kind = SsaValue::Kind::Phi;
      phi.entry_depth = static_cast<uint32_t>(block_.entry_args.size());
      ValueId id = new_value(std::move(phi));
      block_.entry_args.push_back(id);
      stack_.insert(stack_.begin(), id);
    }
    return stack_[stack_.size() - 1 - i];
  }

  ValueId pop() {
    ValueId v = at_depth(0);
    stack_.pop_back();
    return v;
  }

  void push(ValueId v) { stack_.push_back(v); }

  void step(const Instruction& ins) {
    uint8_t byte = static_cast<uint8_t>(ins.opcode);

    if (is_push(byte)) {
      SsaValue v;
      v.kind = SsaValue::Kind::Constant;
      v.constant = support::u256_from_bytes(ins.immediate.data(), ins.immediate.size());
      push(new_value(std::move(v)));
      return;
    }
    if (is_dup(byte)) {
      unsigned n = byte - 0x80; // DUP1 duplicates depth 0
      push(at_depth(n));
      return;
    }
    if (is_swap(byte)) {
      unsigned n = byte - 0x90 + 1; // SWAP1 swaps depths 0 and 1
      at_depth(n);                  // materialize deep slots first
      std::swap(stack_[stack_.size() - 1], stack_[stack_.size() - 1 - n]);
      return;
    }

    switch (ins.opcode) {
      case Opcode::JUMPDEST:
        return;
      case Opcode::POP:
        pop();
        return;
      case Opcode::PC: {
        SsaValue v;
        v.kind = SsaValue::Kind::Constant;
        v.constant = ins.offset;
        push(new_value(std::move(v)));
        return;
      }
      case Opcode::JUMP:
        block_.jump_target = pop();
        return;
      case Opcode::JUMPI:
        block_.jump_target = pop();
        block_.jump_cond = pop();
        return;
      default:
        break;
    }

    std::vector<ValueId> operands;
    operands.reserve(ins.stack_in);
    for (unsigned i = 0; i < ins.stack_in; ++i) operands.push_back(pop());

    if (ins.stack_out == 0) {
      block_.effects.push_back({ins.offset, ins.opcode, std::move(operands)});
      return;
    }

    SsaValue v;
    v.kind = is_env_input(ins.opcode) ? SsaValue::Kind::EnvInput
                                      : SsaValue::Kind::OpResult;
    v.op = ins.opcode;
    v.operands = std::move(operands);
    push(new_value(std::move(v)));
  }
};

TermKind terminator_of(Opcode op) {
  switch (op) {
    case Opcode::JUMP: return TermKind::Jump;
    case Opcode::JUMPI: return TermKind::JumpI;
    case Opcode::STOP: return TermKind::Stop;
    case Opcode::RETURN: return TermKind::Return;
    case Opcode::REVERT: return TermKind::Revert;
    case Opcode::SELFDESTRUCT: return TermKind::SelfDestruct;
    case Opcode::INVALID: return TermKind::Invalid;
    default: return TermKind::Fallthrough;
  }
}

} // namespace

SsaProgram to_ssa(std::vector<Instruction> instrs) {
  SsaProgram prog;
  prog.instructions = std::move(instrs);
  if (prog.instructions.empty()) return prog;

  // Leaders: offset 0, every JUMPDEST, and the instruction after a terminator.
  std::vector<size_t> leaders;
  for (size_t i = 0; i < prog.instructions.size(); ++i) {
    const Instruction& ins = prog.instructions[i];
    if (i == 0 || ins.is(Opcode::JUMPDEST) ||
        is_terminator(prog.instructions[i - 1].opcode))
      leaders.push_back(i);
  }

  for (size_t li = 0; li < leaders.size(); ++li) {
    size_t first = leaders[li];
    size_t last = (li + 1 < leaders.size()) ? leaders[li + 1] - 1
                                            : prog.instructions.size() - 1;
    BasicBlock block;
    block.id = prog.instructions[first].offset;
    block.start_offset = block.id;
    block.end_offset = prog.instructions[last].offset;
    block.first_instr = first;
    block.instr_count = last - first + 1;
    block.terminator = terminator_of(prog.instructions[last].opcode);
    prog.blocks.emplace(block.id, std::move(block));
  }

  for (auto& [id, block] : prog.blocks) BlockSimulator(prog, block).run();
  return prog;
}

} // namespace equivguard::evm
