#include "equivguard/evm/cfg.hpp"

#include "equivguard/support/hex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace equivguard::evm {

namespace {

// {Bottom, set of constants, Top} lattice per value.
struct AbsVal {
  enum class Kind { Bottom, Consts, Top } kind = Kind::Bottom;
  std::vector<U256> consts; // sorted, unique

  static AbsVal bottom() { return {}; }
  static AbsVal top() { return {Kind::Top, {}}; }
  static AbsVal single(U256 c) { return {Kind::Consts, {std::move(c)}}; }

  bool operator==(const AbsVal&) const = default;
};

AbsVal join(const AbsVal& a, const AbsVal& b, unsigned bound) {
  if (a.kind == AbsVal::Kind::Top || b.kind == AbsVal::Kind::Top) return AbsVal::top();
  if (a.kind == AbsVal::Kind::Bottom) return b;
  if (b.kind == AbsVal::Kind::Bottom) return a;
  AbsVal out{AbsVal::Kind::Consts, {}};
  std::set_union(a.consts.begin(), a.consts.end(), b.consts.begin(), b.consts.end(),
                 std::back_inserter(out.consts));
  if (out.consts.size() > bound) return AbsVal::top();
  return out;
}

bool foldable(Opcode op) {
  switch (op) {
    case Opcode::ADD: case Opcode::MUL: case Opcode::SUB: case Opcode::DIV:
    case Opcode::SDIV: case Opcode::MOD: case Opcode::SMOD: case Opcode::ADDMOD:
    case Opcode::MULMOD: case Opcode::EXP: case Opcode::SIGNEXTEND:
    case Opcode::LT: case Opcode::GT: case Opcode::SLT: case Opcode::SGT:
    case Opcode::EQ: case Opcode::ISZERO: case Opcode::AND: case Opcode::OR:
    case Opcode::XOR: case Opcode::NOT: case Opcode::BYTE: case Opcode::SHL:
    case Opcode::SHR: case Opcode::SAR:
      return true;
    default:
      return false;
  }
}

U256 fold(Opcode op, const std::vector<U256>& a) {
  using namespace support;
  switch (op) {
    case Opcode::ADD: return evm_add(a[0], a[1]);
    case Opcode::MUL: return evm_mul(a[0], a[1]);
    case Opcode::SUB: return evm_sub(a[0], a[1]);
    case Opcode::DIV: return evm_div(a[0], a[1]);
    case Opcode::SDIV: return evm_sdiv(a[0], a[1]);
    case Opcode::MOD: return evm_mod(a[0], a[1]);
    case Opcode::SMOD: return evm_smod(a[0], a[1]);
    case Opcode::ADDMOD: return evm_addmod(a[0], a[1], a[2]);
    case Opcode::MULMOD: return evm_mulmod(a[0], a[1], a[2]);
    case Opcode::EXP: return evm_exp(a[0], a[1]);
    case Opcode::SIGNEXTEND: return evm_signextend(a[0], a[1]);
    case Opcode::LT: return evm_lt(a[0], a[1]);
    case Opcode::GT: return evm_gt(a[0], a[1]);
    case Opcode::SLT: return evm_slt(a[0], a[1]);
    case Opcode::SGT: return evm_sgt(a[0], a[1]);
    case Opcode::EQ: return evm_eq(a[0], a[1]);
    case Opcode::ISZERO: return evm_iszero(a[0]);
    case Opcode::AND: return evm_and(a[0], a[1]);
    case Opcode::OR: return evm_or(a[0], a[1]);
    case Opcode::XOR: return evm_xor(a[0], a[1]);
    case Opcode::NOT: return evm_not(a[0]);
    case Opcode::BYTE: return evm_byte(a[0], a[1]);
    case Opcode::SHL: return evm_shl(a[0], a[1]);
    case Opcode::SHR: return evm_shr(a[0], a[1]);
    case Opcode::SAR: return evm_sar(a[0], a[1]);
    default: return 0;
  }
}

class Resolver {
public:
  Resolver(SsaProgram ssa, unsigned bound)
      : prog_(std::move(ssa)), bound_(bound), abs_(prog_.values.size()) {}

  Cfg run() {
    Cfg cfg;
    if (prog_.blocks.empty()) {
      cfg.ssa = std::move(prog_);
      return cfg;
    }

    auto& entry = prog_.blocks.begin()->second;
    entry.reached = true;
    entry.entry_height = 0;
    check_entry_underflow(entry);

    // Alternate constant evaluation and edge discovery until stable.
    for (;;) {
      eval_all();
      if (!discover_edges()) break;
    }

    mark_invalid_blocks();
    recover_function_entries();

    for (auto& [id, b] : prog_.blocks) {
      std::sort(b.successors.begin(), b.successors.end());
      b.successors.erase(std::unique(b.successors.begin(), b.successors.end()),
                         b.successors.end());
    }

    cfg.ssa = std::move(prog_);
    cfg.entry = cfg.ssa.blocks.begin()->first;
    cfg.function_entries = std::move(function_entries_);
    return cfg;
  }

private:
  SsaProgram prog_;
  unsigned bound_;
  std::vector<AbsVal> abs_;
  std::set<std::pair<uint32_t, uint32_t>> edges_;
  std::map<uint32_t, uint32_t> function_entries_;
  std::set<uint32_t> reported_unresolved_;
  std::set<std::pair<uint32_t, U256>> reported_bad_target_;

  void diag(support::Diagnostic::Severity sev, std::string code, std::string msg) {
    prog_.diagnostics.push_back({sev, std::move(code), std::move(msg), std::nullopt});
  }

  void check_entry_underflow(BasicBlock& entry) {
    if (!entry.entry_args.empty()) {
      entry.invalid = true;
      diag(support::Diagnostic::Severity::Warning, "stack-underflow",
           "entry block pops an empty stack");
    }
  }

  AbsVal eval_value(const SsaValue& v) {
    switch (v.kind) {
      case SsaValue::Kind::Constant:
        return AbsVal::single(v.constant);
      case SsaValue::Kind::EnvInput:
      case SsaValue::Kind::Unknown:
        return AbsVal::top();
      case SsaValue::Kind::Phi: {
        AbsVal acc = AbsVal::bottom();
        for (const auto& [pred, val] : v.incoming) acc = join(acc, abs_[val], bound_);
        return acc;
      }
      case SsaValue::Kind::OpResult: {
        if (!foldable(v.op)) return AbsVal::top();
        std::vector<const std::vector<U256>*> sets;
        size_t combos = 1;
        for (ValueId operand : v.operands) {
          const AbsVal& a = abs_[operand];
          if (a.kind == AbsVal::Kind::Top) return AbsVal::top();
          if (a.kind == AbsVal::Kind::Bottom) return AbsVal::bottom();
          sets.push_back(&a.consts);
          combos *= a.consts.size();
        }
        if (combos > 64) return AbsVal::top();
        AbsVal out{AbsVal::Kind::Consts, {}};
        std::vector<size_t> idx(sets.size(), 0);
        for (size_t c = 0; c < combos; ++c) {
          std::vector<U256> args(sets.size());
          size_t rem = c;
          for (size_t i = 0; i < sets.size(); ++i) {
            args[i] = (*sets[i])[rem % sets[i]->size()];
            rem /= sets[i]->size();
          }
          out.consts.push_back(fold(v.op, args));
        }
        std::sort(out.consts.begin(), out.consts.end());
        out.consts.erase(std::unique(out.consts.begin(), out.consts.end()),
                         out.consts.end());
        if (out.consts.size() > bound_) return AbsVal::top();
        return out;
      }
    }
    return AbsVal::top();
  }

  void eval_all() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const SsaValue& v : prog_.values) {
        AbsVal next = eval_value(v);
        if (!(next == abs_[v.id])) {
          abs_[v.id] = std::move(next);
          changed = true;
        }
      }
    }
  }

  // Value at depth j below the exit-stack top of block b. Demands past the
  // simulated stack fall through to (possibly new) entry Phis; past the
  // contract entry they become Unknown.
  ValueId exit_value_at_depth(BasicBlock& b, size_t j, uint32_t demander) {
    if (j < b.exit_stack.size()) return b.exit_stack[b.exit_stack.size() - 1 - j];
    size_t entry_depth = b.consumed + (j - b.exit_stack.size());
    return entry_arg_at(b, entry_depth, demander);
  }

  ValueId make_unknown(uint32_t block_id, uint32_t demander, const char* why) {
    SsaValue unk;
    unk.id = static_cast<ValueId>(prog_.values.size());
    unk.kind = SsaValue::Kind::Unknown;
    unk.block = block_id;
    prog_.values.push_back(unk);
    abs_.push_back(AbsVal::top());
    auto it = prog_.blocks.find(demander);
    if (it != prog_.blocks.end() && !it->second.invalid) {
      it->second.invalid = true;
      diag(support::Diagnostic::Severity::Warning, "stack-underflow",
           "block " + std::to_string(demander) + " " + why);
    }
    return unk.id;
  }

  ValueId entry_arg_at(BasicBlock& b, size_t depth, uint32_t demander) {
    // The EVM stack holds at most 1024 slots; deeper demands mean a
    // stack-consuming cycle and are cut off here.
    if (depth >= 1024)
      return make_unknown(b.id, demander, "demands stack slots past the 1024 limit");
    while (b.entry_args.size() <= depth) {
      if (b.id == prog_.blocks.begin()->first)
        return make_unknown(b.id, demander, "pops below the entry stack");
      SsaValue phi;
      phi.id = static_cast<ValueId>(prog_.values.size());
      phi.kind = SsaValue::Kind::Phi;
      phi.block = b.id;
      phi.entry_depth = static_cast<uint32_t>(b.entry_args.size());
      prog_.values.push_back(phi);
      abs_.push_back(AbsVal::bottom());
      ValueId id = prog_.values.back().id;
      b.entry_args.push_back(id);
      b.defs.push_back(id);
      // New slot passes straight through to the exit side: conceptually the
      // exit stack extends below with this value. Bind it for every known
      // predecessor immediately.
      for (const auto& [from, to] : edges_)
        if (to == b.id) bind_phi(b, prog_.blocks.at(from), prog_.values.back().id);
    }
    return b.entry_args[depth];
  }

  void bind_phi(BasicBlock& b, BasicBlock& pred, ValueId phi_id) {
    if (prog_.values[phi_id].incoming.count(pred.id)) return;
    uint32_t depth = prog_.values[phi_id].entry_depth;
    ValueId v = exit_value_at_depth(pred, depth, b.id);
    prog_.values[phi_id].incoming[pred.id] = v; // re-index: vector may have grown
  }

  bool add_edge(uint32_t from, uint32_t to) {
    if (!edges_.insert({from, to}).second) return false;
    BasicBlock& source = prog_.blocks.at(from);
    BasicBlock& target = prog_.blocks.at(to);
    source.successors.push_back(to);
    target.reached = true;

    int exit_height = -1;
    if (source.entry_height >= 0)
      exit_height = source.entry_height +
                    static_cast<int>(source.exit_stack.size()) -
                    static_cast<int>(source.entry_args.size());
    if (target.entry_height < 0) target.entry_height = exit_height;
    else if (exit_height >= 0 && target.entry_height != exit_height)
      diag(support::Diagnostic::Severity::Info, "stack-height-mismatch",
           "block " + std::to_string(to) + " joined with differing stack heights");

    for (size_t i = 0; i < target.entry_args.size(); ++i)
      bind_phi(target, source, target.entry_args[i]);
    return true;
  }

  uint32_t next_block_id(const BasicBlock& b) const {
    auto it = prog_.blocks.upper_bound(b.id);
    return it == prog_.blocks.end() ? kNoValue : it->first;
  }

  bool block_starts_with_jumpdest(uint32_t id) const {
    auto it = prog_.blocks.find(id);
    if (it == prog_.blocks.end()) return false;
    return prog_.instructions[it->second.first_instr].is(Opcode::JUMPDEST);
  }

  bool add_jump_edges(BasicBlock& b, const AbsVal& target) {
    bool changed = false;
    if (target.kind == AbsVal::Kind::Consts) {
      for (const U256& t : target.consts) {
        if (t > support::U256(0xffffffff) ||
            !block_starts_with_jumpdest(static_cast<uint32_t>(t))) {
          if (reported_bad_target_.insert({b.id, t}).second)
            diag(support::Diagnostic::Severity::Warning, "jump-to-non-jumpdest",
                 "block " + std::to_string(b.id) + " jumps to " +
                     support::u256_to_hex(t) + ", which is not a JUMPDEST");
          continue;
        }
        changed |= add_edge(b.id, static_cast<uint32_t>(t));
      }
      b.resolution = Resolution::ResolvedConstant;
    } else {
      b.resolution = Resolution::Unresolved;
      if (target.kind == AbsVal::Kind::Top && reported_unresolved_.insert(b.id).second)
        diag(support::Diagnostic::Severity::Warning, "unresolved-jump",
             "block " + std::to_string(b.id) +
                 " has a jump target that does not fold to constants");
    }
    return changed;
  }

  bool discover_edges() {
    bool changed = false;
    for (auto& [id, b] : prog_.blocks) {
      if (!b.reached) continue;
      switch (b.terminator) {
        case TermKind::Jump:
          changed |= add_jump_edges(b, abs_[b.jump_target]);
          break;
        case TermKind::JumpI: {
          changed |= add_jump_edges(b, abs_[b.jump_target]);
          uint32_t next = next_block_id(b);
          if (next != kNoValue) changed |= add_edge(b.id, next);
          break;
        }
        case TermKind::Fallthrough: {
          uint32_t next = next_block_id(b);
          if (next != kNoValue) changed |= add_edge(b.id, next);
          break;
        }
        default:
          break;
      }
    }
    return changed;
  }

  void mark_invalid_blocks() {
    for (auto& [id, b] : prog_.blocks) {
      if (b.entry_height >= 0 && b.entry_height + b.max_growth > 1024) {
        b.invalid = true;
        diag(support::Diagnostic::Severity::Warning, "stack-depth-exceeded",
             "block " + std::to_string(id) + " exceeds the 1024-slot stack");
      }
    }
  }

  // True when the value's definition chain reaches calldata.
  bool derived_from_calldata(ValueId id, int depth = 8) const {
    if (depth < 0) return false;
    const SsaValue& v = prog_.values[id];
    if (v.kind == SsaValue::Kind::EnvInput &&
        (v.op == Opcode::CALLDATALOAD || v.op == Opcode::CALLDATASIZE))
      return true;
    if (v.kind == SsaValue::Kind::OpResult)
      for (ValueId o : v.operands)
        if (derived_from_calldata(o, depth - 1)) return true;
    return false;
  }

  void recover_function_entries() {
    const U256 selector_max = (U256(1) << 32) - 1;
    for (auto& [id, b] : prog_.blocks) {
      if (b.terminator != TermKind::JumpI || !b.reached) continue;
      if (b.resolution != Resolution::ResolvedConstant) continue;
      const AbsVal& target = abs_[b.jump_target];
      if (target.kind != AbsVal::Kind::Consts || target.consts.size() != 1) continue;
      const SsaValue& cond = prog_.values[b.jump_cond];
      if (cond.kind != SsaValue::Kind::OpResult || cond.op != Opcode::EQ) continue;

      for (int side = 0; side < 2; ++side) {
        const AbsVal& a = abs_[cond.operands[side]];
        ValueId other = cond.operands[1 - side];
        if (a.kind == AbsVal::Kind::Consts && a.consts.size() == 1 &&
            a.consts[0] <= selector_max && derived_from_calldata(other)) {
          uint32_t selector = static_cast<uint32_t>(a.consts[0]);
          uint32_t entry_block = static_cast<uint32_t>(target.consts[0]);
          function_entries_.emplace(selector, entry_block);
          break;
        }
      }
    }
  }
};

} // namespace

Cfg resolve_jumps(SsaProgram ssa, unsigned max_enumerated_targets) {
  return Resolver(std::move(ssa), max_enumerated_targets).run();
}

std::string dump_cfg(const Cfg& cfg) {
  std::ostringstream os;
  for (const auto& [id, b] : cfg.ssa.blocks) {
    os << "block " << id << " [" << b.start_offset << ", " << b.end_offset << "]";
    switch (b.terminator) {
      case TermKind::Jump: os << " jump"; break;
      case TermKind::JumpI: os << " jumpi"; break;
      case TermKind::Fallthrough: os << " fallthrough"; break;
      case TermKind::Stop: os << " stop"; break;
      case TermKind::Return: os << " return"; break;
      case TermKind::Revert: os << " revert"; break;
      case TermKind::SelfDestruct: os << " selfdestruct"; break;
      case TermKind::Invalid: os << " invalid"; break;
    }
    if (b.resolution == Resolution::Unresolved) os << " unresolved";
    if (b.invalid) os << " (invalid)";
    if (!b.reached) os << " (unreached)";
    os << "\n";
    for (uint32_t s : b.successors) os << "  edge " << id << " -> " << s << "\n";
  }
  for (const auto& [sel, blk] : cfg.function_entries) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%08x", sel);
    os << "function " << buf << " -> block " << blk << "\n";
  }
  return os.str();
}

} // namespace equivguard::evm
