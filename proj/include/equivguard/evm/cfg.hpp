#pragma once

#include "equivguard/evm/ssa.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace equivguard::evm {

struct Cfg {
  SsaProgram ssa;
  uint32_t entry = 0;
  // Function dispatcher mapping, recovered from selector comparisons that
  // guard resolved JUMPIs.
  std::map<uint32_t, uint32_t> function_entries; // selector -> block id

  const BasicBlock& block(uint32_t id) const { return ssa.blocks.at(id); }
};

// Constant-propagation fixpoint over Phi-joined stack values: folds jump
// targets, discovers edges, and reruns until the edge set stabilizes.
// Phis joining more than max_enumerated_targets distinct constants leave
// the jump Unresolved.
Cfg resolve_jumps(SsaProgram ssa, unsigned max_enumerated_targets = 8);

// One node per block, one edge per line; stable order for test diffs.
std::string dump_cfg(const Cfg& cfg);

} // namespace equivguard::evm
