// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gridsim {

enum class ChooseMode { lowest_id, seeded };

/// Determinizes the choice construct. lowest-id picks the smallest
/// identifier; seeded picks candidates[H(seed, step, call) mod n].
struct ChoosePolicy {
  ChooseMode mode = ChooseMode::lowest_id;
  std::uint64_t seed = 0;

  friend bool operator==(const ChoosePolicy&, const ChoosePolicy&) = default;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// The fixed mixing function behind seeded choose:
///   H(seed, step, call) = mix64(mix64(mix64(seed) ^ step) ^ call)
std::uint64_t choose_hash(std::uint64_t seed, std::uint64_t step, std::uint64_t call);

/// Per-step chooser. The call counter advances on every pick so repeated
/// choices within one step land on different hash inputs.
class Chooser {
 public:
  Chooser(ChoosePolicy policy, std::uint64_t step) : policy_(policy), step_(step) {}

  /// candidates must be sorted ascending by identifier. Returns nullopt
  /// iff candidates is empty.
  std::optional<std::string> pick(const std::vector<std::string>& candidates);

  std::uint64_t calls() const { return call_; }

 private:
  ChoosePolicy policy_;
  std::uint64_t step_;
  std::uint64_t call_ = 0;
};

}  // namespace gridsim
