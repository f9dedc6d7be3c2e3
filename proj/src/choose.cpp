// SPDX-License-Identifier: Apache-2.0
#include "gridsim/choose.hpp"

namespace gridsim {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t choose_hash(std::uint64_t seed, std::uint64_t step, std::uint64_t call) {
  return mix64(mix64(mix64(seed) ^ step) ^ call);
}

std::optional<std::string> Chooser::pick(const std::vector<std::string>& candidates) {
  std::uint64_t call = call_++;
  if (candidates.empty()) return std::nullopt;
  if (policy_.mode == ChooseMode::lowest_id) return candidates.front();
  std::uint64_t h = choose_hash(policy_.seed, step_, call);
  return candidates[h % candidates.size()];
}

}  // namespace gridsim
