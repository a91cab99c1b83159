#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "streamcode/stream_model.hpp"

namespace streamcode::support {

inline CodeParams params(int tau, int b, int tau_l = 0, int m = 4) {
  return CodeParams{tau, b, tau_l, tau + 1, m, tau};
}

/// `live` random sizes in [0, m] followed by tau zeros; t set accordingly.
inline MessageSizeSequence random_terminated(int live, const CodeParams& p, std::uint64_t seed) {
  return terminate_sequence(random_sizes(live, p.m, seed), p);
}

inline std::vector<int> worked_sizes() { return {3, 2, 1, 2, 1}; }

}  // namespace streamcode::support
