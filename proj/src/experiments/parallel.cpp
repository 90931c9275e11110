#include "gscramble/experiments/parallel.hpp"

#include <algorithm>

namespace gsc {

int resolve_workers(int requested) {
  if (requested >= 1) return requested;
  // 0 or negative: one thread per hardware slot.
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, hw);
}

}  // namespace gsc
