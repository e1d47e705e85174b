#pragma once

namespace pfgm {

/// Budgets and parallelism shared by the enumeration-based engines.
/// Results never depend on `threads`: work is split into a fixed set of
/// blocks that are reduced in index order.
struct ComputeOptions {
  /// Maximum number of maps the exact oracle may enumerate per evaluation.
  double enumeration_cap = 1e8;
  /// Maximum (subset, map) pairs the Taylor engine may visit.
  double work_cap = 1e9;
  unsigned threads = 1;
};

}  // namespace pfgm
