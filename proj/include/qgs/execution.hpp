#pragma once

namespace qgs {

enum class Execution { Serial, Parallel };

/// Serial runs the reference loops; Parallel runs the OpenMP kernels with
/// `workers` threads (0 = OpenMP default). Both produce identical bits.
struct ExecutionPolicy {
  Execution mode = Execution::Serial;
  int workers = 0;
};

}  // namespace qgs
