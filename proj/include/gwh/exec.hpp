#pragma once

namespace gwh {

/// Selects between the OpenMP kernel and its serial reference. Both paths return
/// bit-identical results; the serial one is kept for tests and benchmarks.
enum class Exec { serial, parallel };

/// Number of OpenMP threads the parallel path will use (1 without OpenMP).
int max_threads();

}  // namespace gwh
