#pragma once

namespace fintop {

/// Kernel execution policy. Serial paths are the reference implementations;
/// parallel paths shard work over OpenMP threads and must agree exactly.
enum class Exec { Serial, Parallel };

}  // namespace fintop
