#pragma once

namespace ytl {

/// Execution policy for sweeps over sets of (multi)partitions. The
/// parallel path uses OpenMP when compiled in and is required to produce
/// bit-identical results to the serial reference.
enum class Exec {
    serial,
    parallel,
};

} // namespace ytl
