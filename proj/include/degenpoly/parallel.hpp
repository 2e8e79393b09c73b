#pragma once

namespace degenpoly {

/// Process-wide switch for the data-parallel series kernels. Results are
/// exact either way, so both modes produce identical output; the switch
/// exists for the serial-vs-parallel comparison tests and the benchmark.
enum class ExecMode { serial, parallel };

ExecMode exec_mode() noexcept;
void set_exec_mode(ExecMode mode) noexcept;

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads() noexcept;

}  // namespace degenpoly
