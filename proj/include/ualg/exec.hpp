#pragma once

namespace ualg {

/// Kernel execution policy. `parallel` uses the OpenMP kernels when the
/// library was compiled with OpenMP; results are identical either way.
enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec e);

/// Default cap for congruence-lattice enumeration (ALG_MAX_SIZE env var, else 14).
int default_max_size();

} // namespace ualg
