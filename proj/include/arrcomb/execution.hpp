#pragma once

namespace arrcomb {

/// Selects the OpenMP kernel or the plain-loop reference for the parallel
/// operations. Both produce identical output.
enum class Execution { serial, parallel };

}  // namespace arrcomb
