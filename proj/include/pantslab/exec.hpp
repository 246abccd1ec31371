#pragma once

namespace pantslab {

/// Selects the loop implementation of a kernel. `serial` is the reference
/// path; `parallel` distributes the outer loop with OpenMP. Both return
/// bit-identical results.
enum class Exec { serial, parallel };

}  // namespace pantslab
