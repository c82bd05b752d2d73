#pragma once

namespace qes {

/// Arithmetic used by the polynomial/spectral pipelines. Extended switches the
/// internal recurrences and root polishing to ~50 significant digits; results
/// are rounded back to double at the API boundary. Needed for j > 2, where the
/// recurrence coefficients grow fast and double accumulates error quickly.
enum class Precision { Double, Extended };

} // namespace qes
