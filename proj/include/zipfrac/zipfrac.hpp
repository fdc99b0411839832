#pragma once

/// Umbrella header: the full interpolation engine and its analysis tools.
/// Individual headers can be included on their own; each is
/// self-contained.

#include "zipfrac/errors.hpp"        // IWYU pragma: export
#include "zipfrac/types.hpp"         // IWYU pragma: export
#include "zipfrac/derivatives.hpp"   // IWYU pragma: export
#include "zipfrac/ifs.hpp"           // IWYU pragma: export
#include "zipfrac/evaluator.hpp"     // IWYU pragma: export
#include "zipfrac/positivity.hpp"    // IWYU pragma: export
#include "zipfrac/error_bounds.hpp"  // IWYU pragma: export
#include "zipfrac/demo.hpp"          // IWYU pragma: export
