// Umbrella header for the library (everything but the command line).

#ifndef KCORE_KCORE_HPP_
#define KCORE_KCORE_HPP_

#include "core_complex.hpp"  // IWYU pragma: export
#include "factor_group.hpp"  // IWYU pragma: export
#include "io.hpp"            // IWYU pragma: export
#include "kurosh.hpp"        // IWYU pragma: export
#include "monodromy.hpp"     // IWYU pragma: export
#include "oracle.hpp"        // IWYU pragma: export
#include "separation.hpp"    // IWYU pragma: export
#include "word.hpp"          // IWYU pragma: export

#endif  // KCORE_KCORE_HPP_
