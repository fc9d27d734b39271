#pragma once

// Convenience umbrella: pulls in the whole library.

#include "core.hpp"     // IWYU pragma: export
#include "weyl.hpp"     // IWYU pragma: export
#include "partfn.hpp"   // IWYU pragma: export
#include "kostka.hpp"   // IWYU pragma: export
#include "qmult.hpp"    // IWYU pragma: export
#include "chars.hpp"    // IWYU pragma: export
#include "report.hpp"   // IWYU pragma: export
#include "verify.hpp"   // IWYU pragma: export
