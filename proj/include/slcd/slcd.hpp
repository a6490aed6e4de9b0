#pragma once
// Umbrella header for the syllogism decision library.

#include "slcd/bilateral.hpp"     // IWYU pragma: export
#include "slcd/engine.hpp"        // IWYU pragma: export
#include "slcd/oracle.hpp"        // IWYU pragma: export
#include "slcd/parse.hpp"         // IWYU pragma: export
#include "slcd/render.hpp"        // IWYU pragma: export
#include "slcd/star_fixture.hpp"  // IWYU pragma: export
#include "slcd/trilateral.hpp"    // IWYU pragma: export
