#pragma once

// Umbrella header for the uqso library.

#include <uqso/scalar.hpp>
#include <uqso/matrix.hpp>
#include <uqso/pbw.hpp>
#include <uqso/reps.hpp>
#include <uqso/weights.hpp>
#include <uqso/ladder.hpp>
#include <uqso/branch.hpp>
#include <uqso/wordexpr.hpp>
