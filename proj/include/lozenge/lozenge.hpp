#pragma once

// Umbrella header: exact rhombus-tiling counts for symmetric hexagons with a
// fixed rhombus on the vertical axis, plus the determinant, orthogonal
// polynomial, and hypergeometric machinery the evaluations rest on.

#include "errors.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"
#include "matrix.hpp"
#include "bernoulli.hpp"
#include "jet.hpp"
#include "tiling.hpp"
#include "detforms.hpp"
#include "closedform.hpp"
#include "oracle.hpp"
#include "orthopoly.hpp"
#include "hahn.hpp"
#include "hyper.hpp"
