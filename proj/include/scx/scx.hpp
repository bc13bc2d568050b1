#pragma once

// Umbrella header for the scx toolkit: finite fields, primitive
// polynomials, m-sequences, pure simplicial complexes, and the cyclic
// window / corridor-doubling constructions, plus the scx v1 file format.

#include "scx/complex.hpp"
#include "scx/construct.hpp"
#include "scx/error.hpp"
#include "scx/field.hpp"
#include "scx/format.hpp"
#include "scx/intmath.hpp"
#include "scx/lfsr.hpp"
#include "scx/poly.hpp"
