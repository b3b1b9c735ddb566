#pragma once

// Umbrella header: exact characters of proper cyclic group actions on
// complete simplicial fans, and their decompositions into transitive
// permutation characters.

#include "fanchar/action.hpp"
#include "fanchar/character.hpp"
#include "fanchar/cyclotomic.hpp"
#include "fanchar/errors.hpp"
#include "fanchar/fan.hpp"
#include "fanchar/instance.hpp"
#include "fanchar/matrix.hpp"
#include "fanchar/number_theory.hpp"
#include "fanchar/numeric.hpp"
#include "fanchar/polynomial.hpp"
#include "fanchar/report.hpp"
#include "fanchar/simplicial_complex.hpp"
