#pragma once

// Umbrella header: finite-dimensional unital associative algebras over the
// rationals; presentations, regular representations, zero divisors and
// annihilators, Wedderburn structure, polynomials over an algebra, nil
// posets.

#include "algkit/algebra.hpp"
#include "algkit/error.hpp"
#include "algkit/formal.hpp"
#include "algkit/json_io.hpp"
#include "algkit/linalg.hpp"
#include "algkit/nilposet.hpp"
#include "algkit/parse.hpp"
#include "algkit/poly.hpp"
#include "algkit/presentation.hpp"
#include "algkit/qpoly.hpp"
#include "algkit/rational.hpp"
#include "algkit/structure.hpp"
