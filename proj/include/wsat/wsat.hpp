#pragma once

#include "wsat/bits.hpp"
#include "wsat/certificate.hpp"
#include "wsat/constructions.hpp"
#include "wsat/errors.hpp"
#include "wsat/expr.hpp"
#include "wsat/exterior.hpp"
#include "wsat/formulas.hpp"
#include "wsat/grid.hpp"
#include "wsat/hypergraph.hpp"
#include "wsat/io.hpp"
#include "wsat/linalg.hpp"
#include "wsat/pattern.hpp"
#include "wsat/rng.hpp"
#include "wsat/saturation.hpp"
#include "wsat/scalar.hpp"
