#pragma once

// Umbrella header for the core library (JSON I/O and the CLI live in kdfc/io and kdfc/cli.hpp).

#include "kdfc/attacks.hpp"
#include "kdfc/confgen.hpp"
#include "kdfc/error.hpp"
#include "kdfc/gf2/bit_matrix.hpp"
#include "kdfc/gf2/bit_vector.hpp"
#include "kdfc/gf2/linalg.hpp"
#include "kdfc/gf2/poly.hpp"
#include "kdfc/gf2/primitive.hpp"
#include "kdfc/gf2/primitive_table.hpp"
#include "kdfc/kdfc_snow.hpp"
#include "kdfc/randtests.hpp"
#include "kdfc/sigma_lfsr.hpp"
#include "kdfc/snow2.hpp"
#include "kdfc/symbolic/anf.hpp"
#include "kdfc/symbolic/qmatrix.hpp"
