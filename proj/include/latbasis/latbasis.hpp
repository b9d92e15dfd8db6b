#pragma once

#include "latbasis/errors.hpp"
#include "latbasis/euclid_basic.hpp"
#include "latbasis/euclid_fast.hpp"
#include "latbasis/exact_arith.hpp"
#include "latbasis/exact_linalg.hpp"
#include "latbasis/generate.hpp"
#include "latbasis/io.hpp"
#include "latbasis/lattice_oracles.hpp"
#include "latbasis/matrix.hpp"
#include "latbasis/size_reduction.hpp"
