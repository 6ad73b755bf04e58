#pragma once

#include "qweyl/errors.hpp"
#include "qweyl/scalars.hpp"
#include "qweyl/weyl.hpp"
#include "qweyl/poisson.hpp"
#include "qweyl/lattice.hpp"
#include "qweyl/spectra.hpp"
#include "qweyl/interp.hpp"
#include "qweyl/quantum_plane.hpp"
#include "qweyl/expr.hpp"
#include "qweyl/config.hpp"
