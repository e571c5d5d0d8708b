#pragma once

#include "npo/config.hpp"
#include "npo/density.hpp"
#include "npo/differentiation.hpp"
#include "npo/eigensolver.hpp"
#include "npo/error.hpp"
#include "npo/format.hpp"
#include "npo/hamiltonian.hpp"
#include "npo/labels.hpp"
#include "npo/lgl_grid.hpp"
#include "npo/mapping.hpp"
#include "npo/parallel.hpp"
#include "npo/refdata.hpp"
#include "npo/spectrum.hpp"
