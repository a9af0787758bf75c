#pragma once

#include "kpaths/exact.hpp"
#include "kpaths/lattice.hpp"
#include "kpaths/series.hpp"
#include "kpaths/formulas.hpp"
#include "kpaths/bijections.hpp"
#include "kpaths/verify.hpp"
