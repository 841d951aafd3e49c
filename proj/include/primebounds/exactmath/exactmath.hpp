#pragma once

#include "primebounds/exactmath/bigfloat.hpp"
#include "primebounds/exactmath/logspace.hpp"
#include "primebounds/exactmath/poly.hpp"
#include "primebounds/exactmath/rational.hpp"
#include "primebounds/exactmath/rational_fn.hpp"
#include "primebounds/exactmath/registry.hpp"
#include "primebounds/exactmath/sturm.hpp"
