#pragma once

#include "primebounds/bounds/alpha.hpp"
#include "primebounds/bounds/bound.hpp"
#include "primebounds/bounds/catalogue.hpp"
#include "primebounds/bounds/coefficients.hpp"
#include "primebounds/bounds/constants.hpp"
#include "primebounds/bounds/li.hpp"
