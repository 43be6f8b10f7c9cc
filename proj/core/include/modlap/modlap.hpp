#pragma once

#include "modlap/delta_expansion.hpp"
#include "modlap/errors.hpp"
#include "modlap/heaviside.hpp"
#include "modlap/oracles.hpp"
#include "modlap/precision.hpp"
#include "modlap/resummation.hpp"
#include "modlap/series_models.hpp"
