#pragma once

#include "output_table.hpp"
#include "run_config.hpp"

#include "modlap/series_models.hpp"

namespace modlap::cli {

// Every command assumes the working precision already equals config.precision.

/// 1: integral model at odd orders. 2: integral model against m^2.
/// 3: oscillator strong-coupling coefficients. 4: high-order oscillator against m^2.
OutputTable cmd_table(int which, const RunConfig& config, CoefficientStore& store);

/// Curve samples. 1: transformed integral series. 2: oscillator approximant
/// over exact energy. 3: high-order transformed oscillator series.
/// 4 and 5: the integral and oscillator series for several beta.
OutputTable cmd_figure(int which, const RunConfig& config, CoefficientStore& store);

/// Largest stationary point per beta, with the distance to the m = 0 reference.
OutputTable cmd_betascan(const RunConfig& config, CoefficientStore& store);

/// Stationary-point census for every order up to config.order, plus all
/// roots with their correction coefficients at a few detail orders.
OutputTable cmd_largeorder(const RunConfig& config, CoefficientStore& store);

/// Kernel moments and the finite-N operator against the transformed series.
OutputTable cmd_kernel(const RunConfig& config, CoefficientStore& store);

}  // namespace modlap::cli
