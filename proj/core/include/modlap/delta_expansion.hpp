#pragma once

#include "modlap/precision.hpp"
#include "modlap/series_models.hpp"

#include <cstddef>

namespace modlap {

/// D_N(Omega^2) (Omega^2)^xi = (N - xi)...(2 - xi)(1 - xi) / N! * (Omega^2)^xi.
/// The product is formed exactly before conversion.
BigReal dn_on_power(std::size_t n, const BigReal& omega2, const Rational& xi);

/// Large-N form (N / Omega^2)^{-xi} / Gamma(1 - xi); requires xi < 1 or a
/// positive integer xi (where the limit is 0).
BigReal dn_limit(std::size_t n, const BigReal& omega2, const Rational& xi);

/// Kernel Delta_{N,Omega^2}(t) = (Omega^2)^{N+1} t^N e^{-Omega^2 t} / N!, a Gamma density.
struct DeltaKernelSample {
  std::size_t n = 0;
  BigReal omega2;
  BigReal t;
  BigReal value;
};

DeltaKernelSample delta_kernel(std::size_t n, const BigReal& omega2, const BigReal& t);

struct KernelMoments {
  BigReal argmax;  ///< N / Omega^2
  BigReal mean;    ///< (N + 1) / Omega^2
  BigReal stddev;  ///< sqrt(N + 1) / Omega^2
};

KernelMoments kernel_moments(std::size_t n, const BigReal& omega2);

/// Kernel mass on [a, b] from the regularized lower incomplete gamma.
BigReal kernel_mass(std::size_t n, const BigReal& omega2, const BigReal& a, const BigReal& b);

struct DnComparison {
  BigReal lhs;      ///< term-wise D_N on the truncated series
  BigReal rhs;      ///< Heaviside series at x = N / Omega^2
  BigReal reldiff;  ///< |lhs - rhs| / |rhs|
};

/// Compares D_N acting on the order-N series (beta = 2, m = 0) with the
/// transformed series at N / Omega^2.
DnComparison dn_vs_heaviside(std::size_t n, const BigReal& omega2, Model model,
                             CoefficientStore& store);

}  // namespace modlap
