#pragma once

#include <cstddef>
#include <span>

#include "mmdseg/kernel.hpp"

namespace mmdseg {

// Closed-form rho curves for labelled data whose changepoints are known. Pools are the
// contiguous blocks [0, n1), [n1, n1+n2), ... of the Gram matrix. Split r counts the
// observations on the left, 1 <= r <= n-1.

/// One changepoint after n1 observations.
double oracle_rho_single(const GramMatrix& gram, std::size_t n1, std::size_t r);

/// Two changepoints after n1 and n1+n2 observations.
double oracle_rho_two(const GramMatrix& gram, std::size_t n1, std::size_t n2, std::size_t r);

/// Squared MMD between the mixtures alpha*F + (1-alpha)*G and beta*F + (1-beta)*G of two
/// empirical pools, evaluated directly from the weighted kernel embeddings.
double mixture_mmd(const GramMatrix& gram, std::span<const std::size_t> pool_f,
                   std::span<const std::size_t> pool_g, double alpha, double beta);

/// Squared MMD between two weighted empirical measures over the Gram indices. Weights are
/// indexed like the Gram matrix and each vector must sum to one.
double weighted_mmd_squared(const GramMatrix& gram, std::span<const double> weights_p,
                            std::span<const double> weights_q);

}  // namespace mmdseg
