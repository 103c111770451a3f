#pragma once

// Serial reference implementations of the kernels in hermpos/kernels.hpp.
// They scatter from source entries instead of gathering per destination row,
// and run single threaded; used by tests and the benchmark.

#include "hermpos/kernels.hpp"

namespace hermpos::reference {

std::vector<GaussianRational> multiply_once(const MonomialBasis& src, const MonomialBasis& dst,
                                            std::span<const GaussianRational> c);

std::vector<GaussianRational> norm_power(const MonomialBasis& src, const MonomialBasis& dst, unsigned d,
                                         std::span<const GaussianRational> c);

kernels::EliminationResult eliminate(std::vector<GaussianRational> work, std::size_t size,
                                     kernels::PivotRule rule, bool record);

}  // namespace hermpos::reference
