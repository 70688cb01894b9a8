#pragma once

#include <complex>
#include <vector>

namespace phin::detail {

/// In-place unnormalised DFT. Forward uses exp(-2 pi i jk/N).
void fft_inplace(std::vector<std::complex<double>>& data, bool inverse);

bool is_power_of_two(std::size_t n) noexcept;

}  // namespace phin::detail
