#pragma once

#include <complex>
#include <vector>

namespace mixlab {

using cplx = std::complex<double>;

/// In-place DFT of arbitrary length (iterative radix-2; Bluestein for other
/// sizes). Forward is unnormalized; inverse divides by n.
void fft(std::vector<cplx>& a, bool inverse);

/// 2-D transform of a row-major h x w grid (rows first, then columns).
void fft2(std::vector<cplx>& grid, int h, int w, bool inverse);

}  // namespace mixlab
