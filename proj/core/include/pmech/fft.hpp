#pragma once

#include <complex>

namespace pmech::fft {

/// In-place batched 1-D discrete Fourier transform (unnormalized), computed
/// with FFTW behind a cached-plan interface.
///
///   sign = -1 : forward,  X[m] = sum_j x[j] e^{-2*pi*i*j*m/n}
///   sign = +1 : backward, X[j] = sum_m x[m] e^{+2*pi*i*j*m/n}   (no 1/n)
///
/// The batch runs `howmany` transforms of length `n`; element j of batch t
/// lives at data[t*dist + j*stride].  Thread-safe; plans are cached per
/// geometry and shared.
void transform_many(std::complex<double>* data, int n, int howmany, int stride,
                    int dist, int sign);

/// Convenience: single contiguous in-place transform of length n.
void transform(std::complex<double>* data, int n, int sign);

}  // namespace pmech::fft
