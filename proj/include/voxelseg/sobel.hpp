#pragma once

#include <array>

#include "voxelseg/volume.hpp"

namespace voxelseg {

/// 3x3x3 signed integer stencil. Taps are stored x-fastest over offsets
/// (dx,dy,dz) in {-1,0,1}^3: tap index = (dx+1) + 3*((dy+1) + 3*(dz+1)).
struct SobelKernel {
    std::array<int, 27> taps{};

    int at(int dx, int dy, int dz) const
    {
        return taps[static_cast<std::size_t>((dx + 1) + 3 * ((dy + 1) + 3 * (dz + 1)))];
    }
};

/// The three Sobel-Feldman derivative kernels. Along its own axis each
/// kernel runs [+smoothing, 0, -smoothing] in storage order (offset -1, 0,
/// +1) where smoothing is the separable [1 2 1] x [1 2 1] plane; sx and sy
/// are axis permutations of sz. Each kernel sums to zero and is
/// antisymmetric under reflection along its own axis.
struct SobelKernels {
    SobelKernel sx;
    SobelKernel sy;
    SobelKernel sz;

    static const SobelKernels& standard();
};

/// True 3D convolution with a 3x3x3 kernel: out(o) = sum_j k(j) * v(o - j).
/// Same-size output; out-of-bounds reads use replicate (nearest-edge)
/// padding. With the antisymmetric kernels above this flip makes the
/// response positive on ramps increasing along the kernel axis.
Volume convolve3(const Volume& v, const SobelKernel& k);

/// Exact transpose of the linear operator convolve3 (including the
/// replicate-padding rows): <convolve3(u,k), w> == <u, convolve3_adjoint(w,k)>.
Volume convolve3_adjoint(const Volume& w, const SobelKernel& k);

/// Soft contour: |v * sx| + |v * sy| + |v * sz|, voxelwise. Nonnegative
/// everywhere; exactly zero on constant volumes thanks to the zero-sum
/// kernels and replicate padding.
Volume contour(const Volume& v);

} // namespace voxelseg
