#include "voxelseg/distance.hpp"

#include <algorithm>
#include <cmath>

namespace voxelseg {

namespace {

// Large finite stand-in for +infinity. Any in-grid squared distance is far
// below this, and keeping it finite lets the envelope arithmetic avoid
// inf - inf.
constexpr double kFar = 1e20;

// One-dimensional squared distance transform (lower envelope of parabolas).
// f holds sampled squared distances at integer positions 0..n-1; d receives
// min_q (i - q)^2 + f[q]. Scratch arrays v (parabola sites) and z (envelope
// breakpoints) must hold n and n + 1 entries.
void squared_dt_1d(const double* f, double* d, int n, int* v, double* z)
{
    int k = 0;
    v[0] = 0;
    z[0] = -kFar;
    z[1] = kFar;
    for (int q = 1; q < n; ++q) {
        double s = ((f[q] + static_cast<double>(q) * q) -
                    (f[v[k]] + static_cast<double>(v[k]) * v[k])) /
                   (2.0 * q - 2.0 * v[k]);
        while (s <= z[k]) {
            --k;
            s = ((f[q] + static_cast<double>(q) * q) -
                 (f[v[k]] + static_cast<double>(v[k]) * v[k])) /
                (2.0 * q - 2.0 * v[k]);
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kFar;
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < static_cast<double>(q))
            ++k;
        const double dq = static_cast<double>(q - v[k]);
        d[q] = dq * dq + f[v[k]];
    }
}

} // namespace

std::vector<float> distance_to_seeds(const Shape3& shape,
                                     const std::vector<std::uint8_t>& seeds)
{
    validate_shape(shape);
    if (seeds.size() != shape.count())
        throw Error("distance_to_seeds: seed array length does not match shape " +
                    to_string(shape));

    const int nx = shape.nx, ny = shape.ny, nz = shape.nz;
    std::vector<double> sq(shape.count());
    for (std::size_t i = 0; i < seeds.size(); ++i)
        sq[i] = seeds[i] ? 0.0 : kFar;

    const int nmax = std::max(nx, std::max(ny, nz));
    std::vector<double> f(nmax), d(nmax), z(nmax + 1);
    std::vector<int> v(nmax);

    // x pass
    for (int zz = 0; zz < nz; ++zz)
        for (int yy = 0; yy < ny; ++yy) {
            double* row = &sq[flat_index(shape, 0, yy, zz)];
            squared_dt_1d(row, d.data(), nx, v.data(), z.data());
            for (int xx = 0; xx < nx; ++xx)
                row[xx] = d[xx];
        }
    // y pass
    for (int zz = 0; zz < nz; ++zz)
        for (int xx = 0; xx < nx; ++xx) {
            for (int yy = 0; yy < ny; ++yy)
                f[yy] = sq[flat_index(shape, xx, yy, zz)];
            squared_dt_1d(f.data(), d.data(), ny, v.data(), z.data());
            for (int yy = 0; yy < ny; ++yy)
                sq[flat_index(shape, xx, yy, zz)] = d[yy];
        }
    // z pass
    for (int yy = 0; yy < ny; ++yy)
        for (int xx = 0; xx < nx; ++xx) {
            for (int zz = 0; zz < nz; ++zz)
                f[zz] = sq[flat_index(shape, xx, yy, zz)];
            squared_dt_1d(f.data(), d.data(), nz, v.data(), z.data());
            for (int zz = 0; zz < nz; ++zz)
                sq[flat_index(shape, xx, yy, zz)] = d[zz];
        }

    std::vector<float> out(shape.count());
    for (std::size_t i = 0; i < sq.size(); ++i)
        out[i] = static_cast<float>(std::sqrt(sq[i]));
    return out;
}

DistanceMap distance_to_opposite_label(const Mask& m)
{
    const std::uint64_t fg = m.foreground_count();
    if (fg == 0 || fg == m.shape.count())
        throw Error("mask has a single label; distance to opposite label undefined");

    std::vector<std::uint8_t> background(m.data.size());
    for (std::size_t i = 0; i < m.data.size(); ++i)
        background[i] = m.data[i] ? 0 : 1;

    const std::vector<float> to_background = distance_to_seeds(m.shape, background);
    const std::vector<float> to_foreground = distance_to_seeds(m.shape, m.data);

    DistanceMap out(m.shape);
    for (std::size_t i = 0; i < m.data.size(); ++i)
        out.data[i] = m.data[i] ? to_background[i] : to_foreground[i];
    return out;
}

const std::vector<Voxel>& neighbor_offsets(Connectivity connectivity)
{
    static const std::vector<Voxel> faces = {
        {-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}, {0, 0, -1}, {0, 0, 1}};
    static const std::vector<Voxel> cube = [] {
        std::vector<Voxel> offs;
        for (int dz = -1; dz <= 1; ++dz)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx)
                    if (dx != 0 || dy != 0 || dz != 0)
                        offs.push_back(Voxel{dx, dy, dz});
        return offs;
    }();
    return connectivity == Connectivity::faces6 ? faces : cube;
}

std::vector<Voxel> boundary_voxels(const Mask& m, Connectivity connectivity)
{
    const auto& offs = neighbor_offsets(connectivity);
    std::vector<Voxel> out;
    for (int z = 0; z < m.shape.nz; ++z)
        for (int y = 0; y < m.shape.ny; ++y)
            for (int x = 0; x < m.shape.nx; ++x) {
                const std::uint8_t label = m.at(x, y, z);
                for (const Voxel& o : offs) {
                    const int px = x + o.x, py = y + o.y, pz = z + o.z;
                    if (!m.shape.contains(px, py, pz))
                        continue;
                    if (m.at(px, py, pz) != label) {
                        out.push_back(Voxel{x, y, z});
                        break;
                    }
                }
            }
    return out;
}

} // namespace voxelseg
