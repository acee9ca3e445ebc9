#pragma once

#include <vector>

#include "voxelseg/volume.hpp"

namespace voxelseg {

enum class Connectivity {
    faces6 = 6,
    full26 = 26,
};

/// Per-voxel Euclidean distance to the nearest voxel of the opposite label,
/// in voxel units. Values are >= 1 whenever the source mask held both labels.
struct DistanceMap {
    Shape3 shape;
    std::vector<float> data;

    DistanceMap() = default;

    explicit DistanceMap(const Shape3& s)
        : shape(s)
    {
        validate_shape(s);
        data.assign(s.count(), 0.0f);
    }

    float at(int x, int y, int z) const { return data[flat_index(shape, x, y, z)]; }
};

/// Exact Euclidean distance from every voxel to the nearest seed voxel
/// (seeds[i] != 0). Separable squared transform, one lower-envelope pass per
/// axis, then a single square root. Seeds may be empty; unreachable voxels
/// get a large finite sentinel (> any in-grid distance).
std::vector<float> distance_to_seeds(const Shape3& shape,
                                     const std::vector<std::uint8_t>& seeds);

/// D(x) = min over voxels y with m(y) != m(x) of ||x - y||_2. Two one-sided
/// transforms merged by label. Throws when the mask holds a single label.
DistanceMap distance_to_opposite_label(const Mask& m);

/// Voxels (of either label) with at least one in-bounds neighbor of the
/// opposite label under the given adjacency. Raster (flat-index) order.
/// Uniform masks yield an empty set.
std::vector<Voxel> boundary_voxels(const Mask& m, Connectivity connectivity);

/// Neighbor offsets for an adjacency; 6 = face neighbors, 26 = full cube.
const std::vector<Voxel>& neighbor_offsets(Connectivity connectivity);

} // namespace voxelseg
