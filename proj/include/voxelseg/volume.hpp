#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "voxelseg/error.hpp"

namespace voxelseg {

/// Voxel extents of a dense 3D grid. All extents are >= 1 and the total
/// voxel count must fit in std::size_t.
struct Shape3 {
    int nx = 0;
    int ny = 0;
    int nz = 0;

    bool operator==(const Shape3&) const = default;

    std::size_t count() const
    {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
               static_cast<std::size_t>(nz);
    }

    bool contains(int x, int y, int z) const
    {
        return x >= 0 && x < nx && y >= 0 && y < ny && z >= 0 && z < nz;
    }
};

std::string to_string(const Shape3& s);

// Throws Error unless all extents are >= 1 and the product is addressable.
void validate_shape(const Shape3& s);

// Throws Error naming both shapes when they differ. `what` names the
// operation for the message.
void require_same_shape(const Shape3& a, const Shape3& b, const char* what);

/// Flat storage is x-fastest: index = x + nx*(y + ny*z).
inline std::size_t flat_index(const Shape3& s, int x, int y, int z)
{
    return static_cast<std::size_t>(x) +
           static_cast<std::size_t>(s.nx) *
               (static_cast<std::size_t>(y) +
                static_cast<std::size_t>(s.ny) * static_cast<std::size_t>(z));
}

struct Voxel {
    int x = 0;
    int y = 0;
    int z = 0;

    bool operator==(const Voxel&) const = default;
};

inline Voxel unflatten(const Shape3& s, std::size_t index)
{
    const int x = static_cast<int>(index % static_cast<std::size_t>(s.nx));
    index /= static_cast<std::size_t>(s.nx);
    const int y = static_cast<int>(index % static_cast<std::size_t>(s.ny));
    const int z = static_cast<int>(index / static_cast<std::size_t>(s.ny));
    return Voxel{x, y, z};
}

/// Dense scalar field (intensities, probabilities, loss gradients).
struct Volume {
    Shape3 shape;
    std::vector<float> data;

    Volume() = default;

    explicit Volume(const Shape3& s, float fill = 0.0f)
        : shape(s)
    {
        validate_shape(s);
        data.assign(s.count(), fill);
    }

    float& at(int x, int y, int z) { return data[flat_index(shape, x, y, z)]; }
    float at(int x, int y, int z) const { return data[flat_index(shape, x, y, z)]; }
};

/// Binary label field; every stored value is exactly 0 or 1.
struct Mask {
    Shape3 shape;
    std::vector<std::uint8_t> data;

    Mask() = default;

    explicit Mask(const Shape3& s, std::uint8_t fill = 0)
        : shape(s)
    {
        validate_shape(s);
        data.assign(s.count(), fill);
    }

    std::uint8_t& at(int x, int y, int z) { return data[flat_index(shape, x, y, z)]; }
    std::uint8_t at(int x, int y, int z) const { return data[flat_index(shape, x, y, z)]; }

    std::uint64_t foreground_count() const;
};

/// Output voxel is 1 iff the input voxel is >= t (inclusive comparison).
Mask threshold(const Volume& v, float t);

/// Per-voxel product; shapes must match.
Volume elementwise_mul(const Volume& a, const Volume& b);

/// Sum of all voxels accumulated in double precision, sequential flat order.
double sum(const Volume& v);

/// Mask reinterpreted as a 0/1 float volume.
Volume to_volume(const Mask& m);

// True when every value is finite (no NaN/Inf).
bool all_finite(const Volume& v);

} // namespace voxelseg
