#include "voxelseg/volume.hpp"

#include <cmath>
#include <limits>

namespace voxelseg {

std::string to_string(const Shape3& s)
{
    return "[" + std::to_string(s.nx) + "," + std::to_string(s.ny) + "," +
           std::to_string(s.nz) + "]";
}

void validate_shape(const Shape3& s)
{
    if (s.nx < 1 || s.ny < 1 || s.nz < 1)
        throw Error("invalid shape " + to_string(s) + ": all extents must be >= 1");
    const std::size_t limit = std::numeric_limits<std::size_t>::max();
    const std::size_t xy = static_cast<std::size_t>(s.nx) * static_cast<std::size_t>(s.ny);
    if (xy / static_cast<std::size_t>(s.nx) != static_cast<std::size_t>(s.ny) ||
        xy > limit / static_cast<std::size_t>(s.nz))
        throw Error("shape " + to_string(s) + " exceeds addressable voxel count");
}

void require_same_shape(const Shape3& a, const Shape3& b, const char* what)
{
    if (!(a == b))
        throw Error(std::string(what) + ": shape mismatch " + to_string(a) +
                    " vs " + to_string(b));
}

std::uint64_t Mask::foreground_count() const
{
    std::uint64_t n = 0;
    for (std::uint8_t v : data)
        n += v;
    return n;
}

Mask threshold(const Volume& v, float t)
{
    if (!std::isfinite(t))
        throw Error("threshold: t must be finite");
    Mask out(v.shape);
    for (std::size_t i = 0; i < v.data.size(); ++i)
        out.data[i] = v.data[i] >= t ? 1 : 0;
    return out;
}

Volume elementwise_mul(const Volume& a, const Volume& b)
{
    require_same_shape(a.shape, b.shape, "elementwise_mul");
    Volume out(a.shape);
    for (std::size_t i = 0; i < a.data.size(); ++i)
        out.data[i] = a.data[i] * b.data[i];
    return out;
}

double sum(const Volume& v)
{
    double acc = 0.0;
    for (float x : v.data)
        acc += static_cast<double>(x);
    return acc;
}

Volume to_volume(const Mask& m)
{
    Volume out(m.shape);
    for (std::size_t i = 0; i < m.data.size(); ++i)
        out.data[i] = static_cast<float>(m.data[i]);
    return out;
}

bool all_finite(const Volume& v)
{
    for (float x : v.data)
        if (!std::isfinite(x))
            return false;
    return true;
}

} // namespace voxelseg
