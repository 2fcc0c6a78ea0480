#pragma once

#include <vector>

#include "isocant/parallelepiped.hpp"

namespace isocant {

// <normal, x> <= offset
struct Halfspace {
    Point normal;
    Rational offset;

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

struct HalfspaceSystem {
    int dim = 0;
    std::vector<Halfspace> halfspaces;

    bool contains(const Point& x) const {
        if (static_cast<int>(x.size()) != dim)
            throw DimensionMismatch("point dimension does not match system");
        for (const auto& h : halfspaces)
            if (dot(h.normal, x) > h.offset) return false;
        return true;
    }
};

} // namespace isocant
