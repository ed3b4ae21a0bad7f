#ifndef BICOHOM_BIDEGREE_HPP
#define BICOHOM_BIDEGREE_HPP

#include <compare>
#include <string>

namespace bicohom {

/// A (p,q) grid position. Any integer pair is legal; spaces outside a
/// complex's support are the zero space.
struct Bidegree {
    int p = 0;
    int q = 0;

    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

inline std::string to_string(const Bidegree& b) {
    return "(" + std::to_string(b.p) + "," + std::to_string(b.q) + ")";
}

/// Rectangular hull [pmin,pmax] x [qmin,qmax] of a nonempty support.
struct Hull {
    int pmin = 0;
    int pmax = 0;
    int qmin = 0;
    int qmax = 0;

    bool contains(const Bidegree& b) const {
        return pmin <= b.p && b.p <= pmax && qmin <= b.q && b.q <= qmax;
    }
    Hull grown(int margin) const {
        return {pmin - margin, pmax + margin, qmin - margin, qmax + margin};
    }
};

}  // namespace bicohom

#endif  // BICOHOM_BIDEGREE_HPP
