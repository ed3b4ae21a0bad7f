#ifndef BICOHOM_GENERATORS_HPP
#define BICOHOM_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bicohom/double_complex.hpp"

namespace bicohom {

/// One arrow of a zigzag word, read along the chain being built.
/// "Out" letters emit an arrow from an open end of the chain into a fresh
/// dot; "In" letters attach a fresh dot mapping onto an open end.
enum class ZigzagLetter { DelOut, DelbarOut, DelIn, DelbarIn };

inline std::string to_string(ZigzagLetter l) {
    switch (l) {
        case ZigzagLetter::DelOut: return "del-out";
        case ZigzagLetter::DelbarOut: return "delbar-out";
        case ZigzagLetter::DelIn: return "del-in";
        case ZigzagLetter::DelbarIn: return "delbar-in";
    }
    return "?";
}

struct GeneratorSpec {
    enum class Kind { Dot, Square, Zigzag, RandomSum, Iwasawa };

    Kind kind = Kind::Dot;
    Bidegree placement;                     // dot / square / zigzag anchor
    std::vector<ZigzagLetter> zigzag_shape;
    int block_count = 0;                    // random_sum
    Hull bounds;                            // random_sum
    std::uint64_t seed = 0;
};

/// One-dimensional space at (p,q), all maps zero.
inline DoubleComplex build_dot(int p, int q) {
    DoubleComplex c("dot");
    c.set_dim({p, q}, 1);
    return c;
}

/**
 * The smallest acyclic model: dots a(p,q), u(p+1,q), v(p,q+1), w(p+1,q+1)
 * with del a = u, delbar a = v, delbar u = w, del v = -w. The minus sign on
 * the arrow out of the (p,q+1) corner is what makes the differentials
 * anticommute.
 */
inline DoubleComplex build_square(int p, int q) {
    DoubleComplex c("square");
    c.set_dim({p, q}, 1);
    c.set_dim({p + 1, q}, 1);
    c.set_dim({p, q + 1}, 1);
    c.set_dim({p + 1, q + 1}, 1);
    c.set_del({p, q}, Matrix::from_rows({{1}}));
    c.set_delbar({p, q}, Matrix::from_rows({{1}}));
    c.set_delbar({p + 1, q}, Matrix::from_rows({{1}}));
    c.set_del({p, q + 1}, Matrix::from_rows({{-1}}));
    return c;
}

namespace detail {

struct ZigzagDot {
    Bidegree at;
};

struct ZigzagArrow {
    int from = 0;
    int to = 0;
    bool is_del = false;  // else delbar
};

// An open chain end accepts exactly one letter: a dot that emitted an
// operator may only emit the other one, and a dot that received an operator
// may only receive the other one. Anything else breaks d^2 = 0 or the
// anticommutation law, so it is a BadShape.
struct ZigzagEnd {
    int dot = 0;
    ZigzagLetter accepts{};
};

inline ZigzagLetter continuation_of(ZigzagLetter l) {
    switch (l) {
        case ZigzagLetter::DelOut: return ZigzagLetter::DelbarIn;    // fresh dot is a sink
        case ZigzagLetter::DelbarOut: return ZigzagLetter::DelIn;
        case ZigzagLetter::DelIn: return ZigzagLetter::DelbarOut;    // fresh dot is a source
        case ZigzagLetter::DelbarIn: return ZigzagLetter::DelOut;
    }
    return ZigzagLetter::DelOut;
}

inline ZigzagLetter closing_of(ZigzagLetter l) {
    // what the old end dot would still accept after taking part in arrow l
    switch (l) {
        case ZigzagLetter::DelOut: return ZigzagLetter::DelbarOut;
        case ZigzagLetter::DelbarOut: return ZigzagLetter::DelOut;
        case ZigzagLetter::DelIn: return ZigzagLetter::DelbarIn;
        case ZigzagLetter::DelbarIn: return ZigzagLetter::DelIn;
    }
    return ZigzagLetter::DelOut;
}

inline Bidegree zigzag_step(const Bidegree& from, ZigzagLetter l) {
    switch (l) {
        case ZigzagLetter::DelOut: return {from.p + 1, from.q};
        case ZigzagLetter::DelbarOut: return {from.p, from.q + 1};
        case ZigzagLetter::DelIn: return {from.p - 1, from.q};
        case ZigzagLetter::DelbarIn: return {from.p, from.q - 1};
    }
    return from;
}

}  // namespace detail

/**
 * Chain of 1-dimensional dots connected by unit-entry arrows. The word is
 * consumed left to right; each letter attaches a fresh dot at whichever open
 * end of the chain legally accepts it. The first letter may be anything; a
 * letter no end accepts cannot be realized with d^2 = 0 and throws BadShape.
 */
inline DoubleComplex build_zigzag(const Bidegree& anchor,
                                  const std::vector<ZigzagLetter>& word) {
    if (word.empty()) throw BadShape("zigzag word must be nonempty");

    std::vector<detail::ZigzagDot> dots{{anchor}};
    std::vector<detail::ZigzagArrow> arrows;
    std::vector<detail::ZigzagEnd> ends;  // at most two

    auto attach = [&](int end_dot, ZigzagLetter l) -> int {
        const Bidegree target = detail::zigzag_step(dots[end_dot].at, l);
        dots.push_back({target});
        const int fresh = static_cast<int>(dots.size()) - 1;
        const bool is_del = (l == ZigzagLetter::DelOut || l == ZigzagLetter::DelIn);
        const bool outward = (l == ZigzagLetter::DelOut || l == ZigzagLetter::DelbarOut);
        if (outward) {
            arrows.push_back({end_dot, fresh, is_del});
        } else {
            arrows.push_back({fresh, end_dot, is_del});
        }
        return fresh;
    };

    for (std::size_t i = 0; i < word.size(); ++i) {
        const ZigzagLetter l = word[i];
        if (i == 0) {
            const int fresh = attach(0, l);
            ends.push_back({0, detail::closing_of(l)});
            ends.push_back({fresh, detail::continuation_of(l)});
            continue;
        }
        bool placed = false;
        for (auto& end : ends) {
            if (end.accepts != l) continue;
            const int fresh = attach(end.dot, l);
            end = {fresh, detail::continuation_of(l)};
            placed = true;
            break;
        }
        if (!placed)
            throw BadShape("zigzag letter " + std::to_string(i) + " (" + to_string(l) +
                           ") cannot extend the chain with d^2 = 0");
    }

    // dots at the same bidegree stack up in creation order
    DoubleComplex c("zigzag");
    std::map<Bidegree, int> counts;
    std::vector<int> local(dots.size());
    for (std::size_t i = 0; i < dots.size(); ++i) local[i] = counts[dots[i].at]++;
    for (const auto& [b, n] : counts) c.set_dim(b, n);

    std::map<Bidegree, Matrix> del_maps, delbar_maps;
    for (const auto& a : arrows) {
        const Bidegree src = dots[a.from].at;
        auto& slot = a.is_del ? del_maps : delbar_maps;
        auto it = slot.find(src);
        if (it == slot.end()) {
            const Bidegree dst = dots[a.to].at;
            it = slot.emplace(src, Matrix(counts[dst], counts[src])).first;
        }
        it->second.set(local[a.to], local[a.from], 1);
    }
    for (const auto& [b, m] : del_maps) c.set_del(b, m);
    for (const auto& [b, m] : delbar_maps) c.set_delbar(b, m);
    return c;
}

inline DoubleComplex build_zigzag(const GeneratorSpec& spec) {
    if (spec.kind != GeneratorSpec::Kind::Zigzag) throw BadSpec("spec kind is not zigzag");
    return build_zigzag(spec.placement, spec.zigzag_shape);
}

/// Block-diagonal sum. Per-bidegree dimensions add; maps sit in diagonal
/// blocks ordered by summand. Conjugation survives only when every nonempty
/// summand carries one.
inline DoubleComplex direct_sum(const std::vector<DoubleComplex>& parts) {
    DoubleComplex out("sum");
    std::string joined;
    bool all_conj = true;
    for (const auto& part : parts) {
        if (!joined.empty()) joined += "+";
        joined += part.name();
        if (part.total_dim() > 0 && !part.has_conj()) all_conj = false;
    }
    if (!joined.empty()) out.set_name(joined);

    std::map<Bidegree, int> offset;  // running dimension per bidegree
    struct Placement {
        const DoubleComplex* part;
        std::map<Bidegree, int> at;
    };
    std::vector<Placement> placed;
    for (const auto& part : parts) {
        Placement pl{&part, {}};
        for (const auto& [b, d] : part.dims()) {
            pl.at[b] = offset[b];
            offset[b] += d;
        }
        placed.push_back(std::move(pl));
    }
    for (const auto& [b, d] : offset) out.set_dim(b, d);

    auto place_maps = [&](auto getter, auto setter, auto target_of) {
        std::map<Bidegree, Matrix> maps;
        for (const auto& pl : placed) {
            for (const auto& [b, m] : getter(*pl.part)) {
                const Bidegree tgt = target_of(b);
                auto it = maps.find(b);
                if (it == maps.end())
                    it = maps.emplace(b, Matrix(out.dim(tgt), out.dim(b))).first;
                const int roff = pl.at.count(tgt) ? pl.at.at(tgt) : 0;
                const int coff = pl.at.at(b);
                for (const auto& [rc, v] : m.entries())
                    it->second.set(roff + rc.first, coff + rc.second, v);
            }
        }
        for (const auto& [b, m] : maps) setter(b, m);
    };

    place_maps([](const DoubleComplex& c) -> const auto& { return c.del_entries(); },
               [&](const Bidegree& b, const Matrix& m) { out.set_del(b, m); },
               [](const Bidegree& b) { return Bidegree{b.p + 1, b.q}; });
    place_maps([](const DoubleComplex& c) -> const auto& { return c.delbar_entries(); },
               [&](const Bidegree& b, const Matrix& m) { out.set_delbar(b, m); },
               [](const Bidegree& b) { return Bidegree{b.p, b.q + 1}; });
    if (all_conj) {
        place_maps([](const DoubleComplex& c) -> const auto& { return c.conj_entries(); },
                   [&](const Bidegree& b, const Matrix& m) { out.set_conj(b, m); },
                   [](const Bidegree& b) { return Bidegree{b.q, b.p}; });
    }

    // carry n when every part declares one
    std::optional<int> n;
    bool have_all = !parts.empty();
    for (const auto& part : parts) {
        if (!part.complex_dimension()) {
            have_all = false;
            break;
        }
        n = std::max(n.value_or(0), *part.complex_dimension());
    }
    if (have_all && n) out.set_complex_dimension(*n);
    return out;
}

/**
 * Conjugates every map by the given per-bidegree invertible matrices:
 * del'[p,q] = P[p+1,q] del[p,q] P[p,q]^{-1}, and likewise for delbar and
 * conj. Missing bidegrees act as the identity. The result is isomorphic to
 * the input, so every cohomology dimension is preserved.
 */
inline DoubleComplex apply_basis_change(const DoubleComplex& c,
                                        const std::map<Bidegree, Matrix>& change) {
    auto p_of = [&](const Bidegree& b) -> Matrix {
        auto it = change.find(b);
        if (it != change.end()) {
            if (it->second.rows() != c.dim(b) || it->second.cols() != c.dim(b))
                throw DimensionMismatch("basis change at " + to_string(b) + " has wrong shape");
            return it->second;
        }
        return Matrix::identity(c.dim(b));
    };

    DoubleComplex out(c.name());
    if (c.complex_dimension()) out.set_complex_dimension(*c.complex_dimension());
    for (const auto& [b, d] : c.dims()) out.set_dim(b, d);
    for (const auto& [b, m] : c.del_entries())
        out.set_del(b, p_of({b.p + 1, b.q}) * m * inverse(p_of(b)));
    for (const auto& [b, m] : c.delbar_entries())
        out.set_delbar(b, p_of({b.p, b.q + 1}) * m * inverse(p_of(b)));
    for (const auto& [b, m] : c.conj_entries())
        out.set_conj(b, p_of({b.q, b.p}) * m * inverse(p_of(b)));
    return out;
}

namespace detail {

/// Deterministic draw from [0, n). Plain modulo keeps the stream
/// reproducible across platforms; mt19937_64 output is standard-fixed.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline int draw_range(std::mt19937_64& rng, int lo, int hi) {  // inclusive
    return lo + static_cast<int>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline Matrix random_invertible(std::mt19937_64& rng, int n) {
    if (n == 0) return Matrix(0, 0);
    while (true) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set(i, j, draw_range(rng, -3, 3));
        if (rank(m) == n) return m;
    }
}

}  // namespace detail

/// Seeded change of coordinates: isomorphic complex with scrambled bases.
inline DoubleComplex random_basis_change(const DoubleComplex& c, std::uint64_t seed) {
    ensure_valid(c);
    std::mt19937_64 rng(seed);
    std::map<Bidegree, Matrix> change;
    for (const auto& [b, d] : c.dims()) change[b] = detail::random_invertible(rng, d);
    return apply_basis_change(c, change);
}

}  // namespace bicohom

#endif  // BICOHOM_GENERATORS_HPP
