#ifndef BICOHOM_MODEL_ZOO_HPP
#define BICOHOM_MODEL_ZOO_HPP

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bicohom/cohomology.hpp"
#include "bicohom/generators.hpp"

namespace bicohom {

namespace detail {

// ---- exterior algebra scaffolding for the Iwasawa model ----------------
//
// Generators 0,1,2 are the (1,0)-forms phi_1..phi_3; generators 3,4,5 are
// their conjugates (0,1)-forms. A monomial is an ascending id list; the
// basis of Lambda^{p,q} enumerates p-subsets of {0,1,2} and q-subsets of
// {3,4,5} lexicographically, phi block first.

using Mono = std::vector<int>;

inline void combinations(int first, int last, int take, Mono& cur, std::vector<Mono>& out) {
    if (take == 0) {
        out.push_back(cur);
        return;
    }
    for (int g = first; g <= last - take + 1; ++g) {
        cur.push_back(g);
        combinations(g + 1, last, take - 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Mono> iwasawa_basis(int p, int q) {
    std::vector<Mono> out;
    if (p < 0 || p > 3 || q < 0 || q > 3) return out;
    std::vector<Mono> left, right;
    Mono cur;
    combinations(0, 2, p, cur, left);
    combinations(3, 5, q, cur, right);
    for (const auto& i : left) {
        for (const auto& j : right) {
            Mono m = i;
            m.insert(m.end(), j.begin(), j.end());
            out.push_back(m);
        }
    }
    return out;
}

/// Sorts a generator list with the Koszul sign; zero (nullopt) on repeats.
inline std::optional<std::pair<int, Mono>> sort_mono(Mono m) {
    int sign = 1;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        for (std::size_t j = 0; j + 1 < m.size() - i; ++j) {
            if (m[j] == m[j + 1]) return std::nullopt;
            if (m[j] > m[j + 1]) {
                std::swap(m[j], m[j + 1]);
                sign = -sign;
            }
        }
    }
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        if (m[i] == m[i + 1]) return std::nullopt;
    return std::make_pair(sign, m);
}

/// Applies the derivation through one generator: d phi_3 = -phi_1 ^ phi_2
/// (id 2 -> ids {0,1}) or the conjugate rule (id 5 -> ids {3,4}), with the
/// Koszul sign for passing an odd derivation across j leading generators.
inline std::map<Mono, Rational> derive_mono(const Mono& m, int source_id, int repl_a,
                                            int repl_b) {
    std::map<Mono, Rational> out;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] != source_id) continue;
        Mono sub;
        sub.reserve(m.size() + 1);
        sub.insert(sub.end(), m.begin(), m.begin() + static_cast<long>(j));
        sub.push_back(repl_a);
        sub.push_back(repl_b);
        sub.insert(sub.end(), m.begin() + static_cast<long>(j) + 1, m.end());
        const auto sorted = sort_mono(std::move(sub));
        if (!sorted) continue;
        const Rational coeff = Rational((j % 2 == 0) ? -1 : 1) * sorted->first;
        out[sorted->second] += coeff;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    }
    return out;
}

inline Matrix iwasawa_operator(int p, int q, bool is_del) {
    const auto src = iwasawa_basis(p, q);
    const auto tgt = is_del ? iwasawa_basis(p + 1, q) : iwasawa_basis(p, q + 1);
    std::map<Mono, int> index;
    for (std::size_t i = 0; i < tgt.size(); ++i) index[tgt[i]] = static_cast<int>(i);
    Matrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
        const auto image = is_del ? derive_mono(src[c], 2, 0, 1) : derive_mono(src[c], 5, 3, 4);
        for (const auto& [mono, coeff] : image)
            m.set(index.at(mono), static_cast<int>(c), coeff);
    }
    return m;
}

}  // namespace detail

/**
 * The bigraded exterior algebra of the Iwasawa nilmanifold: generators
 * phi_1..phi_3 in bidegree (1,0) and their conjugates in (0,1), with
 * del phi_3 = -phi_1 ^ phi_2 and delbar conj(phi_3) = -conj(phi_1) ^
 * conj(phi_2), extended as derivations. 64-dimensional, n = 3, and it
 * carries the swap conjugation, so both hypothesis modes agree on it.
 */
inline DoubleComplex iwasawa() {
    DoubleComplex c("iwasawa");
    c.set_complex_dimension(3);
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            c.set_dim({p, q}, static_cast<int>(detail::iwasawa_basis(p, q).size()));
    for (int p = 0; p <= 3; ++p) {
        for (int q = 0; q <= 3; ++q) {
            if (p < 3) c.set_del({p, q}, detail::iwasawa_operator(p, q, true));
            if (q < 3) c.set_delbar({p, q}, detail::iwasawa_operator(p, q, false));
        }
    }
    // conjugation swaps the two generator blocks; moving q conjugate
    // generators across p plain ones costs (-1)^{pq}
    for (int p = 0; p <= 3; ++p) {
        for (int q = 0; q <= 3; ++q) {
            const auto src = detail::iwasawa_basis(p, q);
            const auto tgt = detail::iwasawa_basis(q, p);
            std::map<detail::Mono, int> index;
            for (std::size_t i = 0; i < tgt.size(); ++i) index[tgt[i]] = static_cast<int>(i);
            Matrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
            const Rational sign = ((p * q) % 2 == 0) ? 1 : -1;
            for (std::size_t i = 0; i < src.size(); ++i) {
                detail::Mono swapped;
                for (int g : src[i])
                    if (g >= 3) swapped.push_back(g - 3);
                for (int g : src[i])
                    if (g < 3) swapped.push_back(g + 3);
                m.set(index.at(swapped), static_cast<int>(i), sign);
            }
            c.set_conj({p, q}, m);
        }
    }
    return c;
}

/**
 * The three-dot wedge a(1,1) -> del a(2,1), delbar a(1,2). Its Aeppli group
 * at (1,1) survives although both Dolbeault groups there vanish, so the
 * Aeppli vanishing statement fails on it as an abstract bicomplex. The
 * statement's content is genuinely sheaf-theoretic.
 */
inline DoubleComplex thm_1_2_counterexample() {
    DoubleComplex c = build_zigzag({1, 1}, {ZigzagLetter::DelOut, ZigzagLetter::DelbarOut});
    c.set_name("thm12_counterexample");
    return c;
}

/**
 * A finite stand-in for a 1-complete (Stein-like) space: dbar-cohomology
 * concentrated in s = 0. Dots along the bottom row plus a pad of acyclic
 * squares; n is declared.
 */
inline DoubleComplex stein_like(int n) {
    if (n < 1 || n > 4) throw BadDimension("stein_like needs 1 <= n <= 4");
    std::vector<DoubleComplex> parts;
    for (int r = 0; r <= n; ++r) parts.push_back(build_dot(r, 0));
    for (int a = 0; a <= n - 1; ++a)
        for (int b = 0; b <= n - 1; ++b) parts.push_back(build_square(a, b));
    DoubleComplex c = direct_sum(parts);
    c.set_name("stein_like_" + std::to_string(n));
    c.set_complex_dimension(n);
    return c;
}

/**
 * Expected dimensions of a model with independently known answers. A
 * BlockSum table is the sum of the per-block tables of the generating
 * indecomposables, computed before any basis scrambling.
 */
struct OracleTable {
    enum class Provenance { BlockSum, HandComputed, CrossChecked };

    std::map<Bidegree, std::array<int, 4>> dims;  // theory-indexed: dbar, del, bc, aeppli
    std::map<int, int> betti;
    Provenance provenance = Provenance::BlockSum;

    static int theory_index(Theory t) { return static_cast<int>(t); }

    int dim(Theory t, const Bidegree& b) const {
        auto it = dims.find(b);
        return it == dims.end() ? 0
                                : it->second.at(static_cast<std::size_t>(theory_index(t)));
    }
    int betti_at(int k) const {
        auto it = betti.find(k);
        return it == betti.end() ? 0 : it->second;
    }

    void absorb(const DoubleComplex& block) {
        const Table t = full_table(block);
        for (const auto& row : t.rows) {
            auto& cell = dims[row.at];
            cell[0] += row.h_dbar;
            cell[1] += row.h_del;
            cell[2] += row.h_bc;
            cell[3] += row.h_a;
        }
        for (const auto& d : t.degrees) betti[d.k] += d.betti;
    }
};

struct RandomSumResult {
    DoubleComplex complex;  // scrambled coordinates
    OracleTable oracle;     // computed on the unscrambled blocks
};

namespace detail {

inline ZigzagLetter draw_letter(std::mt19937_64& rng,
                                const std::vector<ZigzagLetter>& options) {
    return options[draw(rng, options.size())];
}

/// Draws a random legal alternating word whose dots stay inside `bounds`,
/// mirroring the chain-end bookkeeping of build_zigzag.
inline std::vector<ZigzagLetter> random_zigzag_word(std::mt19937_64& rng, Bidegree anchor,
                                                    const Hull& bounds, int length) {
    std::vector<ZigzagLetter> word;
    struct End {
        Bidegree at;
        ZigzagLetter accepts;
    };
    std::vector<End> ends;
    for (int step = 0; step < length; ++step) {
        std::vector<ZigzagLetter> options;
        std::vector<int> which_end;
        if (word.empty()) {
            for (ZigzagLetter l : {ZigzagLetter::DelOut, ZigzagLetter::DelbarOut,
                                   ZigzagLetter::DelIn, ZigzagLetter::DelbarIn}) {
                if (bounds.contains(zigzag_step(anchor, l))) {
                    options.push_back(l);
                    which_end.push_back(-1);
                }
            }
        } else {
            for (std::size_t e = 0; e < ends.size(); ++e) {
                if (bounds.contains(zigzag_step(ends[e].at, ends[e].accepts))) {
                    options.push_back(ends[e].accepts);
                    which_end.push_back(static_cast<int>(e));
                }
            }
        }
        if (options.empty()) break;
        const auto pick = draw(rng, options.size());
        const ZigzagLetter l = options[pick];
        word.push_back(l);
        if (which_end[pick] < 0) {
            ends.push_back({anchor, closing_of(l)});
            ends.push_back({zigzag_step(anchor, l), continuation_of(l)});
        } else {
            auto& end = ends[static_cast<std::size_t>(which_end[pick])];
            end = {zigzag_step(end.at, l), continuation_of(l)};
        }
    }
    return word;
}

}  // namespace detail

/**
 * Seeded direct sum of dots, squares, and zigzags placed inside
 * spec.bounds, then pushed through a random change of basis. The returned
 * oracle is computed block by block on the unscrambled sum, so the central
 * test - scrambled dimensions equal oracle dimensions everywhere - compares
 * two genuinely different computations.
 */
inline RandomSumResult random_sum(const GeneratorSpec& spec) {
    if (spec.kind != GeneratorSpec::Kind::RandomSum) throw BadSpec("spec kind is not random_sum");
    if (spec.block_count < 0 || spec.block_count > 64)
        throw BadSpec("block_count must lie in [0,64]");
    const Hull& b = spec.bounds;
    if (b.pmin > b.pmax || b.qmin > b.qmax) throw BadSpec("empty bounds rectangle");
    if (b.pmin < 0 || b.pmax > 6 || b.qmin < 0 || b.qmax > 6)
        throw BadSpec("bounds must lie inside [0,6]^2");

    std::mt19937_64 rng(spec.seed);
    std::vector<DoubleComplex> blocks;
    OracleTable oracle;
    for (int i = 0; i < spec.block_count; ++i) {
        DoubleComplex block;
        const auto kind = detail::draw(rng, 10);
        const bool square_fits = b.pmax > b.pmin && b.qmax > b.qmin;
        if (kind < 3) {
            block = build_dot(detail::draw_range(rng, b.pmin, b.pmax),
                              detail::draw_range(rng, b.qmin, b.qmax));
        } else if (kind < 6 && square_fits) {
            block = build_square(detail::draw_range(rng, b.pmin, b.pmax - 1),
                                 detail::draw_range(rng, b.qmin, b.qmax - 1));
        } else {
            const Bidegree anchor{detail::draw_range(rng, b.pmin, b.pmax),
                                  detail::draw_range(rng, b.qmin, b.qmax)};
            const int length = detail::draw_range(rng, 1, 4);
            const auto word = detail::random_zigzag_word(rng, anchor, b, length);
            block = word.empty() ? build_dot(anchor.p, anchor.q) : build_zigzag(anchor, word);
        }
        oracle.absorb(block);
        blocks.push_back(std::move(block));
    }
    DoubleComplex sum = direct_sum(blocks);
    sum.set_name("random_sum_" + std::to_string(spec.seed));
    const std::uint64_t scramble_seed = rng();
    DoubleComplex scrambled = random_basis_change(sum, scramble_seed);
    return {std::move(scrambled), std::move(oracle)};
}

}  // namespace bicohom

#endif  // BICOHOM_MODEL_ZOO_HPP
