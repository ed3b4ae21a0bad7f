#ifndef BICOHOM_COHOMOLOGY_HPP
#define BICOHOM_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "bicohom/double_complex.hpp"

namespace bicohom {

/// The four bigraded theories.
enum class Theory { DolbeaultDbar, DolbeaultDel, BottChern, Aeppli };

/// Map endpoints: a bigraded theory or the total-complex (de Rham) theory.
enum class TheorySpace { DolbeaultDbar, DolbeaultDel, BottChern, Aeppli, DeRham };

inline std::string to_string(Theory t) {
    switch (t) {
        case Theory::DolbeaultDbar: return "dbar";
        case Theory::DolbeaultDel: return "del";
        case Theory::BottChern: return "bc";
        case Theory::Aeppli: return "aeppli";
    }
    return "?";
}

inline std::string to_string(TheorySpace t) {
    switch (t) {
        case TheorySpace::DolbeaultDbar: return "dbar";
        case TheorySpace::DolbeaultDel: return "del";
        case TheorySpace::BottChern: return "bc";
        case TheorySpace::Aeppli: return "aeppli";
        case TheorySpace::DeRham: return "dr";
    }
    return "?";
}

inline TheorySpace to_space(Theory t) {
    switch (t) {
        case Theory::DolbeaultDbar: return TheorySpace::DolbeaultDbar;
        case Theory::DolbeaultDel: return TheorySpace::DolbeaultDel;
        case Theory::BottChern: return TheorySpace::BottChern;
        case Theory::Aeppli: return TheorySpace::Aeppli;
    }
    return TheorySpace::DolbeaultDbar;
}

/**
 * One cohomology group in fixed coordinates. For a bigraded theory the
 * location is a bidegree and representatives live in A^{p,q}; for de Rham
 * the location is the total degree k and representatives live in
 * T^k = (+)_{p+q=k} A^{p,q} with blocks ordered by ascending p.
 */
struct CohomologyGroup {
    std::optional<Theory> theory;  // nullopt = de Rham
    Bidegree at{};
    int degree = 0;
    int dimension = 0;
    Matrix representatives;  // ambient x dimension, canonical echelon choice
};

namespace detail {

/// ker/im data of one group: cocycle basis, boundary columns, and the
/// echelon-selected cocycle columns representing the quotient.
struct QuotientSpace {
    Matrix cocycles;
    Matrix boundaries;
    Matrix reps;

    int dim() const { return reps.cols(); }
};

inline QuotientSpace make_quotient(const Matrix& cocycles, const Matrix& boundaries) {
    QuotientSpace q{cocycles, boundaries, quotient_representatives(cocycles, boundaries)};
    return q;
}

inline QuotientSpace bigraded_quotient(const DoubleComplex& c, Theory t, int p, int q) {
    switch (t) {
        case Theory::DolbeaultDbar:
            return make_quotient(kernel_basis(c.delbar(p, q)), c.delbar(p, q - 1));
        case Theory::DolbeaultDel:
            return make_quotient(kernel_basis(c.del(p, q)), c.del(p - 1, q));
        case Theory::BottChern:
            return make_quotient(kernel_basis(stack_vertical(c.del(p, q), c.delbar(p, q))),
                                 c.del(p - 1, q) * c.delbar(p - 1, q - 1));
        case Theory::Aeppli:
            return make_quotient(kernel_basis(c.del(p, q + 1) * c.delbar(p, q)),
                                 hstack(c.del(p - 1, q), c.delbar(p, q - 1)));
    }
    throw std::logic_error("unreachable theory tag");
}

/// Block layout of the total space T^k, ascending p.
struct TotalLayout {
    std::vector<std::pair<Bidegree, int>> blocks;  // (bidegree, offset)
    int total = 0;

    int offset_of(const Bidegree& b) const {
        for (const auto& [bb, off] : blocks)
            if (bb == b) return off;
        return -1;
    }
};

inline TotalLayout total_layout(const DoubleComplex& c, int k) {
    TotalLayout l;
    for (const auto& [b, d] : c.dims()) {  // map order is ascending (p,q)
        if (b.p + b.q != k) continue;
        l.blocks.emplace_back(b, l.total);
        l.total += d;
    }
    return l;
}

/// d = del + delbar assembled blockwise as a map T^k -> T^{k+1}.
inline Matrix total_differential(const DoubleComplex& c, int k) {
    const TotalLayout src = total_layout(c, k);
    const TotalLayout tgt = total_layout(c, k + 1);
    Matrix d(tgt.total, src.total);
    for (const auto& [b, coff] : src.blocks) {
        const auto place = [&](const Matrix& m, const Bidegree& into) {
            const int roff = tgt.offset_of(into);
            if (roff < 0) return;
            for (const auto& [rc, v] : m.entries()) d.set(roff + rc.first, coff + rc.second, v);
        };
        place(c.del(b), {b.p + 1, b.q});
        place(c.delbar(b), {b.p, b.q + 1});
    }
    return d;
}

inline QuotientSpace de_rham_quotient(const DoubleComplex& c, int k) {
    return make_quotient(kernel_basis(total_differential(c, k)),
                         total_differential(c, k - 1));
}

/// Coordinates of the columns of v in the quotient basis of `pres`.
/// Columns must be cocycles of the presentation (inside span of cocycles).
inline Matrix quotient_coords(const QuotientSpace& pres, const Matrix& v) {
    const Matrix frame = hstack(pres.reps, pres.boundaries);
    const Matrix x = solve_in_span(frame, v);
    Matrix out(pres.dim(), v.cols());
    for (const auto& [rc, val] : x.entries())
        if (rc.first < pres.dim()) out.set(rc.first, rc.second, val);
    return out;
}

inline void check_cocycles(const Matrix& defining, const Matrix& reps, const char* what) {
    if (!(defining * reps).is_zero())
        throw std::logic_error(std::string("internal: ") + what +
                               " representatives are not cocycles");
}

}  // namespace detail

/**
 * H^{p,q} of the requested theory:
 *   dbar:   ker(delbar at (p,q)) / im(delbar from (p,q-1))
 *   del:    ker(del at (p,q)) / im(del from (p-1,q))
 *   bc:     (ker del ^ ker delbar at (p,q)) / im(del delbar from (p-1,q-1))
 *   aeppli: ker(del delbar at (p,q)) / (im del + im delbar)
 * Out-of-support bidegrees give the zero group, never an error.
 */
inline CohomologyGroup bigraded_cohomology(const DoubleComplex& c, Theory t, int p, int q) {
    ensure_valid(c);
    const auto pres = detail::bigraded_quotient(c, t, p, q);
    switch (t) {
        case Theory::DolbeaultDbar:
            detail::check_cocycles(c.delbar(p, q), pres.reps, "dbar");
            break;
        case Theory::DolbeaultDel:
            detail::check_cocycles(c.del(p, q), pres.reps, "del");
            break;
        case Theory::BottChern:
            detail::check_cocycles(stack_vertical(c.del(p, q), c.delbar(p, q)), pres.reps, "bc");
            break;
        case Theory::Aeppli:
            detail::check_cocycles(c.del(p, q + 1) * c.delbar(p, q), pres.reps, "aeppli");
            break;
    }
    return {t, {p, q}, 0, pres.dim(), pres.reps};
}

inline int bigraded_dim(const DoubleComplex& c, Theory t, int p, int q) {
    ensure_valid(c);
    return detail::bigraded_quotient(c, t, p, q).dim();
}

/// H^k of the total complex (d = del + delbar), blocks ordered ascending p.
inline CohomologyGroup de_rham(const DoubleComplex& c, int k) {
    ensure_valid(c);
    const auto pres = detail::de_rham_quotient(c, k);
    detail::check_cocycles(detail::total_differential(c, k), pres.reps, "de Rham");
    return {std::nullopt, {}, k, pres.dim(), pres.reps};
}

inline int betti_number(const DoubleComplex& c, int k) {
    ensure_valid(c);
    return detail::de_rham_quotient(c, k).dim();
}

struct GroupRef {
    TheorySpace space;
    Bidegree at{};  // bigraded location
    int degree = 0; // de Rham location
    int dimension = 0;

    std::string describe() const {
        if (space == TheorySpace::DeRham)
            return "H^" + std::to_string(degree) + "_dr";
        return "H_" + to_string(space) + to_string(at);
    }
};

/// A comparison map between two cohomology groups in their canonical bases.
struct NaturalMapReport {
    GroupRef source;
    GroupRef target;
    Matrix matrix;  // target.dimension x source.dimension
    int rank = 0;
    bool injective = false;
    bool surjective = false;
};

namespace detail {

inline NaturalMapReport finish_map(GroupRef src, GroupRef tgt, Matrix m) {
    NaturalMapReport r{std::move(src), std::move(tgt), std::move(m), 0, false, false};
    r.rank = bicohom::rank(r.matrix);
    r.injective = (r.rank == r.source.dimension);
    r.surjective = (r.rank == r.target.dimension);
    return r;
}

}  // namespace detail

/**
 * The comparison map H^{p,q}_bc -> H^{p+q}_dr: a Bott-Chern representative
 * is closed under both differentials, hence d-closed; embed it into the
 * total space and read its coordinates in the de Rham quotient basis. The
 * class does not depend on the chosen representative because im(del delbar)
 * lies inside im(d).
 */
inline NaturalMapReport natural_map_bc_to_dr(const DoubleComplex& c, int p, int q) {
    ensure_valid(c);
    const auto src = detail::bigraded_quotient(c, Theory::BottChern, p, q);
    const int k = p + q;
    const auto tgt = detail::de_rham_quotient(c, k);
    const auto layout = detail::total_layout(c, k);
    const int off = layout.offset_of({p, q});
    Matrix embedded(layout.total, src.dim());
    if (off >= 0) {
        for (const auto& [rc, v] : src.reps.entries())
            embedded.set(off + rc.first, rc.second, v);
    }
    return detail::finish_map({TheorySpace::BottChern, {p, q}, 0, src.dim()},
                              {TheorySpace::DeRham, {}, k, tgt.dim()},
                              detail::quotient_coords(tgt, embedded));
}

/**
 * Identity-on-representatives comparison maps of the standard diagram.
 * Supported pairs: bc->dbar, bc->del, bc->aeppli, dbar->aeppli,
 * del->aeppli, dr->aeppli. Anything else throws UnsupportedPair.
 */
inline NaturalMapReport natural_map(const DoubleComplex& c, TheorySpace source,
                                    TheorySpace target, int p, int q) {
    ensure_valid(c);
    const bool ok = (source == TheorySpace::BottChern &&
                     (target == TheorySpace::DolbeaultDbar ||
                      target == TheorySpace::DolbeaultDel ||
                      target == TheorySpace::Aeppli)) ||
                    (target == TheorySpace::Aeppli &&
                     (source == TheorySpace::DolbeaultDbar ||
                      source == TheorySpace::DolbeaultDel ||
                      source == TheorySpace::DeRham));
    if (!ok)
        throw UnsupportedPair("no natural map " + to_string(source) + " -> " +
                              to_string(target) + " is provided");

    if (source == TheorySpace::DeRham) {
        const int k = p + q;
        const auto src = detail::de_rham_quotient(c, k);
        const auto tgt = detail::bigraded_quotient(c, Theory::Aeppli, p, q);
        const auto layout = detail::total_layout(c, k);
        const int off = layout.offset_of({p, q});
        // project the (p,q) component of each total representative
        Matrix projected(c.dim(p, q), src.dim());
        if (off >= 0) {
            for (const auto& [rc, v] : src.reps.entries()) {
                if (rc.first >= off && rc.first < off + c.dim(p, q))
                    projected.set(rc.first - off, rc.second, v);
            }
        }
        return detail::finish_map({TheorySpace::DeRham, {}, k, src.dim()},
                                  {TheorySpace::Aeppli, {p, q}, 0, tgt.dim()},
                                  detail::quotient_coords(tgt, projected));
    }

    auto theory_of = [](TheorySpace s) {
        switch (s) {
            case TheorySpace::DolbeaultDbar: return Theory::DolbeaultDbar;
            case TheorySpace::DolbeaultDel: return Theory::DolbeaultDel;
            case TheorySpace::BottChern: return Theory::BottChern;
            case TheorySpace::Aeppli: return Theory::Aeppli;
            default: throw UnsupportedPair("de Rham is not a bigraded theory");
        }
    };
    const auto src = detail::bigraded_quotient(c, theory_of(source), p, q);
    const auto tgt = detail::bigraded_quotient(c, theory_of(target), p, q);
    return detail::finish_map({source, {p, q}, 0, src.dim()},
                              {target, {p, q}, 0, tgt.dim()},
                              detail::quotient_coords(tgt, src.reps));
}

struct DdbarLemmaResult {
    bool holds = true;
    std::optional<Bidegree> witness;  // first bidegree where bc -> aeppli drops rank
};

/// The del-delbar lemma probe: bc -> aeppli must be injective at every
/// supported bidegree.
inline DdbarLemmaResult ddbar_lemma_holds(const DoubleComplex& c) {
    ensure_valid(c);
    for (const auto& b : c.support()) {
        const auto r = natural_map(c, TheorySpace::BottChern, TheorySpace::Aeppli, b.p, b.q);
        if (!r.injective) return {false, b};
    }
    return {true, std::nullopt};
}

struct TableRow {
    Bidegree at;
    int h_dbar = 0, h_del = 0, h_bc = 0, h_a = 0;
};

struct DegreeRow {
    int k = 0;
    int betti = 0;
    int dbar_line_sum = 0;  // sum of h_dbar over r+s = k
};

struct Table {
    std::vector<TableRow> rows;       // rectangular hull, ascending (p,q)
    std::vector<DegreeRow> degrees;   // every total degree of the hull
};

/// All four bigraded dimensions over the rectangular hull plus the Betti
/// numbers and Frolicher line sums, in a fixed deterministic layout.
inline Table full_table(const DoubleComplex& c) {
    ensure_valid(c);
    Table t;
    const auto h = c.hull();
    if (!h) return t;
    for (int p = h->pmin; p <= h->pmax; ++p) {
        for (int q = h->qmin; q <= h->qmax; ++q) {
            TableRow row{{p, q},
                         bigraded_dim(c, Theory::DolbeaultDbar, p, q),
                         bigraded_dim(c, Theory::DolbeaultDel, p, q),
                         bigraded_dim(c, Theory::BottChern, p, q),
                         bigraded_dim(c, Theory::Aeppli, p, q)};
            t.rows.push_back(row);
        }
    }
    for (int k = h->pmin + h->qmin; k <= h->pmax + h->qmax; ++k) {
        DegreeRow row{k, betti_number(c, k), 0};
        for (const auto& r : t.rows)
            if (r.at.p + r.at.q == k) row.dbar_line_sum += r.h_dbar;
        t.degrees.push_back(row);
    }
    return t;
}

struct FrolicherReport {
    int k = 0;
    int betti = 0;
    int dbar_line_sum = 0;
};

/**
 * Checks b_k <= sum_{r+s=k} h_dbar^{r,s}. The inequality is a theorem for
 * every bounded double complex; a breach means broken linear algebra and
 * throws InequalityViolated.
 */
inline FrolicherReport frolicher_inequality_check(const DoubleComplex& c, int k) {
    ensure_valid(c);
    FrolicherReport r{k, betti_number(c, k), 0};
    if (const auto h = c.hull()) {
        for (int p = h->pmin; p <= h->pmax; ++p) {
            const int q = k - p;
            if (q < h->qmin || q > h->qmax) continue;
            r.dbar_line_sum += bigraded_dim(c, Theory::DolbeaultDbar, p, q);
        }
    }
    if (r.betti > r.dbar_line_sum)
        throw InequalityViolated("Frolicher inequality breached at degree " + std::to_string(k) +
                                 ": b=" + std::to_string(r.betti) +
                                 " > " + std::to_string(r.dbar_line_sum));
    return r;
}

}  // namespace bicohom

#endif  // BICOHOM_COHOMOLOGY_HPP
