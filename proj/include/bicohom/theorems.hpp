#ifndef BICOHOM_THEOREMS_HPP
#define BICOHOM_THEOREMS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bicohom/cohomology.hpp"

namespace bicohom {

enum class StatementId {
    Thm11A,
    Thm11B,
    Thm12,
    Cor13,
    Prop21,
    Prop22,
    Cor33,
    Cor34,
    Cor35
};

inline std::string to_string(StatementId s) {
    switch (s) {
        case StatementId::Thm11A: return "thm1.1a";
        case StatementId::Thm11B: return "thm1.1b";
        case StatementId::Thm12: return "thm1.2";
        case StatementId::Cor13: return "cor1.3";
        case StatementId::Prop21: return "prop2.1";
        case StatementId::Prop22: return "prop2.2";
        case StatementId::Cor33: return "cor3.3";
        case StatementId::Cor34: return "cor3.4";
        case StatementId::Cor35: return "cor3.5";
    }
    return "?";
}

/**
 * Two readings of each statement's hypotheses.
 *
 * PaperLiteral takes the stated Dolbeault-dbar vanishing sums, which
 * presuppose a real structure identifying H_del with conjugate H_dbar
 * groups. Direct lists exactly the groups the underlying argument consumes,
 * mixing H_del and H_dbar, and is the honest reading on abstract complexes
 * without conjugation.
 */
enum class HypothesisMode { PaperLiteral, Direct };

inline std::string to_string(HypothesisMode m) {
    return m == HypothesisMode::PaperLiteral ? "literal" : "direct";
}

enum class Verdict { HypothesesNotMet, Verified, Violation };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::HypothesesNotMet: return "HYPOTHESES_NOT_MET";
        case Verdict::Verified: return "VERIFIED";
        case Verdict::Violation: return "VIOLATION";
    }
    return "?";
}

/// One required vanishing: the named group must be zero; `actual` is its
/// computed dimension.
struct HypothesisEntry {
    Theory theory;
    Bidegree at;
    int actual = 0;

    std::string describe() const {
        return "h_" + to_string(theory) + to_string(at) + " = " + std::to_string(actual);
    }
};

/**
 * Structured outcome of one checker run. The conclusion is evaluated even
 * when the hypotheses fail, because a false conclusion under failed
 * hypotheses is exactly what demonstrates hypothesis sharpness.
 */
struct TheoremVerdict {
    StatementId statement{};
    std::optional<HypothesisMode> mode;  // absent for mode-free statements
    Bidegree at{};
    std::vector<HypothesisEntry> hypotheses;
    bool hypotheses_met = false;
    std::string conclusion;
    bool conclusion_holds = false;
    Verdict verdict = Verdict::HypothesesNotMet;
    std::vector<std::string> notes;
};

namespace detail {

inline HypothesisEntry entry(const DoubleComplex& c, Theory t, int p, int q) {
    return {t, {p, q}, bigraded_dim(c, t, p, q)};
}

/// Hypothesis ranges sweep the hull plus a one-cell margin; outside it all
/// groups are provably zero.
inline Hull sweep_region(const DoubleComplex& c) {
    const auto h = c.hull();
    if (!h) return {0, -1, 0, -1};  // empty sweep
    return h->grown(1);
}

/// Entries h_dbar^{r,s} for r+s = line and s >= smin, restricted to the
/// sweep region, ascending r.
inline void add_dbar_line(const DoubleComplex& c, std::vector<HypothesisEntry>& out, int line,
                          int smin) {
    const Hull sweep = sweep_region(c);
    for (int r = sweep.pmin; r <= sweep.pmax; ++r) {
        const int s = line - r;
        if (s < smin || s < sweep.qmin || s > sweep.qmax) continue;
        out.push_back(entry(c, Theory::DolbeaultDbar, r, s));
    }
}

inline bool all_zero(const std::vector<HypothesisEntry>& hs) {
    return std::all_of(hs.begin(), hs.end(),
                       [](const HypothesisEntry& h) { return h.actual == 0; });
}

inline void finish(TheoremVerdict& v) {
    v.hypotheses_met = all_zero(v.hypotheses);
    v.verdict = !v.hypotheses_met ? Verdict::HypothesesNotMet
                : v.conclusion_holds ? Verdict::Verified
                                     : Verdict::Violation;
}

inline std::string describe_map(const NaturalMapReport& r) {
    return r.source.describe() + " -> " + r.target.describe() + " [dim " +
           std::to_string(r.source.dimension) + " -> " + std::to_string(r.target.dimension) +
           ", rank " + std::to_string(r.rank) + "]";
}

/// Proof-level vanishing list for one part of the comparison theorem.
inline void direct_hypotheses_1_1(const DoubleComplex& c, std::vector<HypothesisEntry>& out,
                                  int p, int q, bool part_a) {
    if (part_a) {
        out.push_back(entry(c, Theory::DolbeaultDel, p, q - 1));
        for (int l = 0; l <= q - 2; ++l)
            out.push_back(entry(c, Theory::DolbeaultDel, p + q - l - 1, l));
        for (int l = 0; l <= p - 1; ++l)
            out.push_back(entry(c, Theory::DolbeaultDbar, l, p + q - l - 1));
    } else {
        out.push_back(entry(c, Theory::DolbeaultDel, p + 1, q - 1));
        for (int l = 0; l <= q - 2; ++l)
            out.push_back(entry(c, Theory::DolbeaultDel, p + q - l, l));
        for (int l = 0; l <= p - 1; ++l)
            out.push_back(entry(c, Theory::DolbeaultDbar, l, p + q - l));
    }
}

inline void dedupe_entries(std::vector<HypothesisEntry>& hs) {
    std::sort(hs.begin(), hs.end(), [](const HypothesisEntry& a, const HypothesisEntry& b) {
        if (a.theory != b.theory) return a.theory < b.theory;
        return a.at < b.at;
    });
    hs.erase(std::unique(hs.begin(), hs.end(),
                         [](const HypothesisEntry& a, const HypothesisEntry& b) {
                             return a.theory == b.theory && a.at == b.at;
                         }),
             hs.end());
}

inline void require_positive(int p, int q) {
    if (p < 1 || q < 1)
        throw BadBidegree("statement requires p >= 1 and q >= 1, got " +
                          to_string(Bidegree{p, q}));
}

}  // namespace detail

/**
 * Comparison of Bott-Chern with de Rham cohomology. Part a: under the
 * degree p+q-1 Dolbeault vanishing the natural map H_bc^{p,q} -> H^{p+q}_dr
 * is injective; part b: under the degree p+q vanishing it is surjective.
 */
inline TheoremVerdict check_thm_1_1(const DoubleComplex& c, int p, int q, bool part_a,
                                    HypothesisMode mode) {
    ensure_valid(c);
    detail::require_positive(p, q);
    TheoremVerdict v;
    v.statement = part_a ? StatementId::Thm11A : StatementId::Thm11B;
    v.mode = mode;
    v.at = {p, q};
    if (mode == HypothesisMode::PaperLiteral) {
        if (part_a) {
            detail::add_dbar_line(c, v.hypotheses, p + q - 1, std::min(p, q));
        } else {
            detail::add_dbar_line(c, v.hypotheses, p + q, std::min(p, q) + 1);
        }
    } else {
        detail::direct_hypotheses_1_1(c, v.hypotheses, p, q, part_a);
    }
    const auto map = natural_map_bc_to_dr(c, p, q);
    v.conclusion = detail::describe_map(map) + (part_a ? " injective" : " surjective");
    v.conclusion_holds = part_a ? map.injective : map.surjective;
    detail::finish(v);
    return v;
}

/**
 * The Aeppli vanishing statement: if H_dbar^{p,q} and its partner group
 * vanish then H_aeppli^{p,q} vanishes. A Violation verdict is a legal
 * outcome here: the statement is not a formal consequence of the bicomplex
 * identities, and the three-dot wedge witnesses that.
 */
inline TheoremVerdict check_thm_1_2(const DoubleComplex& c, int p, int q, HypothesisMode mode) {
    ensure_valid(c);
    detail::require_positive(p, q);
    TheoremVerdict v;
    v.statement = StatementId::Thm12;
    v.mode = mode;
    v.at = {p, q};
    v.hypotheses.push_back(detail::entry(c, Theory::DolbeaultDbar, p, q));
    if (mode == HypothesisMode::PaperLiteral) {
        v.hypotheses.push_back(detail::entry(c, Theory::DolbeaultDbar, q, p));
    } else {
        v.hypotheses.push_back(detail::entry(c, Theory::DolbeaultDel, p, q));
    }
    detail::dedupe_entries(v.hypotheses);
    const int actual = bigraded_dim(c, Theory::Aeppli, p, q);
    v.conclusion = "h_aeppli" + to_string(Bidegree{p, q}) + " = " + std::to_string(actual) +
                   " (required 0)";
    v.conclusion_holds = (actual == 0);
    detail::finish(v);
    return v;
}

struct PredicateReport {
    bool holds = true;
    std::vector<Bidegree> witnesses;  // every failing bidegree, ascending
};

/// H_dbar^{r,s} = 0 for every supported (r,s) with s >= q.
inline PredicateReport is_cohomologically_q_complete(const DoubleComplex& c, int q) {
    ensure_valid(c);
    if (q < 1) throw BadQ("q must be a positive integer");
    PredicateReport r;
    if (const auto h = c.hull()) {
        for (int p = h->pmin; p <= h->pmax; ++p) {
            for (int s = std::max(q, h->qmin); s <= h->qmax; ++s) {
                if (bigraded_dim(c, Theory::DolbeaultDbar, p, s) != 0)
                    r.witnesses.push_back({p, s});
            }
        }
    }
    std::sort(r.witnesses.begin(), r.witnesses.end());
    r.holds = r.witnesses.empty();
    return r;
}

/// H_bc^{r,s} = 0 for all positive r,s with r+s >= n+q. Requires the
/// declared complex dimension n and 1 <= q <= n.
inline PredicateReport is_cohomologically_bc_q_complete(const DoubleComplex& c, int q) {
    ensure_valid(c);
    const auto n = c.complex_dimension();
    if (!n) throw MissingDimension("predicate needs the declared complex dimension n");
    if (q < 1 || q > *n) throw BadQ("q must satisfy 1 <= q <= n");
    PredicateReport r;
    for (int p = 1; p <= *n; ++p) {
        for (int s = 1; s <= *n; ++s) {
            if (p + s < *n + q) continue;
            if (bigraded_dim(c, Theory::BottChern, p, s) != 0) r.witnesses.push_back({p, s});
        }
    }
    r.holds = r.witnesses.empty();
    return r;
}

namespace detail {

inline void add_q_complete_gate(const DoubleComplex& c, std::vector<HypothesisEntry>& out,
                                int q) {
    if (const auto h = c.hull()) {
        for (int p = h->pmin; p <= h->pmax; ++p) {
            for (int s = std::max(q, h->qmin); s <= h->qmax; ++s) {
                out.push_back(entry(c, Theory::DolbeaultDbar, p, s));
            }
        }
    }
}

}  // namespace detail

/**
 * Aeppli vanishing on a cohomologically q-complete complex: per-bidegree
 * verdicts for every (r,s) in [1,n]^2 with min{r,s} >= q. The q-complete
 * gate is shared by all verdicts; Direct mode adds the h_del vanishing the
 * argument consumes at each target bidegree.
 */
inline std::vector<TheoremVerdict> check_cor_1_3(const DoubleComplex& c, int q,
                                                 HypothesisMode mode) {
    ensure_valid(c);
    const auto n = c.complex_dimension();
    if (!n) throw MissingDimension("cor1.3 needs the declared complex dimension n");
    if (q < 1) throw BadQ("q must be a positive integer");
    std::vector<HypothesisEntry> gate;
    detail::add_q_complete_gate(c, gate, q);

    std::vector<TheoremVerdict> out;
    for (int r = 1; r <= *n; ++r) {
        for (int s = 1; s <= *n; ++s) {
            if (std::min(r, s) < q) continue;
            TheoremVerdict v;
            v.statement = StatementId::Cor13;
            v.mode = mode;
            v.at = {r, s};
            v.hypotheses = gate;
            if (mode == HypothesisMode::Direct)
                v.hypotheses.push_back(detail::entry(c, Theory::DolbeaultDel, r, s));
            const int actual = bigraded_dim(c, Theory::Aeppli, r, s);
            v.conclusion = "h_aeppli" + to_string(Bidegree{r, s}) + " = " +
                           std::to_string(actual) + " (required 0)";
            v.conclusion_holds = (actual == 0);
            detail::finish(v);
            out.push_back(std::move(v));
        }
    }
    return out;
}

/**
 * Unconditional diagram chase: vanishing Bott-Chern at (p,q) and (p+1,q)
 * forces vanishing H_dbar^{p,q}. Holds on every valid double complex, so a
 * Violation verdict means the linear algebra is broken.
 */
inline TheoremVerdict check_prop_2_1(const DoubleComplex& c, int p, int q) {
    ensure_valid(c);
    if (q < 1 || p < 0) throw BadBidegree("prop2.1 requires p >= 0 and q >= 1");
    TheoremVerdict v;
    v.statement = StatementId::Prop21;
    v.at = {p, q};
    v.hypotheses.push_back(detail::entry(c, Theory::BottChern, p, q));
    v.hypotheses.push_back(detail::entry(c, Theory::BottChern, p + 1, q));
    const int actual = bigraded_dim(c, Theory::DolbeaultDbar, p, q);
    v.conclusion =
        "h_dbar" + to_string(Bidegree{p, q}) + " = " + std::to_string(actual) + " (required 0)";
    v.conclusion_holds = (actual == 0);
    detail::finish(v);
    return v;
}

/// Unconditional twin of the previous chase, with Aeppli hypotheses at
/// (p-1,q) and (p,q).
inline TheoremVerdict check_prop_2_2(const DoubleComplex& c, int p, int q) {
    ensure_valid(c);
    if (q < 1 || p < 0) throw BadBidegree("prop2.2 requires p >= 0 and q >= 1");
    TheoremVerdict v;
    v.statement = StatementId::Prop22;
    v.at = {p, q};
    v.hypotheses.push_back(detail::entry(c, Theory::Aeppli, p - 1, q));
    v.hypotheses.push_back(detail::entry(c, Theory::Aeppli, p, q));
    const int actual = bigraded_dim(c, Theory::DolbeaultDbar, p, q);
    v.conclusion =
        "h_dbar" + to_string(Bidegree{p, q}) + " = " + std::to_string(actual) + " (required 0)";
    v.conclusion_holds = (actual == 0);
    detail::finish(v);
    return v;
}

/**
 * Natural isomorphism range: under the combined part-a and part-b
 * hypotheses, H_bc^{h,k} -> H^{p+q}_dr is bijective for every (h,k) on the
 * line p+q with min{p,q} <= h,k <= max{p,q}. In Direct mode the hypothesis
 * list is the union of the proof-level lists over that whole range.
 */
inline TheoremVerdict check_cor_3_3(const DoubleComplex& c, int p, int q, HypothesisMode mode) {
    ensure_valid(c);
    detail::require_positive(p, q);
    TheoremVerdict v;
    v.statement = StatementId::Cor33;
    v.mode = mode;
    v.at = {p, q};
    const int lo = std::min(p, q), hi = std::max(p, q);

    if (mode == HypothesisMode::PaperLiteral) {
        detail::add_dbar_line(c, v.hypotheses, p + q - 1, lo);
        detail::add_dbar_line(c, v.hypotheses, p + q, lo + 1);
    } else {
        for (int h = lo; h <= hi; ++h) {
            const int k = p + q - h;
            detail::direct_hypotheses_1_1(c, v.hypotheses, h, k, true);
            detail::direct_hypotheses_1_1(c, v.hypotheses, h, k, false);
        }
    }
    detail::dedupe_entries(v.hypotheses);

    bool all = true;
    for (int h = lo; h <= hi; ++h) {
        const int k = p + q - h;
        const auto map = natural_map_bc_to_dr(c, h, k);
        if (!(map.injective && map.surjective)) {
            all = false;
            v.notes.push_back("not bijective: " + detail::describe_map(map));
        }
    }
    v.conclusion = "bc -> dr bijective at every (h,k) with h+k = " + std::to_string(p + q) +
                   ", " + std::to_string(lo) + " <= h,k <= " + std::to_string(hi);
    v.conclusion_holds = all;
    detail::finish(v);
    return v;
}

/**
 * Bott-Chern vanishing from Dolbeault vanishing: the degree p+q-1 line with
 * s >= q and the full degree p+q line. The first range is taken literally
 * (s >= q); for q > p that is weaker than the comparison theorem's
 * s >= min{p,q}, which the report flags.
 */
inline TheoremVerdict check_cor_3_4(const DoubleComplex& c, int p, int q) {
    ensure_valid(c);
    detail::require_positive(p, q);
    TheoremVerdict v;
    v.statement = StatementId::Cor34;
    v.at = {p, q};
    detail::add_dbar_line(c, v.hypotheses, p + q - 1, q);
    const Hull sweep = detail::sweep_region(c);
    detail::add_dbar_line(c, v.hypotheses, p + q, sweep.qmin);
    detail::dedupe_entries(v.hypotheses);
    if (q > p)
        v.notes.push_back("literal range s >= q is weaker than s >= min{p,q} when q > p");
    const int actual = bigraded_dim(c, Theory::BottChern, p, q);
    v.conclusion =
        "h_bc" + to_string(Bidegree{p, q}) + " = " + std::to_string(actual) + " (required 0)";
    v.conclusion_holds = (actual == 0);
    detail::finish(v);
    return v;
}

/// Cohomologically q-complete implies cohomologically Bott-Chern q-complete.
inline TheoremVerdict check_cor_3_5(const DoubleComplex& c, int q) {
    ensure_valid(c);
    const auto n = c.complex_dimension();
    if (!n) throw MissingDimension("cor3.5 needs the declared complex dimension n");
    if (q < 1 || q > *n) throw BadQ("q must satisfy 1 <= q <= n");
    TheoremVerdict v;
    v.statement = StatementId::Cor35;
    v.at = {q, q};  // statement is about q, not a bidegree; recorded as (q,q)
    detail::add_q_complete_gate(c, v.hypotheses, q);
    const auto bc = is_cohomologically_bc_q_complete(c, q);
    v.conclusion = "h_bc^{r,s} = 0 for all r,s >= 1 with r+s >= " + std::to_string(*n + q);
    v.conclusion_holds = bc.holds;
    for (const auto& w : bc.witnesses)
        v.notes.push_back("bc class survives at " + to_string(w));
    detail::finish(v);
    return v;
}

}  // namespace bicohom

#endif  // BICOHOM_THEOREMS_HPP
