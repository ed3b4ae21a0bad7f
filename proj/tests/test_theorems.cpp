#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "bicohom/model_zoo.hpp"
#include "bicohom/theorems.hpp"

using namespace bicohom;

namespace {

DoubleComplex wedge_out() {
    return build_zigzag({1, 1}, {ZigzagLetter::DelOut, ZigzagLetter::DelbarOut});
}

DoubleComplex wedge_in() {
    return build_zigzag({1, 1}, {ZigzagLetter::DelIn, ZigzagLetter::DelbarIn});
}

DoubleComplex bar_arrow() { return build_zigzag({1, 0}, {ZigzagLetter::DelbarOut}); }

/// A square anchored on the diagonal carries the swap real structure:
/// a -> a, del a <-> delbar a, and the top corner picks up a sign.
DoubleComplex conj_square(int t) {
    auto c = build_square(t, t);
    c.set_conj({t, t}, Matrix::from_rows({{1}}));
    c.set_conj({t + 1, t}, Matrix::from_rows({{1}}));
    c.set_conj({t, t + 1}, Matrix::from_rows({{1}}));
    c.set_conj({t + 1, t + 1}, Matrix::from_rows({{-1}}));
    return c;
}

bool has_entry(const TheoremVerdict& v, Theory t, Bidegree at, int actual) {
    return std::any_of(v.hypotheses.begin(), v.hypotheses.end(), [&](const HypothesisEntry& h) {
        return h.theory == t && h.at == at && h.actual == actual;
    });
}

std::vector<DoubleComplex> random_suite(int count, std::uint64_t master_seed) {
    std::mt19937_64 seeds(master_seed);
    std::vector<DoubleComplex> out;
    for (int i = 0; i < count; ++i) {
        GeneratorSpec spec;
        spec.kind = GeneratorSpec::Kind::RandomSum;
        spec.block_count = 6;
        spec.bounds = {0, 3, 0, 3};
        spec.seed = seeds();
        out.push_back(random_sum(spec).complex);
    }
    return out;
}

}  // namespace

TEST_CASE("comparison theorem on a dot is verified in both modes and parts") {
    const auto d = build_dot(1, 1);
    for (HypothesisMode m : {HypothesisMode::PaperLiteral, HypothesisMode::Direct}) {
        for (bool part_a : {true, false}) {
            const auto v = check_thm_1_1(d, 1, 1, part_a, m);
            CHECK(v.verdict == Verdict::Verified);
            CHECK(v.hypotheses_met);
        }
    }
}

TEST_CASE("the in-wedge shows the comparison hypotheses are sharp") {
    const auto v = check_thm_1_1(wedge_in(), 1, 1, true, HypothesisMode::Direct);
    CHECK(v.verdict == Verdict::HypothesesNotMet);
    // exactly the two step-level groups survive
    CHECK(has_entry(v, Theory::DolbeaultDel, {1, 0}, 1));
    CHECK(has_entry(v, Theory::DolbeaultDbar, {0, 1}, 1));
    // and the conclusion indeed fails: the map drops the class
    CHECK_FALSE(v.conclusion_holds);
}

TEST_CASE("comparison theorem is vacuous on acyclic input") {
    const auto v = check_thm_1_1(build_square(0, 0), 1, 1, true, HypothesisMode::Direct);
    CHECK(v.verdict == Verdict::Verified);
}

TEST_CASE("Aeppli vanishing checker") {
    SECTION("hypotheses fail on a dot") {
        const auto v = check_thm_1_2(build_dot(1, 1), 1, 1, HypothesisMode::Direct);
        CHECK(v.verdict == Verdict::HypothesesNotMet);
        CHECK(has_entry(v, Theory::DolbeaultDbar, {1, 1}, 1));
    }
    SECTION("verified on a square") {
        const auto v = check_thm_1_2(build_square(0, 0), 1, 1, HypothesisMode::Direct);
        CHECK(v.verdict == Verdict::Verified);
    }
    SECTION("violated on the out-wedge in both modes") {
        const auto z = thm_1_2_counterexample();
        for (HypothesisMode m : {HypothesisMode::Direct, HypothesisMode::PaperLiteral}) {
            const auto v = check_thm_1_2(z, 1, 1, m);
            CHECK(v.verdict == Verdict::Violation);
            CHECK(v.hypotheses_met);
            CHECK_FALSE(v.conclusion_holds);
        }
    }
}

TEST_CASE("q-complete Aeppli corollary") {
    SECTION("dot at the origin with n = 1") {
        auto d = build_dot(0, 0);
        d.set_complex_dimension(1);
        const auto verdicts = check_cor_1_3(d, 1, HypothesisMode::Direct);
        REQUIRE(verdicts.size() == 1);  // only (1,1)
        CHECK(verdicts[0].verdict == Verdict::Verified);
    }
    SECTION("iwasawa fails the gate at q = 1") {
        const auto verdicts = check_cor_1_3(iwasawa(), 1, HypothesisMode::Direct);
        REQUIRE(verdicts.size() == 9);
        for (const auto& v : verdicts) {
            CHECK(v.verdict == Verdict::HypothesesNotMet);
            CHECK(has_entry(v, Theory::DolbeaultDbar, {0, 1}, 2));
        }
    }
    SECTION("a square inside [1,2]^2 is verified") {
        auto sq = build_square(1, 1);
        sq.set_complex_dimension(2);
        const auto verdicts = check_cor_1_3(sq, 1, HypothesisMode::Direct);
        REQUIRE(verdicts.size() == 4);
        for (const auto& v : verdicts) CHECK(v.verdict == Verdict::Verified);
    }
    SECTION("n is required") {
        CHECK_THROWS_AS(check_cor_1_3(build_dot(0, 0), 1, HypothesisMode::Direct),
                        MissingDimension);
    }
}

TEST_CASE("unconditional chases never produce violations") {
    SECTION("documented small cases") {
        CHECK(check_prop_2_1(build_square(0, 0), 0, 1).verdict == Verdict::Verified);
        CHECK(check_prop_2_1(build_dot(1, 1), 1, 1).verdict == Verdict::HypothesesNotMet);
        CHECK(check_prop_2_2(build_square(0, 0), 1, 1).verdict == Verdict::Verified);
        const auto v = check_prop_2_2(wedge_out(), 1, 1);
        CHECK(v.verdict == Verdict::HypothesesNotMet);
        CHECK(has_entry(v, Theory::Aeppli, {1, 1}, 1));
    }
    SECTION("random sweep") {
        for (const auto& c : random_suite(10, 424242)) {
            const auto h = c.hull();
            if (!h) continue;
            for (int p = std::max(0, h->pmin - 1); p <= h->pmax + 1; ++p) {
                for (int q = std::max(1, h->qmin - 1); q <= h->qmax + 1; ++q) {
                    CHECK(check_prop_2_1(c, p, q).verdict != Verdict::Violation);
                    CHECK(check_prop_2_2(c, p, q).verdict != Verdict::Violation);
                }
            }
        }
    }
}

TEST_CASE("isomorphism corollary") {
    CHECK(check_cor_3_3(build_dot(1, 1), 1, 1, HypothesisMode::Direct).verdict ==
          Verdict::Verified);
    CHECK(check_cor_3_3(build_square(0, 0), 1, 1, HypothesisMode::Direct).verdict ==
          Verdict::Verified);
    const auto v = check_cor_3_3(bar_arrow(), 1, 1, HypothesisMode::Direct);
    CHECK(v.verdict == Verdict::HypothesesNotMet);
    CHECK(has_entry(v, Theory::DolbeaultDel, {1, 0}, 1));  // the step-2a group
    CHECK_FALSE(v.conclusion_holds);
}

TEST_CASE("isomorphism corollary covers the whole line through (p,q)") {
    // hypotheses met at (1,2) must force bijectivity at both (1,2) and (2,1)
    const auto iw = iwasawa();
    const auto v = check_cor_3_3(iw, 1, 2, HypothesisMode::Direct);
    CHECK_FALSE(v.hypotheses_met);  // the nilmanifold misses them everywhere
    const auto d = build_dot(2, 2);
    const auto ok = check_cor_3_3(d, 2, 2, HypothesisMode::Direct);
    CHECK(ok.verdict == Verdict::Verified);
}

TEST_CASE("Frolicher-based vanishing corollary") {
    CHECK(check_cor_3_4(build_square(0, 0), 1, 1).verdict == Verdict::Verified);
    const auto v = check_cor_3_4(build_dot(2, 0), 1, 1);
    CHECK(v.verdict == Verdict::HypothesesNotMet);
    CHECK(has_entry(v, Theory::DolbeaultDbar, {2, 0}, 1));  // degree-2 line entry
    SECTION("literal range warning for q > p") {
        const auto w = check_cor_3_4(build_square(0, 0), 1, 2);
        CHECK_FALSE(w.notes.empty());
        CHECK(check_cor_3_4(build_square(0, 0), 2, 1).notes.empty());
    }
    SECTION("the literal reading can be violated without conjugation") {
        // two dots beta(1,0) -> delbar beta(1,1): every dbar group on the
        // degree-2 line dies, the s >= 1 half of the degree-1 line is empty,
        // yet the Bott-Chern class at (1,1) survives. The dbar-only
        // hypotheses genuinely presuppose a real structure.
        const auto v = check_cor_3_4(bar_arrow(), 1, 1);
        CHECK(v.verdict == Verdict::Violation);
    }
    SECTION("no violation on complexes carrying a conjugation, q <= p") {
        const std::vector<DoubleComplex> models = {
            iwasawa(), random_basis_change(iwasawa(), 5),
            direct_sum({conj_square(0), conj_square(1), build_dot(1, 1)})};
        for (const auto& c : models) {
            REQUIRE(c.validate().valid());
            for (int p = 1; p <= 3; ++p)
                for (int q = 1; q <= p; ++q)
                    CHECK(check_cor_3_4(c, p, q).verdict != Verdict::Violation);
        }
    }
    SECTION("abstract violations are always explained by a missing direct-mode group") {
        for (const auto& c : random_suite(10, 515151)) {
            const auto h = c.hull();
            if (!h) continue;
            for (int p = 1; p <= h->pmax + 1; ++p) {
                for (int q = 1; q <= p; ++q) {
                    if (check_cor_3_4(c, p, q).verdict != Verdict::Violation) continue;
                    const auto direct = check_thm_1_1(c, p, q, true, HypothesisMode::Direct);
                    CHECK_FALSE(direct.hypotheses_met);
                }
            }
        }
    }
}

TEST_CASE("q-completeness predicate") {
    CHECK(is_cohomologically_q_complete(build_dot(1, 0), 1).holds);
    const auto r = is_cohomologically_q_complete(build_dot(0, 1), 1);
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0] == Bidegree{0, 1});
    const auto iw = is_cohomologically_q_complete(iwasawa(), 3);
    REQUIRE_FALSE(iw.holds);
    CHECK(std::find(iw.witnesses.begin(), iw.witnesses.end(), Bidegree{3, 3}) !=
          iw.witnesses.end());
    CHECK_THROWS_AS(is_cohomologically_q_complete(build_dot(0, 0), 0), BadQ);
}

TEST_CASE("bott-chern q-completeness predicate") {
    auto d = build_dot(1, 0);
    d.set_complex_dimension(2);
    CHECK(is_cohomologically_bc_q_complete(d, 1).holds);

    const auto iw = is_cohomologically_bc_q_complete(iwasawa(), 3);
    REQUIRE_FALSE(iw.holds);
    REQUIRE(iw.witnesses.size() == 1);
    CHECK(iw.witnesses[0] == Bidegree{3, 3});

    auto sq = build_square(1, 1);
    sq.set_complex_dimension(2);
    CHECK(is_cohomologically_bc_q_complete(sq, 1).holds);

    CHECK_THROWS_AS(is_cohomologically_bc_q_complete(build_dot(0, 0), 1), MissingDimension);
    CHECK_THROWS_AS(is_cohomologically_bc_q_complete(d, 3), BadQ);
}

TEST_CASE("monotonicity of both predicates in q") {
    const std::vector<DoubleComplex> models = {iwasawa(), stein_like(3),
                                               direct_sum({build_dot(0, 1), build_dot(2, 2)})};
    for (auto c : models) {
        if (!c.complex_dimension()) c.set_complex_dimension(3);
        const int n = *c.complex_dimension();
        for (int q = 1; q < n; ++q) {
            if (is_cohomologically_q_complete(c, q).holds)
                CHECK(is_cohomologically_q_complete(c, q + 1).holds);
            if (is_cohomologically_bc_q_complete(c, q).holds)
                CHECK(is_cohomologically_bc_q_complete(c, q + 1).holds);
        }
    }
}

TEST_CASE("completeness transfer corollary") {
    auto d = build_dot(1, 0);
    d.set_complex_dimension(2);
    CHECK(check_cor_3_5(d, 1).verdict == Verdict::Verified);
    CHECK(check_cor_3_5(iwasawa(), 1).verdict == Verdict::HypothesesNotMet);
    CHECK(check_cor_3_5(stein_like(2), 1).verdict == Verdict::Verified);
    CHECK_THROWS_AS(check_cor_3_5(build_dot(1, 0), 1), MissingDimension);
}

TEST_CASE("literal and direct modes agree in the presence of conjugation") {
    const auto iw = iwasawa();
    REQUIRE(iw.has_conj());
    for (int p = 1; p <= 3; ++p) {
        for (int q = 1; q <= 3; ++q) {
            for (bool part_a : {true, false}) {
                CHECK(check_thm_1_1(iw, p, q, part_a, HypothesisMode::PaperLiteral).verdict ==
                      check_thm_1_1(iw, p, q, part_a, HypothesisMode::Direct).verdict);
            }
            CHECK(check_thm_1_2(iw, p, q, HypothesisMode::PaperLiteral).verdict ==
                  check_thm_1_2(iw, p, q, HypothesisMode::Direct).verdict);
        }
    }
}

TEST_CASE("bidegree preconditions") {
    const auto d = build_dot(1, 1);
    CHECK_THROWS_AS(check_thm_1_1(d, 0, 1, true, HypothesisMode::Direct), BadBidegree);
    CHECK_THROWS_AS(check_thm_1_2(d, 1, 0, HypothesisMode::Direct), BadBidegree);
    CHECK_THROWS_AS(check_prop_2_1(d, 0, 0), BadBidegree);
    CHECK_THROWS_AS(check_prop_2_2(d, -1, 1), BadBidegree);
    CHECK_THROWS_AS(check_cor_3_3(d, 1, 0, HypothesisMode::Direct), BadBidegree);
    CHECK_THROWS_AS(check_cor_3_4(d, 0, 1), BadBidegree);
    // p = 0 is fine for the chases
    CHECK_NOTHROW(check_prop_2_1(d, 0, 1));
}
