#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <sstream>

#include "bicohom/generators.hpp"
#include "bicohom/io.hpp"
#include "bicohom/model_zoo.hpp"

using namespace bicohom;

namespace {

/// Three dots in a del-chain with both arrows nonzero: breaks del o del = 0.
DoubleComplex del_squared_fixture() {
    DoubleComplex c("del_squared");
    c.set_dim({0, 0}, 1);
    c.set_dim({1, 0}, 1);
    c.set_dim({2, 0}, 1);
    c.set_del({0, 0}, Matrix::from_rows({{1}}));
    c.set_del({1, 0}, Matrix::from_rows({{1}}));
    return c;
}

}  // namespace

TEST_CASE("dots validate at every placement") {
    for (int p = 0; p <= 8; ++p)
        for (int q = 0; q <= 8; ++q) CHECK(build_dot(p, q).validate().valid());
    const auto d = build_dot(1, 1);
    CHECK(d.dim(1, 1) == 1);
    CHECK(d.total_dim() == 1);
}

TEST_CASE("a single arrow is a valid complex") {
    DoubleComplex c("arrow");
    c.set_dim({0, 0}, 1);
    c.set_dim({1, 0}, 1);
    c.set_del({0, 0}, Matrix::from_rows({{1}}));
    CHECK(c.validate().valid());
}

TEST_CASE("del squared violation is reported at the source bidegree") {
    const auto report = del_squared_fixture().validate();
    REQUIRE_FALSE(report.valid());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == Violation::Kind::DelDel);
    CHECK(report.violations[0].at == Bidegree{0, 0});
}

TEST_CASE("anticommutation violation is caught") {
    // a square with +1 on all four arrows commutes instead of anticommuting
    DoubleComplex c("bad_square");
    for (const auto& b : {Bidegree{0, 0}, {1, 0}, {0, 1}, {1, 1}}) c.set_dim(b, 1);
    c.set_del({0, 0}, Matrix::from_rows({{1}}));
    c.set_delbar({0, 0}, Matrix::from_rows({{1}}));
    c.set_delbar({1, 0}, Matrix::from_rows({{1}}));
    c.set_del({0, 1}, Matrix::from_rows({{1}}));
    const auto report = c.validate();
    REQUIRE_FALSE(report.valid());
    CHECK(report.violations[0].kind == Violation::Kind::Anticommute);
    CHECK(report.violations[0].at == Bidegree{0, 0});
}

TEST_CASE("squares are valid everywhere and have the documented corners") {
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) CHECK(build_square(p, q).validate().valid());
    const auto sq = build_square(0, 0);
    CHECK(sq.dim(0, 0) == 1);
    CHECK(sq.dim(1, 0) == 1);
    CHECK(sq.dim(0, 1) == 1);
    CHECK(sq.dim(1, 1) == 1);
    CHECK(sq.del(0, 1) == Matrix::from_rows({{-1}}));
}

TEST_CASE("zigzag words build the documented chains") {
    SECTION("wedge out of the anchor") {
        const auto z = build_zigzag({1, 1}, {ZigzagLetter::DelOut, ZigzagLetter::DelbarOut});
        CHECK(z.validate().valid());
        CHECK(z.dim(1, 1) == 1);
        CHECK(z.dim(2, 1) == 1);
        CHECK(z.dim(1, 2) == 1);
        CHECK(z.total_dim() == 3);
    }
    SECTION("wedge into the anchor") {
        const auto z = build_zigzag({1, 1}, {ZigzagLetter::DelIn, ZigzagLetter::DelbarIn});
        CHECK(z.validate().valid());
        CHECK(z.dim(0, 1) == 1);
        CHECK(z.dim(1, 0) == 1);
        CHECK(z.dim(1, 1) == 1);
        CHECK(z.del(0, 1) == Matrix::from_rows({{1}}));
        CHECK(z.delbar(1, 0) == Matrix::from_rows({{1}}));
    }
    SECTION("single arrow") {
        const auto z = build_zigzag({1, 0}, {ZigzagLetter::DelbarOut});
        CHECK(z.validate().valid());
        CHECK(z.dim(1, 0) == 1);
        CHECK(z.dim(1, 1) == 1);
    }
    SECTION("length-4 staircase") {
        const auto z = build_zigzag({1, 1}, {ZigzagLetter::DelOut, ZigzagLetter::DelbarIn,
                                             ZigzagLetter::DelOut, ZigzagLetter::DelbarIn});
        CHECK(z.validate().valid());
        CHECK(z.total_dim() == 5);
    }
}

TEST_CASE("illegal zigzag words throw BadShape") {
    CHECK_THROWS_AS(build_zigzag({1, 1}, {}), BadShape);
    CHECK_THROWS_AS(build_zigzag({1, 1}, {ZigzagLetter::DelOut, ZigzagLetter::DelOut}),
                    BadShape);
    CHECK_THROWS_AS(build_zigzag({1, 1}, {ZigzagLetter::DelOut, ZigzagLetter::DelIn}),
                    BadShape);
    CHECK_THROWS_AS(
        build_zigzag({0, 0}, {ZigzagLetter::DelbarOut, ZigzagLetter::DelIn,
                              ZigzagLetter::DelbarIn, ZigzagLetter::DelbarIn}),
        BadShape);
}

TEST_CASE("direct sums are blockwise") {
    const auto two_dots = direct_sum({build_dot(0, 0), build_dot(0, 0)});
    CHECK(two_dots.dim(0, 0) == 2);
    CHECK(two_dots.validate().valid());

    const auto with_empty = direct_sum({build_dot(2, 1), DoubleComplex("empty")});
    CHECK(with_empty.dims() == build_dot(2, 1).dims());

    const auto mixed = direct_sum(
        {build_square(0, 0), build_zigzag({1, 1}, {ZigzagLetter::DelOut, ZigzagLetter::DelbarOut})});
    CHECK(mixed.validate().valid());
    CHECK(mixed.total_dim() == 7);
    CHECK(mixed.dim(1, 1) == 2);
}

TEST_CASE("conjugation laws are validated") {
    // sigma swaps two dots at (1,0) and (0,1) and intertwines the arrows
    DoubleComplex c("conj_pair");
    c.set_dim({1, 0}, 1);
    c.set_dim({0, 1}, 1);
    c.set_conj({1, 0}, Matrix::from_rows({{1}}));
    c.set_conj({0, 1}, Matrix::from_rows({{1}}));
    CHECK(c.validate().valid());

    DoubleComplex broken = c;
    broken.set_conj({1, 0}, Matrix::from_rows({{2}}));
    const auto report = broken.validate();
    REQUIRE_FALSE(report.valid());
    CHECK(std::any_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
        return v.kind == Violation::Kind::ConjInvolution;
    }));
}

TEST_CASE("declared dimension restricts the support") {
    DoubleComplex c("out_of_range");
    c.set_dim({2, 0}, 1);
    c.set_complex_dimension(1);
    const auto report = c.validate();
    REQUIRE_FALSE(report.valid());
    CHECK(report.violations[0].kind == Violation::Kind::OutsideDimension);
    CHECK(report.violations[0].at == Bidegree{2, 0});
}

TEST_CASE("identity basis change fixes every map") {
    const auto sq = build_square(1, 1);
    std::map<Bidegree, Matrix> identity_change;
    for (const auto& [b, d] : sq.dims()) identity_change[b] = Matrix::identity(d);
    CHECK(apply_basis_change(sq, identity_change) == sq);
    CHECK(apply_basis_change(sq, {}) == sq);
}

TEST_CASE("random basis changes stay valid and preserve dimensions") {
    const auto base = direct_sum({build_square(0, 0), build_dot(1, 1),
                                  build_zigzag({1, 1}, {ZigzagLetter::DelIn, ZigzagLetter::DelbarIn})});
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        const auto scrambled = random_basis_change(base, seed);
        CHECK(scrambled.validate().valid());
        CHECK(scrambled.dims() == base.dims());
    }
}

TEST_CASE("conjugation survives basis change") {
    const auto iw = iwasawa();
    const auto scrambled = random_basis_change(iw, 12345);
    CHECK(scrambled.has_conj());
    CHECK(scrambled.validate().valid());
}

TEST_CASE("serialization round trip is exact") {
    const std::vector<DoubleComplex> models = {
        build_dot(1, 1),
        build_square(0, 0),
        build_zigzag({1, 1}, {ZigzagLetter::DelOut, ZigzagLetter::DelbarOut}),
        iwasawa(),
        stein_like(2),
    };
    for (const auto& c : models) {
        const std::string text = serialize(c);
        const DoubleComplex back = parse_complex(text);
        CHECK(back == c);
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("parser accepts entries in any order with comments") {
    const std::string text =
        "# a scrambled square\n"
        "bicomplex square\n"
        "delbar 0 0 0 0 1/1\n"
        "\n"
        "space 1 1 1\n"
        "del 0 1 0 0 -1/1\n"
        "space 0 0 1\n"
        "# more\n"
        "space 1 0 1\n"
        "space 0 1 1\n"
        "del 0 0 0 0 1/1\n"
        "delbar 1 0 0 0 1/1\n";
    CHECK(parse_complex(text) == build_square(0, 0));
}

TEST_CASE("parser reports line numbers on bad input") {
    auto line_of = [](const std::string& text) {
        try {
            parse_complex(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("space 0 0 1\n") == 1);                               // missing header
    CHECK(line_of("bicomplex x\nwhat 1 2\n") == 2);                     // unknown keyword
    CHECK(line_of("bicomplex x\nspace 0 0 1\nspace 0 0 2\n") == 3);     // duplicate space
    CHECK(line_of("bicomplex x\nspace 0 0 1\ndel 0 0 5 0 1/1\n") == 3); // row out of range
    CHECK(line_of("bicomplex x\nspace 0 0 1\nspace 1 0 1\ndel 0 0 0 0 z\n") == 4);
    CHECK(line_of("bicomplex x\nn -3\n") == 2);
}

TEST_CASE("empty body after the header parses to the empty complex") {
    const DoubleComplex c = parse_complex(std::string("bicomplex nothing\n"));
    CHECK(c.total_dim() == 0);
    CHECK(c.validate().valid());
}

TEST_CASE("digest separates distinct complexes") {
    CHECK(digest(build_dot(1, 1)) == digest(build_dot(1, 1)));
    CHECK(digest(build_dot(1, 1)) != digest(build_square(0, 0)));
    CHECK(digest(build_dot(1, 1)).size() == 16);
}
