#include <doctest.h>

#include "fixtures.hpp"
#include "linspace/classify.hpp"

using namespace linspace;
using fixtures::all_pairs4;
using fixtures::fano;
using fixtures::triangle;

TEST_CASE("classification of the standard instances") {
    const Classification f = classify(fano());
    CHECK(f.verdict == Verdict::ProjectivePlane);
    CHECK(f.k == std::optional<std::size_t>(3));
    CHECK(f.order == std::optional<std::size_t>(2));

    const Classification np = classify(near_pencil(6));
    CHECK(np.verdict == Verdict::NearPencil);
    REQUIRE(np.near_pencil.has_value());
    CHECK(np.near_pencil->long_line == 0);
    CHECK(np.near_pencil->apex == 5);

    const Classification t = classify(triangle());
    CHECK(t.verdict == Verdict::Both);
    CHECK(t.is_near_pencil());
    CHECK(t.is_projective_plane());
    CHECK(t.k == std::optional<std::size_t>(2));

    const Classification e = classify(all_pairs4());
    CHECK(e.verdict == Verdict::Excess);
    CHECK(e.surplus == 2);

    CHECK(to_string(Verdict::ProjectivePlane) == "projective_plane");
    CHECK(to_string(Verdict::NearPencil) == "near_pencil");
}

TEST_CASE("near-pencil witness does not depend on the labeling") {
    // Long line listed last, apex = 0.
    const LinearSpace ls = validate({5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2, 3, 4}}});
    const Classification c = classify(ls);
    CHECK(c.verdict == Verdict::NearPencil);
    REQUIRE(c.near_pencil.has_value());
    CHECK(c.near_pencil->long_line == 4);
    CHECK(c.near_pencil->apex == 0);
}

TEST_CASE("generated families classify as expected") {
    CHECK(classify(near_pencil(3)).verdict == Verdict::Both);
    for (std::size_t n = 4; n <= 20; ++n) CHECK(classify(near_pencil(n)).verdict == Verdict::NearPencil);
    for (std::size_t p : {2, 3, 5, 7}) {
        const Classification c = classify(projective_plane(p));
        CHECK(c.verdict == Verdict::ProjectivePlane);
        CHECK(c.k == std::optional<std::size_t>(p + 1));
    }
}

TEST_CASE("uniform spaces have k(k-1)+1 points") {
    CHECK(lemma1_check(fano()));
    CHECK_FALSE(lemma1_check(near_pencil(5)));
    CHECK(lemma1_check(triangle()));
}

TEST_CASE("a degree-2 point in a square space forces a near-pencil") {
    const Lemma2Result np = lemma2_check(near_pencil(5));
    CHECK(np.applicable);
    CHECK(np.verdict_matches);
    CHECK_FALSE(lemma2_check(fano()).applicable);
    const Lemma2Result t = lemma2_check(triangle());
    CHECK(t.applicable);
    CHECK(t.verdict_matches);
    CHECK_FALSE(lemma2_check(all_pairs4()).applicable);
}

TEST_CASE("pairwise intersections") {
    CHECK(pairwise_intersections(fano()).all_meet);
    CHECK(pairwise_intersections(near_pencil(4)).all_meet);
    const IntersectionReport r = pairwise_intersections(all_pairs4());
    CHECK_FALSE(r.all_meet);
    // {0,1} is line 0 and {2,3} is line 5.
    CHECK(std::find(r.disjoint_pairs.begin(), r.disjoint_pairs.end(), std::pair<LineIndex, LineIndex>{0, 5}) !=
          r.disjoint_pairs.end());
    CHECK(r.disjoint_pairs.size() == 3);
}

TEST_CASE("square census instances are near-pencils and all lines meet") {
    for (std::size_t n = 3; n <= 6; ++n) {
        std::size_t square = 0;
        for (const auto& ls : fixtures::census(n)) {
            const Classification c = classify(ls);
            CHECK(c.surplus == ls.line_count() - n);
            if (ls.line_count() != n) {
                CHECK(c.verdict == Verdict::Excess);
                continue;
            }
            ++square;
            CHECK(c.verdict == (n == 3 ? Verdict::Both : Verdict::NearPencil));
            CHECK(pairwise_intersections(ls).all_meet);
            if (n > 3) CHECK_FALSE(lemma1_check(ls));
        }
        // One labeled near-pencil per choice of apex.
        CHECK(square == (n == 3 ? 1 : n));
    }
}
