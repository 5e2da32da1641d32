#include <doctest.h>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "linspace/classify.hpp"
#include "linspace/hanani.hpp"

using namespace linspace;
using fixtures::all_pairs4;
using fixtures::fano;
using fixtures::triangle;

namespace {

std::vector<LinearSpace> instances() {
    std::vector<LinearSpace> out;
    for (std::size_t n = 3; n <= 6; ++n) {
        for (auto& ls : fixtures::census(n)) out.push_back(std::move(ls));
    }
    for (std::size_t n = 3; n <= 31; ++n) out.push_back(near_pencil(n));
    for (std::size_t p : {2, 3, 5}) out.push_back(projective_plane(p));
    return out;
}

}  // namespace

TEST_CASE("pencil quantities") {
    const HananiReport f = hanani_quantities(fano());
    CHECK(f.a == 3);
    CHECK(f.b == 3);
    CHECK(f.p == 7);

    const HananiReport np = hanani_quantities(near_pencil(5));
    CHECK(np.longest == 0);
    CHECK(np.a == 4);
    CHECK(np.b == 2);
    CHECK(np.p == 5);

    const HananiReport ap = hanani_quantities(all_pairs4());
    CHECK(ap.a == 2);
    CHECK(ap.b == 2);
    CHECK(ap.longest == 0);
    CHECK(ap.pencil == std::vector<LineIndex>{0, 1, 2, 3, 4});
    CHECK(ap.p == 5);
}

TEST_CASE("Hanani's lemma rows") {
    const HananiLemma f = hanani_lemma(fano());
    CHECK(f.all_hold);
    REQUIRE(f.rows.size() == 3);
    for (const auto& row : f.rows) {
        CHECK(row.lhs == 2);
        CHECK(row.rhs == 2);
    }
    const HananiLemma np = hanani_lemma(near_pencil(5));
    for (const auto& row : np.rows) {
        CHECK(row.lhs == 1);
        CHECK(row.rhs == 1);
    }
    const HananiLemma t = hanani_lemma(triangle());
    CHECK(t.rows.front().lhs == 1);
    CHECK(t.rows.front().rhs == 1);
}

TEST_CASE("Hanani bounds") {
    const HananiBounds f = hanani_bounds(fano());
    CHECK(f.lower_bound == 7);
    CHECK(f.lower_bound_holds);
    REQUIRE(f.equality_case.has_value());
    CHECK(f.equality_case->pencil_is_all_lines);
    CHECK(f.equality_case->verdict == Verdict::ProjectivePlane);
    REQUIRE(f.derived.has_value());
    CHECK(f.derived->n_upper_holds);
    CHECK(f.derived->n_lower_holds);

    const HananiBounds np = hanani_bounds(near_pencil(5));
    CHECK(np.lower_bound == 5);
    REQUIRE(np.equality_case.has_value());
    CHECK(np.equality_case->near_pencil);
    CHECK_FALSE(np.derived.has_value());

    const HananiBounds ap = hanani_bounds(all_pairs4());
    CHECK(ap.lower_bound == 5);
    CHECK(ap.lower_bound_holds);
    CHECK(ap.p_ge_n);
    CHECK_FALSE(ap.equality_case.has_value());
}

TEST_CASE("minimum-degree bounds") {
    SUBCASE("Fano") {
        const MinDegreeBoundsReport r = min_degree_bounds(fano());
        CHECK(r.branch == MinDegreeBranch::DegreeAtLeastLongest);
        CHECK(r.k == 3);
        CHECK(r.a == 3);
        CHECK(r.n_bound == 7);
        CHECK(r.p_bound == 7);
        CHECK(r.equality_chain());
    }
    SUBCASE("near-pencil on six points") {
        const MinDegreeBoundsReport r = min_degree_bounds(near_pencil(6));
        CHECK(r.branch == MinDegreeBranch::DegreeBelowLongest);
        CHECK(r.k == 2);
        CHECK(r.a == 5);
        CHECK(r.u_on_longest);
        CHECK(r.a_prime == std::optional<std::size_t>(2));
        CHECK(r.n_bound == 6);
        CHECK(r.p_bound == 6);
        CHECK(r.p == 6);
    }
    SUBCASE("triangle") {
        const MinDegreeBoundsReport r = min_degree_bounds(triangle());
        CHECK(r.branch == MinDegreeBranch::DegreeAtLeastLongest);
        CHECK(r.n_bound == 3);
        CHECK(r.p_bound == 3);
    }
}

TEST_CASE("Hanani invariants over the census and generated families") {
    for (const auto& ls : instances()) {
        const std::size_t n = ls.point_count();
        const HananiReport q = hanani_quantities(ls);
        CHECK(q.p >= n);
        CHECK(hanani_lemma(ls).all_hold);
        const HananiBounds b = hanani_bounds(ls);
        CHECK(b.lower_bound_holds);
        CHECK(b.p_ge_n);

        const Classification c = classify(ls);
        const bool expected_equality = q.pencil.size() == ls.line_count() && c.verdict != Verdict::Excess;
        CHECK((q.p == n) == expected_equality);
        if (b.derived) {
            CHECK(b.derived->n_upper_holds);
            CHECK(b.derived->n_lower_holds);
        }

        const MinDegreeBoundsReport s = min_degree_bounds(ls);
        CHECK(s.n_bound_holds);
        CHECK(s.p_bound_holds);
        if (ls.line_count() == n) CHECK((s.n_tight || s.p_tight));
    }
}

TEST_CASE("a, b and p are isomorphism invariants") {
    std::mt19937_64 rng(3);
    std::map<std::string, std::tuple<std::size_t, std::size_t, std::size_t>> by_class;
    for (std::size_t n = 4; n <= 6; ++n) {
        for (const auto& ls : fixtures::census(n)) {
            const HananiReport q = hanani_quantities(ls);
            const auto key = std::make_tuple(q.a, q.b, q.p);
            const auto [it, inserted] = by_class.emplace(canonical_form(ls), key);
            if (!inserted) CHECK(it->second == key);

            const LinearSpace moved = validate(relabel(ls.structure(), fixtures::random_permutation(n, rng)));
            const HananiReport r = hanani_quantities(moved);
            CHECK(std::make_tuple(r.a, r.b, r.p) == key);
        }
    }
}
