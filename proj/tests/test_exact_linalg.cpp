#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "linspace/exact_linalg.hpp"

using namespace linspace;
using fixtures::fano;
using fixtures::triangle;

namespace {

// Laplace expansion along the first row.
mpz_class cofactor_det(const ExactMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    mpz_class total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        ExactMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
                if (cc != c) minor(r - 1, k++) = a(r, cc);
            }
        }
        const mpz_class term = a(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : mpz_class(-term);
    }
    return total;
}

ExactMatrix random_01(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rng() % 2);
    }
    return m;
}

std::vector<std::size_t> col_sums(const ExactMatrix& m) {
    std::vector<std::size_t> out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] += m(r, c).get_ui();
    }
    return out;
}

std::vector<std::size_t> row_sums(const ExactMatrix& m) { return col_sums(m.transpose()); }

const IncidenceStructure kThreeSubsets{4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

}  // namespace

TEST_CASE("incidence matrices") {
    const ExactMatrix t = incidence_matrix(triangle());
    CHECK(t.rows() == 3);
    CHECK(row_sums(t) == std::vector<std::size_t>{2, 2, 2});
    CHECK(col_sums(t) == std::vector<std::size_t>{2, 2, 2});

    const ExactMatrix f = incidence_matrix(fano());
    CHECK(row_sums(f) == std::vector<std::size_t>(7, 3));
    CHECK(col_sums(f) == std::vector<std::size_t>(7, 3));

    CHECK(col_sums(incidence_matrix(near_pencil(4))) == std::vector<std::size_t>{3, 2, 2, 2});
}

TEST_CASE("gram matrices") {
    CHECK(gram_matrix(triangle()) == ExactMatrix{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
    const ExactMatrix f = gram_matrix(fano());
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) CHECK(f(i, j) == (i == j ? 3 : 1));
    }
    const ExactMatrix np = gram_matrix(near_pencil(4));
    CHECK(np(0, 0) == 2);
    CHECK(np(3, 3) == 3);
    CHECK(np(0, 3) == 1);
    const LinearSpace ls = fano();
    const ExactMatrix m = incidence_matrix(ls);
    CHECK(gram_matrix(ls) == m * m.transpose());
}

TEST_CASE("closed-form determinant") {
    const std::vector<std::size_t> tri{2, 2, 2};
    CHECK(gram_det_closed_form(tri, 1) == 4);
    const std::vector<std::size_t> fano_degrees(7, 3);
    CHECK(gram_det_closed_form(fano_degrees, 1) == 576);
    const std::vector<std::size_t> two{2, 3};
    CHECK(gram_det_closed_form(two, 1) == 5);
    const std::vector<std::size_t> four(4, 3);
    CHECK(gram_det_closed_form(four, 2) == 9);

    const std::vector<std::size_t> bad{2, 1};
    CHECK_THROWS_AS(gram_det_closed_form(bad, 1), ValidationError);
}

TEST_CASE("closed form is symmetric in the degrees") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t lambda = 1 + rng() % 3;
        std::vector<std::size_t> degrees(1 + rng() % 9);
        for (auto& k : degrees) k = lambda + 1 + rng() % 6;
        const mpq_class reference = gram_det_closed_form(degrees, lambda);
        std::shuffle(degrees.begin(), degrees.end(), rng);
        CHECK(gram_det_closed_form(degrees, lambda) == reference);

        // Cross-check against elimination on diag(k - lambda) + lambda J.
        ExactMatrix g(degrees.size(), degrees.size());
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            for (std::size_t j = 0; j < degrees.size(); ++j) {
                g(i, j) = static_cast<long>(i == j ? degrees[i] : lambda);
            }
        }
        CHECK(mpq_class(det_fraction_free(g)) == reference);
    }
}

TEST_CASE("fraction-free determinant") {
    CHECK(det_fraction_free(ExactMatrix::identity(3)) == 1);
    CHECK(det_fraction_free(ExactMatrix{{2, 1}, {1, 2}}) == 3);
    CHECK(det_fraction_free(gram_matrix(fano())) == 576);
    CHECK(det_fraction_free(gram_matrix(triangle())) == 4);
    // Needs a row swap at the first pivot.
    CHECK(det_fraction_free(ExactMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det_fraction_free(ExactMatrix{{0, 0}, {1, 0}}) == 0);
    CHECK_THROWS_AS(det_fraction_free(ExactMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinants of random 0/1 matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const ExactMatrix a = random_01(n, n, rng);
        const mpz_class d = det_fraction_free(a);
        CHECK(d == det_fraction_free(a.transpose()));
        if (n <= 5) CHECK(d == cofactor_det(a));
        CHECK((d != 0) == (rank(a) == n));
    }
}

TEST_CASE("rank") {
    CHECK(rank(gram_matrix(triangle())) == 3);
    CHECK(rank(incidence_matrix(fano())) == 7);
    CHECK(rank(ExactMatrix(2, 3)) == 0);
    CHECK(rank(ExactMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) == 1);
    CHECK(rank(ExactMatrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 2);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const ExactMatrix a = random_01(1 + rng() % 6, 1 + rng() % 6, rng);
        CHECK(rank(a) == rank(a.transpose()));
    }
}

TEST_CASE("positive definiteness") {
    CHECK(leading_principal_minors(gram_matrix(triangle())) == std::vector<mpz_class>{2, 3, 4});
    CHECK(positive_definite(gram_matrix(triangle())));
    CHECK_FALSE(positive_definite(ExactMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    CHECK(positive_definite(gram_matrix(fano())));
    CHECK_FALSE(positive_definite(ExactMatrix{{-1}}));
    CHECK_FALSE(positive_definite(ExactMatrix{{1, 2}, {2, 1}}));
    CHECK_THROWS_AS(positive_definite(ExactMatrix{{1, 2}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("gram reports on the census and generated families") {
    std::vector<LinearSpace> spaces;
    for (std::size_t n = 3; n <= 6; ++n) {
        for (auto& ls : fixtures::census(n)) spaces.push_back(std::move(ls));
    }
    for (std::size_t n = 3; n <= 31; ++n) spaces.push_back(near_pencil(n));
    for (std::size_t p : {2, 3, 5}) spaces.push_back(projective_plane(p));
    for (const auto& ls : spaces) {
        const GramReport r = gram_report(ls);
        CHECK(r.det_closed_form == mpq_class(r.det_elimination));
        CHECK(r.positive_definite);
        CHECK(r.rank == ls.point_count());
        CHECK(rank(incidence_matrix(ls)) == ls.point_count());
    }
}

TEST_CASE("lambda designs") {
    SUBCASE("all 3-subsets of 4 points") {
        const LambdaDesign d = ryser_validate(kThreeSubsets, 2);
        CHECK(d.report.det_elimination == 9);
        CHECK(d.report.det_closed_form == 9);
        CHECK(d.report.rank == 4);
        CHECK(d.incidence_rank == 4);
        CHECK(d.lines_at_least_points());
    }
    SUBCASE("a duplicated block breaks the pair count") {
        IncidenceStructure raw = kThreeSubsets;
        raw.lines.push_back({0, 1, 2});
        try {
            ryser_validate(raw, 2);
            FAIL("accepted");
        } catch (const ValidationError& e) {
            CHECK(e.kind() == ValidationErrorKind::PairCoverageNotLambda);
        }
    }
    SUBCASE("lambda 1 matches the linear-space path") {
        for (const auto& ls : {fano(), triangle(), near_pencil(6)}) {
            const LambdaDesign d = ryser_validate(ls.structure(), 1);
            const GramReport r = gram_report(ls);
            CHECK(d.report.det_elimination == r.det_elimination);
            CHECK(d.report.rank == r.rank);
        }
    }
    SUBCASE("degree not above lambda") {
        // Two copies of the triangle: every pair twice, every degree 4 > 2, so valid.
        const IncidenceStructure twice{3, {{0, 1}, {0, 2}, {1, 2}, {0, 1}, {0, 2}, {1, 2}}};
        CHECK(ryser_validate(twice, 2).report.det_elimination == 32);
        // Whole set twice: every degree equals lambda.
        const IncidenceStructure whole{3, {{0, 1, 2}, {0, 1, 2}}};
        try {
            ryser_validate(whole, 2);
            FAIL("accepted");
        } catch (const ValidationError& e) {
            CHECK(e.kind() == ValidationErrorKind::DegreeNotAboveLambda);
        }
    }
    CHECK_THROWS_AS(ryser_validate(kThreeSubsets, 0), std::invalid_argument);
}
