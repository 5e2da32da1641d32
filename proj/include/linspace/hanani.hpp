#pragma once

// Hanani's pencil of lines meeting a longest line, Hanani's lemma, and the
// counting bounds of the direct and the minimum-degree proofs of p >= n.

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "linspace/classify.hpp"
#include "linspace/incidence.hpp"

namespace linspace {

struct HananiLemmaRow {
    PointIndex point = 0;  // a point of L
    mpq_class lhs;         // k_x - 1
    mpq_class rhs;         // (n - a) / (b - 1)
    bool holds = false;
};

struct HananiReport {
    LineIndex longest = 0;         // L, lowest index among the longest lines
    std::size_t a = 0;             // s_L
    LineIndex second = 0;          // K, lowest-index longest line other than L
    std::size_t b = 0;             // s_K
    std::vector<LineIndex> pencil; // lines meeting L, L included
    std::size_t p = 0;
    std::vector<HananiLemmaRow> lemma_rows;
};

/// Throws InvariantViolation if p < n.
HananiReport hanani_quantities(const LinearSpace& ls);

struct HananiLemma {
    std::vector<HananiLemmaRow> rows;
    bool all_hold = false;
};

HananiLemma hanani_lemma(const LinearSpace& ls);

struct HananiEqualityCase {
    bool pencil_is_all_lines = false;             // P == L
    bool pencil_lines_have_a_points = false;
    bool near_pencil = false;
    Verdict verdict = Verdict::Excess;
};

/// a(a-1) >= (n-1)(a-b+1) and n-1 >= (a-1)b, evaluated only when n >= p and
/// the space is not a near-pencil.
struct HananiDerivedSteps {
    mpz_class n_upper_lhs;
    mpz_class n_upper_rhs;
    bool n_upper_holds = false;
    mpz_class n_lower_lhs;
    mpz_class n_lower_rhs;
    bool n_lower_holds = false;
};

struct HananiBounds {
    mpq_class lower_bound;  // 1 + a(n-a)/(b-1)
    bool lower_bound_holds = false; // p >= lower_bound
    bool p_ge_n = false;
    std::optional<HananiEqualityCase> equality_case;  // when p == n
    std::optional<HananiDerivedSteps> derived;
};

HananiBounds hanani_bounds(const LinearSpace& ls);

enum class MinDegreeBranch { DegreeAtLeastLongest, DegreeBelowLongest };

struct MinDegreeBoundsReport {
    PointIndex u = 0;
    std::size_t k = 0;  // k_u
    LineIndex longest = 0;
    std::size_t a = 0;
    std::size_t p = 0;
    MinDegreeBranch branch = MinDegreeBranch::DegreeAtLeastLongest;
    std::optional<LineIndex> second_line;  // M: longest line through u other than L (k < a only)
    std::optional<std::size_t> a_prime;    // s_M
    bool u_on_longest = false;
    mpz_class n_bound;      // 1 + k(a-1)  or  a + (k-1)(a'-1)
    mpz_class p_bound;      // 1 + a(k-1)  or  k + (a-1)(a'-1)
    bool n_bound_holds = false;  // n <= n_bound
    bool p_bound_holds = false;  // p >= p_bound
    bool n_tight = false;
    bool p_tight = false;

    bool equality_chain() const noexcept { return n_tight && p_tight; }
};

/// Throws InvariantViolation when a branch inequality fails or, for k < a,
/// when u is off L.
MinDegreeBoundsReport min_degree_bounds(const LinearSpace& ls);

}  // namespace linspace
