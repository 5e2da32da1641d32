#include "linspace/hanani.hpp"

#include <algorithm>
#include <string>

namespace linspace {

namespace {

mpz_class big(std::size_t v) { return mpz_class(static_cast<unsigned long>(v)); }

// Lowest-index line of maximum size, skipping `skip` when given.
LineIndex longest_line(const LinearSpace& ls, std::optional<LineIndex> skip = std::nullopt) {
    std::optional<LineIndex> best;
    for (LineIndex l = 0; l < ls.line_count(); ++l) {
        if (skip && *skip == l) continue;
        if (!best || ls.size(l) > ls.size(*best)) best = l;
    }
    ensure(best.has_value(), "no candidate line");
    return *best;
}

bool meets(const LinearSpace& ls, LineIndex a, LineIndex b) {
    return std::any_of(ls.line(a).begin(), ls.line(a).end(), [&](PointIndex z) { return ls.contains(b, z); });
}

std::vector<HananiLemmaRow> lemma_rows(const LinearSpace& ls, LineIndex longest, std::size_t a, std::size_t b) {
    const mpq_class rhs(big(ls.point_count() - a), big(b - 1));
    std::vector<HananiLemmaRow> rows;
    for (PointIndex x : ls.line(longest)) {
        HananiLemmaRow row{x, mpq_class(big(ls.degree(x) - 1)), rhs, false};
        row.rhs.canonicalize();
        row.holds = row.lhs >= row.rhs;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

HananiReport hanani_quantities(const LinearSpace& ls) {
    HananiReport r;
    r.longest = longest_line(ls);
    r.a = ls.size(r.longest);
    r.second = longest_line(ls, r.longest);
    r.b = ls.size(r.second);
    for (LineIndex l = 0; l < ls.line_count(); ++l) {
        if (meets(ls, r.longest, l)) r.pencil.push_back(l);
    }
    r.p = r.pencil.size();
    r.lemma_rows = lemma_rows(ls, r.longest, r.a, r.b);
    ensure(r.p >= ls.point_count(), "hanani: fewer lines meet a longest line than there are points (p = " +
                                        std::to_string(r.p) + ", n = " + std::to_string(ls.point_count()) + ")");
    return r;
}

HananiLemma hanani_lemma(const LinearSpace& ls) {
    const HananiReport q = hanani_quantities(ls);
    HananiLemma out{q.lemma_rows, true};
    for (const auto& row : out.rows) out.all_hold = out.all_hold && row.holds;
    return out;
}

HananiBounds hanani_bounds(const LinearSpace& ls) {
    const HananiReport q = hanani_quantities(ls);
    const std::size_t n = ls.point_count();

    HananiBounds out;
    out.lower_bound = 1 + mpq_class(big(q.a) * big(n - q.a), big(q.b - 1));
    out.lower_bound.canonicalize();
    out.lower_bound_holds = mpq_class(big(q.p)) >= out.lower_bound;
    out.p_ge_n = q.p >= n;

    const bool near_pencil = find_near_pencil(ls).has_value();
    if (q.p == n) {
        HananiEqualityCase eq;
        eq.pencil_is_all_lines = q.p == ls.line_count();
        eq.pencil_lines_have_a_points =
            std::all_of(q.pencil.begin(), q.pencil.end(), [&](LineIndex l) { return ls.size(l) == q.a; });
        eq.near_pencil = near_pencil;
        eq.verdict = classify(ls).verdict;
        ensure(eq.pencil_is_all_lines, "hanani: p = n but some line misses L");
        ensure(eq.pencil_lines_have_a_points || eq.near_pencil,
               "hanani: p = n, not a near-pencil, and a line of the pencil is shorter than L");
        ensure(eq.verdict != Verdict::Excess, "hanani: p = n but the space has more lines than points");
        out.equality_case = eq;
    }
    if (n >= q.p && !near_pencil) {
        const mpz_class a = big(q.a), b = big(q.b), n1 = big(n - 1);
        HananiDerivedSteps d;
        d.n_upper_lhs = a * (a - 1);
        d.n_upper_rhs = n1 * (a - b + 1);
        d.n_upper_holds = d.n_upper_lhs >= d.n_upper_rhs;
        d.n_lower_lhs = n1;
        d.n_lower_rhs = (a - 1) * b;
        d.n_lower_holds = d.n_lower_lhs >= d.n_lower_rhs;
        out.derived = d;
    }
    return out;
}

MinDegreeBoundsReport min_degree_bounds(const LinearSpace& ls) {
    const std::size_t n = ls.point_count();
    const HananiReport q = hanani_quantities(ls);

    MinDegreeBoundsReport r;
    r.u = min_degree_point(ls);
    r.k = ls.degree(r.u);
    r.longest = q.longest;
    r.a = q.a;
    r.p = q.p;
    r.u_on_longest = ls.contains(r.longest, r.u);

    const mpz_class k = big(r.k), a = big(r.a);
    if (r.k >= r.a) {
        r.branch = MinDegreeBranch::DegreeAtLeastLongest;
        r.n_bound = 1 + k * (a - 1);
        r.p_bound = 1 + a * (k - 1);
    } else {
        r.branch = MinDegreeBranch::DegreeBelowLongest;
        ensure(r.u_on_longest, "minimum-degree bounds: k < a but the minimum-degree point is off the longest line");
        std::optional<LineIndex> m_line;
        for (LineIndex l : ls.pencil(r.u)) {
            if (l == r.longest) continue;
            if (!m_line || ls.size(l) > ls.size(*m_line)) m_line = l;
        }
        ensure(m_line.has_value(), "minimum-degree bounds: the minimum-degree point lies on a single line");
        r.second_line = m_line;
        r.a_prime = ls.size(*m_line);
        const mpz_class ap = big(*r.a_prime);
        r.n_bound = a + (k - 1) * (ap - 1);
        r.p_bound = k + (a - 1) * (ap - 1);
    }
    r.n_bound_holds = big(n) <= r.n_bound;
    r.p_bound_holds = big(r.p) >= r.p_bound;
    r.n_tight = big(n) == r.n_bound;
    r.p_tight = big(r.p) == r.p_bound;
    ensure(r.n_bound_holds, "minimum-degree bounds: n exceeds the point-count bound " + r.n_bound.get_str());
    ensure(r.p_bound_holds, "minimum-degree bounds: p is below the pencil bound " + r.p_bound.get_str());
    return r;
}

}  // namespace linspace
