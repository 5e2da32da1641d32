#include "linspace/classify.hpp"

#include <algorithm>
#include <string>

namespace linspace {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Excess: return "excess";
        case Verdict::NearPencil: return "near_pencil";
        case Verdict::ProjectivePlane: return "projective_plane";
        case Verdict::Both: return "both";
    }
    return "unknown";
}

std::optional<NearPencilWitness> find_near_pencil(const LinearSpace& ls) {
    const std::size_t n = ls.point_count();
    if (ls.line_count() != n) return std::nullopt;
    for (LineIndex candidate = 0; candidate < ls.line_count(); ++candidate) {
        if (ls.size(candidate) != n - 1) continue;
        PointIndex apex = 0;
        while (ls.contains(candidate, apex)) ++apex;
        bool ok = true;
        for (LineIndex l = 0; l < ls.line_count() && ok; ++l) {
            if (l == candidate) continue;
            ok = ls.size(l) == 2 && ls.contains(l, apex);
        }
        if (ok) return NearPencilWitness{candidate, apex};
    }
    return std::nullopt;
}

namespace {

std::optional<std::size_t> common_value(const LinearSpace& ls) {
    const std::size_t k = ls.size(0);
    const bool sizes_equal = std::all_of(ls.sizes().begin(), ls.sizes().end(), [&](std::size_t s) { return s == k; });
    const bool degrees_equal =
        std::all_of(ls.degrees().begin(), ls.degrees().end(), [&](std::size_t d) { return d == k; });
    if (sizes_equal && degrees_equal) return k;
    return std::nullopt;
}

}  // namespace

Classification classify(const LinearSpace& ls) {
    const std::size_t n = ls.point_count();
    const std::size_t m = ls.line_count();
    ensure(m >= n, "classify: fewer lines than points");

    Classification c;
    c.surplus = m - n;
    if (m > n) {
        c.verdict = Verdict::Excess;
        return c;
    }

    c.near_pencil = find_near_pencil(ls);
    if (auto k = common_value(ls); k && n == *k * (*k - 1) + 1) {
        c.k = *k;
        c.order = *k - 1;
    }
    if (c.near_pencil && c.k) {
        c.verdict = Verdict::Both;
    } else if (c.near_pencil) {
        c.verdict = Verdict::NearPencil;
    } else if (c.k) {
        c.verdict = Verdict::ProjectivePlane;
    } else {
        throw InvariantViolation("classify: square linear space is neither a near-pencil nor a projective plane");
    }
    return c;
}

bool lemma1_check(const LinearSpace& ls) {
    const auto k = common_value(ls);
    if (!k) return false;
    ensure(ls.point_count() == *k * (*k - 1) + 1,
           "lemma1: equal line sizes and degrees k, but n != k(k-1)+1 (k = " + std::to_string(*k) + ")");
    return true;
}

Lemma2Result lemma2_check(const LinearSpace& ls) {
    Lemma2Result r;
    r.applicable = ls.line_count() == ls.point_count() &&
                   std::find(ls.degrees().begin(), ls.degrees().end(), std::size_t{2}) != ls.degrees().end();
    if (r.applicable) r.verdict_matches = classify(ls).is_near_pencil();
    return r;
}

IntersectionReport pairwise_intersections(const LinearSpace& ls) {
    IntersectionReport r;
    for (LineIndex a = 0; a < ls.line_count(); ++a) {
        for (LineIndex b = a + 1; b < ls.line_count(); ++b) {
            std::size_t common = 0;
            for (PointIndex z : ls.line(a)) common += ls.contains(b, z) ? 1 : 0;
            ensure(common <= 1, "lines " + std::to_string(a) + " and " + std::to_string(b) + " share two points");
            if (common == 0) r.disjoint_pairs.emplace_back(a, b);
        }
    }
    r.all_meet = r.disjoint_pairs.empty();
    return r;
}

}  // namespace linspace
