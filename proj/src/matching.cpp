#include "linspace/matching.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace linspace {

namespace {

constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

// Kuhn's algorithm on lines x points with edges (l, z) iff z is off l.
class ComplementMatcher {
public:
    ComplementMatcher(const LinearSpace& ls, std::optional<SdrPin> pin)
        : ls_(ls),
          pin_(pin),
          line_to_point_(ls.line_count(), kUnmatched),
          point_to_line_(ls.point_count(), kUnmatched) {}

    void run() {
        for (LineIndex l = 0; l < ls_.line_count(); ++l) {
            if (pin_ && pin_->line == l) continue;
            visited_.assign(ls_.point_count(), 0);
            augment(l);
        }
        if (pin_) {
            line_to_point_[pin_->line] = pin_->point;
            point_to_line_[pin_->point] = pin_->line;
        }
    }

    const std::vector<std::size_t>& line_to_point() const { return line_to_point_; }
    const std::vector<std::size_t>& point_to_line() const { return point_to_line_; }

private:
    bool usable(LineIndex l, PointIndex z) const {
        if (ls_.contains(l, z)) return false;
        return !(pin_ && pin_->point == z);
    }

    bool augment(LineIndex l) {
        for (PointIndex z = 0; z < ls_.point_count(); ++z) {
            if (!usable(l, z) || visited_[z]) continue;
            visited_[z] = 1;
            if (point_to_line_[z] == kUnmatched || augment(point_to_line_[z])) {
                line_to_point_[l] = z;
                point_to_line_[z] = l;
                return true;
            }
        }
        return false;
    }

    const LinearSpace& ls_;
    std::optional<SdrPin> pin_;
    std::vector<std::size_t> line_to_point_;
    std::vector<std::size_t> point_to_line_;
    std::vector<std::uint8_t> visited_;
};

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

HallResult hall_check(const LinearSpace& ls) {
    ComplementMatcher matcher(ls, std::nullopt);
    matcher.run();
    const auto& line_to_point = matcher.line_to_point();
    const auto& point_to_line = matcher.point_to_line();

    std::vector<std::uint8_t> line_seen(ls.line_count(), 0);
    std::vector<std::uint8_t> point_seen(ls.point_count(), 0);
    std::deque<LineIndex> queue;
    for (LineIndex l = 0; l < ls.line_count(); ++l) {
        if (line_to_point[l] == kUnmatched) {
            line_seen[l] = 1;
            queue.push_back(l);
        }
    }
    if (queue.empty()) return std::nullopt;

    while (!queue.empty()) {
        const LineIndex l = queue.front();
        queue.pop_front();
        for (PointIndex z = 0; z < ls.point_count(); ++z) {
            if (ls.contains(l, z) || point_seen[z]) continue;
            point_seen[z] = 1;
            const LineIndex owner = point_to_line[z];
            ensure(owner != kUnmatched, "hall_check: augmenting path left after maximum matching");
            if (!line_seen[owner]) {
                line_seen[owner] = 1;
                queue.push_back(owner);
            }
        }
    }

    HallWitness witness;
    for (LineIndex l = 0; l < ls.line_count(); ++l) {
        if (line_seen[l]) witness.line_subset.push_back(l);
    }
    witness.union_size = static_cast<std::size_t>(std::count(point_seen.begin(), point_seen.end(), 1));
    ensure(witness.union_size < witness.line_subset.size(), "hall_check: Konig witness is not deficient");
    return witness;
}

HallResult hall_check_exhaustive(const LinearSpace& ls) {
    const std::size_t m = ls.line_count();
    const std::size_t n = ls.point_count();
    if (m > 20) throw std::out_of_range("hall_check_exhaustive: more than 20 lines");
    ensure(n <= 64, "hall_check_exhaustive: more points than lines");

    std::vector<std::uint64_t> complement(m, 0);
    for (LineIndex l = 0; l < m; ++l) {
        for (PointIndex z = 0; z < n; ++z) {
            if (!ls.contains(l, z)) complement[l] |= std::uint64_t{1} << z;
        }
    }
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        std::uint64_t cover = 0;
        for (LineIndex l = 0; l < m; ++l) {
            if (mask >> l & 1u) cover |= complement[l];
        }
        const auto family = static_cast<std::size_t>(std::popcount(mask));
        const auto covered = static_cast<std::size_t>(std::popcount(cover));
        if (covered < family) {
            HallWitness witness;
            for (LineIndex l = 0; l < m; ++l) {
                if (mask >> l & 1u) witness.line_subset.push_back(l);
            }
            witness.union_size = covered;
            return witness;
        }
    }
    return std::nullopt;
}

MatchingResult find_sdr(const LinearSpace& ls, std::optional<SdrPin> pin) {
    if (pin) {
        if (pin->line >= ls.line_count() || pin->point >= ls.point_count()) {
            throw std::out_of_range("find_sdr: pin outside the space");
        }
        if (ls.contains(pin->line, pin->point)) {
            throw std::invalid_argument("find_sdr: pinned point lies on the pinned line");
        }
    }
    ComplementMatcher matcher(ls, pin);
    matcher.run();

    MatchingResult result;
    result.matching.resize(ls.line_count());
    for (LineIndex l = 0; l < ls.line_count(); ++l) {
        const std::size_t z = matcher.line_to_point()[l];
        if (z == kUnmatched) continue;
        result.matching[l] = z;
        ++result.size;
    }
    if (result.size == ls.line_count()) {
        result.certificate = SdrCertificate{std::vector<PointIndex>(matcher.line_to_point())};
    }
    return result;
}

bool check_sdr(const LinearSpace& ls, const SdrCertificate& cert) {
    if (cert.assignment.size() != ls.line_count()) {
        throw std::out_of_range("check_sdr: certificate does not cover every line");
    }
    std::vector<std::uint8_t> used(ls.point_count(), 0);
    bool ok = true;
    for (LineIndex l = 0; l < cert.assignment.size(); ++l) {
        const PointIndex z = cert.assignment[l];
        if (z >= ls.point_count()) throw std::out_of_range("check_sdr: representative outside the space");
        if (ls.contains(l, z) || used[z]) ok = false;
        used[z] = 1;
    }
    return ok;
}

SdrSumReport sdr_sum_argument(const LinearSpace& ls, const SdrCertificate& cert) {
    SdrSumReport r;
    r.per_line_holds = true;
    r.per_line_equal = true;
    for (LineIndex l = 0; l < ls.line_count(); ++l) {
        const std::size_t s = ls.size(l);
        const std::size_t k = ls.degree(cert.assignment.at(l));
        r.sum_s += s;
        r.sum_k_assigned += k;
        r.per_line_holds = r.per_line_holds && s <= k;
        r.per_line_equal = r.per_line_equal && s == k;
    }
    for (std::size_t k : ls.degrees()) r.sum_k_all += k;
    r.chain_holds = r.sum_s <= r.sum_k_assigned && r.sum_k_assigned <= r.sum_k_all;
    if (ls.line_count() == ls.point_count()) {
        r.square_equalities = r.sum_s == r.sum_k_assigned && r.sum_k_assigned == r.sum_k_all && r.per_line_equal;
    }
    return r;
}

bool ProofTrace::all_hold() const noexcept {
    bool ok = ineq2.holds() && ineq3.holds() && ineq4.holds() && ineq4_total.holds();
    if (square) {
        ok = ok && square->ineq5.holds() && square->ineq6_holds() && square->ineq6_tight() &&
             square->ku_equals_k_off_representatives && square->s_equals_ku_off_pencil &&
             square->s_equals_k_pencil_pairs;
    }
    return ok;
}

namespace {

// Lowest-index point of l other than u.
PointIndex representative(const LinearSpace& ls, LineIndex l, PointIndex u) {
    for (PointIndex z : ls.line(l)) {
        if (z != u) return z;
    }
    throw InvariantViolation("line with fewer than two points");
}

}  // namespace

ProofTrace proof_trace_min_degree(const LinearSpace& ls) {
    const std::size_t n = ls.point_count();
    const std::size_t m = ls.line_count();

    ProofTrace t;
    t.u = min_degree_point(ls);
    t.pencil_lines = ls.pencil(t.u);
    t.p = t.pencil_lines.size();
    for (LineIndex l : t.pencil_lines) t.representatives.push_back(representative(ls, l, t.u));

    const std::int64_t p = as_int(t.p);
    const std::int64_t ku = as_int(ls.degree(t.u));

    std::int64_t off_pencil_s = 0;
    std::int64_t pencil_s = 0;
    std::int64_t total_s = 0;
    for (LineIndex l = 0; l < m; ++l) {
        total_s += as_int(ls.size(l));
        (ls.contains(l, t.u) ? pencil_s : off_pencil_s) += as_int(ls.size(l));
    }
    std::int64_t rep_k = 0;
    for (PointIndex z : t.representatives) rep_k += as_int(ls.degree(z));

    t.ineq2 = {off_pencil_s, (as_int(m) - p) * ku};

    // Pairs (l, z) in pencil x U with z off l: each side term occurs p-1 times.
    std::int64_t pair_lhs = 0;
    std::int64_t pair_rhs = 0;
    for (LineIndex l : t.pencil_lines) {
        for (PointIndex z : t.representatives) {
            if (ls.contains(l, z)) continue;
            pair_lhs += as_int(ls.size(l));
            pair_rhs += as_int(ls.degree(z));
        }
    }
    ensure(pair_lhs == (p - 1) * pencil_s && pair_rhs == (p - 1) * rep_k,
           "proof trace: each pencil line should miss exactly p-1 representatives");
    t.ineq3 = {pair_lhs, pair_rhs};
    t.ineq4 = {pencil_s, rep_k};
    t.ineq4_total = {total_s, (as_int(m) - p) * ku + rep_k};

    if (m == n) {
        SquareCaseTrace sq;
        std::vector<std::uint8_t> in_u(n, 0);
        for (PointIndex z : t.representatives) in_u[z] = 1;
        std::int64_t y_k = 0;
        std::int64_t all_k = 0;
        sq.ku_equals_k_off_representatives = true;
        for (PointIndex z = 0; z < n; ++z) {
            all_k += as_int(ls.degree(z));
            if (in_u[z]) continue;
            sq.complement_set.push_back(z);
            y_k += as_int(ls.degree(z));
            sq.ku_equals_k_off_representatives = sq.ku_equals_k_off_representatives && as_int(ls.degree(z)) == ku;
        }
        sq.ineq5 = {(as_int(m) - p) * ku, y_k};
        sq.ineq6_lhs = total_s;
        sq.ineq6_mid = y_k + rep_k;
        sq.ineq6_rhs = all_k;

        sq.s_equals_ku_off_pencil = true;
        for (LineIndex l = 0; l < m; ++l) {
            if (!ls.contains(l, t.u)) {
                sq.s_equals_ku_off_pencil = sq.s_equals_ku_off_pencil && as_int(ls.size(l)) == ku;
            }
        }
        sq.s_equals_k_pencil_pairs = true;
        for (LineIndex l : t.pencil_lines) {
            for (PointIndex z : t.representatives) {
                if (!ls.contains(l, z)) {
                    sq.s_equals_k_pencil_pairs = sq.s_equals_k_pencil_pairs && ls.size(l) == ls.degree(z);
                }
            }
        }
        t.square = std::move(sq);
    }
    return t;
}

CyclicCertificate cyclic_certificate(const LinearSpace& ls, std::optional<PointIndex> u) {
    CyclicCertificate c;
    c.u = u.value_or(min_degree_point(ls));
    if (c.u >= ls.point_count()) throw std::out_of_range("cyclic_certificate: point not in the space");

    c.order = ls.pencil(c.u);
    for (LineIndex l : c.order) c.representatives.push_back(representative(ls, l, c.u));

    const std::size_t p = c.order.size();
    c.rows_hold = true;
    bool all_equal = true;
    for (std::size_t i = 0; i < p; ++i) {
        const PointIndex next = c.representatives[(i + 1) % p];
        CyclicRow row{c.order[i], next, ls.size(c.order[i]), ls.degree(next), false};
        ensure(!ls.contains(row.line, next), "cyclic certificate: next representative lies on the line");
        row.holds = row.s <= row.k;
        c.rows_hold = c.rows_hold && row.holds;
        all_equal = all_equal && row.s == row.k;
        c.sum_s += row.s;
        c.sum_k += row.k;
        c.rows.push_back(row);
    }
    c.sum_holds = c.sum_s <= c.sum_k;
    if (ls.line_count() == ls.point_count()) c.square_equalities = all_equal && c.sum_s == c.sum_k;
    return c;
}

BkcReport bkc_verify(const LinearSpace& ls, BkcVariant variant) {
    const std::size_t n = ls.point_count();
    const std::size_t m = ls.line_count();
    const mpq_class nq(static_cast<unsigned long>(n));

    auto F = [&](std::size_t s) -> mpq_class {
        mpq_class v(variant == BkcVariant::Ratio ? static_cast<unsigned long>(s) : static_cast<unsigned long>(n),
                    static_cast<unsigned long>(n - s));
        v.canonicalize();
        return v;
    };
    auto G = [&](std::size_t k) -> mpq_class {
        mpq_class v(variant == BkcVariant::Ratio ? static_cast<unsigned long>(k) : static_cast<unsigned long>(m),
                    static_cast<unsigned long>(m - k));
        v.canonicalize();
        return v;
    };
    auto inv = [](std::size_t d) {
        mpq_class v(1, static_cast<unsigned long>(d));
        return v;
    };

    for (std::size_t s : ls.sizes()) ensure(s < n, "bkc: line size must be below n");
    for (std::size_t k : ls.degrees()) ensure(k < m, "bkc: point degree must be below m");

    BkcReport r;
    r.variant = variant;
    bool all_le = true;
    bool all_eq = true;
    for (LineIndex l = 0; l < m; ++l) {
        for (PointIndex z = 0; z < n; ++z) {
            if (ls.contains(l, z)) continue;
            BkcRow row{l, z, F(ls.size(l)), G(ls.degree(z)), false, false};
            row.le = row.f <= row.g;
            row.eq = row.f == row.g;
            all_le = all_le && row.le;
            all_eq = all_eq && row.eq;
            r.sum_inv_point += inv(m - ls.degree(z));
            r.sum_inv_line += inv(m - ls.size(l));
            r.rows.push_back(std::move(row));
        }
    }
    if (m <= n) r.pairwise_all_hold = all_le;
    r.pairwise_all_equal = all_eq;

    for (std::size_t k : ls.degrees()) {
        const mpq_class d(static_cast<unsigned long>(m - k));
        r.identity_sum += d / d;
        r.weighted_rhs += G(k) * d;
    }
    for (std::size_t s : ls.sizes()) {
        r.sum_line_ratio += mpq_class(static_cast<unsigned long>(n - s)) * inv(m - s);
        r.weighted_lhs += F(s) * mpq_class(static_cast<unsigned long>(n - s));
    }
    r.chain_holds = r.identity_sum == nq && r.sum_inv_point == nq && r.sum_inv_point >= r.sum_inv_line &&
                    r.sum_inv_line == r.sum_line_ratio;
    if (m == n) r.square_equalities = all_eq && r.weighted_lhs == r.weighted_rhs;
    return r;
}

}  // namespace linspace
