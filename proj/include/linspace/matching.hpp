#pragma once

// Combinatorial certificates for m >= n: Hall's condition on the family of
// line complements, systems of distinct representatives (SDRs), the
// minimum-degree proof trace, the cyclic certificate, and the weighted-sum
// (Basterfield-Kelly-Conway) verifier.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "linspace/incidence.hpp"

namespace linspace {

/// Injective l -> a(l) with a(l) off line l.
struct SdrCertificate {
    std::vector<PointIndex> assignment;  // indexed by line

    bool operator==(const SdrCertificate&) const = default;
};

/// A subfamily of lines whose complements jointly cover fewer points than
/// there are lines in it.
struct HallWitness {
    std::vector<LineIndex> line_subset;  // sorted
    std::size_t union_size = 0;
};

/// std::nullopt means the complement family satisfies Hall's condition.
using HallResult = std::optional<HallWitness>;

/// Decides Hall's condition through the deficiency of a maximum matching.
/// A failing result carries the Konig witness: every line reachable by an
/// alternating path from an unmatched line.
HallResult hall_check(const LinearSpace& ls);

/// Reference decision by scanning all 2^m subfamilies (m <= 20, else
/// std::out_of_range). Returns the first violating subfamily in bitmask order.
HallResult hall_check_exhaustive(const LinearSpace& ls);

/// Forces line `line` to be represented by `point` (point must be off the line).
struct SdrPin {
    LineIndex line = 0;
    PointIndex point = 0;
};

struct MatchingResult {
    std::optional<SdrCertificate> certificate;         // present iff every line is matched
    std::vector<std::optional<PointIndex>> matching;   // indexed by line
    std::size_t size = 0;
};

/// Maximum matching between lines and the points off them (Kuhn's augmenting
/// paths, lines in index order, points tried lowest first). With a pin the
/// matching runs on the reduced family (E - {z}) - l over the other lines.
MatchingResult find_sdr(const LinearSpace& ls, std::optional<SdrPin> pin = std::nullopt);

/// Re-checks a certificate from scratch. Throws std::out_of_range when the
/// certificate does not index into `ls`.
bool check_sdr(const LinearSpace& ls, const SdrCertificate& cert);

struct SdrSumReport {
    std::size_t sum_s = 0;
    std::size_t sum_k_assigned = 0;
    std::size_t sum_k_all = 0;
    bool chain_holds = false;     // sum_s <= sum_k_assigned <= sum_k_all
    bool per_line_holds = false;  // s_l <= k_a(l) for every l
    bool per_line_equal = false;  // s_l == k_a(l) for every l
    /// Only when m == n: all three sums equal and every per-line equality.
    std::optional<bool> square_equalities;
};

SdrSumReport sdr_sum_argument(const LinearSpace& ls, const SdrCertificate& cert);

/// Both sides of one inequality lhs <= rhs.
struct Inequality {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;

    bool holds() const noexcept { return lhs <= rhs; }
    bool tight() const noexcept { return lhs == rhs; }
};

/// Evaluations that only make sense once m == n.
struct SquareCaseTrace {
    std::vector<PointIndex> complement_set;  // Y = E - U
    Inequality ineq5;                        // (m-p) k_u <= sum_{z in Y} k_z
    std::int64_t ineq6_lhs = 0;              // sum_l s_l
    std::int64_t ineq6_mid = 0;              // sum_{z in Z} k_z with Z = Y + U
    std::int64_t ineq6_rhs = 0;              // sum_{z in E} k_z
    bool ku_equals_k_off_representatives = false;  // k_u == k_z for z not in U
    bool s_equals_ku_off_pencil = false;           // s_l == k_u for l not through u
    bool s_equals_k_pencil_pairs = false;          // s_l == k_z for l through u, z in U - l

    bool ineq6_holds() const noexcept { return ineq6_lhs <= ineq6_mid && ineq6_mid <= ineq6_rhs; }
    bool ineq6_tight() const noexcept { return ineq6_lhs == ineq6_mid && ineq6_mid == ineq6_rhs; }
};

/// The counting argument around a minimum-degree point u.
struct ProofTrace {
    PointIndex u = 0;
    std::size_t p = 0;                        // k_u
    std::vector<LineIndex> pencil_lines;      // lines through u
    std::vector<PointIndex> representatives;  // U: lowest point of l - {u} per pencil line
    Inequality ineq2;        // sum_{l off u} s_l <= (m-p) k_u
    Inequality ineq3;        // sum_{l through u} (p-1) s_l <= sum_{z in U} (p-1) k_z
    Inequality ineq4;        // sum_{l through u} s_l <= sum_{z in U} k_z
    Inequality ineq4_total;  // sum_l s_l <= (m-p) k_u + sum_{z in U} k_z
    std::optional<SquareCaseTrace> square;

    bool all_hold() const noexcept;
};

ProofTrace proof_trace_min_degree(const LinearSpace& ls);

struct CyclicRow {
    LineIndex line = 0;
    PointIndex next_representative = 0;
    std::size_t s = 0;
    std::size_t k = 0;
    bool holds = false;
};

struct CyclicCertificate {
    PointIndex u = 0;
    std::vector<LineIndex> order;
    std::vector<PointIndex> representatives;
    std::vector<CyclicRow> rows;
    std::size_t sum_s = 0;
    std::size_t sum_k = 0;
    bool rows_hold = false;
    bool sum_holds = false;
    std::optional<bool> square_equalities;  // only when m == n
};

/// Rows s_i <= k_{a_{i+1}} around the pencil of `u` (default: the
/// minimum-degree point). Throws std::out_of_range for a point outside the space.
CyclicCertificate cyclic_certificate(const LinearSpace& ls, std::optional<PointIndex> u = std::nullopt);

enum class BkcVariant { Ratio, Shifted };

struct BkcRow {
    LineIndex line = 0;
    PointIndex point = 0;
    mpq_class f;
    mpq_class g;
    bool le = false;
    bool eq = false;
};

struct BkcReport {
    BkcVariant variant = BkcVariant::Ratio;
    std::vector<BkcRow> rows;                  // non-incident pairs in (line, point) order
    std::optional<bool> pairwise_all_hold;     // F <= G everywhere; asserted only when m <= n
    bool pairwise_all_equal = false;
    mpq_class identity_sum;        // sum_z (m-k_z)/(m-k_z)
    mpq_class sum_inv_point;       // sum over non-incident pairs of 1/(m-k_z)
    mpq_class sum_inv_line;        // sum over non-incident pairs of 1/(m-s_l)
    mpq_class sum_line_ratio;      // sum_l (n-s_l)/(m-s_l)
    bool chain_holds = false;      // identity_sum == n == sum_inv_point >= sum_inv_line == sum_line_ratio
    mpq_class weighted_lhs;        // sum_l F(s_l)(n-s_l)
    mpq_class weighted_rhs;        // sum_z G(k_z)(m-k_z)
    std::optional<bool> square_equalities;  // only when m == n
};

/// Exact-rational evaluation of the weighted-sum argument.
/// Ratio: F(s) = s/(n-s), G(k) = k/(m-k). Shifted: F(s) = n/(n-s), G(k) = m/(m-k).
BkcReport bkc_verify(const LinearSpace& ls, BkcVariant variant);

}  // namespace linspace
