#pragma once

// Taxonomy of the equality case m == n: near-pencil or projective plane.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "linspace/incidence.hpp"

namespace linspace {

enum class Verdict { Excess, NearPencil, ProjectivePlane, Both };

std::string_view to_string(Verdict v);

struct NearPencilWitness {
    LineIndex long_line = 0;  // the line with n-1 points
    PointIndex apex = 0;      // the point off it
};

struct Classification {
    Verdict verdict = Verdict::Excess;
    std::size_t surplus = 0;                      // m - n
    std::optional<NearPencilWitness> near_pencil;
    std::optional<std::size_t> k;                 // points per line of the plane
    std::optional<std::size_t> order;             // k - 1

    bool is_near_pencil() const noexcept { return verdict == Verdict::NearPencil || verdict == Verdict::Both; }
    bool is_projective_plane() const noexcept {
        return verdict == Verdict::ProjectivePlane || verdict == Verdict::Both;
    }
};

/// Searches every line for a near-pencil witness (no canonical ordering assumed).
std::optional<NearPencilWitness> find_near_pencil(const LinearSpace& ls);

/// Excess when m > n; otherwise NearPencil, ProjectivePlane or Both (the
/// triangle). Throws InvariantViolation for m < n or an unclassifiable square space.
Classification classify(const LinearSpace& ls);

/// True iff all s_l and k_z share one value k; then n == k(k-1)+1 is enforced.
bool lemma1_check(const LinearSpace& ls);

struct Lemma2Result {
    bool applicable = false;       // m == n and some point has degree 2
    bool verdict_matches = false;  // classify() found a near-pencil
};

Lemma2Result lemma2_check(const LinearSpace& ls);

struct IntersectionReport {
    bool all_meet = false;
    std::vector<std::pair<LineIndex, LineIndex>> disjoint_pairs;
};

/// Checks every pair of distinct lines for a common point. Two lines sharing
/// two points raise InvariantViolation.
IntersectionReport pairwise_intersections(const LinearSpace& ls);

}  // namespace linspace
