#pragma once

// Canonical instances and exhaustive enumeration of labeled linear spaces.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "linspace/incidence.hpp"

namespace linspace {

/// One line of n-1 points plus the n-1 two-point lines through the last
/// point. Throws ValidationError(TooFewPoints) for n < 3.
LinearSpace near_pencil(std::size_t n);

/// The plane over the integers mod p: points and lines are nonzero triples
/// whose first nonzero coordinate is 1, incident when the dot product
/// vanishes mod p. Throws std::invalid_argument unless p is prime.
LinearSpace projective_plane(std::size_t p);

bool is_prime(std::size_t p);

inline constexpr std::size_t kMaxEnumerationPoints = 8;

/// Search state of the enumerator. Points and lines are bitmasks.
struct EnumerationState {
    std::size_t n = 0;
    std::uint64_t covered = 0;        // bit pair_index(x, y) set once {x, y} is on a chosen line
    std::vector<std::uint32_t> lines; // chosen lines, pairwise without a common pair
    std::size_t cursor = 0;           // pair index of the smallest uncovered pair (or C(n,2) when done)
};

std::size_t pair_index(std::size_t n, PointIndex x, PointIndex y);

/// The state before any line is chosen. Throws std::out_of_range unless
/// 3 <= n <= 8.
EnumerationState initial_state(std::size_t n);

/// Children of `state`: one per admissible line through its smallest
/// uncovered pair, in lexicographic order of the line's extra points.
std::vector<EnumerationState> branches(const EnumerationState& state);

using SpaceSink = std::function<void(const LinearSpace&)>;

/// Emits every completion of `state` exactly once, depth first.
std::size_t enumerate_from(const EnumerationState& state, const SpaceSink& sink);

/// Emits every labeled linear space on {0, ..., n-1} exactly once, in a
/// fixed order. With jobs > 1 the top-level branches run on worker threads
/// and are emitted in branch order, so the output does not depend on jobs.
std::size_t enumerate_linear_spaces(std::size_t n, const SpaceSink& sink, std::size_t jobs = 1);

/// Isomorphism-invariant label: the lexicographically least sorted line list
/// over all relabelings that order points by (degree, sizes of the lines
/// through the point). Throws std::out_of_range for n > 8.
std::string canonical_form(const LinearSpace& ls);

/// Applies a point relabeling old -> perm[old].
IncidenceStructure relabel(const IncidenceStructure& s, const std::vector<PointIndex>& perm);

}  // namespace linspace
