#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "linspace/generators.hpp"
#include "linspace/incidence.hpp"

namespace fixtures {

using namespace linspace;

inline LinearSpace triangle() { return validate({3, {{0, 1}, {0, 2}, {1, 2}}}); }

/// Every pair of 4 points is a line: m = 6 > n = 4.
inline LinearSpace all_pairs4() { return validate({4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}); }

inline LinearSpace fano() { return projective_plane(2); }

inline std::vector<LinearSpace> census(std::size_t n) {
    std::vector<LinearSpace> out;
    enumerate_linear_spaces(n, [&](const LinearSpace& ls) { out.push_back(ls); });
    return out;
}

inline std::vector<PointIndex> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<PointIndex> perm(n);
    std::iota(perm.begin(), perm.end(), PointIndex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace fixtures
