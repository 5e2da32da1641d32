#pragma once

// Incidence data model for finite linear spaces: raw structures, the
// validated LinearSpace, and the elementary counting identities.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "linspace/errors.hpp"

namespace linspace {

using PointIndex = std::size_t;
using LineIndex = std::size_t;
using Line = std::vector<PointIndex>;

/// Points {0, ..., point_count-1} and an ordered family of lines. Unvalidated.
struct IncidenceStructure {
    std::size_t point_count = 0;
    std::vector<Line> lines;

    bool operator==(const IncidenceStructure&) const = default;
};

/// Drops every line with at most one point; surviving lines keep their order.
IncidenceStructure normalize(const IncidenceStructure& raw);

/// A validated linear space. Immutable; only `validate` constructs one.
///
/// Line indices refer to the normalized line list, so they match the input
/// order once lines of size <= 1 are discarded. Each line is kept sorted.
class LinearSpace {
public:
    std::size_t point_count() const noexcept { return point_count_; }
    std::size_t line_count() const noexcept { return lines_.size(); }

    const std::vector<Line>& lines() const noexcept { return lines_; }
    const Line& line(LineIndex l) const { return lines_.at(l); }

    bool contains(LineIndex l, PointIndex z) const { return incidence_[l * point_count_ + z] != 0; }

    /// The unique line through two distinct points.
    LineIndex line_through(PointIndex x, PointIndex y) const;

    std::span<const std::size_t> degrees() const noexcept { return degrees_; }
    std::span<const std::size_t> sizes() const noexcept { return sizes_; }
    std::size_t degree(PointIndex z) const { return degrees_.at(z); }
    std::size_t size(LineIndex l) const { return sizes_.at(l); }

    /// Lines through `u`, in line-index order.
    std::vector<LineIndex> pencil(PointIndex u) const;

    IncidenceStructure structure() const { return {point_count_, lines_}; }

    friend LinearSpace validate(const IncidenceStructure& raw);

private:
    LinearSpace() = default;

    std::size_t point_count_ = 0;
    std::vector<Line> lines_;
    std::vector<LineIndex> pair_line_;       // n*n, row-major; diagonal unused
    std::vector<std::uint8_t> incidence_;    // m*n, row-major by line
    std::vector<std::size_t> degrees_;
    std::vector<std::size_t> sizes_;
};

/// Normalizes `raw` and checks the linear-space axioms.
/// Throws ValidationError on the first violation found.
LinearSpace validate(const IncidenceStructure& raw);

struct DegreeProfile {
    std::vector<std::size_t> k;
    std::vector<std::size_t> s;
    PointIndex min_degree_point = 0;  // lowest index among the minimizers
};

DegreeProfile degree_profile(const LinearSpace& ls);

/// Lowest-index point of minimum degree.
PointIndex min_degree_point(const LinearSpace& ls);

struct DoubleCount {
    std::size_t sum_s = 0;
    std::size_t sum_k = 0;
    bool equal = false;
};

DoubleCount double_count_check(const LinearSpace& ls);

struct DbeRow {
    LineIndex line = 0;
    PointIndex point = 0;
    std::size_t line_size = 0;
    std::size_t point_degree = 0;
    bool holds = false;
};

struct DbeTable {
    std::vector<DbeRow> rows;  // one per non-incident (line, point), ordered by (line, point)
    bool all_hold = true;
};

/// Evaluates s_l <= k_z for every point z off every line l.
DbeTable dbe_inequalities(const LinearSpace& ls);

}  // namespace linspace
