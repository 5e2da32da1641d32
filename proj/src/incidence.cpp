#include "linspace/incidence.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace linspace {

std::string_view to_string(ValidationErrorKind kind) {
    switch (kind) {
        case ValidationErrorKind::TooFewPoints: return "TooFewPoints";
        case ValidationErrorKind::PointOutOfRange: return "PointOutOfRange";
        case ValidationErrorKind::RepeatedPoint: return "RepeatedPoint";
        case ValidationErrorKind::LineEqualsWholeSet: return "LineEqualsWholeSet";
        case ValidationErrorKind::PairUncovered: return "PairUncovered";
        case ValidationErrorKind::PairMultiplyCovered: return "PairMultiplyCovered";
        case ValidationErrorKind::PairCoverageNotLambda: return "PairCoverageNotLambda";
        case ValidationErrorKind::DegreeNotAboveLambda: return "DegreeNotAboveLambda";
    }
    return "Unknown";
}

namespace {

std::string describe(const ValidationDetail& d) {
    using K = ValidationErrorKind;
    std::string msg(to_string(d.kind));
    auto s = [](std::size_t v) { return std::to_string(v); };
    switch (d.kind) {
        case K::TooFewPoints: msg += ": a linear space needs at least 3 points"; break;
        case K::PointOutOfRange: msg += ": line " + s(d.line) + " has point " + s(d.x); break;
        case K::RepeatedPoint: msg += ": line " + s(d.line) + " repeats point " + s(d.x); break;
        case K::LineEqualsWholeSet: msg += ": line " + s(d.line) + " contains every point"; break;
        case K::PairUncovered: msg += ": no line contains {" + s(d.x) + ", " + s(d.y) + "}"; break;
        case K::PairMultiplyCovered:
            msg += ": {" + s(d.x) + ", " + s(d.y) + "} lies on lines " + s(d.line) + " and " + s(d.other_line);
            break;
        case K::PairCoverageNotLambda:
            msg += ": {" + s(d.x) + ", " + s(d.y) + "} lies on " + s(d.count) + " lines";
            break;
        case K::DegreeNotAboveLambda: msg += ": point " + s(d.x) + " is on too few lines"; break;
    }
    return msg;
}

constexpr LineIndex kNoLine = std::numeric_limits<LineIndex>::max();

}  // namespace

ValidationError::ValidationError(ValidationDetail detail)
    : std::runtime_error(describe(detail)), detail_(detail) {}

IncidenceStructure normalize(const IncidenceStructure& raw) {
    IncidenceStructure out{raw.point_count, {}};
    for (const auto& line : raw.lines) {
        if (line.size() >= 2) out.lines.push_back(line);
    }
    return out;
}

LinearSpace validate(const IncidenceStructure& raw) {
    using K = ValidationErrorKind;
    const std::size_t n = raw.point_count;
    if (n < 3) throw ValidationError({.kind = K::TooFewPoints});

    for (LineIndex l = 0; l < raw.lines.size(); ++l) {
        std::vector<std::uint8_t> seen(n, 0);
        for (PointIndex z : raw.lines[l]) {
            if (z >= n) throw ValidationError({.kind = K::PointOutOfRange, .x = z, .line = l});
            if (seen[z]++) throw ValidationError({.kind = K::RepeatedPoint, .x = z, .line = l});
        }
    }

    LinearSpace ls;
    ls.point_count_ = n;
    ls.lines_ = normalize(raw).lines;
    for (auto& line : ls.lines_) std::sort(line.begin(), line.end());

    const std::size_t m = ls.lines_.size();
    for (LineIndex l = 0; l < m; ++l) {
        if (ls.lines_[l].size() == n) throw ValidationError({.kind = K::LineEqualsWholeSet, .line = l});
    }

    ls.pair_line_.assign(n * n, kNoLine);
    for (LineIndex l = 0; l < m; ++l) {
        const Line& line = ls.lines_[l];
        for (std::size_t i = 0; i < line.size(); ++i) {
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                const PointIndex x = line[i], y = line[j];
                LineIndex& slot = ls.pair_line_[x * n + y];
                if (slot != kNoLine) {
                    throw ValidationError(
                        {.kind = K::PairMultiplyCovered, .x = x, .y = y, .line = slot, .other_line = l});
                }
                slot = l;
                ls.pair_line_[y * n + x] = l;
            }
        }
    }
    for (PointIndex x = 0; x < n; ++x) {
        for (PointIndex y = x + 1; y < n; ++y) {
            if (ls.pair_line_[x * n + y] == kNoLine) throw ValidationError({.kind = K::PairUncovered, .x = x, .y = y});
        }
    }

    ls.incidence_.assign(m * n, 0);
    ls.degrees_.assign(n, 0);
    ls.sizes_.resize(m);
    for (LineIndex l = 0; l < m; ++l) {
        ls.sizes_[l] = ls.lines_[l].size();
        for (PointIndex z : ls.lines_[l]) {
            ls.incidence_[l * n + z] = 1;
            ++ls.degrees_[z];
        }
    }
    return ls;
}

LineIndex LinearSpace::line_through(PointIndex x, PointIndex y) const {
    if (x >= point_count_ || y >= point_count_ || x == y) {
        throw std::out_of_range("line_through needs two distinct points of the space");
    }
    return pair_line_[x * point_count_ + y];
}

std::vector<LineIndex> LinearSpace::pencil(PointIndex u) const {
    std::vector<LineIndex> out;
    for (LineIndex l = 0; l < lines_.size(); ++l) {
        if (contains(l, u)) out.push_back(l);
    }
    return out;
}

PointIndex min_degree_point(const LinearSpace& ls) {
    const auto k = ls.degrees();
    return static_cast<PointIndex>(std::min_element(k.begin(), k.end()) - k.begin());
}

DegreeProfile degree_profile(const LinearSpace& ls) {
    DegreeProfile out;
    out.k.assign(ls.degrees().begin(), ls.degrees().end());
    out.s.assign(ls.sizes().begin(), ls.sizes().end());
    out.min_degree_point = min_degree_point(ls);
    return out;
}

DoubleCount double_count_check(const LinearSpace& ls) {
    DoubleCount out;
    for (std::size_t s : ls.sizes()) out.sum_s += s;
    for (std::size_t k : ls.degrees()) out.sum_k += k;
    out.equal = out.sum_s == out.sum_k;
    return out;
}

DbeTable dbe_inequalities(const LinearSpace& ls) {
    DbeTable table;
    for (LineIndex l = 0; l < ls.line_count(); ++l) {
        for (PointIndex z = 0; z < ls.point_count(); ++z) {
            if (ls.contains(l, z)) continue;
            DbeRow row{l, z, ls.size(l), ls.degree(z), ls.size(l) <= ls.degree(z)};
            table.all_hold = table.all_hold && row.holds;
            table.rows.push_back(row);
        }
    }
    return table;
}

}  // namespace linspace
