#include "linspace/generators.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace linspace {

LinearSpace near_pencil(std::size_t n) {
    if (n < 3) throw ValidationError({.kind = ValidationErrorKind::TooFewPoints});
    IncidenceStructure s{n, {}};
    Line base;
    for (PointIndex z = 0; z + 1 < n; ++z) base.push_back(z);
    s.lines.push_back(base);
    for (PointIndex z = 0; z + 1 < n; ++z) s.lines.push_back({z, n - 1});
    return validate(s);
}

bool is_prime(std::size_t p) {
    if (p < 2) return false;
    for (std::size_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

LinearSpace projective_plane(std::size_t p) {
    if (!is_prime(p)) throw std::invalid_argument("NotPrime: " + std::to_string(p) + " is not a prime");

    struct Triple {
        std::size_t x, y, z;
    };
    std::vector<Triple> normalized;
    for (std::size_t x = 0; x < p; ++x) {
        for (std::size_t y = 0; y < p; ++y) {
            for (std::size_t z = 0; z < p; ++z) {
                const std::size_t lead = x != 0 ? x : (y != 0 ? y : z);
                if (lead == 1) normalized.push_back({x, y, z});
            }
        }
    }

    IncidenceStructure s{normalized.size(), {}};
    for (const Triple& line : normalized) {
        Line points;
        for (PointIndex i = 0; i < normalized.size(); ++i) {
            const Triple& pt = normalized[i];
            if ((line.x * pt.x + line.y * pt.y + line.z * pt.z) % p == 0) points.push_back(i);
        }
        s.lines.push_back(std::move(points));
    }
    return validate(s);
}

std::size_t pair_index(std::size_t n, PointIndex x, PointIndex y) {
    if (x > y) std::swap(x, y);
    // Rows of the strict upper triangle, row x holding n-1-x pairs.
    return x * (2 * n - x - 1) / 2 + (y - x - 1);
}

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

bool is_covered(const EnumerationState& st, PointIndex x, PointIndex y) {
    return (st.covered >> pair_index(st.n, x, y)) & 1u;
}

std::size_t first_uncovered(const EnumerationState& st) {
    const std::size_t total = pair_count(st.n);
    for (std::size_t i = 0; i < total; ++i) {
        if (!((st.covered >> i) & 1u)) return i;
    }
    return total;
}

std::pair<PointIndex, PointIndex> pair_at(std::size_t n, std::size_t index) {
    PointIndex x = 0;
    while (index >= n - 1 - x) {
        index -= n - 1 - x;
        ++x;
    }
    return {x, x + 1 + index};
}

EnumerationState with_line(const EnumerationState& st, std::uint32_t line) {
    EnumerationState next = st;
    for (PointIndex x = 0; x < st.n; ++x) {
        if (!(line >> x & 1u)) continue;
        for (PointIndex y = x + 1; y < st.n; ++y) {
            if (line >> y & 1u) next.covered |= std::uint64_t{1} << pair_index(st.n, x, y);
        }
    }
    next.lines.push_back(line);
    next.cursor = first_uncovered(next);
    return next;
}

// Visits every clique of the uncovered-pair graph that extends `members` by
// points of `candidates`, in lexicographic order of the added points.
template <typename Visit>
void extend_line(const EnumerationState& st, std::uint32_t members, std::uint32_t candidates, Visit&& visit) {
    visit(members);
    for (PointIndex w = 0; w < st.n; ++w) {
        if (!(candidates >> w & 1u)) continue;
        std::uint32_t rest = 0;
        for (PointIndex v = w + 1; v < st.n; ++v) {
            if ((candidates >> v & 1u) && !is_covered(st, v, w)) rest |= 1u << v;
        }
        extend_line(st, members | (1u << w), rest, visit);
    }
}

LinearSpace to_space(const EnumerationState& st) {
    IncidenceStructure s{st.n, {}};
    for (std::uint32_t mask : st.lines) {
        Line line;
        for (PointIndex z = 0; z < st.n; ++z) {
            if (mask >> z & 1u) line.push_back(z);
        }
        s.lines.push_back(std::move(line));
    }
    try {
        return validate(s);
    } catch (const ValidationError& e) {
        throw InvariantViolation(std::string("enumeration produced an invalid space: ") + e.what());
    }
}

}  // namespace

EnumerationState initial_state(std::size_t n) {
    if (n < 3 || n > kMaxEnumerationPoints) {
        throw std::out_of_range("enumeration supports 3 <= n <= " + std::to_string(kMaxEnumerationPoints));
    }
    return EnumerationState{n, 0, {}, 0};
}

std::vector<EnumerationState> branches(const EnumerationState& st) {
    std::vector<EnumerationState> out;
    if (st.cursor >= pair_count(st.n)) return out;
    const auto [x, y] = pair_at(st.n, st.cursor);
    const std::uint32_t everything = (1u << st.n) - 1;

    std::uint32_t compatible = 0;
    for (PointIndex w = 0; w < st.n; ++w) {
        if (w == x || w == y) continue;
        if (!is_covered(st, w, x) && !is_covered(st, w, y)) compatible |= 1u << w;
    }
    extend_line(st, (1u << x) | (1u << y), compatible, [&](std::uint32_t line) {
        if (line != everything) out.push_back(with_line(st, line));
    });
    return out;
}

namespace {

template <typename Leaf>
std::size_t walk(const EnumerationState& st, Leaf&& leaf) {
    if (st.cursor >= pair_count(st.n)) {
        leaf(st);
        return 1;
    }
    std::size_t count = 0;
    for (const auto& child : branches(st)) count += walk(child, leaf);
    return count;
}

}  // namespace

std::size_t enumerate_from(const EnumerationState& st, const SpaceSink& sink) {
    return walk(st, [&](const EnumerationState& leaf) { sink(to_space(leaf)); });
}

std::size_t enumerate_linear_spaces(std::size_t n, const SpaceSink& sink, std::size_t jobs) {
    const EnumerationState root = initial_state(n);
    if (jobs <= 1) return enumerate_from(root, sink);

    // Workers keep only the line masks of each completed state.
    const std::vector<EnumerationState> top = branches(root);
    std::vector<std::vector<std::vector<std::uint32_t>>> buffers(top.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (std::size_t j = 0; j < std::min(jobs, top.size()); ++j) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < top.size(); i = next++) {
                walk(top[i], [&](const EnumerationState& leaf) { buffers[i].push_back(leaf.lines); });
            }
        });
    }
    for (auto& w : workers) w.join();

    std::size_t count = 0;
    EnumerationState leaf = root;
    for (auto& buffer : buffers) {
        for (auto& lines : buffer) {
            leaf.lines = std::move(lines);
            sink(to_space(leaf));
        }
        count += buffer.size();
        std::vector<std::vector<std::uint32_t>>().swap(buffer);
    }
    return count;
}

IncidenceStructure relabel(const IncidenceStructure& s, const std::vector<PointIndex>& perm) {
    IncidenceStructure out{s.point_count, {}};
    for (const auto& line : s.lines) {
        Line mapped;
        for (PointIndex z : line) mapped.push_back(perm.at(z));
        out.lines.push_back(std::move(mapped));
    }
    return out;
}

std::string canonical_form(const LinearSpace& ls) {
    const std::size_t n = ls.point_count();
    if (n > kMaxEnumerationPoints) throw std::out_of_range("canonical_form supports at most 8 points");

    using Invariant = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Invariant> invariant(n);
    for (PointIndex z = 0; z < n; ++z) {
        invariant[z].first = ls.degree(z);
        for (LineIndex l : ls.pencil(z)) invariant[z].second.push_back(ls.size(l));
        std::sort(invariant[z].second.begin(), invariant[z].second.end());
    }
    std::vector<PointIndex> by_invariant(n);
    for (PointIndex z = 0; z < n; ++z) by_invariant[z] = z;
    std::stable_sort(by_invariant.begin(), by_invariant.end(),
                     [&](PointIndex a, PointIndex b) { return invariant[a] < invariant[b]; });

    // Blocks of equal invariant; new labels are handed out block by block.
    std::vector<std::vector<PointIndex>> blocks;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || invariant[by_invariant[i]] != invariant[by_invariant[i - 1]]) blocks.emplace_back();
        blocks.back().push_back(by_invariant[i]);
    }

    std::vector<std::uint32_t> best;
    std::vector<PointIndex> label(n);
    std::vector<std::uint32_t> encoded(ls.line_count());
    while (true) {
        std::size_t next_label = 0;
        for (const auto& block : blocks) {
            for (PointIndex z : block) label[z] = next_label++;
        }
        for (LineIndex l = 0; l < ls.line_count(); ++l) {
            std::uint32_t mask = 0;
            for (PointIndex z : ls.line(l)) mask |= 1u << label[z];
            encoded[l] = mask;
        }
        std::sort(encoded.begin(), encoded.end());
        if (best.empty() || encoded < best) best = encoded;

        std::size_t b = blocks.size();
        while (b > 0 && !std::next_permutation(blocks[b - 1].begin(), blocks[b - 1].end())) --b;
        if (b == 0) break;
    }

    std::string out = std::to_string(n) + ":";
    for (std::size_t i = 0; i < best.size(); ++i) {
        if (i) out += ',';
        for (PointIndex z = 0; z < n; ++z) {
            if (best[i] >> z & 1u) out += static_cast<char>('0' + z);
        }
    }
    return out;
}

}  // namespace linspace
