#include "linspace/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <sstream>

namespace linspace {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::size_t parse_index(std::string_view token, std::size_t line_no) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                         std::string(token) + "'");
    }
    try {
        return static_cast<std::size_t>(std::stoull(std::string(token)));
    } catch (const std::out_of_range&) {
        throw ParseError("line " + std::to_string(line_no) + ": integer out of range");
    }
}

Line parse_points(std::string_view text, std::size_t line_no) {
    Line out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) out.push_back(parse_index(token, line_no));
    return out;
}

IncidenceStructure parse_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc.contains("lines")) {
        throw ParseError("JSON instance needs \"points\" and \"lines\"");
    }
    const json& points = doc["points"];
    if (!points.is_number_unsigned() && !(points.is_number_integer() && points.get<std::int64_t>() >= 0)) {
        throw ParseError("\"points\" must be a nonnegative integer");
    }
    IncidenceStructure s;
    s.point_count = points.get<std::size_t>();
    if (!doc["lines"].is_array()) throw ParseError("\"lines\" must be an array");
    for (const json& line : doc["lines"]) {
        if (!line.is_array()) throw ParseError("every line must be an array of point indices");
        Line points_on_line;
        for (const json& z : line) {
            if (!z.is_number_integer() || z.get<std::int64_t>() < 0) {
                throw ParseError("point indices must be nonnegative integers");
            }
            points_on_line.push_back(z.get<std::size_t>());
        }
        s.lines.push_back(std::move(points_on_line));
    }
    return s;
}

IncidenceStructure parse_one_line(std::string_view content, std::size_t line_no) {
    const auto colon = content.find(':');
    IncidenceStructure s;
    s.point_count = parse_index(trim(content.substr(0, colon)), line_no);
    std::string_view rest = content.substr(colon + 1);
    while (true) {
        const auto bar = rest.find('|');
        const std::string_view piece = trim(rest.substr(0, bar));
        if (!piece.empty() || bar != std::string_view::npos) s.lines.push_back(parse_points(piece, line_no));
        if (bar == std::string_view::npos) break;
        rest.remove_prefix(bar + 1);
    }
    return s;
}

IncidenceStructure parse_text(std::string_view text) {
    IncidenceStructure s;
    bool have_count = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto end = text.find('\n');
        const std::string_view raw = text.substr(0, end);
        text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
        ++line_no;

        const std::string_view content = trim(raw);
        if (content.empty() || content.front() == '#') continue;
        if (!have_count) {
            if (content.find(':') != std::string_view::npos) {
                s = parse_one_line(content, line_no);
            } else {
                s.point_count = parse_index(content, line_no);
            }
            have_count = true;
            continue;
        }
        s.lines.push_back(parse_points(content, line_no));
    }
    if (!have_count) throw ParseError("empty instance: expected the number of points");
    return s;
}

}  // namespace

IncidenceStructure parse_instance(std::string_view text) {
    const std::string_view content = trim(text);
    if (!content.empty() && content.front() == '{') return parse_json(content);
    return parse_text(text);
}

std::string to_text(const IncidenceStructure& s) {
    std::string out = std::to_string(s.point_count) + "\n";
    for (const auto& line : s.lines) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(line[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_line(const IncidenceStructure& s) {
    std::string out = std::to_string(s.point_count) + ":";
    for (std::size_t l = 0; l < s.lines.size(); ++l) {
        out += l ? " |" : "";
        for (PointIndex z : s.lines[l]) out += " " + std::to_string(z);
    }
    return out;
}

json to_json(const IncidenceStructure& s) { return {{"points", s.point_count}, {"lines", s.lines}}; }

std::string content_hash(const IncidenceStructure& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_line(s)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string rational_string(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

json to_json(const ValidationDetail& d) {
    using K = ValidationErrorKind;
    json j{{"kind", to_string(d.kind)}};
    switch (d.kind) {
        case K::TooFewPoints: break;
        case K::PointOutOfRange:
        case K::RepeatedPoint: j["line"] = d.line; j["point"] = d.x; break;
        case K::LineEqualsWholeSet: j["line"] = d.line; break;
        case K::PairUncovered: j["pair"] = {d.x, d.y}; break;
        case K::PairMultiplyCovered: j["pair"] = {d.x, d.y}; j["lines"] = {d.line, d.other_line}; break;
        case K::PairCoverageNotLambda: j["pair"] = {d.x, d.y}; j["count"] = d.count; break;
        case K::DegreeNotAboveLambda: j["point"] = d.x; break;
    }
    return j;
}

json to_json(const DegreeProfile& p) {
    return {{"k", p.k}, {"s", p.s}, {"min_degree_point", p.min_degree_point}};
}

json to_json(const DoubleCount& d) { return {{"sum_s", d.sum_s}, {"sum_k", d.sum_k}, {"equal", d.equal}}; }

json to_json(const DbeTable& t, bool include_rows) {
    json j{{"row_count", t.rows.size()}, {"all_hold", t.all_hold}};
    if (include_rows) {
        json rows = json::array();
        for (const auto& r : t.rows) {
            rows.push_back({{"line", r.line}, {"point", r.point}, {"s", r.line_size}, {"k", r.point_degree},
                            {"holds", r.holds}});
        }
        j["rows"] = std::move(rows);
    }
    return j;
}

json to_json(const SdrCertificate& c) {
    json sdr = json::object();
    for (std::size_t l = 0; l < c.assignment.size(); ++l) sdr[std::to_string(l)] = c.assignment[l];
    return {{"sdr", sdr}};
}

json to_json(const HallResult& h) {
    if (!h) return {{"hall_condition", true}};
    return {{"hall_condition", false}, {"witness", {{"lines", h->line_subset}, {"union_size", h->union_size}}}};
}

json to_json(const MatchingResult& r) {
    json j{{"size", r.size}, {"complete", r.certificate.has_value()}};
    if (r.certificate) {
        j.update(to_json(*r.certificate));
    } else {
        json partial = json::object();
        for (std::size_t l = 0; l < r.matching.size(); ++l) {
            if (r.matching[l]) partial[std::to_string(l)] = *r.matching[l];
        }
        j["max_matching"] = partial;
    }
    return j;
}

json to_json(const SdrSumReport& r) {
    json j{{"sum_s", r.sum_s},
           {"sum_k_assigned", r.sum_k_assigned},
           {"sum_k_all", r.sum_k_all},
           {"chain_holds", r.chain_holds},
           {"per_line_holds", r.per_line_holds},
           {"per_line_equal", r.per_line_equal}};
    if (r.square_equalities) j["square_equalities"] = *r.square_equalities;
    return j;
}

namespace {

void put(json& j, const std::string& slot, const Inequality& q) {
    j[slot + "_lhs"] = q.lhs;
    j[slot + "_rhs"] = q.rhs;
    j[slot + "_holds"] = q.holds();
    j[slot + "_equal"] = q.tight();
}

}  // namespace

json to_json(const ProofTrace& t) {
    json j{{"u", t.u}, {"p", t.p}, {"pencil_lines", t.pencil_lines}, {"representatives", t.representatives}};
    put(j, "ineq2", t.ineq2);
    put(j, "ineq3", t.ineq3);
    put(j, "ineq4", t.ineq4);
    put(j, "ineq4_total", t.ineq4_total);
    if (t.square) {
        const auto& sq = *t.square;
        j["complement_set"] = sq.complement_set;
        put(j, "ineq5", sq.ineq5);
        j["ineq6_lhs"] = sq.ineq6_lhs;
        j["ineq6_mid"] = sq.ineq6_mid;
        j["ineq6_rhs"] = sq.ineq6_rhs;
        j["ineq6_holds"] = sq.ineq6_holds();
        j["ineq6_equal"] = sq.ineq6_tight();
        j["ku_equals_k_off_representatives"] = sq.ku_equals_k_off_representatives;
        j["s_equals_ku_off_pencil"] = sq.s_equals_ku_off_pencil;
        j["s_equals_k_pencil_pairs"] = sq.s_equals_k_pencil_pairs;
    }
    j["all_hold"] = t.all_hold();
    return j;
}

json to_json(const CyclicCertificate& c) {
    json rows = json::array();
    for (const auto& r : c.rows) {
        rows.push_back({{"line", r.line}, {"next_representative", r.next_representative}, {"s", r.s}, {"k", r.k},
                        {"holds", r.holds}});
    }
    json j{{"u", c.u},           {"order", c.order},       {"representatives", c.representatives},
           {"rows", rows},       {"sum_s", c.sum_s},       {"sum_k", c.sum_k},
           {"rows_hold", c.rows_hold}, {"sum_holds", c.sum_holds}};
    if (c.square_equalities) j["square_equalities"] = *c.square_equalities;
    return j;
}

json to_json(const BkcReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"line", row.line}, {"point", row.point}, {"F", rational_string(row.f)},
                        {"G", rational_string(row.g)}, {"le", row.le}, {"eq", row.eq}});
    }
    json j{{"variant", r.variant == BkcVariant::Ratio ? "ratio" : "shifted"},
           {"pairwise_rows", rows},
           {"pairwise_all_equal", r.pairwise_all_equal},
           {"chain_values",
            {{"identity_sum", rational_string(r.identity_sum)},
             {"sum_inv_point", rational_string(r.sum_inv_point)},
             {"sum_inv_line", rational_string(r.sum_inv_line)},
             {"sum_line_ratio", rational_string(r.sum_line_ratio)},
             {"holds", r.chain_holds}}},
           {"weighted_lhs", rational_string(r.weighted_lhs)},
           {"weighted_rhs", rational_string(r.weighted_rhs)}};
    j["pairwise_all_hold"] = r.pairwise_all_hold ? json(*r.pairwise_all_hold) : json(nullptr);
    if (r.square_equalities) j["square_equalities"] = *r.square_equalities;
    return j;
}

json to_json(const Classification& c) {
    json j{{"verdict", to_string(c.verdict)}};
    if (c.verdict == Verdict::Excess) j["surplus"] = c.surplus;
    if (c.k) {
        j["k"] = *c.k;
        j["order"] = *c.order;
    }
    if (c.near_pencil) {
        j["long_line"] = c.near_pencil->long_line;
        j["apex"] = c.near_pencil->apex;
    }
    return j;
}

json to_json(const IntersectionReport& r) {
    json pairs = json::array();
    for (const auto& [a, b] : r.disjoint_pairs) pairs.push_back({a, b});
    return {{"all_meet", r.all_meet}, {"disjoint_pairs", pairs}};
}

json to_json(const GramReport& r) {
    return {{"det", r.det_elimination.get_str()},
            {"det_closed_form", rational_string(r.det_closed_form)},
            {"rank", r.rank},
            {"positive_definite", r.positive_definite},
            {"lambda", r.lambda}};
}

json to_json(const HananiReport& r) {
    json rows = json::array();
    for (const auto& row : r.lemma_rows) {
        rows.push_back({{"point", row.point}, {"lhs", rational_string(row.lhs)}, {"rhs", rational_string(row.rhs)},
                        {"holds", row.holds}});
    }
    return {{"L", r.longest}, {"a", r.a}, {"K", r.second}, {"b", r.b}, {"pencil", r.pencil}, {"p", r.p},
            {"lemma_rows", rows}};
}

json to_json(const HananiBounds& b) {
    json j{{"lower_bound", rational_string(b.lower_bound)}, {"lower_bound_holds", b.lower_bound_holds}, {"p_ge_n", b.p_ge_n}};
    if (b.equality_case) {
        const auto& e = *b.equality_case;
        j["equality_case"] = {{"pencil_is_all_lines", e.pencil_is_all_lines},
                              {"pencil_lines_have_a_points", e.pencil_lines_have_a_points},
                              {"near_pencil", e.near_pencil},
                              {"verdict", to_string(e.verdict)}};
    }
    if (b.derived) {
        const auto& d = *b.derived;
        j["derived_steps"] = {{"n_upper_lhs", d.n_upper_lhs.get_str()}, {"n_upper_rhs", d.n_upper_rhs.get_str()},
                              {"n_upper_holds", d.n_upper_holds},       {"n_lower_lhs", d.n_lower_lhs.get_str()},
                              {"n_lower_rhs", d.n_lower_rhs.get_str()}, {"n_lower_holds", d.n_lower_holds}};
    }
    return j;
}

json to_json(const MinDegreeBoundsReport& r) {
    json j{{"u", r.u},
           {"k", r.k},
           {"L", r.longest},
           {"a", r.a},
           {"p", r.p},
           {"branch", r.branch == MinDegreeBranch::DegreeAtLeastLongest ? "k>=a" : "k<a"},
           {"u_on_L", r.u_on_longest},
           {"n_bound", r.n_bound.get_str()},
           {"p_bound", r.p_bound.get_str()},
           {"n_bound_holds", r.n_bound_holds},
           {"p_bound_holds", r.p_bound_holds},
           {"equality_chain", r.equality_chain()}};
    if (r.second_line) {
        j["M"] = *r.second_line;
        j["a_prime"] = *r.a_prime;
    }
    return j;
}

SdrCertificate sdr_from_json(const json& j, std::size_t line_count) {
    const json& sdr = j.contains("sdr") ? j.at("sdr") : j;
    if (!sdr.is_object()) throw ParseError("certificate must be an object keyed by line index");
    SdrCertificate cert;
    cert.assignment.assign(line_count, 0);
    std::vector<bool> seen(line_count, false);
    for (const auto& [key, value] : sdr.items()) {
        const std::size_t l = parse_index(key, 0);
        if (l >= line_count) throw std::out_of_range("certificate names line " + key);
        if (!value.is_number_unsigned()) throw ParseError("representatives must be nonnegative integers");
        cert.assignment[l] = value.get<std::size_t>();
        seen[l] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw std::out_of_range("certificate does not assign every line");
    }
    return cert;
}

}  // namespace linspace
