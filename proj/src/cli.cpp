#include "linspace/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include <CLI11.hpp>

#include "linspace/classify.hpp"
#include "linspace/exact_linalg.hpp"
#include "linspace/generators.hpp"
#include "linspace/hanani.hpp"
#include "linspace/io.hpp"
#include "linspace/matching.hpp"

namespace linspace::cli {

using nlohmann::json;

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

json fingerprint(const IncidenceStructure& s) {
    return {{"n", s.point_count}, {"m", s.lines.size()}, {"hash", content_hash(s)}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json validate_report(const LinearSpace& ls) {
    return {{"valid", true}, {"degree_profile", to_json(degree_profile(ls))}};
}

json certify_report(const LinearSpace& ls) {
    const std::size_t n = ls.point_count();
    const std::size_t m = ls.line_count();
    json j;

    const DoubleCount dc = double_count_check(ls);
    ensure(dc.equal, "double count: sum of line sizes differs from sum of degrees");
    j["double_count"] = to_json(dc);

    const DbeTable dbe = dbe_inequalities(ls);
    ensure(dbe.all_hold, "a de Bruijn-Erdos inequality failed");
    j["dbe_inequalities"] = to_json(dbe, false);

    const HallResult hall = hall_check(ls);
    ensure(hall.has_value() == (m > n), "Hall condition disagrees with m > n");
    j["hall"] = to_json(hall);

    const MatchingResult match = find_sdr(ls);
    ensure(match.size == std::min(m, n), "maximum matching size is not min(m, n)");
    j["matching"] = to_json(match);
    if (match.certificate) {
        const bool checked = check_sdr(ls, *match.certificate);
        ensure(checked, "SDR certificate failed independent re-check");
        j["check_sdr"] = checked;
        const SdrSumReport sum = sdr_sum_argument(ls, *match.certificate);
        ensure(sum.chain_holds && sum.per_line_holds, "SDR sum chain failed");
        ensure(sum.square_equalities.value_or(true), "SDR sums not all equal although m = n");
        j["sum_argument"] = to_json(sum);
    }

    const ProofTrace trace = proof_trace_min_degree(ls);
    ensure(trace.all_hold(), "minimum-degree proof trace has a failing inequality");
    j["proof_trace"] = to_json(trace);

    const CyclicCertificate cyc = cyclic_certificate(ls);
    ensure(cyc.rows_hold && cyc.sum_holds, "cyclic certificate row failed");
    ensure(cyc.square_equalities.value_or(true), "cyclic rows are not equalities although m = n");
    j["cyclic_certificate"] = to_json(cyc);
    return j;
}

json classify_report(const LinearSpace& ls) {
    json j;
    const Classification c = classify(ls);
    j["classification"] = to_json(c);
    j["lemma1"] = lemma1_check(ls);
    const Lemma2Result l2 = lemma2_check(ls);
    ensure(!l2.applicable || l2.verdict_matches, "square space with a degree-2 point is not a near-pencil");
    j["lemma2"] = {{"applicable", l2.applicable}, {"verdict_matches", l2.verdict_matches}};
    const IntersectionReport inter = pairwise_intersections(ls);
    ensure(ls.line_count() != ls.point_count() || inter.all_meet, "m = n but two lines are disjoint");
    j["pairwise_intersections"] = to_json(inter);
    return j;
}

json gram_linear_report(const LinearSpace& ls) {
    json j = to_json(gram_report(ls));
    const std::size_t incidence_rank = rank(incidence_matrix(ls));
    ensure(incidence_rank == ls.point_count(), "incidence matrix has rank below n");
    j["incidence_rank"] = incidence_rank;
    j["m_ge_n"] = ls.line_count() >= ls.point_count();
    return j;
}

json gram_design_report(const LambdaDesign& d) {
    json j = to_json(d.report);
    j["incidence_rank"] = d.incidence_rank;
    j["m_ge_n"] = d.lines_at_least_points();
    return j;
}

json hanani_report(const LinearSpace& ls) {
    json j;
    const HananiReport q = hanani_quantities(ls);
    j["hanani"] = to_json(q);
    const HananiLemma lemma = hanani_lemma(ls);
    ensure(lemma.all_hold, "Hanani's lemma failed for a point of L");
    j["lemma_all_hold"] = lemma.all_hold;
    const HananiBounds bounds = hanani_bounds(ls);
    ensure(bounds.lower_bound_holds && bounds.p_ge_n, "Hanani lower bound on p failed");
    if (bounds.derived) {
        ensure(bounds.derived->n_upper_holds && bounds.derived->n_lower_holds,
               "Hanani estimates of n-1 failed under their hypotheses");
    }
    j["bounds"] = to_json(bounds);
    j["min_degree_bounds"] = to_json(min_degree_bounds(ls));
    return j;
}

json bkc_report(const LinearSpace& ls, BkcVariant variant) {
    const BkcReport r = bkc_verify(ls, variant);
    ensure(r.chain_holds, "weighted-sum chain failed");
    ensure(r.pairwise_all_hold.value_or(true), "F(s) <= G(k) failed on a non-incident pair");
    ensure(r.square_equalities.value_or(true), "weighted sums not pairwise equal although m = n");
    return to_json(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite linear spaces: validation, certificates of m >= n, and the equality case", "linspace"};
    app.require_subcommand(1);

    std::string file = "-";
    std::size_t lambda = 1;
    std::string variant = "ratio";
    std::string gen_kind;
    std::size_t gen_param = 0;
    std::size_t enum_n = 0;
    bool enum_canonical = false;
    bool enum_json = false;
    std::size_t enum_jobs = 1;

    auto* validate_cmd = app.add_subcommand("validate", "Check the linear-space axioms");
    auto* certify_cmd = app.add_subcommand("certify", "Counting, SDR, proof-trace and cyclic certificates");
    auto* classify_cmd = app.add_subcommand("classify", "Near-pencil / projective plane taxonomy");
    auto* gram_cmd = app.add_subcommand("gram", "Exact Gram determinant, rank and definiteness");
    auto* hanani_cmd = app.add_subcommand("hanani", "Hanani's pencil quantities and bounds");
    auto* bkc_cmd = app.add_subcommand("bkc", "Weighted-sum verifier");
    for (auto* cmd : {validate_cmd, certify_cmd, classify_cmd, gram_cmd, hanani_cmd, bkc_cmd}) {
        cmd->add_option("file", file, "Instance file, '-' for standard input")->required();
    }
    gram_cmd->add_option("--lambda", lambda, "Pairs lie on exactly lambda lines")->check(CLI::PositiveNumber);
    bkc_cmd->add_option("--variant", variant, "ratio or shifted")->check(CLI::IsMember({"ratio", "shifted"}));

    auto* gen_cmd = app.add_subcommand("gen", "Print a near-pencil or a prime-order plane");
    gen_cmd->add_option("kind", gen_kind, "near-pencil or plane")
        ->required()
        ->check(CLI::IsMember({"near-pencil", "plane"}));
    gen_cmd->add_option("param", gen_param, "Points (near-pencil) or prime order (plane)")->required();

    auto* enum_cmd = app.add_subcommand("enum", "Enumerate labeled linear spaces on n points");
    enum_cmd->add_option("n", enum_n, "Number of points (3..8)")->required();
    enum_cmd->add_flag("--canonical", enum_canonical, "One representative per isomorphism class");
    enum_cmd->add_flag("--json", enum_json, "Emit a JSON array");
    enum_cmd->add_option("--jobs", enum_jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    json report{{"command", name}};

    try {
        if (cmd == gen_cmd) {
            const LinearSpace ls = gen_kind == "plane" ? projective_plane(gen_param) : near_pencil(gen_param);
            out << to_text(ls.structure());
            return kExitOk;
        }

        if (cmd == enum_cmd) {
            std::unordered_set<std::string> seen;
            json array = json::array();
            auto sink = [&](const LinearSpace& ls) {
                ensure(ls.line_count() >= ls.point_count(), "enumerated space has fewer lines than points");
                std::string label;
                if (enum_canonical) {
                    label = canonical_form(ls);
                    if (!seen.insert(label).second) return;
                }
                if (enum_json) {
                    json item = to_json(ls.structure());
                    if (enum_canonical) item["canonical"] = label;
                    array.push_back(std::move(item));
                } else {
                    out << to_line(ls.structure()) << '\n';
                }
            };
            const std::size_t labeled = enumerate_linear_spaces(enum_n, sink, enum_jobs);
            if (enum_json) {
                out << array.dump() << '\n';
            } else {
                out << "# labeled " << labeled;
                if (enum_canonical) out << " classes " << seen.size();
                out << '\n';
            }
            return kExitOk;
        }

        const IncidenceStructure raw = parse_instance(read_source(file, in));

        if (cmd == gram_cmd && lambda > 1) {
            const LambdaDesign design = ryser_validate(raw, lambda);
            report["instance"] = fingerprint(design.structure);
            report["gram"] = gram_design_report(design);
        } else {
            const LinearSpace ls = validate(raw);
            report["instance"] = fingerprint(ls.structure());
            if (cmd == validate_cmd) report["validation"] = validate_report(ls);
            if (cmd == certify_cmd) report["certificates"] = certify_report(ls);
            if (cmd == classify_cmd) report.update(classify_report(ls));
            if (cmd == gram_cmd) report["gram"] = gram_linear_report(ls);
            if (cmd == hanani_cmd) report.update(hanani_report(ls));
            if (cmd == bkc_cmd) {
                report["bkc"] = bkc_report(ls, variant == "shifted" ? BkcVariant::Shifted : BkcVariant::Ratio);
            }
        }
        report["verdict"] = "ok";
        emit(out, report);
        return kExitOk;
    } catch (const InvariantViolation& e) {
        report["verdict"] = "internal-assertion-failure";
        report["error"] = e.what();
        emit(out, report);
        err << "internal assertion failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const ValidationError& e) {
        report["verdict"] = "invalid-input";
        report["error"] = to_json(e.detail());
        emit(out, report);
        err << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        // Parse errors, unreadable files, NotPrime, out-of-range sizes.
        report["verdict"] = "invalid-input";
        report["error"] = {{"kind", "InvalidArgument"}, {"message", e.what()}};
        emit(out, report);
        err << e.what() << '\n';
        return kExitInvalidInput;
    }
}

}  // namespace linspace::cli
