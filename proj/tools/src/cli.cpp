#include "splicekit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>

#include "splicekit/splicekit.hpp"

namespace splicekit::cli {

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_invalid = 2;

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    buffer << file.rdbuf();
    return buffer.str();
}

std::string end_label(const SpliceDiagram& d, EdgeEnd end) { return d.id(end.vertex) + "," + d.edge_label(end.edge); }

std::string ends_list(const SpliceDiagram& d, const std::vector<EdgeEnd>& ends) {
    std::string out;
    for (const auto& end : ends) {
        if (!out.empty()) out += ' ';
        out += d.edge_label(end.edge) + "=" + to_string(d.weight(end));
    }
    return out;
}

std::string tuple_text(const BrieskornTuple& t) {
    std::string out;
    for (const auto& a : t.alphas()) out += (out.empty() ? "" : ",") + to_string(a);
    return out;
}

Report validate(const SpliceDiagram& d) {
    Report r{"validate", "valid", {}, {}, std::nullopt};
    r.numbers["nodes"] = std::to_string(d.nodes().size());
    r.numbers["leaves"] = std::to_string(d.leaves().size());
    r.numbers["edges"] = std::to_string(d.edge_count());
    return r;
}

Report invariants(const SpliceDiagram& d) {
    Report r{"invariants", "ok", {}, {}, std::nullopt};
    for (EdgeIndex e : d.node_edges()) r.numbers["D(" + d.edge_label(e) + ")"] = to_string(edge_determinant(d, e));
    const IdealGenerators generators(d);
    for (VertexIndex v : d.nodes())
        for (const EdgeEnd& end : d.ends_at(v)) r.numbers["dbar(" + end_label(d, end) + ")"] = to_string(generators.at(end));
    r.numbers["ideal_condition"] = check_ideal_condition(d).holds ? "holds" : "violated";
    r.numbers["singularity_link"] = is_singularity_link(d) ? "yes" : "no";
    return r;
}

std::pair<int, Report> check_ideal(const SpliceDiagram& d) {
    const auto report = check_ideal_condition(d);
    Report r{"check-ideal", report.holds ? "holds" : "violated", {}, {}, std::nullopt};
    for (const auto& v : report.violations)
        r.witnesses.push_back({{"node", d.id(v.end.vertex)},
                               {"edge", d.edge_label(v.end.edge)},
                               {"generator", to_string(v.generator)},
                               {"weight", to_string(v.weight)}});
    return {report.holds ? exit_yes : exit_no, r};
}

std::pair<int, Report> singularity_link(const SpliceDiagram& d) {
    const bool yes = is_singularity_link(d);
    Report r{"singularity-link", yes ? "yes" : "no", {}, {}, std::nullopt};
    for (VertexIndex v : d.nodes())
        if (d.sign(v) < 0) r.witnesses.push_back({{"node", d.id(v)}, {"reason", "negative_sign"}});
    for (EdgeIndex e : d.node_edges()) {
        const BigInt det = edge_determinant(d, e);
        r.numbers["D(" + d.edge_label(e) + ")"] = to_string(det);
        if (det <= 0) r.witnesses.push_back({{"edge", d.edge_label(e)}, {"reason", "nonpositive_determinant"}});
    }
    return {yes ? exit_yes : exit_no, r};
}

std::pair<int, Report> uac_qhs(const SpliceDiagram& d) {
    const UacDecision decision = decide_uac_qhs(d);
    Report r{"uac-qhs", std::string(to_string(decision.verdict)), {}, {}, std::nullopt};
    if (decision.special) r.numbers["special"] = d.id(*decision.special);
    if (decision.zero_weight)
        r.witnesses.push_back({{"reason", "zero_weight"}, {"node", d.id(decision.zero_weight->vertex)},
                               {"edge", d.edge_label(decision.zero_weight->edge)}});
    for (const auto& f : decision.failures) {
        Witness w{{"candidate", d.id(f.candidate)},
                  {"at", d.id(f.at)},
                  {"reason", std::string(to_string(f.reason))},
                  {"weights", ends_list(d, f.witnesses)}};
        if (f.reduced) w["reduced"] = to_string(*f.reduced);
        r.witnesses.push_back(std::move(w));
    }
    return {decision.verdict == UacVerdict::no ? exit_no : exit_yes, r};
}

std::pair<int, Report> cover(const SpliceDiagram& d, const std::string& special_id,
                             const std::vector<std::string>& euler_args) {
    if (d.nodes().empty()) throw InputError("cover needs a diagram with at least one node");
    VertexIndex special = d.nodes().front();
    if (!special_id.empty()) {
        special = d.index_of(special_id);
    } else if (auto decision = decide_uac_qhs(d); decision.special) {
        special = *decision.special;
    }
    EulerOverrides overrides;
    for (const auto& arg : euler_args) {
        const auto eq = arg.find('=');
        if (eq == std::string::npos) throw InputError("--euler expects node=value, got '" + arg + "'");
        const std::string node = arg.substr(0, eq);
        d.index_of(node);
        overrides[node] = parse_rational(arg.substr(eq + 1));
    }

    const CoverSkeleton s = build_cover_skeleton(d, special);
    Report r{"cover", s.obstruction ? std::string(to_string(s.obstruction->kind)) : "clean", {}, {}, std::nullopt};
    r.numbers["special"] = d.id(special);
    if (s.obstruction) {
        Witness w{{"obstruction", std::string(to_string(s.obstruction->kind))}};
        if (s.obstruction->edge) w["edge"] = d.edge_label(*s.obstruction->edge);
        if (s.obstruction->node) w["node"] = d.id(*s.obstruction->node);
        if (s.obstruction->indicator) w["indicator"] = to_string(*s.obstruction->indicator);
        r.witnesses.push_back(std::move(w));
    }
    for (const auto& [e, count] : s.per_edge_torus_count) r.numbers["tori(" + d.edge_label(e) + ")"] = to_string(count);
    if (!s.pieces.empty()) {
        std::string summary;
        std::map<VertexIndex, std::size_t> copies;
        for (const auto& p : s.pieces) ++copies[p.origin_node];
        std::vector<VertexIndex> seen;
        for (const auto& p : s.pieces) {
            if (p.copy_index != 0) continue;
            if (!summary.empty()) summary += ", ";
            summary += p.tuple.to_string() + "×" + std::to_string(copies[p.origin_node]);
        }
        r.numbers["pieces"] = summary;
        for (const auto& p : s.pieces) {
            Witness w{{"piece", p.label()}, {"tuple", tuple_text(p.tuple)},
                      {"genus_indicator", to_string(genus_indicator(p.tuple))}};
            if (auto it = overrides.find(p.origin_id); it != overrides.end())
                w["euler"] = to_string(it->second);
            else if (p.euler)
                w["euler"] = to_string(*p.euler);
            r.witnesses.push_back(std::move(w));
        }
        std::map<EdgeIndex, std::string> p_tilde;
        for (const auto& t : s.tori) {
            Witness w{{"torus", s.pieces[t.piece_a].label() + "~" + s.pieces[t.piece_b].label()},
                      {"edge", d.edge_label(t.origin_edge)}};
            if (t.p_tilde) {
                w["p_tilde"] = to_string(*t.p_tilde);
                p_tilde[t.origin_edge] = to_string(*t.p_tilde);
            }
            r.witnesses.push_back(std::move(w));
        }
        for (const auto& [e, value] : p_tilde) r.numbers["p~(" + d.edge_label(e) + ")"] = value;
        try {
            const auto det = decomposition_determinant(s, overrides);
            r.numbers["det"] = to_string(det.det);
            r.numbers["nondegenerate"] = det.nondegenerate ? "yes" : "no";
        } catch (const DomainError& e) {
            r.numbers["det"] = "unavailable";
            r.witnesses.push_back({{"det_unavailable", e.what()}});
        }
    }
    return {s.obstruction ? exit_no : exit_yes, r};
}

std::pair<int, Report> brieskorn(const std::string& text) {
    const auto t = BrieskornTuple::parse(text);
    const RhsCondition c = classify_rhs(t);
    Report r{"brieskorn", std::string(to_string(c)), {}, {}, std::nullopt};
    r.numbers["tuple"] = tuple_text(t);
    r.numbers["indicator"] = to_string(genus_indicator(t));
    return {is_rhs(c) ? exit_yes : exit_no, r};
}

// Pipeline property for one generated plumbing; returns a failure message.
std::optional<std::string> pipeline_check(const PlumbingGraph& p) {
    if (!plumbing_is_qhs(p)) return "plumbing not QHS";
    const SpliceDiagram d = plumbing_to_splice(p);
    if (!check_ideal_condition(d).holds) return "ideal condition fails";
    if (!is_singularity_link(d)) return "not a singularity link";
    if (!verify_seen_divisibility(d).holds) return "seen divisibility fails";
    if (d.nodes().empty()) return std::nullopt;
    const UacDecision decision = decide_uac_qhs(d);
    if (decision.special) {
        if (build_cover_skeleton(d, *decision.special).obstruction) return "decide yes but skeleton obstructed";
        return std::nullopt;
    }
    for (VertexIndex s : d.nodes()) {
        try {
            if (!build_cover_skeleton(d, s).obstruction) return "decide no but skeleton clean at " + d.id(s);
        } catch (const DomainError&) {
        }
    }
    return std::nullopt;
}

std::pair<int, Report> selftest(bool brieskorn_only, bool plumbing_only, int max_alpha, const std::string& n_range,
                                int seeds) {
    Report r{"selftest", "pass", {}, {}, std::nullopt};
    const bool run_brieskorn = brieskorn_only || !plumbing_only;
    const bool run_plumbing = plumbing_only || !brieskorn_only;
    bool ok = true;
    if (run_brieskorn) {
        int lo = 3;
        int hi = 3;
        if (!n_range.empty()) {
            const auto dots = n_range.find("..");
            try {
                lo = std::stoi(n_range.substr(0, dots));
                hi = dots == std::string::npos ? lo : std::stoi(n_range.substr(dots + 2));
            } catch (const std::exception&) {
                throw InputError("--n expects A..B, got '" + n_range + "'");
            }
        }
        const ScanReport scan = rhs_equivalence_scan(max_alpha, lo, hi);
        r.numbers["brieskorn_tuples"] = std::to_string(scan.tuples_checked);
        r.numbers["brieskorn_rhs"] = std::to_string(scan.rhs_count);
        r.numbers["brieskorn_counterexamples"] = std::to_string(scan.counterexamples.size());
        for (const auto& c : scan.counterexamples) {
            std::string alphas;
            for (const auto& a : c.alphas) alphas += (alphas.empty() ? "" : ",") + to_string(a);
            r.witnesses.push_back({{"tuple", alphas}, {"verdict", std::string(to_string(c.verdict))},
                                   {"indicator", to_string(c.indicator)}});
        }
        ok = ok && scan.all_agree;
    }
    if (run_plumbing) {
        if (seeds < 0) throw InputError("--seeds must be nonnegative");
        int failures = 0;
        for (int seed = 0; seed < seeds; ++seed) {
            const PlumbingGraph p = random_plumbing(static_cast<std::uint64_t>(seed), 8);
            if (auto failure = pipeline_check(p)) {
                ++failures;
                r.witnesses.push_back({{"seed", std::to_string(seed)}, {"failure", *failure}});
            }
        }
        r.numbers["pipeline_seeds"] = std::to_string(seeds);
        r.numbers["pipeline_failures"] = std::to_string(failures);
        ok = ok && failures == 0;
    }
    r.verdict = ok ? "pass" : "fail";
    return {ok ? exit_yes : exit_no, r};
}

Report invalid(const std::string& command, const std::string& message) {
    return {command, "invalid", {{{"error", message}}}, {}, std::nullopt};
}

}  // namespace

RunResult run(const std::vector<std::string>& argv_in, std::istream& in) {
    std::vector<std::string> args = argv_in;
    if (args.empty()) args.push_back("splicekit");
    if (args.size() >= 3 && args[1] == "plumb" && args[2] == "h1") {
        args.erase(args.begin() + 2);
        args[1] = "plumb-h1";
    }

    CLI::App app{"splicekit: splice diagram invariants and universal abelian cover tests", "splicekit"};
    app.require_subcommand(1);
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.set_version_flag("--version", std::string("splicekit ") + version);

    std::string file;
    auto add_file_command = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "Input file, or - for stdin")->required();
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
        return sub;
    };
    auto* validate_cmd = add_file_command("validate", "Parse and validate a splice diagram");
    auto* invariants_cmd = add_file_command("invariants", "Edge determinants and ideal generators");
    auto* check_ideal_cmd = add_file_command("check-ideal", "Check the ideal condition");
    auto* singularity_cmd = add_file_command("singularity-link", "Singularity-link criterion");
    auto* uac_cmd = add_file_command("uac-qhs", "Is the universal abelian cover a rational homology sphere?");
    auto* cover_cmd = add_file_command("cover", "Universal abelian cover skeleton");
    std::string special;
    std::vector<std::string> euler;
    cover_cmd->add_option("--special", special, "Special node id");
    cover_cmd->add_option("--euler", euler, "Euler number for the pieces over a node: node=value")->take_all();
    auto* plumb2splice_cmd = add_file_command("plumb2splice", "Splice diagram of a plumbing graph");
    auto* plumb_h1_cmd = add_file_command("plumb-h1", "|H_1| of a plumbed manifold");

    auto* brieskorn_cmd = app.add_subcommand("brieskorn", "Classify a Brieskorn tuple a1,a2,...");
    std::string tuple;
    brieskorn_cmd->add_option("tuple", tuple, "Comma-separated exponents")->required();
    brieskorn_cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* gen_cmd = app.add_subcommand("gen", "Random negative definite plumbing tree");
    std::uint64_t seed = 1;
    std::size_t max_vertices = 8;
    auto* seed_opt = gen_cmd->add_option("--seed", seed, "Seed (default 1, or $SPLICEKIT_SEED)");
    gen_cmd->add_option("--max-vertices", max_vertices, "Maximum number of vertices")->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
    gen_cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* selftest_cmd = app.add_subcommand("selftest", "Exhaustive Brieskorn scan and plumbing pipeline");
    bool only_brieskorn = false;
    bool only_plumbing = false;
    int max_alpha = 12;
    std::string n_range;
    int seeds = 200;
    selftest_cmd->add_flag("--brieskorn", only_brieskorn, "Run only the Brieskorn scan");
    selftest_cmd->add_flag("--plumbing", only_plumbing, "Run only the plumbing pipeline");
    selftest_cmd->add_option("--max-alpha", max_alpha, "Largest exponent in the scan");
    selftest_cmd->add_option("--n", n_range, "Tuple lengths A..B (default 3..3)");
    selftest_cmd->add_option("--seeds", seeds, "Number of plumbing seeds");
    selftest_cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));

    RunResult result;
    if (args.size() >= 2 && !args[1].empty() && args[1][0] != '-') {
        const auto subs = app.get_subcommands([&](const CLI::App* sub) { return sub->get_name() == args[1]; });
        if (subs.empty()) {
            result.exit_code = exit_invalid;
            result.report = invalid("usage", "unknown subcommand '" + args[1] + "'");
            result.report.document = app.help();
            return result;
        }
    }
    std::vector<char*> raw;
    for (auto& a : args) raw.push_back(a.data());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp&) {
        result.report = {"help", "usage", {}, {}, app.help()};
        return result;
    } catch (const CLI::CallForVersion&) {
        result.report = {"version", std::string("splicekit ") + version, {}, {}, std::nullopt};
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = exit_invalid;
        result.report = invalid("usage", e.what());
        result.report.document = app.help();
        return result;
    }
    result.format = format_name == "json" ? Format::json : Format::text;

    const std::string command = app.get_subcommands().front()->get_name();
    auto load_diagram = [&] { return parse_diagram(read_input(file, in)); };
    auto load_plumbing = [&] { return parse_plumbing(read_input(file, in)); };
    try {
        std::pair<int, Report> outcome{exit_yes, {}};
        if (validate_cmd->parsed()) {
            outcome = {exit_yes, validate(load_diagram())};
        } else if (invariants_cmd->parsed()) {
            outcome = {exit_yes, invariants(load_diagram())};
        } else if (check_ideal_cmd->parsed()) {
            outcome = check_ideal(load_diagram());
        } else if (singularity_cmd->parsed()) {
            outcome = singularity_link(load_diagram());
        } else if (uac_cmd->parsed()) {
            outcome = uac_qhs(load_diagram());
        } else if (cover_cmd->parsed()) {
            outcome = cover(load_diagram(), special, euler);
        } else if (plumb2splice_cmd->parsed()) {
            const auto d = plumbing_to_splice(load_plumbing());
            Report r{"plumb2splice", "ok", {}, {}, to_splice_text(d)};
            outcome = {exit_yes, r};
        } else if (plumb_h1_cmd->parsed()) {
            const BigInt order = h1_order(load_plumbing());
            Report r{"plumb-h1", order == 0 ? "infinite" : "finite", {}, {{"h1", to_string(order)}}, std::nullopt};
            outcome = {exit_yes, r};
        } else if (brieskorn_cmd->parsed()) {
            outcome = brieskorn(tuple);
        } else if (gen_cmd->parsed()) {
            if (seed_opt->count() == 0) {
                if (const char* env = std::getenv("SPLICEKIT_SEED")) {
                    const BigInt value = parse_integer(env);
                    if (value < 0 || value > std::numeric_limits<std::uint64_t>::max())
                        throw InputError("SPLICEKIT_SEED out of range");
                    seed = static_cast<std::uint64_t>(value);
                }
            }
            const auto p = random_plumbing(seed, max_vertices);
            Report r{"gen", "ok", {}, {{"seed", std::to_string(seed)}}, to_plumbing_text(p)};
            outcome = {exit_yes, r};
        } else if (selftest_cmd->parsed()) {
            outcome = selftest(only_brieskorn, only_plumbing, max_alpha, n_range, seeds);
        }
        result.exit_code = outcome.first;
        result.report = std::move(outcome.second);
    } catch (const InputError& e) {
        result.exit_code = exit_invalid;
        result.report = invalid(command, e.what());
    } catch (const DomainError& e) {
        result.exit_code = exit_invalid;
        result.report = invalid(command, e.what());
    }
    return result;
}

std::string render(const Report& report, Format format) {
    if (format == Format::json) {
        nlohmann::json j;
        j["command"] = report.command;
        j["verdict"] = report.verdict;
        j["version"] = std::string("splicekit ") + version;
        j["numbers"] = nlohmann::json::object();
        for (const auto& [k, v] : report.numbers) j["numbers"][k] = v;
        j["witnesses"] = nlohmann::json::array();
        for (const auto& w : report.witnesses) j["witnesses"].push_back(w);
        if (report.document) j["document"] = *report.document;
        return j.dump(2) + "\n";
    }
    // Bare payloads print as-is so plumb2splice and gen can be piped.
    if (report.document && report.verdict != "invalid") return *report.document;
    std::ostringstream out;
    out << "command: " << report.command << '\n' << "verdict: " << report.verdict << '\n';
    for (const auto& [k, v] : report.numbers) out << k << '=' << v << '\n';
    for (const auto& w : report.witnesses) {
        out << "-";
        for (const auto& [k, v] : w) out << ' ' << k << '=' << v;
        out << '\n';
    }
    if (report.document) out << '\n' << *report.document;
    return out.str();
}

}  // namespace splicekit::cli
