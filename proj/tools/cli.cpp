#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "isk4lab/color.hpp"
#include "isk4lab/decompose.hpp"
#include "isk4lab/io.hpp"
#include "isk4lab/lemmas.hpp"
#include "isk4lab/patterns.hpp"
#include "isk4lab/scan.hpp"
#include "isk4lab/serialize.hpp"

namespace isk4lab::cli {

namespace {

/// A failure that should end the run with a message and exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string input = "-";
    std::string format = "g6";
};

std::string read_all(std::istream& s) {
    std::ostringstream buf;
    buf << s.rdbuf();
    return buf.str();
}

/// Stdin for "-", the file's contents for an existing path, otherwise the
/// argument itself.
std::string resolve_text(const std::string& input, std::istream& in) {
    if (input == "-") return read_all(in);
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec)) {
        std::ifstream file(input, std::ios::binary);
        if (!file) throw UsageError("cannot open " + input);
        return read_all(file);
    }
    return input;
}

Graph load_graph(const Common& c, std::istream& in) {
    const std::string text = resolve_text(c.input, in);
    if (c.format == "edgelist") return parse_edge_list(text);
    // first non-blank line
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return parse_graph6(line);
    }
    throw UsageError("no graph in input");
}

std::uint64_t default_budget() {
    const char* env = std::getenv("ISK4LAB_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultLemmaBudget;
    std::uint64_t value = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0) {
        throw UsageError("ISK4LAB_BUDGET must be a positive integer");
    }
    return value;
}

void add_input(CLI::App* cmd, Common& c, bool with_format = true) {
    cmd->add_option("input", c.input, "graph6 string, file path, or - for stdin");
    if (with_format) {
        cmd->add_option("--format", c.format, "input format")->check(CLI::IsMember({"g6", "edgelist"}));
    }
}

// ---------------------------------------------------------------------------

struct DetectArgs {
    Common common;
    std::string pattern;
    int n_min = 3;
    bool whole_graph = false;
};

int detect(const DetectArgs& a, std::istream& in, Json& doc) {
    const Graph g = load_graph(a.common, in);
    doc = Json{{"found", false}};
    auto found = [&](const char* key, Json value) {
        doc = Json{{"found", true}, {"pattern", a.pattern}, {key, std::move(value)}};
    };
    if (a.pattern == "isk4") {
        if (auto s = contains_isk4(g)) found("vertices", to_json(*s));
    } else if (a.pattern == "k12n") {
        if (a.n_min < 2) throw UsageError("--n-min must be at least 2");
        if (auto h = find_maximal_k12n(g, a.n_min)) found("embedding", to_json(*h));
    } else if (a.pattern == "rich-square") {
        if (auto s = find_rich_square(g, a.whole_graph ? RichSquareMode::WholeGraph : RichSquareMode::Containment)) {
            found("structure", to_json(*s));
        }
    } else {
        const FixedPattern which = a.pattern == "k33"     ? FixedPattern::K33
                                   : a.pattern == "k222"  ? FixedPattern::K222
                                   : a.pattern == "prism" ? FixedPattern::Prism
                                                          : FixedPattern::Wheel;
        if (auto w = contains_fixed(g, which)) found("mapping", w->mapping);
    }
    return doc["found"].get<bool>() ? kOk : kNotFound;
}

struct ColorArgs {
    Common common;
    std::string mode = "structural";
    int bound = 0;
    bool verify_isk4 = false;
};

int color(const ColorArgs& a, std::istream& in, Json& doc) {
    const Graph g = load_graph(a.common, in);
    const std::optional<int> bound = a.bound > 0 ? std::optional<int>(a.bound) : std::nullopt;

    if (a.mode == "exact") {
        const ExactResult r = chromatic_number_exact(g, bound);
        if (r.bound_exceeded) {
            const bool free = is_isk4_free(g);
            doc = Json{{"k", nullptr},
                       {"bound_exceeded", true},
                       {"bound", *bound},
                       {"isk4_free", free},
                       {"conjecture_counterexample", free && *bound >= 4}};
            return kBoundExceeded;
        }
        doc = Json{{"k", r.coloring->k}, {"colors", r.coloring->color}, {"trace", Json::array()}};
        return kOk;
    }

    StructuralOptions opts;
    opts.verify_isk4_free = a.verify_isk4;
    const StructuralResult r = structural_four_coloring(g, opts);
    if (!r.ok()) {
        doc = Json{{"k", nullptr},
                   {"failure", to_json(*r.failure)},
                   {"conjecture_counterexample", r.failure->kind == FailureKind::ConjectureCounterexample},
                   {"trace", to_json(r.trace)}};
        return kBoundExceeded;
    }
    doc = Json{{"k", r.coloring->k}, {"colors", r.coloring->color}, {"trace", to_json(r.trace)}};
    if (bound && r.coloring->k > *bound) {
        doc["bound_exceeded"] = true;
        doc["bound"] = *bound;
        return kBoundExceeded;
    }
    return kOk;
}

int decompose(const Common& c, std::istream& in, Json& doc) {
    const Graph g = load_graph(c, in);
    auto or_null = [](const auto& opt) { return opt ? to_json(*opt) : Json(nullptr); };
    std::optional<CutsetFinding> clique;
    if (auto s = find_clique_cutset(g, 3)) clique = *s;
    std::optional<CutsetFinding> proper;
    if (auto p = find_proper_2cutset(g)) proper = *p;
    doc = Json{{"clique_cutset", or_null(clique)},
               {"proper_2_cutset", or_null(proper)},
               {"complete_multipartite", or_null(recognize_complete_multipartite(g))},
               {"subcubic_line_graph", or_null(recognize_line_graph_subcubic(g))},
               {"rich_square", or_null(find_rich_square(g, RichSquareMode::WholeGraph))}};
    return kOk;
}

struct LemmaArgs {
    Common common;
    std::string id;
    std::uint64_t budget = 0;
};

int check(const LemmaArgs& a, std::istream& in, Json& doc) {
    const Graph g = load_graph(a.common, in);
    const LemmaReport r = check_lemma(g, *parse_lemma_id(a.id), a.budget > 0 ? a.budget : default_budget());
    doc = to_json(r);
    return r.status == LemmaStatus::Violated ? kCounterwitness : kOk;
}

struct ScanArgs {
    std::string input = "-";
    std::string checks;
    int jobs = 1;
    std::uint64_t budget = 0;
    std::size_t witness_cap = 100;
    bool timing = false;
};

int scan(const ScanArgs& a, std::istream& in, Json& doc) {
    ScanConfig cfg;
    std::istringstream names(a.checks);
    for (std::string name; std::getline(names, name, ',');) {
        auto c = parse_check(name);
        if (!c) throw UsageError("unknown check " + name);
        if (!cfg.enabled(*c)) cfg.checks.push_back(*c);
    }
    cfg.budget = a.budget > 0 ? a.budget : default_budget();
    cfg.jobs = a.jobs;
    cfg.witness_cap = a.witness_cap;
    cfg.timing = a.timing;

    ScanReport report;
    if (a.input == "-") {
        report = scan_stream(line_source(in), cfg);
    } else {
        std::ifstream file(a.input, std::ios::binary);
        if (!file) throw UsageError("cannot open " + a.input);
        report = scan_stream(line_source(file), cfg);
    }
    doc = to_json(report);
    return report.clean() ? kOk : kCounterwitness;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Detectors, colourers and exhaustive checks for ISK4-free graphs", "isk4lab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));
    bool quiet = false;
    app.add_flag("--quiet", quiet, "print nothing; report through the exit status only");

    DetectArgs detect_args;
    auto* detect_cmd = app.add_subcommand("detect", "search for an induced pattern");
    detect_cmd->add_option("--pattern", detect_args.pattern, "pattern to look for")
        ->required()
        ->check(CLI::IsMember({"isk4", "k33", "k222", "prism", "wheel", "k12n", "rich-square"}));
    detect_cmd->add_option("--n-min", detect_args.n_min, "least c-side size for k12n");
    detect_cmd->add_flag("--whole-graph", detect_args.whole_graph, "rich-square: require the whole graph to be one");
    add_input(detect_cmd, detect_args.common);

    ColorArgs color_args;
    auto* color_cmd = app.add_subcommand("color", "colour a graph");
    color_cmd->add_option("--mode", color_args.mode, "structural or exact")
        ->check(CLI::IsMember({"structural", "exact"}));
    color_cmd->add_option("--bound", color_args.bound, "largest acceptable number of colours")->check(CLI::PositiveNumber);
    color_cmd->add_flag("--verify-isk4", color_args.verify_isk4, "structural: reject inputs containing an ISK4");
    add_input(color_cmd, color_args.common);

    Common decompose_args;
    auto* decompose_cmd = app.add_subcommand("decompose", "report cutsets and leaf-class certificates");
    add_input(decompose_cmd, decompose_args);

    LemmaArgs lemma_args;
    auto* lemma_cmd = app.add_subcommand("check-lemma", "check one structural lemma on a graph");
    lemma_cmd->add_option("--id", lemma_args.id, "l-link, l-voh or l-comp")
        ->required()
        ->check(CLI::IsMember({"l-link", "l-voh", "l-comp"}, CLI::ignore_case));
    lemma_cmd->add_option("--budget", lemma_args.budget, "search step cap (default $ISK4LAB_BUDGET)")
        ->check(CLI::PositiveNumber);
    add_input(lemma_cmd, lemma_args.common);

    ScanArgs scan_args;
    auto* scan_cmd = app.add_subcommand("scan", "run checks over a stream of graph6 lines");
    scan_cmd->add_option("--checks", scan_args.checks, "comma separated check names")->required();
    scan_cmd->add_option("--jobs", scan_args.jobs, "worker threads")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--budget", scan_args.budget, "per-graph step cap (default $ISK4LAB_BUDGET)")
        ->check(CLI::PositiveNumber);
    scan_cmd->add_option("--witness-cap", scan_args.witness_cap, "failure witnesses kept per check");
    scan_cmd->add_flag("--timing", scan_args.timing, "include wall time in the report");
    scan_cmd->add_option("input", scan_args.input, "graph6 file, or - for stdin");

    int enum_n = 0;
    bool enum_connected = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "print every labelled graph on n vertices as graph6");
    enum_cmd->add_option("--n", enum_n, "number of vertices (1..7)")->required()->check(CLI::Range(1, 7));
    enum_cmd->add_flag("--connected", enum_connected, "connected graphs only");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kError;
    }

    try {
        if (enum_cmd->parsed()) {
            if (quiet) return kOk;
            auto next = enumerate_small(enum_n, enum_connected);
            while (auto line = next()) out << *line << '\n';
            return kOk;
        }
        Json doc;
        int status = kOk;
        if (detect_cmd->parsed()) status = detect(detect_args, in, doc);
        if (color_cmd->parsed()) status = color(color_args, in, doc);
        if (decompose_cmd->parsed()) status = decompose(decompose_args, in, doc);
        if (lemma_cmd->parsed()) status = check(lemma_args, in, doc);
        if (scan_cmd->parsed()) status = scan(scan_args, in, doc);
        if (!quiet) out << doc.dump(2) << '\n';
        return status;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
}

} // namespace isk4lab::cli
