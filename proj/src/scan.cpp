#include "isk4lab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <istream>
#include <stdexcept>
#include <thread>

#include "isk4lab/color.hpp"
#include "isk4lab/io.hpp"
#include "isk4lab/patterns.hpp"

namespace isk4lab {

std::string_view to_string(Check c) {
    switch (c) {
    case Check::Isk4Filter: return "ISK4-FILTER";
    case Check::ChiLe4: return "CHI-LE-4";
    case Check::LLink: return "L-LINK";
    case Check::LVoh: return "L-VOH";
    case Check::LComp: return "L-COMP";
    case Check::StructuralColor: return "STRUCTURAL-COLOR";
    }
    return "?";
}

std::optional<Check> parse_check(std::string_view s) {
    for (Check c : kAllChecks) {
        const std::string_view name = to_string(c);
        if (name.size() == s.size() && std::equal(name.begin(), name.end(), s.begin(), [](char x, char y) {
                return x == std::toupper(static_cast<unsigned char>(y));
            })) {
            return c;
        }
    }
    return std::nullopt;
}

bool ScanConfig::enabled(Check c) const { return std::find(checks.begin(), checks.end(), c) != checks.end(); }

void ScanConfig::validate() const {
    if (checks.empty()) throw std::invalid_argument("scan: no checks enabled");
    if (budget == 0) throw std::invalid_argument("scan: budget must be positive");
    if (jobs < 1) throw std::invalid_argument("scan: jobs must be at least 1");
}

CheckCounters& CheckCounters::operator+=(const CheckCounters& o) {
    passed += o.passed;
    failed += o.failed;
    skipped += o.skipped;
    budget_exceeded += o.budget_exceeded;
    return *this;
}

FallbackCounters& FallbackCounters::operator+=(const FallbackCounters& o) {
    top_level += o.top_level;
    top_level_with_k123 += o.top_level_with_k123;
    anywhere += o.anywhere;
    return *this;
}

OrderCounters& OrderCounters::operator+=(const OrderCounters& o) {
    read += o.read;
    isk4_free += o.isk4_free;
    contains_k123 += o.contains_k123;
    isk4_free_with_k123 += o.isk4_free_with_k123;
    for (std::size_t i = 0; i < kCheckCount; ++i) checks[i] += o.checks[i];
    fallback += o.fallback;
    return *this;
}

OrderCounters ScanReport::totals() const {
    OrderCounters t;
    for (const auto& [n, c] : per_n) t += c;
    return t;
}

std::uint64_t ScanReport::failure_count() const {
    std::uint64_t f = parse_failures;
    for (const auto& c : totals().checks) f += c.failed;
    return f;
}

namespace {

void cap_witnesses(ScanReport& r) {
    std::stable_sort(r.failures.begin(), r.failures.end(),
                     [](const ScanFailure& x, const ScanFailure& y) { return x.line_no < y.line_no; });
    std::map<std::string, std::size_t> kept;
    std::vector<ScanFailure> out;
    for (auto& f : r.failures) {
        if (kept[f.check]++ < r.config.witness_cap) {
            out.push_back(std::move(f));
        } else {
            ++r.witnesses_dropped[f.check];
        }
    }
    r.failures = std::move(out);
}

} // namespace

void ScanReport::merge(ScanReport&& other) {
    lines += other.lines;
    parse_failures += other.parse_failures;
    for (const auto& [n, c] : other.per_n) per_n[n] += c;
    for (auto& f : other.failures) failures.push_back(std::move(f));
    for (const auto& [k, d] : other.witnesses_dropped) witnesses_dropped[k] += d;
    cap_witnesses(*this);
}

LineSource line_source(std::istream& in) {
    return [&in]() -> std::optional<std::string> {
        std::string line;
        if (!std::getline(in, line)) return std::nullopt;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
    };
}

std::uint64_t labelled_graph_count(int n) {
    if (n < 1 || n > 7) throw std::out_of_range("labelled_graph_count: n must be in 1..7");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

LineSource enumerate_small(int n, bool connected_only) {
    const std::uint64_t count = labelled_graph_count(n);
    std::vector<Edge> pairs;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    return [n, count, connected_only, pairs, mask = std::uint64_t{0}]() mutable -> std::optional<std::string> {
        while (mask < count) {
            std::vector<Edge> edges;
            for (std::size_t b = 0; b < pairs.size(); ++b) {
                if ((mask >> b) & 1U) edges.push_back(pairs[b]);
            }
            ++mask;
            const Graph g = Graph::from_edges(n, edges);
            if (connected_only && !is_connected(g)) continue;
            return write_graph6(g);
        }
        return std::nullopt;
    };
}

namespace {

struct Item {
    std::uint64_t line_no;
    std::string text;
};

const Graph& k123() {
    static const Graph g = named::complete_multipartite({1, 2, 3});
    return g;
}

CheckCounters& bump(OrderCounters& c, Check which) { return c.at(which); }

void lemma_check(const Item& item, const Graph& g, Check which, LemmaId id, const ScanConfig& cfg, OrderCounters& c,
                 ScanReport& out) {
    const LemmaReport r = check_lemma(g, id, cfg.budget);
    CheckCounters& k = bump(c, which);
    switch (r.status) {
    case LemmaStatus::Inapplicable: ++k.skipped; break;
    case LemmaStatus::Holds: ++k.passed; break;
    case LemmaStatus::BudgetExceeded: ++k.budget_exceeded; break;
    case LemmaStatus::Violated:
        ++k.failed;
        out.failures.push_back({item.line_no, item.text, std::string(to_string(which)), to_json(r)});
        break;
    }
}

void evaluate(const Item& item, const ScanConfig& cfg, ScanReport& out) {
    ++out.lines;
    Graph g;
    try {
        g = parse_graph6(item.text);
    } catch (const ParseError& e) {
        ++out.parse_failures;
        out.failures.push_back({item.line_no, item.text, "PARSE", Json{{"error", e.what()}, {"offset", e.offset()}}});
        return;
    }
    OrderCounters& c = out.per_n[g.order()];
    ++c.read;
    const bool free = is_isk4_free(g);
    const bool has_k123 = contains_induced(g, k123()).has_value();
    c.isk4_free += free ? 1 : 0;
    c.contains_k123 += has_k123 ? 1 : 0;
    c.isk4_free_with_k123 += free && has_k123 ? 1 : 0;

    for (Check which : cfg.checks) {
        switch (which) {
        case Check::Isk4Filter: ++(free ? bump(c, which).passed : bump(c, which).skipped); break;
        case Check::ChiLe4: {
            if (!free) {
                ++bump(c, which).skipped;
                break;
            }
            if (chromatic_number_exact(g, 4).bound_exceeded) {
                ++bump(c, which).failed;
                out.failures.push_back({item.line_no, item.text, std::string(to_string(which)),
                                        Json{{"isk4_free", true}, {"chi_at_least", 5}}});
            } else {
                ++bump(c, which).passed;
            }
            break;
        }
        case Check::LLink: lemma_check(item, g, which, LemmaId::Link, cfg, c, out); break;
        case Check::LVoh: lemma_check(item, g, which, LemmaId::VertexAttachment, cfg, c, out); break;
        case Check::LComp: lemma_check(item, g, which, LemmaId::ComponentAttachment, cfg, c, out); break;
        case Check::StructuralColor: {
            if (!free) {
                ++bump(c, which).skipped;
                break;
            }
            const StructuralResult r = structural_four_coloring(g);
            const bool top = top_level_fallback(r.trace);
            c.fallback.top_level += top ? 1 : 0;
            c.fallback.top_level_with_k123 += top && has_k123 ? 1 : 0;
            c.fallback.anywhere += count_rule(r.trace, Rule::ExactFallback) > 0 ? 1 : 0;
            Json evidence;
            if (!r.ok()) {
                evidence = to_json(*r.failure);
            } else if (!is_proper_coloring(g, *r.coloring) || r.coloring->k > 4) {
                evidence = Json{{"kind", "invalid-coloring"}, {"coloring", to_json(*r.coloring)}};
            }
            if (evidence.is_null()) {
                ++bump(c, which).passed;
            } else {
                ++bump(c, which).failed;
                out.failures.push_back({item.line_no, item.text, std::string(to_string(which)), std::move(evidence)});
            }
            break;
        }
        }
    }
}

ScanReport run_batch(const std::vector<Item>& batch, const ScanConfig& cfg) {
    ScanReport total;
    total.config = cfg;
    if (cfg.jobs == 1 || batch.size() < 2) {
        for (const Item& item : batch) evaluate(item, cfg, total);
        cap_witnesses(total);
        return total;
    }
    const auto workers = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), batch.size()));
    std::vector<ScanReport> partial(workers);
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            partial[w].config = cfg;
            pool.emplace_back([&, w] {
                for (std::size_t i = next++; i < batch.size(); i = next++) evaluate(batch[i], cfg, partial[w]);
                cap_witnesses(partial[w]);
            });
        }
    }
    for (auto& p : partial) total.merge(std::move(p));
    return total;
}

} // namespace

ScanReport scan_stream(const LineSource& input, const ScanConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    constexpr std::size_t kBatch = 8192;

    ScanReport report;
    report.config = cfg;
    std::uint64_t line_no = 0;
    std::vector<Item> batch;
    bool more = true;
    while (more) {
        batch.clear();
        while (batch.size() < kBatch) {
            auto line = input();
            if (!line) {
                more = false;
                break;
            }
            ++line_no;
            if (!line->empty()) batch.push_back({line_no, std::move(*line)});
        }
        report.merge(run_batch(batch, cfg));
    }
    if (cfg.timing) {
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

namespace {

Json counters_json(const OrderCounters& c, const ScanConfig& cfg) {
    Json j{{"read", c.read},
           {"isk4_free", c.isk4_free},
           {"contains_k123", c.contains_k123},
           {"isk4_free_with_k123", c.isk4_free_with_k123}};
    Json checks = Json::object();
    for (Check which : cfg.checks) {
        const CheckCounters& k = c.at(which);
        checks[std::string(to_string(which))] = Json{
            {"passed", k.passed}, {"failed", k.failed}, {"skipped", k.skipped}, {"budget_exceeded", k.budget_exceeded}};
    }
    j["checks"] = checks;
    if (cfg.enabled(Check::StructuralColor)) {
        j["structural_fallback"] = Json{{"top_level", c.fallback.top_level},
                                        {"top_level_with_k123", c.fallback.top_level_with_k123},
                                        {"anywhere", c.fallback.anywhere}};
    }
    return j;
}

} // namespace

Json to_json(const ScanReport& r) {
    Json checks = Json::array();
    for (Check c : r.config.checks) checks.push_back(to_string(c));
    Json meta{{"tool", "isk4lab"},
              {"version", kVersion},
              {"config", {{"checks", checks}, {"budget", r.config.budget}, {"witness_cap", r.config.witness_cap}}}};

    Json per_n = Json::array();
    for (const auto& [n, c] : r.per_n) {
        Json row{{"n", n}};
        row.update(counters_json(c, r.config));
        per_n.push_back(std::move(row));
    }

    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back(Json{{"line_no", f.line_no}, {"graph6", f.graph6}, {"check", f.check}, {"evidence", f.evidence}});
    }

    Json totals{{"lines", r.lines}, {"parse_failures", r.parse_failures}};
    totals.update(counters_json(r.totals(), r.config));
    totals["failures"] = r.failure_count();
    totals["witnesses_dropped"] = Json::object();
    for (const auto& [k, d] : r.witnesses_dropped) totals["witnesses_dropped"][k] = d;
    if (r.wall_seconds) totals["wall_seconds"] = *r.wall_seconds;

    return Json{{"meta", meta}, {"per_n", per_n}, {"failures", failures}, {"totals", totals}};
}

} // namespace isk4lab
