#ifndef ISK4LAB_SCAN_HPP
#define ISK4LAB_SCAN_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isk4lab/lemmas.hpp"
#include "isk4lab/serialize.hpp"

namespace isk4lab {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Check { Isk4Filter, ChiLe4, LLink, LVoh, LComp, StructuralColor };
inline constexpr std::size_t kCheckCount = 6;
inline constexpr std::array<Check, kCheckCount> kAllChecks{Check::Isk4Filter, Check::ChiLe4,  Check::LLink,
                                                           Check::LVoh,       Check::LComp,   Check::StructuralColor};

/// "ISK4-FILTER", "CHI-LE-4", "L-LINK", "L-VOH", "L-COMP", "STRUCTURAL-COLOR".
std::string_view to_string(Check c);
/// Case-insensitive inverse of to_string.
std::optional<Check> parse_check(std::string_view s);

struct ScanConfig {
    std::vector<Check> checks;
    std::uint64_t budget = kDefaultLemmaBudget;
    int jobs = 1;
    std::size_t witness_cap = 100;
    /// Adds wall time to the report, which makes it run-dependent.
    bool timing = false;

    bool enabled(Check c) const;
    /// Throws std::invalid_argument unless checks is non-empty, budget > 0
    /// and jobs >= 1.
    void validate() const;
};

struct CheckCounters {
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped = 0;
    std::uint64_t budget_exceeded = 0;

    std::uint64_t total() const { return passed + failed + skipped + budget_exceeded; }
    CheckCounters& operator+=(const CheckCounters& o);
};

/// How often the structural colourer had to fall back to exact search.
struct FallbackCounters {
    /// ExactFallback was the first rule applied to the whole graph.
    std::uint64_t top_level = 0;
    /// Same, restricted to graphs containing an induced K_{1,2,3}.
    std::uint64_t top_level_with_k123 = 0;
    /// ExactFallback appeared anywhere in the trace.
    std::uint64_t anywhere = 0;

    FallbackCounters& operator+=(const FallbackCounters& o);
};

struct OrderCounters {
    std::uint64_t read = 0;
    std::uint64_t isk4_free = 0;
    std::uint64_t contains_k123 = 0;
    std::uint64_t isk4_free_with_k123 = 0;
    std::array<CheckCounters, kCheckCount> checks{};
    FallbackCounters fallback;

    CheckCounters& at(Check c) { return checks[static_cast<std::size_t>(c)]; }
    const CheckCounters& at(Check c) const { return checks[static_cast<std::size_t>(c)]; }
    OrderCounters& operator+=(const OrderCounters& o);
};

struct ScanFailure {
    /// 1-based physical line number in the input.
    std::uint64_t line_no = 0;
    std::string graph6;
    /// A check name, or "PARSE" for a malformed line.
    std::string check;
    Json evidence;
};

struct ScanReport {
    ScanConfig config;
    std::uint64_t lines = 0;
    std::uint64_t parse_failures = 0;
    std::map<int, OrderCounters> per_n;
    /// Sorted by line number, at most witness_cap per check.
    std::vector<ScanFailure> failures;
    /// Witnesses beyond the cap, per check.
    std::map<std::string, std::uint64_t> witnesses_dropped;
    std::optional<double> wall_seconds;

    OrderCounters totals() const;
    /// Parse failures plus failed checks.
    std::uint64_t failure_count() const;
    bool clean() const { return failure_count() == 0; }

    /// Associative and commutative: counters add, witnesses are re-sorted
    /// and re-capped.
    void merge(ScanReport&& other);
};

/// Yields successive lines, or nothing at end of input.
using LineSource = std::function<std::optional<std::string>()>;

/// Lines of a stream with any trailing '\r' removed.
LineSource line_source(std::istream& in);

/// Every labelled graph on n vertices (1 <= n <= 7) as graph6, in order of
/// the edge bitmask read in graph6 bit order. Throws std::out_of_range.
LineSource enumerate_small(int n, bool connected_only = false);

/// Number of lines enumerate_small(n, false) yields.
std::uint64_t labelled_graph_count(int n);

/// Blank lines are skipped but still numbered.
ScanReport scan_stream(const LineSource& input, const ScanConfig& cfg);

Json to_json(const ScanReport& r);

} // namespace isk4lab

#endif // ISK4LAB_SCAN_HPP
