#ifndef CONVMDS_REPORT_HPP
#define CONVMDS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "convmds/constructions.hpp"
#include "convmds/distance.hpp"

namespace convmds {

// Everything the analyze command reports about one code. JSON output is
// fully deterministic (timing diagnostics appear in text mode only).
struct AnalysisReport {
    int n = 0;
    int k = 0;
    int delta = 0;
    uint32_t q = 0;
    int bound = 0;
    CatastrophicityReport catastrophicity{Poly::zero(make_field(2)), false, std::nullopt};
    std::optional<DistanceReport> distance;      // absent when skipped
    std::optional<CapabilityReport> capabilities;
    double distance_seconds = 0.0;
};

AnalysisReport analyze(const ConvCode& code, bool skip_distance = false,
                       const SearchLimits& limits = {});

nlohmann::json report_json(const AnalysisReport& r);
std::string report_text(const AnalysisReport& r, bool with_timings = true);

// One cell of the exhaustive (a, b) sweep over F_11^2.
struct AbRow {
    int a = 0;
    int b = 0;
    int delta = 0;
    int d_free = 0;
    int bound = 0;
    bool is_mds = false;
    bool is_catastrophic = false;
};

// All 121 cells, sorted by (a, b). The parallel path partitions cells across
// threads and merges by index, so the result is identical either way.
std::vector<AbRow> sweep_ab(bool parallel, const SearchLimits& limits = {});
nlohmann::json sweep_json(const std::vector<AbRow>& rows);
std::string sweep_text(const std::vector<AbRow>& rows);

// One palindromic lift checked against its expected MDS status: the lift is
// MDS exactly for F_11 with alpha = 2.
struct RemarkRow {
    uint32_t q = 0;
    uint32_t alpha = 0;
    int d_free = 0;
    int bound = 0;
    bool is_mds = false;
    bool expected_mds = false;
    bool pass = false;
};

// Lifts of the rate-1/2 construction for every primitive element of F_9 and
// F_11, in ascending (q, alpha) order.
std::vector<RemarkRow> remark_rows(const SearchLimits& limits = {});
bool remark_pass(const std::vector<RemarkRow>& rows);
nlohmann::json remark_json(const std::vector<RemarkRow>& rows);
std::string remark_text(const std::vector<RemarkRow>& rows);

}  // namespace convmds

#endif
