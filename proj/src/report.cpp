#include "convmds/report.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace convmds {

using nlohmann::json;

namespace {

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (uint32_t c : p.reps()) arr.push_back(c);
    return arr;
}

}  // namespace

AnalysisReport analyze(const ConvCode& code, bool skip_distance, const SearchLimits& limits) {
    AnalysisReport r;
    r.n = code.n();
    r.k = code.k();
    r.delta = code.degree();
    r.q = code.field().q();
    r.bound = singleton_bound(r.n, r.k, r.delta);
    r.catastrophicity = is_catastrophic(code);

    if (!skip_distance) {
        const auto start = std::chrono::steady_clock::now();
        r.distance = free_distance(code, limits);
        r.distance_seconds = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start).count();
        r.capabilities = error_capabilities(r.distance->d_free);

        if (r.distance->bound != r.bound ||
            r.distance->is_mds != (r.distance->d_free == r.bound))
            throw InternalInconsistency("distance report disagrees with the Singleton bound");
        if (codeword_weight(r.distance->witness_codeword) != r.distance->d_free)
            throw InternalInconsistency("witness weight does not match d_free");
    }
    return r;
}

json report_json(const AnalysisReport& r) {
    json j;
    j["parameters"] = {{"n", r.n}, {"k", r.k}, {"delta", r.delta}, {"q", r.q}};
    j["singleton_bound"] = r.bound;
    j["is_catastrophic"] = r.catastrophicity.is_catastrophic;
    j["minor_gcd"] = poly_to_json(r.catastrophicity.minor_gcd);
    if (r.distance) {
        j["d_free"] = r.distance->d_free;
        j["is_mds"] = r.distance->is_mds;
        j["witness_input"] = poly_to_json(r.distance->witness_input);
        json cw = json::array();
        for (const Poly& p : r.distance->witness_codeword) cw.push_back(poly_to_json(p));
        j["witness_codeword"] = cw;
        j["capabilities"] = {{"detect_s", r.capabilities->detect_s},
                             {"correct_t", r.capabilities->correct_t}};
    }
    return j;
}

std::string report_text(const AnalysisReport& r, bool with_timings) {
    std::ostringstream out;
    out << "code: (" << r.n << ", " << r.k << ", " << r.delta << ") over F_" << r.q << "\n";
    out << "singleton bound: " << r.bound << "\n";
    out << "catastrophic: " << (r.catastrophicity.is_catastrophic ? "yes" : "no") << "\n";
    out << "minor gcd: " << r.catastrophicity.minor_gcd.to_string() << "\n";
    if (r.catastrophicity.witness_factor)
        out << "non-unit factor: " << r.catastrophicity.witness_factor->to_string() << "\n";
    if (r.distance) {
        out << "free distance: " << r.distance->d_free << "\n";
        out << "MDS: " << (r.distance->is_mds ? "yes" : "no") << "\n";
        out << "witness input: " << r.distance->witness_input.to_string() << "\n";
        out << "witness codeword: (";
        for (size_t j = 0; j < r.distance->witness_codeword.size(); ++j) {
            if (j) out << ", ";
            out << r.distance->witness_codeword[j].to_string();
        }
        out << ")\n";
        out << "detects up to " << r.capabilities->detect_s << " errors, corrects up to "
            << r.capabilities->correct_t << "\n";
        if (with_timings)
            out << "distance search: " << r.distance_seconds << " s\n";
    } else {
        out << "free distance: skipped\n";
    }
    return out.str();
}

std::vector<AbRow> sweep_ab(bool parallel, const SearchLimits& limits) {
    const Field& f = make_field(11);
    std::vector<AbRow> rows(121);

    auto run_cell = [&](int idx) {
        const int a = idx / 11, b = idx % 11;
        const ConvCode code = ab_family(f.element(a), f.element(b));
        const DistanceReport dist = free_distance(code, limits);
        rows[idx] = AbRow{a,
                          b,
                          code.degree(),
                          dist.d_free,
                          dist.bound,
                          dist.is_mds,
                          is_catastrophic(code).is_catastrophic};
    };

    if (!parallel) {
        for (int idx = 0; idx < 121; ++idx) run_cell(idx);
        return rows;
    }

    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int idx = next.fetch_add(1); idx < 121; idx = next.fetch_add(1)) run_cell(idx);
        });
    }
    for (auto& t : pool) t.join();
    return rows;
}

json sweep_json(const std::vector<AbRow>& rows) {
    json arr = json::array();
    int mds = 0, cat = 0;
    for (const AbRow& r : rows) {
        arr.push_back({{"a", r.a},
                       {"b", r.b},
                       {"delta", r.delta},
                       {"d_free", r.d_free},
                       {"singleton_bound", r.bound},
                       {"is_mds", r.is_mds},
                       {"is_catastrophic", r.is_catastrophic}});
        mds += r.is_mds;
        cat += r.is_catastrophic;
    }
    return json{{"rows", arr}, {"mds_count", mds}, {"catastrophic_count", cat}};
}

std::string sweep_text(const std::vector<AbRow>& rows) {
    std::ostringstream out;
    out << "  a   b  delta  d_free  bound  MDS  catastrophic\n";
    int mds = 0, mds_noncat = 0, cat = 0;
    for (const AbRow& r : rows) {
        char line[96];
        std::snprintf(line, sizeof line, "%3d %3d  %5d  %6d  %5d  %3s  %s%s\n", r.a, r.b, r.delta,
                      r.d_free, r.bound, r.is_mds ? "yes" : "no", r.is_catastrophic ? "yes" : "no",
                      (r.a == 1 && r.b == 1) ? "  <- palindromic corner" : "");
        out << line;
        mds += r.is_mds;
        mds_noncat += r.is_mds && !r.is_catastrophic;
        cat += r.is_catastrophic;
    }
    out << "MDS hits: " << mds << " of 121 pairs (" << mds_noncat << " among the "
        << (121 - cat) << " noncatastrophic)\n";
    out << "catastrophic pairs: " << cat << "\n";
    return out.str();
}

std::vector<RemarkRow> remark_rows(const SearchLimits& limits) {
    std::vector<RemarkRow> rows;
    for (uint32_t q : {9u, 11u}) {
        const Field& f = (q == 9) ? make_field(3, 2) : make_field(11);
        for (Felt alpha : f.primitive_elements()) {
            const ConvCode base = justesen_rate_half(f, alpha);
            std::vector<Felt> g0, g1, g2;
            for (int j = 0; j < base.n(); ++j) {
                g0.push_back(base.entry(0, j).coeff(0));
                g1.push_back(base.entry(0, j).coeff(1));
                g2.push_back(base.entry(0, j).coeff(2));
            }
            const ConvCode lifted = palindrome_lift(g0, g1, g2);
            const DistanceReport dist = free_distance(lifted, limits);
            RemarkRow row;
            row.q = q;
            row.alpha = alpha.rep();
            row.d_free = dist.d_free;
            row.bound = dist.bound;
            row.is_mds = dist.is_mds;
            row.expected_mds = (q == 11 && alpha.rep() == 2);
            row.pass = (row.is_mds == row.expected_mds);
            rows.push_back(row);
        }
    }
    return rows;
}

bool remark_pass(const std::vector<RemarkRow>& rows) {
    for (const RemarkRow& r : rows)
        if (!r.pass) return false;
    return !rows.empty();
}

json remark_json(const std::vector<RemarkRow>& rows) {
    json arr = json::array();
    for (const RemarkRow& r : rows) {
        arr.push_back({{"q", r.q},
                       {"alpha", r.alpha},
                       {"d_free", r.d_free},
                       {"singleton_bound", r.bound},
                       {"is_mds", r.is_mds},
                       {"expected_mds", r.expected_mds},
                       {"pass", r.pass}});
    }
    return json{{"checks", arr}, {"pass", remark_pass(rows)}};
}

std::string remark_text(const std::vector<RemarkRow>& rows) {
    std::ostringstream out;
    for (const RemarkRow& r : rows) {
        out << "F_" << r.q << " alpha=" << r.alpha << ": lifted (2,1,5) code has d_free "
            << r.d_free << " / bound " << r.bound << " -> " << (r.is_mds ? "MDS" : "not MDS")
            << " (expected " << (r.expected_mds ? "MDS" : "not MDS") << ") "
            << (r.pass ? "ok" : "MISMATCH") << "\n";
    }
    out << "verify-remark: " << (remark_pass(rows) ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace convmds
