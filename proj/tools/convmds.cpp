// Command-line front end: load or construct code descriptions, analyze them
// (degree, Singleton bound, catastrophicity, exact free distance), verify the
// built-in claims and sweep the (a, b) family.
//
// Exit codes: 0 success/PASS, 1 usage error, 2 invalid input data,
// 3 verified-claim mismatch or internal inconsistency.

#include <cctype>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "convmds/codefile.hpp"
#include "convmds/constructions.hpp"
#include "convmds/report.hpp"

namespace {

using namespace convmds;

std::vector<Felt> parse_row(const Field& f, const std::string& row) {
    std::vector<Felt> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw CodeFileError("empty entry in row '" + row + "'");
        long v = std::stol(cur);
        if (v < 0 || uint64_t(v) >= f.q())
            throw CodeFileError("row entry " + cur + " out of range [0, q)");
        out.push_back(f.element(uint32_t(v)));
        cur.clear();
    };
    for (char c : row) {
        if (c == ',') flush();
        else if (!std::isspace(static_cast<unsigned char>(c))) cur.push_back(c);
    }
    flush();
    return out;
}

int cmd_analyze(const std::string& path, bool as_json, bool skip_distance) {
    const ConvCode code = CodeFile::load(path).to_code();
    const AnalysisReport rep = analyze(code, skip_distance);
    if (as_json)
        std::cout << report_json(rep).dump(2) << "\n";
    else
        std::cout << report_text(rep);
    return 0;
}

struct ConstructArgs {
    std::string which;
    uint32_t p = 11;
    uint32_t m = 1;
    int64_t alpha = -1;
    int64_t a = -1;
    int64_t b = -1;
    std::string g0, g1, g2;
    std::string out;
};

int cmd_construct(const ConstructArgs& args) {
    std::optional<ConvCode> code;
    if (args.which == "theorem3") {
        code = theorem3_code();
    } else if (args.which == "justesen") {
        if (args.alpha < 0) {
            std::cerr << "construct justesen requires --alpha\n";
            return 1;
        }
        const Field& f = make_field(args.p, args.m);
        code = justesen_rate_half(f, f.element(uint32_t(args.alpha)));
    } else if (args.which == "palindrome") {
        if (args.g0.empty() || args.g1.empty() || args.g2.empty()) {
            std::cerr << "construct palindrome requires --g0, --g1 and --g2\n";
            return 1;
        }
        const Field& f = make_field(args.p, args.m);
        code = palindrome_lift(parse_row(f, args.g0), parse_row(f, args.g1),
                               parse_row(f, args.g2));
    } else if (args.which == "ab") {
        if (args.a < 0 || args.b < 0) {
            std::cerr << "construct ab requires --a and --b\n";
            return 1;
        }
        const Field& f = make_field(11);
        if (args.a >= 11 || args.b >= 11) throw BadField("a and b must be F_11 elements");
        code = ab_family(f.element(uint32_t(args.a)), f.element(uint32_t(args.b)));
        if (args.a == 1 && args.b == 1)
            std::cout << "warning: (a, b) = (1, 1) is the catastrophic palindromic code\n";
    }

    CodeFile::from_code(*code).save(args.out);
    std::cout << "wrote " << args.out << ": (" << code->n() << ", " << code->k() << ", "
              << code->degree() << ") code over " << code->field().name() << "\n";
    for (int j = 0; j < code->n(); ++j)
        std::cout << "  g[" << j << "] = " << code->entry(0, j).to_string() << "\n";
    return 0;
}

int cmd_search_ab(bool as_json, bool parallel) {
    const auto rows = sweep_ab(parallel);
    if (as_json)
        std::cout << sweep_json(rows).dump(2) << "\n";
    else
        std::cout << sweep_text(rows);
    return 0;
}

int cmd_verify_remark(bool as_json) {
    const auto rows = remark_rows();
    if (as_json)
        std::cout << remark_json(rows).dump(2) << "\n";
    else
        std::cout << remark_text(rows);
    return remark_pass(rows) ? 0 : 3;
}

int cmd_window(const std::string& path, int len, int min_required) {
    const ConvCode code = CodeFile::load(path).to_code();
    const WindowReport rep = window_min_weight(code, len);
    std::cout << "window [0," << len << "] minimum weight: " << rep.min_weight << "\n";
    std::cout << "witness prefix: [";
    for (size_t i = 0; i < rep.witness_prefix.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << rep.witness_prefix[i].rep();
    }
    std::cout << "]\n";
    if (rep.min_weight < min_required) {
        std::cout << "threshold " << min_required << ": FAIL (counterexample above)\n";
        return 3;
    }
    std::cout << "threshold " << min_required << ": PASS\n";
    return 0;
}

int cmd_oracle(const std::string& path, int max_deg) {
    const ConvCode code = CodeFile::load(path).to_code();
    const OracleReport rep = brute_force_min_weight(code, max_deg);
    std::cout << "oracle minimum weight (deg u <= " << max_deg << "): " << rep.min_weight << "\n";
    std::cout << "oracle witness: " << rep.witness.to_string() << "\n";

    SearchLimits limits;
    uint64_t states = 1;
    bool searchable = true;
    for (int i = 0; i < code.degree() && searchable; ++i) {
        states *= code.field().q();
        if (states > limits.state_cap) searchable = false;
    }
    if (!searchable) {
        std::cout << "free distance: state space too large to compare\n";
        return 0;
    }
    const int d = free_distance(code, limits).d_free;
    std::cout << "free distance: " << d << "\n";
    if (rep.min_weight < d) {
        std::cout << "oracle BELOW free distance: internal inconsistency\n";
        return 3;
    }
    std::cout << "oracle >= free distance: ok\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of convolutional codes over small finite fields"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false, skip_distance = false, parallel = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a code description file");
    analyze_cmd->add_option("file", path, "code description file")->required();
    analyze_cmd->add_flag("--json", as_json, "machine-readable output");
    analyze_cmd->add_flag("--skip-distance", skip_distance, "omit the free-distance search");

    ConstructArgs cargs;
    auto* construct_cmd = app.add_subcommand("construct", "write a code description file");
    construct_cmd->add_option("which", cargs.which, "justesen|theorem3|palindrome|ab")
        ->required()
        ->check(CLI::IsMember({"justesen", "theorem3", "palindrome", "ab"}));
    construct_cmd->add_option("--p", cargs.p, "field characteristic (default 11)");
    construct_cmd->add_option("--m", cargs.m, "extension degree (default 1)");
    construct_cmd->add_option("--alpha", cargs.alpha, "primitive element (packed rep)");
    construct_cmd->add_option("--a", cargs.a, "family parameter a");
    construct_cmd->add_option("--b", cargs.b, "family parameter b");
    construct_cmd->add_option("--g0", cargs.g0, "comma-separated row, e.g. 8,8");
    construct_cmd->add_option("--g1", cargs.g1, "comma-separated row");
    construct_cmd->add_option("--g2", cargs.g2, "comma-separated row");
    construct_cmd->add_option("--out", cargs.out, "output path")->required();

    auto* search_cmd = app.add_subcommand("search-ab", "exhaustive sweep of the (a, b) family");
    search_cmd->add_flag("--json", as_json, "machine-readable output");
    search_cmd->add_flag("--parallel", parallel, "use all cores (identical output)");

    auto* remark_cmd = app.add_subcommand("verify-remark",
                                          "check the palindromic lifts over F_9 and F_11");
    remark_cmd->add_flag("--json", as_json, "machine-readable output");

    int window_len = 0, window_min = 0;
    auto* window_cmd = app.add_subcommand("window", "minimum output weight over a window");
    window_cmd->add_option("file", path, "code description file")->required();
    window_cmd->add_option("--len", window_len, "window length L (columns 0..L)")->required();
    window_cmd->add_option("--min", window_min, "required minimum (default 0)");

    int max_deg = 0;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force minimum weight check");
    oracle_cmd->add_option("file", path, "code description file")->required();
    oracle_cmd->add_option("--max-deg", max_deg, "maximum input degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(path, as_json, skip_distance);
        if (*construct_cmd) return cmd_construct(cargs);
        if (*search_cmd) return cmd_search_ab(as_json, parallel);
        if (*remark_cmd) return cmd_verify_remark(as_json);
        if (*window_cmd) return cmd_window(path, window_len, window_min);
        if (*oracle_cmd) return cmd_oracle(path, max_deg);
    } catch (const convmds::InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const convmds::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
