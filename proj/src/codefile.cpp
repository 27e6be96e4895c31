#include "convmds/codefile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace convmds {

using nlohmann::json;

CodeFile CodeFile::from_code(const ConvCode& code) {
    CodeFile cf;
    cf.p = code.field().p();
    cf.m = code.field().m();
    cf.modulus = code.field().modulus();
    cf.k = code.k();
    cf.n = code.n();
    cf.generator.resize(cf.k);
    for (int r = 0; r < cf.k; ++r) {
        cf.generator[r].resize(cf.n);
        for (int c = 0; c < cf.n; ++c) {
            const auto& reps = code.entry(r, c).reps();
            cf.generator[r][c].assign(reps.begin(), reps.end());
        }
    }
    return cf;
}

CodeFile CodeFile::parse(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw CodeFileError(std::string("not valid JSON: ") + e.what());
    }
    try {
        CodeFile cf;
        if (!j.is_object() || !j.contains("field") || !j.contains("k") || !j.contains("n") ||
            !j.contains("generator"))
            throw CodeFileError("document must contain field, k, n and generator");
        const json& f = j.at("field");
        if (!f.contains("p") || !f.contains("m"))
            throw CodeFileError("field must contain p and m");
        const int64_t p = f.at("p").get<int64_t>();
        const int64_t m = f.at("m").get<int64_t>();
        if (p < 2 || uint64_t(p) > Field::kMaxQ) throw CodeFileError("field.p out of range");
        if (m < 1 || m > 20) throw CodeFileError("field.m out of range");
        cf.p = uint32_t(p);
        cf.m = uint32_t(m);
        if (cf.m > 1) {
            if (!f.contains("modulus"))
                throw CodeFileError("field with m > 1 requires a modulus");
            for (int64_t c : f.at("modulus").get<std::vector<int64_t>>()) {
                if (c < 0 || c >= p) throw CodeFileError("modulus coefficient out of range");
                cf.modulus.push_back(uint32_t(c));
            }
        } else if (f.contains("modulus")) {
            throw CodeFileError("field with m = 1 must not carry a modulus");
        }
        const int64_t k = j.at("k").get<int64_t>();
        const int64_t n = j.at("n").get<int64_t>();
        if (k < 1 || k > 64 || n < 1 || n > 64) throw CodeFileError("k or n out of range");
        cf.k = int(k);
        cf.n = int(n);
        cf.generator = j.at("generator").get<std::vector<std::vector<std::vector<int64_t>>>>();
        return cf;
    } catch (const json::exception& e) {
        throw CodeFileError(std::string("malformed code file: ") + e.what());
    }
}

CodeFile CodeFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CodeFileError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string CodeFile::serialize() const {
    json f{{"p", p}, {"m", m}};
    if (m > 1) f["modulus"] = modulus;
    json j{{"field", f}, {"k", k}, {"n", n}, {"generator", generator}};
    return j.dump(2) + "\n";
}

void CodeFile::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw CodeFileError("cannot write " + path);
    out << serialize();
}

ConvCode CodeFile::to_code() const {
    try {
        const Field& f = (m == 1) ? make_field(p) : make_field(p, modulus);
        return ConvCode::make(f, k, n, generator);
    } catch (const CodeFileError&) {
        throw;
    } catch (const Error& e) {
        throw CodeFileError(e.what());
    }
}

}  // namespace convmds
