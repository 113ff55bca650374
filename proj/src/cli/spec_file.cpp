#include "branchdiv/cli/spec_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace branchdiv::cli {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Drops a '#' comment outside quotes.
std::string strip_comment(const std::string& s) {
    bool quoted = false;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        else if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

std::string unquote(const std::string& v, int line, const std::string& key) {
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
    if (v.find('"') != std::string::npos) throw ParseError("line " + std::to_string(line) + ": unbalanced quotes in '" + key + "'", line, key);
    return v;
}

Rational number(const std::string& raw, int line, const std::string& key) {
    const std::string v = unquote(trim(raw), line, key);
    try {
        return parse_rational(v);
    } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(line) + ": field '" + key + "': " + e.what(), line, key);
    }
}

std::vector<Rational> number_list(const std::string& v, int line, const std::string& key) {
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw ParseError("line " + std::to_string(line) + ": field '" + key + "' must be a list [a, b, ...]", line, key);
    const std::string body = trim(v.substr(1, v.size() - 2));
    std::vector<Rational> out;
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(number(item, line, key));
    return out;
}

long integer(const std::string& v, int line, const std::string& key, long lo, long hi) {
    Rational q = number(v, line, key);
    if (q.get_den() != 1 || q < lo || q > hi)
        throw ParseError("line " + std::to_string(line) + ": field '" + key + "' must be an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", line, key);
    return q.get_num().get_si();
}

} // namespace

SpecFile parse_spec_text(const std::string& text) {
    SpecFile sf;
    std::set<std::string> seen;
    bool has_f = false, has_q = false;
    std::stringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(strip_comment(raw));
        if (s.empty()) continue;
        const size_t eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("line " + std::to_string(line) + ": expected 'key = value'", line, "");
        std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (key == "q") key = "Q";
        if (!seen.insert(key).second) throw ParseError("line " + std::to_string(line) + ": duplicate field '" + key + "'", line, key);
        if (key == "f") {
            auto v = number_list(val, line, key);
            if (v.size() != 5) throw ParseError("line " + std::to_string(line) + ": field 'f' needs 5 coefficients, got " + std::to_string(v.size()), line, key);
            for (size_t i = 0; i < 5; ++i) sf.spec.f[i] = v[i];
            has_f = true;
        } else if (key == "Q") {
            auto v = number_list(val, line, key);
            if (v.size() != 15) throw ParseError("line " + std::to_string(line) + ": field 'Q' needs 15 coefficients, got " + std::to_string(v.size()), line, key);
            for (size_t i = 0; i < 15; ++i) sf.spec.q[i] = v[i];
            has_q = true;
        } else if (key == "seed") {
            Rational q = number(val, line, key);
            if (q.get_den() != 1 || q < 0 || !q.get_num().fits_ulong_p())
                throw ParseError("line " + std::to_string(line) + ": field 'seed' must be a non-negative integer", line, key);
            sf.seed = q.get_num().get_ui();
        } else if (key == "jet_order") {
            sf.jet_order = static_cast<int>(integer(val, line, key, 4, 32));
        } else if (key == "degree_cap") {
            sf.degree_cap = static_cast<int>(integer(val, line, key, 1, 16));
        } else if (key == "charts") {
            const std::string c = unquote(val, line, key);
            if (c == "all") sf.charts = {scroll::Chart::Z1, scroll::Chart::Z2};
            else if (c == "z1") sf.charts = {scroll::Chart::Z1};
            else if (c == "z2") sf.charts = {scroll::Chart::Z2};
            else throw ParseError("line " + std::to_string(line) + ": field 'charts' must be all, z1 or z2", line, key);
        } else if (key == "format") {
            sf.format = unquote(val, line, key);
            if (sf.format != "json" && sf.format != "text") throw ParseError("line " + std::to_string(line) + ": field 'format' must be json or text", line, key);
        } else {
            throw ParseError("line " + std::to_string(line) + ": unknown field '" + key + "'", line, key);
        }
    }
    if (has_f != has_q) throw ParseError(std::string("missing field '") + (has_f ? "Q" : "f") + "'", 0, has_f ? "Q" : "f");
    sf.has_coefficients = has_f && has_q;
    if (!sf.has_coefficients && !sf.seed) throw ParseError("spec needs f and Q, or a seed", 0, "f");
    return sf;
}

SpecFile parse_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file '" + path + "'", 0, "");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec_text(ss.str());
}

std::string write_spec(const branch::BranchSpec& spec) {
    auto list = [](const auto& a) {
        std::string s = "[";
        for (size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + std::string("\"") + to_string(a[i]) + "\"";
        return s + "]";
    };
    return "f = " + list(spec.f) + "\nQ = " + list(spec.q) + "\n";
}

} // namespace branchdiv::cli
