#include "branchdiv/lattice/ledger.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <mutex>

namespace branchdiv::lattice {

// ---------------------------------------------------------------- ClassExpr

ClassExpr ClassExpr::constant(const Integer& c) {
    ClassExpr e;
    e.add_term({}, c);
    return e;
}

ClassExpr ClassExpr::generator(int i) {
    ClassExpr e;
    e.add_term({i}, Integer(1));
    return e;
}

void ClassExpr::add_term(const Key& k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

std::vector<Integer> ClassExpr::linear_coefficients(size_t ngens) const {
    std::vector<Integer> v(ngens, Integer(0));
    for (const auto& [k, c] : t_)
        if (k.size() == 1) v[static_cast<size_t>(k[0])] = c;
    return v;
}

ClassExpr operator+(const ClassExpr& a, const ClassExpr& b) {
    ClassExpr r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k, c);
    return r;
}

ClassExpr operator-(const ClassExpr& a) {
    ClassExpr r;
    for (const auto& [k, c] : a.t_) r.add_term(k, -c);
    return r;
}

ClassExpr operator-(const ClassExpr& a, const ClassExpr& b) { return a + (-b); }

ClassExpr operator*(const ClassExpr& a, const ClassExpr& b) {
    ClassExpr r;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_) {
            ClassExpr::Key k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            std::sort(k.begin(), k.end());
            r.add_term(k, ca * cb);
        }
    return r;
}

ClassExpr operator*(const Integer& s, const ClassExpr& a) {
    ClassExpr r;
    for (const auto& [k, c] : a.t_) r.add_term(k, s * c);
    return r;
}

ClassExpr ClassExpr::pow(unsigned e) const {
    ClassExpr r = constant(Integer(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
public:
    Parser(const std::string& s, const std::function<ClassExpr(const std::string&)>& resolve) : s_(s), resolve_(resolve) {}

    ClassExpr run() {
        ClassExpr e = sum();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + s_.substr(i_, 1) + "'");
        return e;
    }

private:
    const std::string& s_;
    const std::function<ClassExpr(const std::string&)>& resolve_;
    size_t i_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw LedgerError("cannot parse class expression \"" + s_ + "\" at offset " + std::to_string(i_) + ": " + why);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(const std::string& tok) {
        skip();
        if (s_.compare(i_, tok.size(), tok) == 0) {
            i_ += tok.size();
            return true;
        }
        return false;
    }
    bool at_factor_start() {
        skip();
        if (i_ >= s_.size()) return false;
        char c = s_[i_];
        return c == '(' || c == '_' || std::isalnum(static_cast<unsigned char>(c));
    }

    ClassExpr sum() {
        ClassExpr e;
        bool neg = false;
        if (eat("-") || eat("\xE2\x88\x92")) neg = true;
        else eat("+");
        e = neg ? -product() : product();
        while (true) {
            if (eat("+")) e = e + product();
            else if (eat("-") || eat("\xE2\x88\x92")) e = e - product();
            else break;
        }
        return e;
    }
    ClassExpr product() {
        ClassExpr e = power();
        while (true) {
            if (eat("*") || eat(".") || eat("\xC2\xB7")) e = e * power();
            else if (at_factor_start()) e = e * power(); // juxtaposition
            else break;
        }
        return e;
    }
    ClassExpr power() {
        ClassExpr b = atom();
        while (eat("^")) {
            skip();
            size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (start == i_) fail("exponent must be a non-negative integer");
            b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(start, i_ - start))));
        }
        return b;
    }
    ClassExpr atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        if (eat("(")) {
            ClassExpr e = sum();
            if (!eat(")")) fail("missing ')'");
            return e;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return ClassExpr::constant(Integer(s_.substr(start, i_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            return resolve_(s_.substr(start, i_ - start));
        }
        fail("unexpected character");
    }
};

} // namespace

// ---------------------------------------------------------------- Ledger

int Ledger::index_of(const std::string& g) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == g) return static_cast<int>(i);
    return -1;
}

ClassExpr Ledger::parse(const std::string& text) const {
    std::function<ClassExpr(const std::string&)> resolve = [this](const std::string& name) {
        int i = index_of(name);
        if (i >= 0) return ClassExpr::generator(i);
        auto it = named_.find(name);
        if (it != named_.end()) return it->second;
        throw LedgerError("unknown class '" + name + "' in ledger " + name_);
    };
    return Parser(text, resolve).run();
}

ClassExpr Ledger::named(const std::string& name) const {
    auto it = named_.find(name);
    if (it != named_.end()) return it->second;
    int i = index_of(name);
    if (i >= 0) return ClassExpr::generator(i);
    throw LedgerError("unknown class '" + name + "' in ledger " + name_);
}

std::vector<std::string> Ledger::named_classes() const { return named_order_; }

int Ledger::degree_of(const ClassExpr::Key& k) const {
    int d = 0;
    for (int g : k) d += degs_[static_cast<size_t>(g)];
    return d;
}

std::string Ledger::key_string(const ClassExpr::Key& k) const {
    std::string s;
    for (size_t i = 0; i < k.size();) {
        size_t j = i;
        while (j < k.size() && k[j] == k[i]) ++j;
        if (!s.empty()) s += ".";
        s += gens_[static_cast<size_t>(k[i])];
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s.empty() ? "1" : s;
}

std::optional<Integer> Ledger::derive(const ClassExpr::Key& k) const {
    // D1.D2.E = (D1|E).(D2|E) on E = P1 x P1
    if (k.size() != 3) return std::nullopt;
    for (size_t pos = 0; pos < 3; ++pos) {
        auto it = restrictions_.find(k[pos]);
        if (it == restrictions_.end()) continue;
        std::vector<int> rest;
        for (size_t q = 0; q < 3; ++q)
            if (q != pos) rest.push_back(k[q]);
        const auto& bd = it->second.bidegree;
        auto a = bd.find(gens_[static_cast<size_t>(rest[0])]);
        auto b = bd.find(gens_[static_cast<size_t>(rest[1])]);
        if (a == bd.end() || b == bd.end()) continue;
        long v = a->second.first * b->second.second + a->second.second * b->second.first;
        return Integer(v);
    }
    return std::nullopt;
}

Ledger::Lookup Ledger::product(const ClassExpr::Key& k) const {
    auto it = declared_.find(k);
    if (it != declared_.end()) return {it->second, "declared"};
    if (auto d = derive(k)) return {*d, "derived"};
    if (default_zero_) return {Integer(0), "default"};
    throw LedgerError("ledger " + name_ + " has no rule for " + key_string(k));
}

Integer Ledger::evaluate(const ClassExpr& e) const {
    Integer total = 0;
    for (const auto& [k, c] : e.terms()) {
        if (degree_of(k) != dim_)
            throw LedgerError("term " + key_string(k) + " is not of top degree " + std::to_string(dim_) + " in ledger " + name_);
        total += c * product(k).value;
    }
    return total;
}

std::vector<std::string> Ledger::consistency_issues() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : declared_) {
        auto d = derive(k);
        if (d && *d != v)
            out.push_back(key_string(k) + ": declared " + v.get_str() + ", derived " + d->get_str());
    }
    return out;
}

Ledger Ledger::from_json(const nlohmann::json& j) {
    Ledger L;
    L.source_ = j;
    try {
        L.name_ = j.at("name").get<std::string>();
        L.dim_ = j.at("dimension").get<int>();
        for (const auto& g : j.at("generators")) {
            L.gens_.push_back(g.at("name").get<std::string>());
            L.degs_.push_back(g.value("degree", 1));
        }
        L.default_zero_ = j.value("undeclared_products_vanish", false);
        for (const auto& p : j.at("products")) {
            ClassExpr::Key k;
            for (const auto& g : p.at("monomial")) {
                int i = L.index_of(g.get<std::string>());
                if (i < 0) throw LedgerError("unknown generator " + g.get<std::string>() + " in products");
                k.push_back(i);
            }
            std::sort(k.begin(), k.end());
            if (L.degree_of(k) != L.dim_) throw LedgerError("declared product " + L.key_string(k) + " is not of top degree");
            L.declared_[k] = Integer(p.at("value").get<long>());
        }
        if (j.contains("restrictions")) {
            for (const auto& [gname, r] : j.at("restrictions").items()) {
                int i = L.index_of(gname);
                if (i < 0) throw LedgerError("restriction to unknown generator " + gname);
                SurfaceRestriction sr;
                for (const auto& [other, bd] : r.at("bidegree").items()) sr.bidegree[other] = {bd.at(0).get<long>(), bd.at(1).get<long>()};
                L.restrictions_[i] = sr;
            }
        }
        if (j.contains("named")) {
            for (const auto& item : j.at("named")) {
                std::string n = item.at("name").get<std::string>();
                L.named_[n] = L.parse(item.at("class").get<std::string>());
                L.named_order_.push_back(n);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw LedgerError(std::string("malformed ledger definition: ") + e.what());
    }
    return L;
}

Ledger Ledger::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LedgerError("cannot open ledger file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw LedgerError("ledger file " + path + ": " + e.what());
    }
    return from_json(j);
}

// ---------------------------------------------------------------- built-ins

namespace {

const char* kPicS = R"({
  "name": "picS",
  "dimension": 2,
  "generators": [
    {"name": "h1"}, {"name": "h2"},
    {"name": "e1"}, {"name": "e2"}, {"name": "e3"}, {"name": "e4"},
    {"name": "e1bar"}, {"name": "e2bar"}, {"name": "e3bar"}, {"name": "e4bar"}
  ],
  "undeclared_products_vanish": true,
  "products": [
    {"monomial": ["h1", "h2"], "value": 1},
    {"monomial": ["e1", "e1"], "value": -1},
    {"monomial": ["e2", "e2"], "value": -1},
    {"monomial": ["e3", "e3"], "value": -1},
    {"monomial": ["e4", "e4"], "value": -1},
    {"monomial": ["e1bar", "e1bar"], "value": -1},
    {"monomial": ["e2bar", "e2bar"], "value": -1},
    {"monomial": ["e3bar", "e3bar"], "value": -1},
    {"monomial": ["e4bar", "e4bar"], "value": -1}
  ],
  "named": [
    {"name": "Kinv", "class": "2h1 + 2h2 - e1 - e2 - e3 - e4 - e1bar - e2bar - e3bar - e4bar"},
    {"name": "K", "class": "Kinv"},
    {"name": "C1", "class": "h1 - e1 - e2 - e3"},
    {"name": "C1bar", "class": "h1 - e1bar - e2bar - e3bar"},
    {"name": "C2", "class": "h2 - e4"},
    {"name": "C2bar", "class": "h2 - e4bar"},
    {"name": "C", "class": "C1 + C2 + C1bar + C2bar"}
  ]
})";

const char* kZ1 = R"({
  "name": "z1",
  "dimension": 3,
  "generators": [{"name": "F"}, {"name": "E1"}, {"name": "E1bar"}],
  "products": [
    {"monomial": ["F", "F", "F"], "value": 0},
    {"monomial": ["F", "F", "E1"], "value": 0},
    {"monomial": ["F", "F", "E1bar"], "value": 0},
    {"monomial": ["F", "E1", "E1"], "value": 1},
    {"monomial": ["F", "E1bar", "E1bar"], "value": 1}
  ],
  "restrictions": {
    "E1": {"bidegree": {"E1": [-1, -2], "F": [0, -1], "E1bar": [0, 0]}},
    "E1bar": {"bidegree": {"E1bar": [-1, -2], "F": [0, -1], "E1": [0, 0]}}
  },
  "named": [
    {"name": "D", "class": "2F - E1 - E1bar"}
  ]
})";

const char* kYtilde = R"({
  "name": "ytilde",
  "dimension": 3,
  "generators": [
    {"name": "Sigma", "degree": 1}, {"name": "f", "degree": 1},
    {"name": "zeta", "degree": 2}, {"name": "eta", "degree": 2}
  ],
  "products": [
    {"monomial": ["Sigma", "Sigma", "Sigma"], "value": -4},
    {"monomial": ["Sigma", "Sigma", "f"], "value": 1},
    {"monomial": ["Sigma", "f", "f"], "value": 0},
    {"monomial": ["f", "f", "f"], "value": 0},
    {"monomial": ["zeta", "Sigma"], "value": 1},
    {"monomial": ["eta", "Sigma"], "value": -2},
    {"monomial": ["zeta", "f"], "value": 0},
    {"monomial": ["eta", "f"], "value": 1}
  ],
  "named": [
    {"name": "K", "class": "-3Sigma - 6f"},
    {"name": "O1", "class": "Sigma + 2f"},
    {"name": "c2", "class": "8zeta + 3eta"},
    {"name": "D", "class": "4O1"}
  ]
})";

} // namespace

nlohmann::json builtin_ledger_json(const std::string& name) {
    if (name == "picS") return nlohmann::json::parse(kPicS);
    if (name == "z1") return nlohmann::json::parse(kZ1);
    if (name == "ytilde") return nlohmann::json::parse(kYtilde);
    throw LedgerError("unknown ledger '" + name + "' (expected picS, z1 or ytilde)");
}

std::vector<std::string> builtin_ledger_names() { return {"picS", "z1", "ytilde"}; }

const Ledger& builtin_ledger(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, Ledger> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, Ledger::from_json(builtin_ledger_json(name))).first;
    return it->second;
}

} // namespace branchdiv::lattice
