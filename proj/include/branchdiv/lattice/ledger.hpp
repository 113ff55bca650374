#pragma once

#include "branchdiv/exactalg/rational.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchdiv::lattice {

struct LedgerError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Integer polynomial in the generators of a ledger; a key is a sorted
// multiset of generator indices.
class ClassExpr {
public:
    using Key = std::vector<int>;

    ClassExpr() = default;
    static ClassExpr constant(const Integer& c);
    static ClassExpr generator(int i);

    const std::map<Key, Integer>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    // Linear part coefficients (degree-one terms only), indexed by generator.
    std::vector<Integer> linear_coefficients(size_t ngens) const;

    friend ClassExpr operator+(const ClassExpr& a, const ClassExpr& b);
    friend ClassExpr operator-(const ClassExpr& a, const ClassExpr& b);
    friend ClassExpr operator-(const ClassExpr& a);
    friend ClassExpr operator*(const ClassExpr& a, const ClassExpr& b);
    friend ClassExpr operator*(const Integer& s, const ClassExpr& a);
    friend bool operator==(const ClassExpr& a, const ClassExpr& b) { return a.t_ == b.t_; }
    ClassExpr pow(unsigned e) const;

private:
    std::map<Key, Integer> t_;
    void add_term(const Key& k, const Integer& c);
};

// Restriction of a divisor generator E to itself, when E is P1 x P1:
// each divisor generator restricts to a bidegree (a, b); products on E
// use (a, b).(c, d) = ad + bc.
struct SurfaceRestriction {
    std::map<std::string, std::pair<long, long>> bidegree;
};

// A formal intersection ledger: graded generators, declared top-degree
// products, named classes, optional restriction rules.
class Ledger {
public:
    static Ledger from_json(const nlohmann::json& j);
    static Ledger load(const std::string& path);
    nlohmann::json to_json() const { return source_; }

    const std::string& name() const { return name_; }
    int dimension() const { return dim_; }
    const std::vector<std::string>& generators() const { return gens_; }
    int generator_degree(int i) const { return degs_[static_cast<size_t>(i)]; }
    std::vector<std::string> named_classes() const;

    // Grammar: sums and differences of products; factors are integers,
    // generator or class names, parenthesized expressions, each optionally
    // raised to a power with '^'. Juxtaposition "2K" means 2*K; '.', '*'
    // and the middle dot multiply.
    ClassExpr parse(const std::string& text) const;
    ClassExpr named(const std::string& name) const;

    // Value of a top-degree expression. Throws on non-top-degree terms and
    // undeclared products.
    Integer evaluate(const ClassExpr& e) const;
    Integer evaluate(const std::string& text) const { return evaluate(parse(text)); }

    // Value of one top-degree monomial and where it came from.
    struct Lookup {
        Integer value;
        std::string source; // "declared", "derived", "default"
    };
    Lookup product(const ClassExpr::Key& k) const;

    // Declared products that disagree with a restriction-derived value.
    std::vector<std::string> consistency_issues() const;

    std::string key_string(const ClassExpr::Key& k) const;

private:
    std::string name_;
    int dim_ = 0;
    std::vector<std::string> gens_;
    std::vector<int> degs_;
    std::map<ClassExpr::Key, Integer> declared_;
    bool default_zero_ = false;
    std::map<std::string, ClassExpr> named_;
    std::vector<std::string> named_order_;
    std::map<int, SurfaceRestriction> restrictions_; // by generator index
    nlohmann::json source_;

    int index_of(const std::string& g) const;
    int degree_of(const ClassExpr::Key& k) const;
    std::optional<Integer> derive(const ClassExpr::Key& k) const;
};

// Built-in ledgers: "picS", "z1", "ytilde".
const Ledger& builtin_ledger(const std::string& name);
nlohmann::json builtin_ledger_json(const std::string& name);
std::vector<std::string> builtin_ledger_names();

} // namespace branchdiv::lattice
