#include "branchdiv/cli/app.hpp"

#include "branchdiv/cli/report.hpp"
#include "branchdiv/cli/spec_file.hpp"
#include "branchdiv/lattice/ledger.hpp"
#include "branchdiv/lattice/surface.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>

namespace branchdiv::cli {

namespace {

struct Options {
    std::string command;
    std::string spec_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> jet_order;
    std::optional<std::string> format;
    std::string extras;
    std::string ring = "picS";
    std::string expr;
};

// Fixed evaluations listed by `report`.
const std::vector<std::pair<std::string, std::string>>& standard_lattice() {
    static const std::vector<std::pair<std::string, std::string>> v{
        {"picS", "C1^2"},           {"picS", "C2^2"},        {"picS", "C.C1"},
        {"picS", "(2K-C1-C1bar)^2"}, {"z1", "D^2.E1"},        {"z1", "D^2.F"},
        {"ytilde", "Sigma^3"},      {"ytilde", "(K+D).D^2"}, {"ytilde", "c2.D"},
    };
    return v;
}

struct Context {
    std::string stage = "cli";
    SpecFile file;
    bool have_spec = false;
    std::optional<std::uint64_t> seed;
    branch::SingularOptions sing_opts;
};

void load_spec(const Options& o, Context& ctx) {
    ctx.stage = "cli";
    if (!o.spec_path.empty()) {
        ctx.file = parse_spec(o.spec_path);
        ctx.have_spec = true;
    }
    if (o.seed) ctx.file.seed = o.seed;
    if (o.jet_order) ctx.file.jet_order = *o.jet_order;
    if (o.format) ctx.file.format = *o.format;
    if (!ctx.file.has_coefficients && ctx.file.seed) {
        ctx.stage = "branchfamily";
        ctx.file.spec = branch::random_spec(*ctx.file.seed);
        ctx.have_spec = true;
    }
    ctx.seed = ctx.file.seed;
    ctx.sing_opts.order = ctx.file.jet_order;
    ctx.sing_opts.degree_cap = ctx.file.degree_cap;
    ctx.sing_opts.charts = ctx.file.charts;
}

Json header(const std::string& command, const Context& ctx) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    if (ctx.have_spec) {
        j["seed"] = ctx.seed ? Json(std::to_string(*ctx.seed)) : Json(nullptr);
        j["options"] = {{"jet_order", ctx.sing_opts.order}, {"degree_cap", ctx.sing_opts.degree_cap}};
        j["spec"] = spec_json(ctx.file.spec);
    }
    return j;
}

void require_spec(const Context& ctx) {
    if (!ctx.have_spec) throw ParseError("command needs a spec file or --seed", 0, "spec");
}

Json run_command(const Options& o, Context& ctx) {
    load_spec(o, ctx);
    Json j = header(o.command, ctx);
    const auto& spec = ctx.file.spec;
    const std::string& c = o.command;

    if (c == "curves" || c == "points" || c == "sing" || c == "quadric" || c == "moduli" || c == "report") require_spec(ctx);

    if (c == "curves" || c == "report") {
        ctx.stage = "branchfamily";
        j["genericity"] = genericity_json(branch::genericity(spec));
        j["curves"] = curves_json(branch::double_curves(spec));
    }
    if (c == "points" || c == "report") {
        ctx.stage = "branchfamily";
        j["points"] = points_json(branch::curve_intersections(spec));
    }
    std::vector<lattice::ExtraSingularity> injected;
    if (c == "ledger" || c == "report") {
        ctx.stage = "latticecalc";
        injected = lattice::parse_extras(o.extras);
    }
    if (c == "sing" || c == "report" || (c == "ledger" && ctx.have_spec)) {
        ctx.stage = "branchfamily";
        const auto cen = branch::census(spec, injected, ctx.sing_opts);
        if (c == "ledger") {
            j["status"] = cen.status;
            j["extras"] = extras_json(cen.extras);
            j["injected"] = extras_json(cen.injected);
            j["ledger"] = euler_json(cen.ledger);
        } else {
            j["census"] = census_json(cen);
        }
    } else if (c == "ledger") {
        ctx.stage = "latticecalc";
        j["injected"] = extras_json(injected);
        j["ledger"] = euler_json(lattice::euler_ledger(injected));
    }
    if (c == "quadric" || c == "report") {
        ctx.stage = "quadricfit";
        j["quadric"] = quadric_json(spec);
    }
    if (c == "moduli" || c == "report") {
        ctx.stage = "modulicount";
        j["moduli"] = moduli_json(spec);
    }
    if (c == "appendix" || c == "report") {
        ctx.stage = "branchfamily";
        j["appendix"] = appendix_json(branch::appendix_blowup_check(ctx.sing_opts.order));
    }
    if (c == "lattice") {
        ctx.stage = "latticecalc";
        j["lattice"] = lattice_json(o.ring, o.expr);
    }
    if (c == "report") {
        ctx.stage = "latticecalc";
        Json l = Json::array();
        for (const auto& [ring, expr] : standard_lattice()) l.push_back(lattice_json(ring, expr));
        j["lattice"] = l;
    }
    return j;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Branch divisor toolkit for the quartic family z0 z3 z4 f = Q^2 on the scroll z0^2 = z1 z2", "branchdiv"};
    app.require_subcommand(1);
    Options o;

    auto spec_opts = [&](CLI::App* s) {
        s->add_option("spec", o.spec_path, "Spec file (key = value)");
        s->add_option("--seed", o.seed, "Seed for a random generic spec");
        s->add_option("--jet-order", o.jet_order, "Jet order for Milnor numbers")->check(CLI::Range(4, 32));
    };
    auto common = [&](CLI::App* s) {
        s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    const std::vector<std::pair<std::string, std::string>> cmds{
        {"curves", "Five double curves with degree tags"},
        {"points", "Pairwise intersection points of the double curves"},
        {"sing", "Singular points of the branch divisor and their classification"},
        {"ledger", "Euler number ledger, optionally with injected extra singularities"},
        {"quadric", "Quadrics through the double curves and the stepwise construction"},
        {"lattice", "Evaluate an intersection expression in a named ring"},
        {"moduli", "Orbit rank and parameter chain"},
        {"appendix", "Blowup check of the local model"},
        {"report", "Everything"},
    };
    for (const auto& [name, desc] : cmds) {
        CLI::App* s = app.add_subcommand(name, desc);
        common(s);
        if (name == "lattice") {
            s->add_option("expr", o.expr, "Class expression")->required();
            s->add_option("--ring", o.ring, "Ring")->check(CLI::IsMember(lattice::builtin_ledger_names()));
        } else {
            spec_opts(s);
        }
        if (name == "ledger" || name == "report") s->add_option("--extras", o.extras, "Extra singularities, e.g. 6x(1,2)");
        s->callback([&o, name = name] { o.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error [cli]: " << e.what() << "\n";
        return kParse;
    }

    Context ctx;
    try {
        const Json j = run_command(o, ctx);
        if (ctx.file.format == "text") out << text_summary(j);
        else out << j.dump(2) << "\n";
        return kOk;
    } catch (const ParseError& e) {
        err << "error [cli]: " << e.what() << "\n";
        return kParse;
    } catch (const lattice::LedgerError& e) {
        err << "error [latticecalc]: " << e.what() << "\n";
        return kParse;
    } catch (const DegenerateSpecError& e) {
        err << "error [" << ctx.stage << "]: degenerate spec: " << e.what() << "\n";
        return kDegenerate;
    } catch (const DimensionError& e) {
        err << "error [" << ctx.stage << "]: degenerate spec: " << e.what() << "\n";
        return kDegenerate;
    } catch (const std::invalid_argument& e) {
        err << "error [" << ctx.stage << "]: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        err << "error [" << ctx.stage << "]: internal: " << e.what() << "\n";
        return kInternal;
    }
}

} // namespace branchdiv::cli
