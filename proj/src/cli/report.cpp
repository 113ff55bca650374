#include "branchdiv/cli/report.hpp"

#include "branchdiv/lattice/ledger.hpp"

#include <sstream>

namespace branchdiv::cli {

Json rational_json(const Rational& q) { return to_string(q); }

Json field_elem_json(const FieldElem& a) {
    Json j;
    Json cs = Json::array();
    const int d = a.field() ? a.field()->degree() : 1;
    for (int i = 0; i < d; ++i) cs.push_back(rational_json(a.coeff(static_cast<size_t>(i))));
    j["coeffs"] = cs;
    j["minpoly"] = a.field() ? to_string(a.field()->modulus(), "t") : "t";
    return j;
}

Json point_json(const ClosedPoint& p) {
    Json j;
    j["degree"] = p.degree();
    j["field"] = p.field ? to_string(p.field->modulus(), "t") : "t";
    Json cs = Json::array();
    for (const auto& c : p.coords) {
        Json v = Json::array();
        for (int i = 0; i < p.degree(); ++i) v.push_back(rational_json(c.coeff(static_cast<size_t>(i))));
        cs.push_back(v);
    }
    j["coords"] = cs;
    j["real_points"] = p.real_points();
    j["conjugate_pairs"] = p.conjugate_pairs();
    return j;
}

Json spec_json(const branch::BranchSpec& spec) {
    Json j;
    Json f = Json::array(), q = Json::array();
    for (const auto& x : spec.f) f.push_back(rational_json(x));
    for (const auto& x : spec.q) q.push_back(rational_json(x));
    j["f"] = f;
    j["Q"] = q;
    j["f_form"] = spec.f_form().str();
    j["Q_form"] = spec.q_form().str();
    return j;
}

Json genericity_json(const branch::GenericityReport& g) {
    Json j;
    j["q_transversal"] = g.q_transversal;
    j["ridge_off_h3"] = g.ridge_off_h3;
    j["ridge_off_h4"] = g.ridge_off_h4;
    j["ridge_off_f"] = g.ridge_off_f;
    j["f_section_cone"] = g.f_section_cone;
    j["planes_avoid_ridge"] = g.planes_avoid_ridge;
    j["curves_distinct"] = g.curves_distinct;
    j["intersections_finite"] = g.intersections_finite;
    j["all"] = g.all();
    return j;
}

Json curves_json(const std::vector<branch::DoubleCurve>& curves) {
    Json a = Json::array();
    for (const auto& c : curves) {
        Json j;
        j["index"] = c.index;
        j["type"] = branch::to_string(c.type);
        j["degree"] = c.degree;
        Json g = Json::array();
        for (const auto& p : c.generators) g.push_back(p.str());
        j["ideal"] = g;
        j["doubled"] = c.doubled;
        a.push_back(j);
    }
    return a;
}

Json points_json(const branch::IntersectionReport& rep) {
    Json j;
    j["pattern"] = {rep.ridge, rep.line, rep.conic};
    j["total"] = rep.total();
    j["conjugate_pairs"] = rep.conjugate_pairs;
    j["real_points"] = rep.real_points;
    j["multiple_roots"] = rep.multiple_roots;
    Json pairs = Json::array();
    for (const auto& pr : rep.pairs) {
        Json p;
        p["curves"] = {pr.i, pr.j};
        p["count"] = pr.count();
        Json pts = Json::array();
        for (const auto& ip : pr.points) {
            Json q = point_json(ip.point);
            q["multiplicity"] = ip.multiplicity;
            pts.push_back(q);
        }
        p["points"] = pts;
        pairs.push_back(p);
    }
    j["pairs"] = pairs;
    return j;
}

Json milnor_json(const branch::MilnorReport& m) {
    Json j;
    j["mu"] = m.mu ? Json(*m.mu) : Json("undetermined");
    j["corank"] = m.corank;
    j["classification"] = m.classification;
    j["determinacy_k"] = m.determinacy_k;
    return j;
}

Json extras_json(const std::vector<lattice::ExtraSingularity>& extras) {
    Json a = Json::array();
    for (const auto& e : extras) a.push_back({{"mu", e.mu}, {"e_beta", e.e_beta}});
    return a;
}

Json euler_json(const lattice::EulerLedger& e) {
    Json j;
    j["e_Z"] = e.e_Z;
    j["e_Z1"] = e.e_Z1;
    j["e_Z3"] = e.e_Z3;
    j["e_Z4_chain"] = e.e_Z4_chain;
    j["e_Ytilde"] = e.e_Ytilde;
    j["e_Sigma"] = e.e_Sigma;
    j["e_l"] = e.e_l;
    j["e_Y"] = e.e_Y;
    j["c2_dot_D"] = e.c2_dot_D;
    j["adjunction_term"] = e.adjunction_term;
    j["e_Dtilde"] = e.e_Dtilde;
    j["e_D"] = e.e_D;
    j["sum_mu"] = e.sum_mu;
    j["e_B"] = e.e_B;
    j["e_Z5"] = e.e_Z5;
    j["e_Z4"] = e.e_Z4;
    j["constraint_sum"] = e.constraint_sum;
    j["constraint_closes"] = e.constraint_closes;
    j["z4_closes"] = e.z4_closes;
    j["closed"] = e.closed();
    return j;
}

Json census_json(const branch::Census& c) {
    Json j;
    j["status"] = c.status;
    j["a1_curve_pairs"] = c.a1_curve_pairs;
    j["a3_ridge"] = c.a3_ridge;
    j["other_curve_pairs"] = c.other_curve_pairs;
    j["other_ridge"] = c.other_ridge;
    j["geometric_points"] = c.locus.geometric_count();
    Json pts = Json::array();
    for (const auto& p : c.locus.points) {
        Json q;
        q["locus"] = branch::to_string(p.locus);
        q["curves"] = p.curves;
        q["classification"] = p.classification;
        q["mu"] = p.mu ? Json(*p.mu) : Json("undetermined");
        q["corank"] = p.corank;
        Json ch = Json::array();
        for (const auto& cm : p.charts) {
            Json m = milnor_json(cm.milnor);
            m["chart"] = scroll::to_string(cm.chart);
            ch.push_back(m);
        }
        q["charts"] = ch;
        q["chart_consistent"] = p.chart_consistent;
        q["point"] = point_json(p.point);
        pts.push_back(q);
    }
    j["points"] = pts;
    Json un = Json::array();
    for (const auto& u : c.locus.unresolved) un.push_back({{"chart", scroll::to_string(u.chart)}, {"factor", to_string(u.factor, "s")}});
    j["unresolved"] = un;
    j["extras"] = extras_json(c.extras);
    j["injected"] = extras_json(c.injected);
    j["ledger"] = euler_json(c.ledger);
    return j;
}

Json quadric_json(const branch::BranchSpec& spec) {
    const auto curves = branch::double_curves(spec);
    const auto pts = branch::curve_intersections(spec);
    const auto fit = quadric::fit_span(curves, spec.q_form());
    Json j;
    Json fs;
    fs["dimension"] = fit.space.dimension();
    fs["generic"] = fit.generic;
    fs["condition_rank"] = fit.condition_rank;
    fs["contains_scroll"] = fit.contains_scroll;
    fs["contains_Q"] = fit.contains_q;
    fs["without_curve"] = fit.without_curve;
    Json basis = Json::array();
    for (const auto& b : fit.space.basis) basis.push_back(quadric::quadric_form(b).str());
    fs["basis"] = basis;
    Json cond = Json::array();
    for (const auto& c : curves) cond.push_back({{"curve", c.index}, {"rank", rank(quadric::containment_conditions(c))}});
    fs["condition_ranks"] = cond;
    j["fit_span"] = fs;
    Json steps = Json::array();
    const std::vector<std::pair<std::string, MPoly>> choices{{"spec_restriction", quadric::q_choice_from_spec(spec)},
                                                             {"scroll", scroll::scroll_form()}};
    for (const auto& [name, q] : choices) {
        const auto s = quadric::stepwise_construct(pts, curves, q);
        Json r;
        r["q_choice"] = name;
        r["q"] = q.str();
        r["ok"] = s.ok();
        r["flags"] = s.flags;
        if (!s.Q.is_zero() || s.ok()) {
            r["Q"] = s.Q.str();
            r["in_fit_span"] = fit.space.contains(quadric::quadric_coeffs(s.Q));
            r["equals_Q_mod_scroll"] = quadric::same_mod_scroll(s.Q, spec.q_form());
        }
        steps.push_back(r);
    }
    j["stepwise"] = steps;
    return j;
}

Json moduli_json(const branch::BranchSpec& spec) {
    const auto r = moduli::parameter_report(spec);
    Json j;
    j["parameters"] = r.parameters;
    j["orbit_rank"] = r.orbit_rank;
    j["effective"] = r.effective;
    j["node_codimension"] = r.node_codimension;
    j["after_nodes"] = r.after_nodes;
    j["chain"] = std::to_string(r.parameters) + " -> " + std::to_string(r.effective) + " -> " + std::to_string(r.effective) + " - " +
                 std::to_string(r.node_codimension) + " = " + std::to_string(r.after_nodes);
    j["constants"] = {{"h1_theta_Z", r.h1_theta}, {"kuranishi_pairs", r.kuranishi_pairs}};
    j["note"] = r.note;
    Json gens = Json::array();
    for (const auto& g : moduli::equivalence_generators(spec)) gens.push_back(g.name);
    j["generators"] = gens;
    return j;
}

Json appendix_json(const branch::AppendixReport& r) {
    Json j;
    Json lines = Json::array();
    for (const auto& l : r.sing_w_lines) lines.push_back(point_json(l));
    j["sing_W_lines"] = lines;
    j["sing_W_isolated_part_empty"] = r.sing_w_isolated_part_empty;
    Json charts = Json::array();
    for (const auto& c : r.charts) {
        Json g = Json::array();
        for (const auto& p : c.strict) g.push_back(p.str());
        charts.push_back({{"chart", c.name}, {"strict_transform", g}, {"smooth", c.smooth}});
    }
    j["charts"] = charts;
    Json sing = Json::array();
    for (const auto& s : r.singular) {
        Json q;
        q["chart"] = s.chart;
        q["base"] = point_json(s.base);
        q["direction"] = point_json(s.direction);
        q["milnor"] = milnor_json(s.milnor);
        q["hessian_rank"] = s.hessian_rank;
        sing.push_back(q);
    }
    j["singular_points"] = sing;
    j["exceptional_components"] = r.exceptional_components;
    j["fiber_over_origin"] = {{"conic", r.fiber_conic.str()}, {"smooth", r.fiber_smooth}, {"rational", r.fiber_rational}};
    Json planes = Json::array();
    for (size_t i = 0; i < 4; ++i) {
        Json meets = Json::array(), before = Json::array();
        for (size_t k = 0; k < 4; ++k) {
            meets.push_back(r.meet[i][k]);
            before.push_back(r.meet_before[i][k]);
        }
        planes.push_back({{"plane", r.planes[i]}, {"contains_line", r.contains_line[i]}, {"meets_after", meets}, {"meets_before", before}});
    }
    j["planes"] = planes;
    j["separation_ok"] = r.separation_ok();
    j["passed"] = r.passed();
    return j;
}

Json lattice_json(const std::string& ring, const std::string& expr) {
    const auto& L = lattice::builtin_ledger(ring);
    Json j;
    j["ring"] = ring;
    j["expr"] = expr;
    j["value"] = L.evaluate(expr).get_str();
    return j;
}

namespace {

bool scalar_array(const Json& j) {
    for (const auto& x : j)
        if (x.is_structured()) return false;
    return true;
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, int indent, std::ostringstream& out) {
    const std::string pad(static_cast<size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !(v.is_array() && scalar_array(v))) {
                out << pad << k << ":\n";
                render(v, indent + 2, out);
            } else if (v.is_array()) {
                out << pad << k << ": [";
                bool first = true;
                for (const auto& x : v) {
                    out << (first ? "" : ", ") << scalar(x);
                    first = false;
                }
                out << "]\n";
            } else {
                out << pad << k << ": " << scalar(v) << "\n";
            }
        }
    } else if (j.is_array()) {
        size_t i = 0;
        for (const auto& v : j) {
            out << pad << "- [" << i++ << "]\n";
            render(v, indent + 2, out);
        }
    } else {
        out << pad << scalar(j) << "\n";
    }
}

} // namespace

std::string text_summary(const Json& report) {
    std::ostringstream out;
    render(report, 0, out);
    return out.str();
}

} // namespace branchdiv::cli
