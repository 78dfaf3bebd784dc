#include "jacring/report.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "jacring/errors.hpp"
#include "jacring/jacobian.hpp"
#include "jacring/koszul.hpp"

namespace jacring {

using json = nlohmann::ordered_json;

// --- report document ---------------------------------------------------------

json ReportDocument::to_json() const {
    json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = command;
    j["canonical"] = canonical;
    j["timings"] = timings;
    return j;
}

std::string ReportDocument::canonical_dump() const {
    json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = command;
    j["canonical"] = canonical;
    return j.dump(2);
}

ReportDocument ReportDocument::from_json(const json& j) {
    ReportDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.canonical = j.at("canonical");
    doc.timings = j.at("timings");
    return doc;
}

bool ReportDocument::operator==(const ReportDocument& other) const {
    return command == other.command && canonical == other.canonical &&
           timings == other.timings;
}

// --- instance files ----------------------------------------------------------

namespace {

Rational coeff_from_json(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError("coefficients must be integers or \"p/q\" strings");
}

json rational_to_json(const Rational& q) { return to_string(q); }

}  // namespace

Hypersurface parse_instance_json(const json& j, const CommandOptions& opts) {
    if (!j.is_object()) throw ParseError("instance file must be a JSON object");
    for (const auto& key : {"n", "d", "f"})
        if (!j.contains(key)) throw ParseError(std::string("missing field: ") + key);

    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    const int vars = n + 2;

    std::vector<std::string> names;
    if (j.contains("variables"))
        for (const auto& v : j.at("variables")) names.push_back(v.get<std::string>());

    Polynomial f(vars, d);
    if (!j.at("f").is_array() || j.at("f").empty())
        throw ParseError("f must be a nonempty array of terms");
    for (const auto& term : j.at("f")) {
        if (!term.contains("exps") || !term.contains("coeff"))
            throw ParseError("each term needs \"exps\" and \"coeff\"");
        const auto& exps = term.at("exps");
        if (static_cast<int>(exps.size()) != vars)
            throw ParseError("term exponent vector must have n+2 entries");
        std::vector<std::uint32_t> e;
        int total = 0;
        for (const auto& x : exps) {
            const long v = x.get<long>();
            if (v < 0) throw ParseError("negative exponent");
            total += static_cast<int>(v);
            e.push_back(static_cast<std::uint32_t>(v));
        }
        if (total != d)
            throw ParseError("term exponents must sum to d: f is not homogeneous of degree d");
        f.add_term(Monomial(std::move(e)), coeff_from_json(term.at("coeff")));
    }

    std::vector<AffinePoint> points;
    if (j.contains("singular_points")) {
        for (const auto& pt : j.at("singular_points")) {
            if (static_cast<int>(pt.size()) != vars)
                throw ParseError("singular point must have n+2 coordinates");
            std::vector<Rational> coords;
            for (const auto& c : pt) coords.push_back(coeff_from_json(c));
            points.push_back(AffinePoint::from_projective(coords));
        }
    }

    InstanceOptions io;
    if (j.contains("options")) {
        const auto& o = j.at("options");
        if (o.contains("nmax")) io.jet_order_max = o.at("nmax").get<int>();
        if (o.contains("budget")) io.column_budget = o.at("budget").get<long>();
    }
    if (opts.nmax) io.jet_order_max = *opts.nmax;
    if (opts.budget) io.column_budget = *opts.budget;

    Hypersurface h(n, d, std::move(f), std::move(points), std::move(names), io);
    for (const auto& p : h.points())
        if (!verify_singular(h.f(), p))
            throw ParseError("declared point is not singular: " + p.to_string());
    return h;
}

Hypersurface parse_instance(const std::string& path, const CommandOptions& opts) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("malformed instance file " + path + ": " + e.what());
    }
    return parse_instance_json(j, opts);
}

json instance_to_json(const Hypersurface& h) {
    json j;
    j["n"] = h.n();
    j["d"] = h.d();
    j["variables"] = h.variable_names();
    json terms = json::array();
    for (const auto& [m, c] : h.f().terms()) {
        json t;
        t["exps"] = m.exps();
        t["coeff"] = rational_to_json(c);
        terms.push_back(t);
    }
    j["f"] = terms;
    json pts = json::array();
    for (const auto& p : h.points()) {
        json coords = json::array();
        for (const auto& c : p.projective()) coords.push_back(rational_to_json(c));
        pts.push_back(coords);
    }
    j["singular_points"] = pts;
    j["options"] = {{"nmax", h.options().jet_order_max},
                    {"budget", h.options().column_budget}};
    return j;
}

// --- commands ----------------------------------------------------------------

namespace {

json instance_summary(const Hypersurface& h) {
    json s;
    s["n"] = h.n();
    s["d"] = h.d();
    s["sigma"] = h.socle_degree();
    s["variables"] = h.variable_names();
    s["f_terms"] = h.f().term_count();
    s["declared_points"] = h.points().size();
    return s;
}

json records_json(const Hypersurface& h) {
    json arr = json::array();
    for (const auto& r : h.records()) {
        json rec;
        rec["point"] = r.point.to_string();
        rec["type"] = r.type.str();
        rec["mu"] = r.milnor;
        rec["tau"] = r.tjurina;
        rec["jet_order"] = r.jet_order;
        json w = json::array();
        for (const auto& wi : r.weights) w.push_back(rational_to_json(wi));
        rec["weights"] = w;
        rec["alpha_tilde"] = rational_to_json(r.alpha_tilde);
        rec["alpha_tilde_floor"] = floor_long(r.alpha_tilde);
        arr.push_back(rec);
    }
    return arr;
}

void print_records(std::ostream& out, const Hypersurface& h) {
    out << "singular points (" << h.records().size() << "):\n";
    for (const auto& r : h.records()) {
        out << "  " << r.point.to_string() << "  " << r.type.str() << "  mu=" << r.milnor
            << " tau=" << r.tjurina << "  jet_order=" << r.jet_order << "  weights=";
        for (std::size_t i = 0; i < r.weights.size(); ++i)
            out << (i ? "," : "") << to_string(r.weights[i]);
        out << "  alpha~=" << to_string(r.alpha_tilde) << "\n";
    }
}

int cmd_analyze(JacobianCalculator& calc, std::ostream& out, json& results, json& verdicts) {
    const auto& h = calc.instance();
    print_records(out, h);
    out << "total tjurina: " << calc.total_tjurina() << "\n";
    const auto cert = calc.completeness_certificate();
    out << "completeness certificate: " << (cert.passed ? "PASS" : "FAIL") << "  (dim(A/J)_"
        << h.socle_degree() + 1 << " = " << cert.dim_next << ", dim(A/J)_"
        << h.socle_degree() + 2 << " = " << cert.dim_next2 << ", tau = " << cert.tau << ")\n";
    results["records"] = records_json(h);
    results["total_tjurina"] = cert.tau;
    results["certificate"] = {{"passed", cert.passed},
                              {"dim_socle_plus_1", cert.dim_next},
                              {"dim_socle_plus_2", cert.dim_next2},
                              {"tau", cert.tau}};
    verdicts.push_back({{"name", "completeness_certificate"},
                        {"value", cert.passed ? "pass" : "fail"}});
    if (!cert.passed) {
        out << "error: undeclared or non-isolated singularities suspected\n";
        return 3;
    }
    return 0;
}

int cmd_hilbert(JacobianCalculator& calc, const CommandOptions& opts, std::ostream& out,
                json& results) {
    int lo = 0, hi = calc.socle_degree() + 2;
    if (opts.degree_range) {
        lo = opts.degree_range->first;
        hi = opts.degree_range->second;
    } else if (opts.degree) {
        lo = hi = *opts.degree;
    }
    const auto table = calc.hilbert_table(lo, hi);
    out << "  m    h0   dim J   dim I   dim A/J   dim I/J\n";
    json rows = json::array();
    for (const auto& r : table) {
        out << std::setw(3) << r.m << std::setw(6) << r.ambient << std::setw(8) << r.dim_j
            << std::setw(8) << r.dim_i << std::setw(10) << r.dim_aj << std::setw(10)
            << r.dim_ij << "\n";
        rows.push_back({{"m", r.m},
                        {"h0", r.ambient},
                        {"dim_j", r.dim_j},
                        {"dim_i", r.dim_i},
                        {"dim_aj", r.dim_aj},
                        {"dim_ij", r.dim_ij}});
    }
    results["hilbert"] = rows;
    return 0;
}

int cmd_duality(JacobianCalculator& calc, std::ostream& out, json& results, json& verdicts) {
    const auto rep = calc.duality_report();
    out << "  m   dim(I/J)_m   dim(I/J)_{sigma-m}   equal\n";
    json rows = json::array();
    for (const auto& r : rep.rows) {
        out << std::setw(3) << r.m << std::setw(10) << r.dim << std::setw(17) << r.dim_dual
            << std::setw(10) << (r.equal() ? "yes" : "NO") << "\n";
        rows.push_back({{"m", r.m}, {"dim", r.dim}, {"dim_dual", r.dim_dual},
                        {"equal", r.equal()}});
    }
    out << "beyond socle: dim(I/J)_{sigma+1} = " << rep.beyond_socle_1
        << ", dim(I/J)_{sigma+2} = " << rep.beyond_socle_2 << "\n";
    out << "duality: " << (rep.passed() ? "symmetric" : "VIOLATION") << "\n";
    results["duality"] = {{"rows", rows},
                          {"beyond_socle_1", rep.beyond_socle_1},
                          {"beyond_socle_2", rep.beyond_socle_2},
                          {"symmetric", rep.symmetric},
                          {"vanishing_beyond", rep.vanishing_beyond}};
    verdicts.push_back({{"name", "duality"}, {"value", rep.passed() ? "pass" : "fail"}});
    return rep.passed() ? 0 : 3;
}

int cmd_hodge(JacobianCalculator& calc, std::ostream& out, json& results) {
    const auto g = calc.hodge_graded();
    const int n = calc.instance().n();
    out << "dim Gr_F^" << n + 1 << " = " << g.top << "\n";
    out << "dim Gr_F^" << n << " = " << g.next << "\n";
    results["hodge"] = {{"top", g.top}, {"next", g.next}};
    return 0;
}

int cmd_torelli(JacobianCalculator& calc, std::ostream& out, json& results, json& verdicts) {
    const auto rep = calc.torelli_report();
    const auto& h = calc.instance();
    out << "hypotheses:\n";
    out << "  d-(n+2) > 0:                 " << (rep.checks.degree_margin ? "yes" : "no")
        << "\n";
    out << "  ev surjective at degree " << rep.checks.ev_degree << ":   "
        << (rep.checks.ev_surjective ? "yes" : "no") << "\n";
    out << "  A/J generated in degree " << h.d() - h.n() - 2 << ":   "
        << (rep.checks.generation_aj ? "yes" : "no") << "\n";
    out << "  I/J generated in degree " << h.d() - h.n() - 2 << ":   "
        << (rep.checks.generation_ij ? "yes" : "no") << "\n";
    out << "dim (I/J)_d = " << rep.source_dim << ", kernel dim = " << rep.kernel_dim << "\n";
    out << "dim J_d = " << rep.j_d.dim() << ", dim lifted kernel = " << rep.kernel_lift.dim()
        << ", equal subspaces: " << (rep.kernel_matches_orbit ? "yes" : "no") << "\n";
    out << "verdict: " << verdict_name(rep.verdict) << "\n";
    results["torelli"] = {
        {"checks",
         {{"degree_margin", rep.checks.degree_margin},
          {"ev_degree", rep.checks.ev_degree},
          {"ev_surjective", rep.checks.ev_surjective},
          {"generation_aj", rep.checks.generation_aj},
          {"generation_ij", rep.checks.generation_ij}}},
        {"source_dim", rep.source_dim},
        {"kernel_dim", rep.kernel_dim},
        {"dim_j_d", rep.j_d.dim()},
        {"dim_kernel_lift", rep.kernel_lift.dim()},
        {"kernel_matches_orbit", rep.kernel_matches_orbit}};
    verdicts.push_back({{"name", "torelli"}, {"value", verdict_name(rep.verdict)}});
    switch (rep.verdict) {
        case TorelliVerdict::injective:
        case TorelliVerdict::kernel_equals_jd: return 0;
        case TorelliVerdict::hypotheses_not_satisfied: return 2;
        case TorelliVerdict::kernel_exceeds_jd: return 3;
    }
    return 3;
}

int cmd_koszul(JacobianCalculator& calc, const CommandOptions& opts, std::ostream& out,
               json& results, json& verdicts) {
    if (!opts.degree && !opts.degree_range)
        throw ParseError("koszul needs --degree or --degree-range");
    int lo, hi;
    if (opts.degree_range) {
        lo = opts.degree_range->first;
        hi = opts.degree_range->second;
    } else {
        lo = hi = *opts.degree;
    }
    const auto rows = verify_le33(calc, lo, hi);
    const int n = calc.instance().n();
    bool all_ok = true;
    out << "  m   h^0.." << "h^" << n + 2 << "   coker(ev_{sigma-m})   identity   low-vanishing\n";
    json jrows = json::array();
    for (const auto& r : rows) {
        out << std::setw(3) << r.m << "   ";
        for (std::size_t p = 0; p < r.h.size(); ++p) out << (p ? "," : "") << r.h[p];
        out << "   " << std::setw(8) << r.ev_coker_at_dual << "   "
            << (r.identity_holds ? "ok" : "FAIL") << "   "
            << (r.below_top_vanishing ? "ok" : "FAIL") << "\n";
        all_ok = all_ok && r.identity_holds && r.below_top_vanishing &&
                 r.top_matches_quotient &&
                 (!r.ev_surjective_at_dual || r.h[static_cast<std::size_t>(n + 1)] == 0);
        jrows.push_back({{"m", r.m},
                         {"h", r.h},
                         {"coker_ev_dual", r.ev_coker_at_dual},
                         {"ev_surjective_at_dual", r.ev_surjective_at_dual},
                         {"identity_holds", r.identity_holds},
                         {"below_top_vanishing", r.below_top_vanishing},
                         {"dim_aj", r.dim_aj},
                         {"top_matches_quotient", r.top_matches_quotient}});
    }
    results["koszul"] = jrows;
    verdicts.push_back({{"name", "koszul_identities"}, {"value", all_ok ? "pass" : "fail"}});
    if (!all_ok) {
        out << "error: Koszul/evaluation identities violated\n";
        return 3;
    }
    return 0;
}

int cmd_pvalue(std::vector<Hypersurface>& instances, std::ostream& out, json& results) {
    json arr = json::array();
    long max_p = 0, max_tau = 0;
    for (auto& h : instances) {
        JacobianCalculator calc(h);
        const auto rep = calc.p_value();
        out << "instance tau=" << calc.total_tjurina() << ": ";
        out << "p = " << rep.p << " (coker sweep:";
        for (const auto& [m, c] : rep.sweep) out << " " << m << ":" << c;
        out << ")\n";
        json jr;
        jr["tau"] = calc.total_tjurina();
        json sweep = json::array();
        for (const auto& [m, c] : rep.sweep) sweep.push_back({{"m", m}, {"coker", c}});
        jr["sweep"] = sweep;
        jr["p"] = rep.p;
        jr["monotone"] = rep.monotone;
        if (rep.length_two) {
            jr["reference_s2"] = rep.reference_s2;
            jr["s2_discrepancy"] = rep.discrepancy;
            out << "  reference s_2 = " << rep.reference_s2 << "; computed p = " << rep.p
                << (rep.discrepancy ? "  (differs from the reference; reported as computed)"
                                    : "")
                << "\n";
        }
        arr.push_back(jr);
        max_p = std::max(max_p, rep.p);
        max_tau = std::max(max_tau, calc.total_tjurina());
    }
    results["pvalue"] = arr;
    if (instances.size() > 1) {
        out << "max p over " << instances.size() << " configurations = " << max_p
            << "  (lower bound for s_" << max_tau << ")\n";
        results["max_p"] = max_p;
        results["s_k_lower_bound_for_k"] = max_tau;
    }
    return 0;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 1;
    if (dynamic_cast<const HypothesesError*>(&e)) return 2;
    if (dynamic_cast<const ConsistencyError*>(&e)) return 3;
    if (dynamic_cast<const BudgetError*>(&e)) return 4;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return 1;
    return 3;  // internal inconsistency
}

}  // namespace

int run_command(const std::string& command, const std::vector<std::string>& instance_paths,
                const CommandOptions& opts, std::ostream& out, ReportDocument* document) {
    const auto t0 = std::chrono::steady_clock::now();
    ReportDocument doc;
    doc.command = command;
    json& canon = doc.canonical;
    json results = json::object();
    json verdicts = json::array();
    int code = 0;
    std::string error_message;

    try {
        if (instance_paths.empty()) throw ParseError("no instance file given");
        if (command != "pvalue" && instance_paths.size() > 1)
            throw ParseError("exactly one instance file per invocation");

        std::vector<Hypersurface> instances;
        for (const auto& path : instance_paths)
            instances.push_back(parse_instance(path, opts));

        const bool parity_sensitive = command == "hodge" || command == "torelli";
        for (const auto& h : instances) {
            if (h.n() % 2 != 0 && !parity_sensitive) {
                if (opts.strict_parity)
                    throw ParseError("odd n rejected by --strict-parity");
                out << "warning: n = " << h.n()
                    << " is odd; Hodge/Torelli results would not apply\n";
            }
        }

        for (auto& h : instances) h.analyze();
        canon["instance"] = instance_summary(instances.front());

        if (command == "pvalue") {
            code = cmd_pvalue(instances, out, results);
        } else {
            JacobianCalculator calc(instances.front());
            if (command == "analyze")
                code = cmd_analyze(calc, out, results, verdicts);
            else if (command == "hilbert")
                code = cmd_hilbert(calc, opts, out, results);
            else if (command == "duality")
                code = cmd_duality(calc, out, results, verdicts);
            else if (command == "hodge")
                code = cmd_hodge(calc, out, results);
            else if (command == "torelli")
                code = cmd_torelli(calc, out, results, verdicts);
            else if (command == "koszul")
                code = cmd_koszul(calc, opts, out, results, verdicts);
            else
                throw ParseError("unknown command: " + command);
        }
    } catch (const std::exception& e) {
        code = exit_code_for(e);
        error_message = e.what();
        out << "error: " << error_message << "\n";
    }

    canon["results"] = results;
    canon["verdicts"] = verdicts;
    canon["exit_code"] = code;
    if (!error_message.empty()) canon["error"] = error_message;

    const auto t1 = std::chrono::steady_clock::now();
    doc.timings = {
        {"total_ms",
         std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()}};

    if (!opts.json_path.empty()) {
        std::ofstream js(opts.json_path);
        if (!js) {
            out << "error: cannot write " << opts.json_path << "\n";
            if (code == 0) code = 1;
        } else {
            js << doc.to_json().dump(2) << "\n";
        }
    }
    if (document) *document = doc;
    return code;
}

}  // namespace jacring
