#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "degreelab/catalog.hpp"
#include "degreelab/degree.hpp"
#include "degreelab/energy.hpp"
#include "degreelab/errors.hpp"
#include "degreelab/homology.hpp"
#include "degreelab/maps.hpp"
#include "degreelab/mesh.hpp"
#include "degreelab/version.hpp"
#include "degreelab/young.hpp"

namespace degreelab::cli {

namespace {

using json = nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    if (out.empty()) throw config_error("empty integer list");
    return out;
}

std::array<double, 2> parse_value_pair(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw config_error("expected 'phi,theta' but got '" + s + "'");
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

void write_output(const std::string& text, const std::string& out_path,
                  std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        if (text.empty() || text.back() != '\n') out << "\n";
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw config_error("cannot open output file '" + out_path + "'");
    f << text;
    if (text.empty() || text.back() != '\n') f << "\n";
}

json verdict_to_json(const ConditionVerdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["diagnostic"] = v.diagnostic;
    j["parameters"] = v.parameters;
    j["witness"] = v.partial_sums;
    return j;
}

json config_header(const std::string& subcommand, const json& options,
                   long long seed) {
    json j;
    j["tool"] = "degree-lab";
    j["version"] = version_string;
    j["subcommand"] = subcommand;
    j["options"] = options;
    j["seed"] = seed;
    return j;
}

double target_volume_of(MeshKind kind) {
    switch (kind) {
        case MeshKind::Sphere2: return 4.0 * std::numbers::pi;
        case MeshKind::Sphere3: return 2.0 * std::numbers::pi * std::numbers::pi;
        default: return 1.0;
    }
}

struct CommonOpts {
    std::string out_path;
    long long seed = 0;
    int threads = 0;
    bool dry_run = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--out", c.out_path, "write the result to this file");
    cmd->add_option("--seed", c.seed, "seed recorded in the output config");
    cmd->add_option("--threads", c.threads,
                    "cap integration threads (overrides DEGREE_LAB_THREADS)");
    cmd->add_flag("--dry-run", c.dry_run, "echo the parsed config and exit");
}

void apply_threads(const CommonOpts& c) {
    if (c.threads > 0)
        ::setenv("DEGREE_LAB_THREADS", std::to_string(c.threads).c_str(), 1);
}

// returns true when the caller should stop (dry run)
bool maybe_dry_run(const CommonOpts& c, const json& config, std::ostream& out) {
    if (!c.dry_run) return false;
    json j;
    j["config"] = config;
    out << j.dump(2) << "\n";
    return true;
}

std::string csv_escape_json(const json& j) { return j.dump(); }

// ---- subcommand bodies ----------------------------------------------------

int run_young_check(const std::string& gauge_desc, int n, double alpha,
                    const CommonOpts& common, std::ostream& out) {
    json options{{"gauge", gauge_desc}, {"n", n}};
    const YoungFunction gauge = YoungFunction::parse(gauge_desc);
    if (alpha <= 0.0) alpha = n - 0.5; // default: just above the required floor
    options["alpha"] = alpha;
    const json config = config_header("young-check", options, common.seed);
    if (maybe_dry_run(common, config, out)) return 0;

    json checks;
    checks["divergence"] = verdict_to_json(check_divergence(gauge, n));
    checks["small_o"] = verdict_to_json(check_small_o(gauge, n));
    checks["doubling"] = verdict_to_json(check_doubling(gauge));
    checks["growth"] =
        verdict_to_json(check_growth_alpha(gauge, alpha, {1.0, 1e6}));
    const RadialEnergy radial = radial_projection_energy(gauge, n);
    json jr;
    jr["verdict"] = to_string(radial.verdict);
    jr["value"] = radial.value;
    jr["diagnostic"] = radial.diagnostic;
    jr["windows"] = radial.window_integrals;
    json result;
    result["config"] = config;
    result["checks"] = checks;
    result["radial_projection"] = jr;
    write_output(result.dump(2), common.out_path, out);
    return 0;
}

int run_degree(const std::string& map_desc, const std::string& mesh_desc,
               const std::string& method, const std::string& value,
               const CommonOpts& common, std::ostream& out) {
    json options{{"map", map_desc}, {"mesh", mesh_desc}, {"method", method}};
    if (!value.empty()) options["value"] = value;
    const json config = config_header("degree", options, common.seed);
    const MapExpr map = MapExpr::parse(map_desc);
    if (maybe_dry_run(common, config, out)) return 0;
    const ManifoldMesh mesh = ManifoldMesh::parse(mesh_desc);

    DegreeEstimate est;
    if (method == "jacobian") {
        est = degree_by_jacobian(map, mesh, target_volume_of(map.target_kind()));
    } else if (method == "preimage") {
        std::array<double, 2> v{0.3, 1.1};
        if (!value.empty()) v = parse_value_pair(value);
        est = degree_by_preimage(map, v, mesh);
    } else {
        throw config_error("method must be 'jacobian' or 'preimage'");
    }
    json result;
    result["config"] = config;
    result["raw"] = est.raw;
    result["rounded"] = est.rounded;
    result["residual"] = est.residual;
    result["method"] = to_string(est.method);
    write_output(result.dump(2), common.out_path, out);
    return 0;
}

std::string report_csv(const EnergyReport& report, const json& config,
                       bool with_degree,
                       const std::vector<DegreeEstimate>& degrees) {
    std::ostringstream os;
    os << "# degree-lab v" << version_string << "\n";
    os << "# config: " << csv_escape_json(config) << "\n";
    os << "# family: " << report.family << " gauge: " << report.gauge << "\n";
    os << "# slope: " << fmt(report.slope)
       << " verdict: " << to_string(report.verdict) << "\n";
    if (with_degree) {
        bool constant = true;
        for (const auto& d : degrees)
            if (d.rounded != degrees.front().rounded) constant = false;
        os << "# degree_constant: " << (constant ? "yes" : "no") << " value: "
           << (degrees.empty() ? 0 : degrees.front().rounded) << "\n";
        os << "k,degree_raw,degree_rounded,degree_residual,energy,cap_measure,"
              "sup_df,bound_certificate\n";
        for (std::size_t i = 0; i < report.rows.size(); ++i) {
            const auto& r = report.rows[i];
            const auto& d = degrees[i];
            os << r.k << ',' << fmt(d.raw) << ',' << d.rounded << ','
               << fmt(d.residual) << ',' << fmt(r.energy) << ','
               << fmt(r.cap_measure) << ',' << fmt(r.sup_df) << ','
               << fmt(r.bound_certificate) << "\n";
        }
    } else {
        os << "k,energy,cap_measure,sup_df,bound_certificate\n";
        for (const auto& r : report.rows)
            os << r.k << ',' << fmt(r.energy) << ',' << fmt(r.cap_measure) << ','
               << fmt(r.sup_df) << ',' << fmt(r.bound_certificate) << "\n";
    }
    return os.str();
}

json report_json(const EnergyReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows)
        rows.push_back({{"k", r.k},
                        {"energy", r.energy},
                        {"cap_measure", r.cap_measure},
                        {"sup_df", r.sup_df},
                        {"bound_certificate", r.bound_certificate}});
    json j;
    j["family"] = report.family;
    j["gauge"] = report.gauge;
    j["rows"] = rows;
    j["reference_bounds"] = report.reference;
    j["slope"] = report.slope;
    j["verdict"] = to_string(report.verdict);
    return j;
}

int run_energy(const std::string& family_desc, const std::string& gauge_desc,
               const std::string& k_csv, int mesh_mult,
               const std::string& format, const CommonOpts& common,
               std::ostream& out) {
    json options{{"family", family_desc},
                 {"gauge", gauge_desc},
                 {"k", k_csv},
                 {"mesh_multiplier", mesh_mult},
                 {"format", format}};
    const json config = config_header("energy", options, common.seed);
    const EnergyGauge gauge = EnergyGauge::parse(gauge_desc);
    const DecayFamily family = DecayFamily::parse(family_desc, mesh_mult);
    const std::vector<int> ks = parse_int_list(k_csv);
    if (maybe_dry_run(common, config, out)) return 0;

    const EnergyReport report = decay_experiment(family, gauge, ks);
    if (format == "json") {
        json j;
        j["config"] = config;
        j["report"] = report_json(report);
        write_output(j.dump(2), common.out_path, out);
    } else {
        write_output(report_csv(report, config, false, {}), common.out_path, out);
    }
    return 0;
}

int run_paradox(const std::string& family_desc, const std::string& gauge_desc,
                const std::string& k_csv, int mesh_mult,
                const std::string& format, const CommonOpts& common,
                std::ostream& out) {
    json options{{"family", family_desc},
                 {"gauge", gauge_desc},
                 {"k", k_csv},
                 {"mesh_multiplier", mesh_mult},
                 {"format", format}};
    const json config = config_header("paradox", options, common.seed);
    const EnergyGauge gauge = EnergyGauge::parse(gauge_desc);
    const DecayFamily family = DecayFamily::parse(family_desc, mesh_mult);
    const std::vector<int> ks = parse_int_list(k_csv);
    if (maybe_dry_run(common, config, out)) return 0;

    const EnergyReport report = decay_experiment(family, gauge, ks);
    std::vector<DegreeEstimate> degrees;
    for (int k : ks) {
        const MapExpr map = family.map_for_k(k);
        const ManifoldMesh mesh = family.mesh_for_k(k);
        degrees.push_back(
            degree_by_jacobian(map, mesh, target_volume_of(map.target_kind())));
    }
    if (format == "json") {
        json j;
        j["config"] = config;
        j["report"] = report_json(report);
        json degs = json::array();
        for (const auto& d : degrees)
            degs.push_back({{"raw", d.raw},
                            {"rounded", d.rounded},
                            {"residual", d.residual}});
        j["degrees"] = degs;
        bool constant = true;
        for (const auto& d : degrees)
            if (d.rounded != degrees.front().rounded) constant = false;
        j["degree_constant"] = constant;
        write_output(j.dump(2), common.out_path, out);
    } else {
        write_output(report_csv(report, config, true, degrees), common.out_path,
                     out);
    }
    return 0;
}

int run_homology(const std::string& space_desc, const std::string& coeff,
                 const std::string& in_path, const CommonOpts& common,
                 std::ostream& out) {
    json options{{"space", space_desc}, {"coeff", coeff}};
    if (!in_path.empty()) options["in"] = in_path;
    const json config = config_header("homology", options, common.seed);
    if (maybe_dry_run(common, config, out)) return 0;

    std::optional<ChainComplex> complex;
    if (!in_path.empty()) {
        std::ifstream f(in_path);
        if (!f) throw config_error("cannot open complex file '" + in_path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        complex = complex_from_json(ss.str());
    } else if (!space_desc.empty()) {
        try {
            complex = parse_space(space_desc);
        } catch (const config_error&) {
            // catalog-only entries ship a betti table, not a complex
            if (Catalog::builtin().find(space_desc))
                throw config_error("'" + space_desc + "' ships only a known "
                                   "homology table (see catalog-list --full); "
                                   "no chain complex to run");
            throw;
        }
    } else {
        throw config_error("homology needs --space or --in");
    }

    const Coefficients coefficients =
        coeff == "Q" ? Coefficients::Rationals : Coefficients::Integers;
    const auto groups = homology(*complex, coefficients);
    const auto chi = euler_both_ways(*complex);
    if (chi.from_cells != chi.from_betti)
        throw consistency_error("Euler characteristic mismatch");
    const auto rhs = is_rational_homology_sphere(*complex);

    json jgroups = json::array();
    for (const auto& g : groups) {
        json jg;
        jg["betti"] = g.betti;
        json tor = json::array();
        for (const auto& t : g.torsion) tor.push_back(t.str());
        jg["torsion"] = tor;
        jg["text"] = to_string(g);
        jgroups.push_back(jg);
    }
    json result;
    result["config"] = config;
    result["space"] = space_desc.empty() ? in_path : space_desc;
    result["coefficients"] = coeff;
    result["groups"] = jgroups;
    result["euler_characteristic"] = chi.from_cells;
    result["rational_homology_sphere"] = rhs.value;
    result["rational_betti"] = rhs.betti;
    result["complex"] = json::parse(complex_to_json(*complex));
    write_output(result.dump(2), common.out_path, out);
    return 0;
}

int run_verdict(const std::string& target, const std::string& predicate, int n,
                const std::string& domain, const std::string& catalog_path,
                const CommonOpts& common, std::ostream& out) {
    json options{{"target", target}, {"predicate", predicate}};
    if (n > 0) options["n"] = n;
    if (!domain.empty()) options["domain"] = domain;
    if (!catalog_path.empty()) options["catalog"] = catalog_path;
    const json config = config_header("verdict", options, common.seed);
    if (maybe_dry_run(common, config, out)) return 0;

    Catalog loaded;
    const Catalog* catalog = &Catalog::builtin();
    if (!catalog_path.empty()) {
        std::ifstream f(catalog_path);
        if (!f) throw config_error("cannot open catalog '" + catalog_path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        loaded = Catalog::extended(ss.str());
        catalog = &loaded;
    }
    const CatalogEntry& entry = catalog->require(target);

    TheoremVerdict v;
    if (predicate == "degree")
        v = degree_well_defined(*catalog, entry);
    else if (predicate == "degree4")
        v = degree_well_defined_dim4(*catalog, entry);
    else if (predicate == "homotopy")
        v = homotopy_classes_defined(*catalog, entry, n > 0 ? n : entry.dim,
                                     domain);
    else
        throw config_error("predicate must be degree, degree4 or homotopy");

    json result;
    result["config"] = config;
    result["target"] = target;
    result["predicate"] = v.predicate;
    result["answer"] = to_string(v.answer);
    result["justification"] = v.justification;
    write_output(result.dump(2), common.out_path, out);
    return 0;
}

int run_catalog_list(const std::string& catalog_path, bool full,
                     const CommonOpts& common, std::ostream& out) {
    json options;
    if (!catalog_path.empty()) options["catalog"] = catalog_path;
    options["full"] = full;
    const json config = config_header("catalog-list", options, common.seed);
    if (maybe_dry_run(common, config, out)) return 0;

    Catalog loaded;
    const Catalog* catalog = &Catalog::builtin();
    if (!catalog_path.empty()) {
        std::ifstream f(catalog_path);
        if (!f) throw config_error("cannot open catalog '" + catalog_path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        loaded = Catalog::extended(ss.str());
        catalog = &loaded;
    }
    if (full) {
        write_output(catalog->to_json(), common.out_path, out);
        return 0;
    }
    json entries = json::array();
    for (const auto& e : catalog->entries()) {
        json je{{"name", e.name},
                {"dim", e.dim},
                {"orientable", e.orientable},
                {"rational_homology_sphere", catalog->entry_is_rhs(e)}};
        entries.push_back(je);
    }
    json result;
    result["config"] = config;
    result["entries"] = entries;
    write_output(result.dump(2), common.out_path, out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"degree-lab: mapping degree, Orlicz energies and exact "
                 "homology at desk scale"};
    app.require_subcommand(1);

    // young-check
    auto* yc = app.add_subcommand("young-check",
                                  "verify gauge conditions numerically");
    std::string yc_gauge;
    int yc_n = 2;
    double yc_alpha = 0.0;
    CommonOpts yc_common;
    yc->add_option("gauge", yc_gauge, "gauge descriptor")->required();
    yc->add_option("--n", yc_n, "ambient dimension (default 2)");
    yc->add_option("--alpha", yc_alpha, "growth exponent (default n - 0.5)");
    add_common(yc, yc_common);

    // degree
    auto* dg = app.add_subcommand("degree", "mapping degree of a map family");
    std::string dg_map, dg_mesh = "s2", dg_method = "jacobian", dg_value;
    CommonOpts dg_common;
    dg->add_option("--map", dg_map, "map descriptor")->required();
    dg->add_option("--mesh", dg_mesh, "domain mesh descriptor");
    dg->add_option("--method", dg_method, "jacobian | preimage");
    dg->add_option("--value", dg_value, "regular value 'phi,theta' (preimage)");
    add_common(dg, dg_common);

    // energy
    auto* en = app.add_subcommand("energy", "decay experiment across k");
    std::string en_family = "bubble", en_gauge = "p:1.5", en_k = "4,8,16,32,64";
    std::string en_format = "csv";
    int en_mult = 0;
    CommonOpts en_common;
    en->add_option("--family", en_family, "bubble | composite | compose:...");
    en->add_option("--gauge", en_gauge, "p:<exp> or a gauge descriptor");
    en->add_option("--k", en_k, "comma list of bubble parameters");
    en->add_option("--mesh-mult", en_mult, "cells per unit k (default 64/128)");
    en->add_option("--format", en_format, "csv | json");
    add_common(en, en_common);

    // paradox
    auto* px = app.add_subcommand(
        "paradox", "joint degree and energy table for a family");
    std::string px_family = "bubble", px_gauge = "powlog:n=2,a=1";
    std::string px_k = "4,8,16,32,64", px_format = "csv";
    int px_mult = 0;
    CommonOpts px_common;
    px->add_option("--family", px_family, "bubble | composite | compose:...");
    px->add_option("--gauge", px_gauge, "p:<exp> or a gauge descriptor");
    px->add_option("--k", px_k, "comma list of bubble parameters");
    px->add_option("--mesh-mult", px_mult, "cells per unit k (default 64/128)");
    px->add_option("--format", px_format, "csv | json");
    add_common(px, px_common);

    // homology
    auto* hm = app.add_subcommand("homology", "exact cellular homology");
    std::string hm_space, hm_coeff = "Z", hm_in;
    CommonOpts hm_common;
    hm->add_option("--space", hm_space, "space descriptor (lens:m=5,dim=3 ...)");
    hm->add_option("--coeff", hm_coeff, "Z | Q");
    hm->add_option("--in", hm_in, "chain complex JSON file");
    add_common(hm, hm_common);

    // verdict
    auto* vd = app.add_subcommand("verdict", "catalog predicate evaluation");
    std::string vd_target, vd_predicate = "degree", vd_domain, vd_catalog;
    int vd_n = 0;
    CommonOpts vd_common;
    vd->add_option("--target", vd_target, "catalog entry name")->required();
    vd->add_option("--predicate", vd_predicate, "degree | degree4 | homotopy");
    vd->add_option("--n", vd_n, "domain dimension for homotopy");
    vd->add_option("--domain", vd_domain, "domain entry name for homotopy");
    vd->add_option("--catalog", vd_catalog, "extra catalog entries (JSON file)");
    add_common(vd, vd_common);

    // catalog-list
    auto* cl = app.add_subcommand("catalog-list", "list catalog entries");
    std::string cl_catalog;
    bool cl_full = false;
    CommonOpts cl_common;
    cl->add_option("--catalog", cl_catalog, "extra catalog entries (JSON file)");
    cl->add_flag("--full", cl_full, "dump the full catalog JSON");
    add_common(cl, cl_common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (yc->parsed()) {
            apply_threads(yc_common);
            return run_young_check(yc_gauge, yc_n, yc_alpha, yc_common, out);
        }
        if (dg->parsed()) {
            apply_threads(dg_common);
            return run_degree(dg_map, dg_mesh, dg_method, dg_value, dg_common,
                              out);
        }
        if (en->parsed()) {
            apply_threads(en_common);
            return run_energy(en_family, en_gauge, en_k, en_mult, en_format,
                              en_common, out);
        }
        if (px->parsed()) {
            apply_threads(px_common);
            return run_paradox(px_family, px_gauge, px_k, px_mult, px_format,
                               px_common, out);
        }
        if (hm->parsed()) {
            apply_threads(hm_common);
            return run_homology(hm_space, hm_coeff, hm_in, hm_common, out);
        }
        if (vd->parsed()) {
            apply_threads(vd_common);
            return run_verdict(vd_target, vd_predicate, vd_n, vd_domain,
                               vd_catalog, vd_common, out);
        }
        if (cl->parsed()) {
            apply_threads(cl_common);
            return run_catalog_list(cl_catalog, cl_full, cl_common, out);
        }
        err << "config error: no subcommand\n";
        return 2;
    } catch (const config_error& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const regular_value_error& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const resolution_error& e) {
        err << "resolution error: " << e.what() << "\n";
        return 3;
    } catch (const consistency_error& e) {
        err << "consistency error: " << e.what() << "\n";
        return 4;
    } catch (const evaluation_error& e) {
        err << "evaluation error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace degreelab::cli
