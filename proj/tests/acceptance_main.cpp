// Acceptance suite: one line per criterion, exit code = number of failures.
// Each criterion pins its thresholds in code; nothing is deferred to later
// calibration.  Run through ctest or directly:  ./acceptance [--only N]
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "degreelab/catalog.hpp"
#include "degreelab/degree.hpp"
#include "degreelab/energy.hpp"
#include "degreelab/homology.hpp"
#include "degreelab/young.hpp"
#include "oracles.hpp"

using namespace degreelab;
using oracle::pi;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

const double sphere_area = 4.0 * pi;

// ---- criteria --------------------------------------------------------------

Outcome degree_stability() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (int k : {2, 4, 8, 16, 32, 64}) {
        const auto mesh = ManifoldMesh::build(MeshKind::Sphere2, {64 * k, 128 * k});
        const auto est = degree_by_jacobian(MapExpr::bubble(k), mesh, sphere_area);
        o.require(est.rounded == 1, "k=" + std::to_string(k) + " degree " +
                                        std::to_string(est.rounded));
        o.require(est.residual < 0.01, "k=" + std::to_string(k) + " residual " +
                                           fmt(est.residual));
    }
    const double elapsed = seconds_since(t0);
    o.require(elapsed < 30.0, "runtime " + fmt(elapsed) + "s >= 30s");
    o.note("residuals < 0.01, runtime " + fmt(elapsed) + "s");
    return o;
}

Outcome p_energy_decay_rate() {
    Outcome o;
    const auto family = DecayFamily::parse("bubble");
    const std::vector<int> ks{4, 8, 16, 32, 64};

    const auto linear = decay_experiment(family, EnergyGauge::power_exponent(1), ks);
    o.require(linear.slope >= -1.15 && linear.slope <= -0.85,
              "p=1 slope " + fmt(linear.slope) + " outside [-1.15,-0.85]");
    const auto sub = decay_experiment(family, EnergyGauge::power_exponent(1.5), ks);
    o.require(sub.slope >= -0.65 && sub.slope <= -0.35,
              "p=1.5 slope " + fmt(sub.slope) + " outside [-0.65,-0.35]");
    o.note("slopes p=1: " + fmt(linear.slope) + ", p=1.5: " + fmt(sub.slope));
    return o;
}

Outcome critical_energy_obstruction() {
    Outcome o;
    const auto report = decay_experiment(DecayFamily::parse("bubble"),
                                         EnergyGauge::power_exponent(2),
                                         {4, 8, 16, 32, 64});
    double lo = 1e300, hi = 0.0;
    for (const auto& row : report.rows) {
        lo = std::min(lo, row.energy);
        hi = std::max(hi, row.energy);
    }
    o.require(hi / lo < 1.10,
              "p=2 energy varies by " + fmt(100 * (hi / lo - 1)) + "% >= 10%");
    o.require(lo >= 30.0, "p=2 energy " + fmt(lo) + " < 30");
    o.note("p=2 energy in [" + fmt(lo) + ", " + fmt(hi) + "]");
    return o;
}

Outcome orlicz_decay() {
    Outcome o;
    const auto report =
        decay_experiment(DecayFamily::parse("bubble"),
                         EnergyGauge::parse("powlog:n=2,a=1"), {4, 8, 16, 32, 64});
    for (const auto& row : report.rows)
        o.require(row.energy <= row.bound_certificate * (1.0 + 1e-6),
                  "k=" + std::to_string(row.k) + " certificate violated");
    const double first = report.rows.front().energy;
    const double last = report.rows.back().energy;
    o.require(last < first / 4.0, "energy(64)/energy(4) = " + fmt(last / first) +
                                      " not < 0.25");
    double rlo = 1e300, rhi = 0.0;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const double ratio = report.rows[i].energy / report.reference[i];
        rlo = std::min(rlo, ratio);
        rhi = std::max(rhi, ratio);
    }
    o.require(rhi / rlo <= 10.0,
              "reference band " + fmt(rhi / rlo) + " exceeds one decade");
    o.note("energies " + fmt(first) + " -> " + fmt(last) + ", band " +
           fmt(rhi / rlo));
    return o;
}

Outcome paradox_table() {
    Outcome o;
    const auto family = DecayFamily::parse("composite"); // torus, 128k cells
    const std::vector<int> ks{4, 8, 16, 32, 64};
    for (int k : ks) {
        const auto est = degree_by_jacobian(family.map_for_k(k),
                                            family.mesh_for_k(k), sphere_area);
        o.require(est.rounded == 2, "k=" + std::to_string(k) + " degree " +
                                        std::to_string(est.rounded));
        o.require(est.residual < 0.05, "k=" + std::to_string(k) + " residual " +
                                           fmt(est.residual));
    }
    const auto report = decay_experiment(
        family, EnergyGauge::parse("powlog:n=2,a=1"), ks);
    o.require(report.verdict == DecayVerdict::DecaysToZero,
              std::string("energy verdict ") + to_string(report.verdict) +
                  " (slope " + fmt(report.slope) + ", last/first " +
                  fmt(report.rows.back().energy / report.rows.front().energy) +
                  ")");
    o.note("degree constant 2; slope " + fmt(report.slope));
    return o;
}

Outcome young_verdicts() {
    Outcome o;
    for (int n : {2, 3, 4}) {
        const std::string tag = " (n=" + std::to_string(n) + ")";
        const std::vector<std::pair<YoungFunction, bool>> cases = {
            {YoungFunction::power(n), true},
            {YoungFunction::power_log(n, 1), true},
            {YoungFunction::power_log(n, 1.5), false},
            {YoungFunction::power(n - 1), false}};
        for (const auto& [gauge, diverges] : cases) {
            const auto v = check_divergence(gauge, n);
            o.require((v.status == ConditionStatus::Holds) == diverges &&
                          v.status != ConditionStatus::Inconclusive,
                      gauge.description() + tag + " divergence " +
                          to_string(v.status));
            const auto r = radial_projection_energy(gauge, n);
            o.require((r.verdict == RadialVerdict::Infinite) == diverges &&
                          r.verdict != RadialVerdict::Inconclusive,
                      gauge.description() + tag + " radial " +
                          to_string(r.verdict));
        }
    }
    const auto finite = radial_projection_energy(YoungFunction::power(1.5), 2);
    o.require(std::abs(finite.value - 4.0 * pi) <= 0.01 * 4.0 * pi,
              "radial energy " + fmt(finite.value) + " not within 1% of 4pi");
    o.note("12 gauge/dimension verdicts + radial complement; energy " +
           fmt(finite.value));
    return o;
}

Outcome homology_tables() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    auto text = [](const ChainComplex& c) {
        std::vector<std::string> out;
        for (const auto& g : homology(c, Coefficients::Integers))
            out.push_back(to_string(g));
        return out;
    };
    for (int m = 2; m <= 7; ++m) {
        const auto groups = text(lens_complex(m, 3));
        const std::vector<std::string> expected{
            "Z", "Z_" + std::to_string(m), "0", "Z"};
        o.require(groups == expected, "lens m=" + std::to_string(m));
        o.require(is_rational_homology_sphere(lens_complex(m, 3)).value,
                  "lens m=" + std::to_string(m) + " not seen as RHS");
    }
    o.require(text(sphere_complex(3)) ==
                  std::vector<std::string>{"Z", "0", "0", "Z"},
              "S^3 groups");
    o.require(text(cpn_complex(2)) ==
                  std::vector<std::string>{"Z", "0", "Z", "0", "Z"},
              "CP^2 groups");
    o.require(text(torus2_complex()) ==
                  std::vector<std::string>{"Z", "Z + Z", "Z"},
              "T^2 groups");
    o.require(text(rp_complex(2)) == std::vector<std::string>{"Z", "Z_2", "0"},
              "RP^2 groups");
    o.require(!is_rational_homology_sphere(cpn_complex(2)).value, "CP^2 RHS");
    o.require(!is_rational_homology_sphere(torus2_complex()).value, "T^2 RHS");
    const Catalog& cat = Catalog::builtin();
    o.require(!cat.entry_is_rhs(cat.require("s2xs2")), "S^2xS^2 RHS");
    const double elapsed = seconds_since(t0);
    o.require(elapsed < 5.0, "runtime " + fmt(elapsed) + "s >= 5s");
    o.note("lens m=2..7 + spheres + surfaces, runtime " + fmt(elapsed) + "s");
    return o;
}

Outcome snf_property_suite() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<int> entry(-9, 9);
    int nonsingular = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::vector<long long>> rows(5, std::vector<long long>(5));
        IntMatrix m(5, 5);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) {
                rows[r][c] = entry(rng);
                m.at(r, c) = rows[r][c];
            }
        const auto snf = smith_normal_form(std::move(m));
        for (std::size_t i = 0; i + 1 < snf.invariant_factors.size(); ++i)
            o.require(snf.invariant_factors[i + 1] % snf.invariant_factors[i] == 0,
                      "divisibility chain, trial " + std::to_string(trial));
        o.require(snf.rank == oracle::rational_rank(rows),
                  "rank mismatch, trial " + std::to_string(trial));
        const BigInt det = oracle::bareiss_det(rows);
        if (det != 0) {
            ++nonsingular;
            BigInt product = 1;
            for (const auto& f : snf.invariant_factors) product *= f;
            o.require(product == boost::multiprecision::abs(det),
                      "determinant mismatch, trial " + std::to_string(trial));
        }
    }
    const double elapsed = seconds_since(t0);
    o.require(elapsed < 5.0, "runtime " + fmt(elapsed) + "s >= 5s");
    o.note(std::to_string(nonsingular) + " nonsingular of 200, runtime " +
           fmt(elapsed) + "s");
    return o;
}

Outcome predicate_suite() {
    Outcome o;
    const Catalog& cat = Catalog::builtin();
    const std::vector<std::string> unstable{
        "s4",       "lens:m=2", "lens:m=3", "lens:m=4", "lens:m=5",
        "lens:m=6", "lens:m=7", "poincare"};
    for (const auto& name : unstable)
        o.require(degree_well_defined(cat, cat.require(name)).answer ==
                      Answer::No,
                  name + " expected No");
    for (const char* name : {"cp2", "t2", "t3", "s2xs2", "r3g6"})
        o.require(degree_well_defined(cat, cat.require(name)).answer ==
                      Answer::Yes,
                  std::string(name) + " expected Yes");
    int dim4 = 0;
    for (const auto& e : cat.entries()) {
        if (e.dim != 4) continue;
        ++dim4;
        o.require(degree_well_defined(cat, e).answer ==
                      degree_well_defined_dim4(cat, e).answer,
                  e.name + " dim-4 specialization disagrees");
    }
    o.note(std::to_string(dim4) + " dimension-4 entries cross-checked");
    return o;
}

Outcome euler_covering_checks() {
    Outcome o;
    o.require(euler_characteristic(rp_complex(2)) == 1, "chi(RP^2) != 1");
    o.require(euler_characteristic(sphere_complex(2)) == 2, "chi(S^2) != 2");
    o.require(covering_chi_check(rp_complex(2), sphere_complex(2), 2),
              "RP^2 double cover check");
    std::vector<ChainComplex> shipped;
    for (int n = 1; n <= 6; ++n) shipped.push_back(sphere_complex(n));
    for (int m = 2; m <= 7; ++m) shipped.push_back(lens_complex(m, 3));
    for (int n = 2; n <= 4; ++n) shipped.push_back(rp_complex(n));
    shipped.push_back(torus2_complex());
    shipped.push_back(cpn_complex(1));
    shipped.push_back(cpn_complex(2));
    for (std::size_t i = 0; i < shipped.size(); ++i) {
        const auto chi = euler_both_ways(shipped[i]);
        o.require(chi.from_cells == chi.from_betti,
                  "complex " + std::to_string(i) + ": cells " +
                      std::to_string(chi.from_cells) + " vs betti " +
                      std::to_string(chi.from_betti));
    }
    o.note(std::to_string(shipped.size()) + " complexes, both routes agree");
    return o;
}

Outcome luxemburg_agreement() {
    Outcome o;
    std::mt19937_64 rng(16180339);
    std::uniform_real_distribution<double> value(0.0, 10.0), weight(0.01, 2.0);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        WeightedField field;
        for (int i = 0; i < 60; ++i) {
            field.values.push_back(value(rng));
            field.weights.push_back(weight(rng));
        }
        for (double p : {1.0, 1.5, 2.0, 3.0}) {
            double mean = 0.0;
            for (std::size_t i = 0; i < field.values.size(); ++i)
                mean += field.weights[i] * std::pow(field.values[i], p);
            const double pnorm = std::pow(mean, 1.0 / p);
            const double lux = luxemburg_norm(field, YoungFunction::power(p));
            const double rel = std::abs(lux - pnorm) / pnorm;
            worst = std::max(worst, rel);
            o.require(rel <= 1e-6, "trial " + std::to_string(trial) + " p=" +
                                       fmt(p) + " relative error " + fmt(rel));
        }
    }
    o.note("worst relative error " + fmt(worst));
    return o;
}

Outcome finite_difference_crosscheck() {
    Outcome o;
    std::mt19937_64 rng(20240813);
    const double margin = 1e-3;

    struct Family {
        MapExpr map;
        std::function<std::array<double, 3>(std::mt19937_64&)> draw;
    };
    std::vector<Family> families;
    families.push_back({MapExpr::bubble(8), [=](std::mt19937_64& g) {
                            std::uniform_real_distribution<double> phi(0.1, 6.0);
                            std::uniform_real_distribution<double> in(
                                margin, 1.0 / 8 - margin);
                            std::uniform_real_distribution<double> out_(
                                1.0 / 8 + margin, pi - margin);
                            const double th = g() % 2 ? in(g) : out_(g);
                            return std::array<double, 3>{phi(g), th, 0.0};
                        }});
    families.push_back({MapExpr::bubble(3, 3), [=](std::mt19937_64& g) {
                            std::uniform_real_distribution<double> phi(0.1, 6.0);
                            std::uniform_real_distribution<double> t2(margin,
                                                                      pi - margin);
                            std::uniform_real_distribution<double> in(
                                margin, 1.0 / 3 - margin);
                            std::uniform_real_distribution<double> out_(
                                1.0 / 3 + margin, pi - margin);
                            const double th = g() % 2 ? in(g) : out_(g);
                            return std::array<double, 3>{phi(g), t2(g), th};
                        }});
    families.push_back({MapExpr::power_map(3), [=](std::mt19937_64& g) {
                            std::uniform_real_distribution<double> phi(0.1, 6.0);
                            std::uniform_real_distribution<double> th(margin,
                                                                      pi - margin);
                            return std::array<double, 3>{phi(g), th(g), 0.0};
                        }});
    families.push_back({MapExpr::collapse(), [=](std::mt19937_64& g) {
                            std::uniform_real_distribution<double> r(margin,
                                                                     0.25 - margin);
                            std::uniform_real_distribution<double> a(0.0, 2 * pi);
                            const double rr = r(g), aa = a(g);
                            return std::array<double, 3>{0.5 + rr * std::cos(aa),
                                                         0.5 + rr * std::sin(aa),
                                                         0.0};
                        }});
    families.push_back(
        {MapExpr::compose({MapExpr::power_map(2), MapExpr::bubble(8),
                           MapExpr::collapse()}),
         [](std::mt19937_64& g) {
             // margins scale with the pulled-back cap radius so the
             // finite-difference stencil never straddles a kink
             const double cap_r = 0.25 / (pi * 8);
             std::uniform_real_distribution<double> r(0.05 * cap_r, 0.95 * cap_r);
             std::uniform_real_distribution<double> a(0.0, 2 * pi);
             const double rr = r(g), aa = a(g);
             return std::array<double, 3>{0.5 + rr * std::cos(aa),
                                          0.5 + rr * std::sin(aa), 0.0};
         }});

    double worst = 0.0;
    for (const auto& fam : families) {
        int checked = 0;
        while (checked < 100) {
            const auto x = fam.draw(rng);
            DifferentialSample analytic;
            try {
                analytic = fam.map.differential(x);
            } catch (const singular_locus_error&) {
                continue;
            }
            const auto fd = oracle::fd_differential(fam.map, x);
            const double hs_rel = std::abs(analytic.hs_norm - fd.hs_norm) /
                                  std::max(1.0, analytic.hs_norm);
            const double j_rel = std::abs(analytic.jacobian - fd.jacobian) /
                                 std::max(1.0, std::abs(analytic.jacobian));
            worst = std::max({worst, hs_rel, j_rel});
            o.require(hs_rel < 1e-3 && j_rel < 1e-3,
                      fam.map.describe() + " node " + std::to_string(checked) +
                          " relative error " + fmt(std::max(hs_rel, j_rel)));
            ++checked;
        }
    }
    o.note("500 nodes across 5 families, worst " + fmt(worst));
    return o;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--only" && i + 1 < argc)
            only = std::atoi(argv[i + 1]);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria =
        {{"degree stability across the bubble family", degree_stability},
         {"p-energy decay rates", p_energy_decay_rate},
         {"critical-exponent energy stays bounded away", critical_energy_obstruction},
         {"orlicz decay under the log gauge", orlicz_decay},
         {"paradox table for the torus composite", paradox_table},
         {"gauge condition verdicts with radial complement", young_verdicts},
         {"homology tables", homology_tables},
         {"smith normal form property suite", snf_property_suite},
         {"degree predicate suite", predicate_suite},
         {"euler characteristic and covering checks", euler_covering_checks},
         {"luxemburg norm vs weighted p-norm", luxemburg_agreement},
         {"finite-difference differential cross-check",
          finite_difference_crosscheck}};

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (only != 0 && only != id) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("C%02d %s  %s%s%s\n", id, o.pass ? "PASS" : "FAIL",
                    criteria[i].first.c_str(), o.detail.empty() ? "" : " -- ",
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures;
}
