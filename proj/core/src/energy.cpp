#include "degreelab/energy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "degreelab/degree.hpp"
#include "descriptor_util.hpp"

namespace degreelab {

double orlicz_energy(const MapExpr& map, const ManifoldMesh& domain,
                     const YoungFunction& gauge) {
    if (map.domain_kind() != domain.kind())
        throw config_error("map domain does not match mesh " + domain.describe());
    check_resolution_rule(map, domain);
    return domain.integrate_with([&](const ChartSample& s) {
        return gauge(map.differential(s.chart).hs_norm);
    });
}

double p_energy(const MapExpr& map, const ManifoldMesh& domain, double p) {
    if (!(p >= 1.0)) throw config_error("p-energy needs p >= 1");
    return orlicz_energy(map, domain, YoungFunction::power(p));
}

WeightedField sample_differential_field(const MapExpr& map,
                                        const ManifoldMesh& domain) {
    if (map.domain_kind() != domain.kind())
        throw config_error("map domain does not match mesh " + domain.describe());
    check_resolution_rule(map, domain);
    WeightedField f;
    f.values.reserve(domain.node_count());
    f.weights.reserve(domain.node_count());
    for (std::size_t i = 0; i < domain.node_count(); ++i) {
        const ChartSample s = domain.chart_node(i);
        f.values.push_back(map.differential(s.chart).hs_norm);
        f.weights.push_back(s.weight);
    }
    return f;
}

EnergyGauge EnergyGauge::power_exponent(double p) {
    if (!(p >= 1.0)) throw config_error("energy gauge needs p >= 1");
    EnergyGauge g;
    g.p = p;
    g.young_gauge = YoungFunction::power(p);
    return g;
}

EnergyGauge EnergyGauge::young(YoungFunction gauge) {
    EnergyGauge g;
    g.young_gauge = std::move(gauge);
    return g;
}

EnergyGauge EnergyGauge::parse(std::string_view d) {
    if (d.rfind("p:", 0) == 0)
        return power_exponent(detail::to_double(d.substr(2), d));
    return young(YoungFunction::parse(d));
}

double EnergyGauge::apply(double t) const { return (*young_gauge)(t); }

double EnergyGauge::reference_bound(int k, int n) const {
    const double kd = static_cast<double>(k);
    if (p) return std::pow(kd, *p - n);
    return (*young_gauge)(kd) * std::pow(kd, -static_cast<double>(n));
}

std::string EnergyGauge::describe() const {
    if (p) {
        std::ostringstream os;
        os << "p:" << *p;
        return os.str();
    }
    return young_gauge->description();
}

const char* to_string(DecayVerdict v) {
    switch (v) {
        case DecayVerdict::DecaysToZero: return "DecaysToZero";
        case DecayVerdict::BoundedAway: return "BoundedAway";
        default: return "Inconclusive";
    }
}

DecayFamily DecayFamily::parse(std::string_view descriptor, int mesh_multiplier) {
    DecayFamily fam;
    fam.descriptor = std::string(descriptor);

    std::function<MapExpr(int)> builder;
    if (descriptor == "bubble") {
        builder = [](int k) { return MapExpr::bubble(k); };
        fam.domain = MeshKind::Sphere2;
        fam.mesh_multiplier = mesh_multiplier > 0 ? mesh_multiplier : 64;
    } else if (descriptor == "composite") {
        // the headline torus-to-sphere family
        builder = [](int k) {
            return MapExpr::compose({MapExpr::power_map(2), MapExpr::bubble(k),
                                     MapExpr::collapse()});
        };
        fam.domain = MeshKind::Torus2;
        fam.mesh_multiplier = mesh_multiplier > 0 ? mesh_multiplier : 128;
    } else if (descriptor.rfind("compose:", 0) == 0) {
        // a bare "bubble" factor marks the k slot
        std::vector<std::string> parts;
        for (auto p : detail::split(descriptor.substr(8), '|'))
            parts.emplace_back(p);
        std::size_t open_slots = 0;
        for (const auto& p : parts)
            if (p == "bubble") ++open_slots;
        if (open_slots != 1)
            throw config_error("composite family needs exactly one open "
                               "'bubble' factor: " + std::string(descriptor));
        builder = [parts](int k) {
            std::string s = "compose:";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) s += '|';
                s += parts[i] == "bubble" ? "bubble:k=" + std::to_string(k)
                                          : parts[i];
            }
            return MapExpr::parse(s);
        };
        fam.domain = builder(4).domain_kind();
        fam.mesh_multiplier = mesh_multiplier > 0
                                  ? mesh_multiplier
                                  : (fam.domain == MeshKind::Torus2 ? 128 : 64);
    } else {
        throw config_error("unknown family descriptor '" + std::string(descriptor) +
                           "'");
    }

    fam.map_for_k = builder;
    const MeshKind domain = fam.domain;
    const int mult = fam.mesh_multiplier;
    fam.mesh_for_k = [domain, mult](int k) {
        const int n = mult * k;
        switch (domain) {
            case MeshKind::Sphere2:
                return ManifoldMesh::build(domain, {n, 2 * n});
            case MeshKind::Sphere3:
                return ManifoldMesh::build(domain, {n, n, n});
            default:
                return ManifoldMesh::build(domain, {n, n});
        }
    };
    return fam;
}

namespace {

struct RowSample {
    double energy = 0.0;
    double support = 0.0;
    double sup_df = 0.0;
};

// One sweep per row: energy, support measure and sup |Df| together.
// Fixed-shape recursion keeps the sums reproducible.
RowSample sample_row(const MapExpr& map, const ManifoldMesh& mesh,
                     const EnergyGauge& gauge, std::size_t begin,
                     std::size_t end) {
    const std::size_t n = end - begin;
    if (n > detail::reduce_leaf_size) {
        const std::size_t mid = begin + n / 2;
        const RowSample a = sample_row(map, mesh, gauge, begin, mid);
        const RowSample b = sample_row(map, mesh, gauge, mid, end);
        return {a.energy + b.energy, a.support + b.support,
                std::max(a.sup_df, b.sup_df)};
    }
    RowSample s;
    for (std::size_t i = begin; i < end; ++i) {
        const ChartSample node = mesh.chart_node(i);
        const double hs = map.differential(node.chart).hs_norm;
        const double e = gauge.apply(hs) * node.weight;
        if (!std::isfinite(e))
            throw evaluation_error("non-finite energy density at node " +
                                   std::to_string(i));
        s.energy += e;
        if (hs > 0.0) s.support += node.weight;
        s.sup_df = std::max(s.sup_df, hs);
    }
    return s;
}

} // namespace

EnergyReport decay_experiment(const DecayFamily& family, const EnergyGauge& gauge,
                              const std::vector<int>& k_list) {
    if (k_list.size() < 4)
        throw config_error("decay experiment needs at least 4 values of k");
    for (std::size_t i = 0; i + 1 < k_list.size(); ++i)
        if (k_list[i + 1] <= k_list[i])
            throw config_error("k list must be strictly increasing");

    EnergyReport report;
    report.family = family.descriptor;
    report.gauge = gauge.describe();
    report.dimension = dimension_of(family.domain) == 3 ? 3 : 2;

    for (int k : k_list) {
        const MapExpr map = family.map_for_k(k);
        const ManifoldMesh mesh = family.mesh_for_k(k);
        try {
            check_resolution_rule(map, mesh);
            const RowSample s = sample_row(map, mesh, gauge, 0, mesh.node_count());
            EnergyRow row;
            row.k = k;
            row.energy = s.energy;
            row.cap_measure = s.support;
            row.sup_df = s.sup_df;
            row.bound_certificate = gauge.apply(s.sup_df) * s.support;
            report.rows.push_back(row);
            report.reference.push_back(gauge.reference_bound(k, report.dimension));
        } catch (const resolution_error& e) {
            throw resolution_error(std::string(e.what()) + " (aborted after " +
                                   std::to_string(report.rows.size()) +
                                   " completed rows)");
        }
    }

    // least-squares slope of log energy against log k
    const std::size_t n = report.rows.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& row : report.rows) {
        const double x = std::log(static_cast<double>(row.k));
        const double y = std::log(row.energy);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    report.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    const double first = report.rows.front().energy;
    const double last = report.rows.back().energy;
    double emin = first, emax = first;
    for (const auto& row : report.rows) {
        emin = std::min(emin, row.energy);
        emax = std::max(emax, row.energy);
    }
    if (report.slope <= -0.2 && last < 0.5 * first)
        report.verdict = DecayVerdict::DecaysToZero;
    else if (std::abs(report.slope) < 0.1 && emax <= 2.0 * emin)
        report.verdict = DecayVerdict::BoundedAway;
    else
        report.verdict = DecayVerdict::Inconclusive;
    return report;
}

} // namespace degreelab
