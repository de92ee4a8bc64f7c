#ifndef DEGREELAB_ENERGY_HPP
#define DEGREELAB_ENERGY_HPP

#include <functional>
#include <string>
#include <vector>

#include "degreelab/maps.hpp"
#include "degreelab/mesh.hpp"
#include "degreelab/young.hpp"

namespace degreelab {

/// Orlicz energy of a map: integral of P(|Df|) over the domain, with |Df|
/// the Hilbert-Schmidt norm of the differential.
double orlicz_energy(const MapExpr& map, const ManifoldMesh& domain,
                     const YoungFunction& gauge);

/// p-energy, integral of |Df|^p.  Exactly orlicz_energy with the power
/// gauge: identical summation, identical value.
double p_energy(const MapExpr& map, const ManifoldMesh& domain, double p);

/// |Df| sampled at every node, with the quadrature weights, as a weighted
/// field for Luxemburg-norm experiments.
WeightedField sample_differential_field(const MapExpr& map,
                                        const ManifoldMesh& domain);

/// Either a p-energy gauge or a Young gauge.  Descriptors: "p:1.5" or any
/// Young descriptor ("powlog:n=2,a=1", "power:p=2", "table:...").
struct EnergyGauge {
    static EnergyGauge power_exponent(double p);
    static EnergyGauge young(YoungFunction gauge);
    static EnergyGauge parse(std::string_view descriptor);

    double apply(double t) const;
    /// Reference decay value at bubble parameter k: k^{p-n} for exponent
    /// gauges, P(k) k^{-n} for Young gauges.
    double reference_bound(int k, int n) const;
    std::string describe() const;

    std::optional<double> p;
    std::optional<YoungFunction> young_gauge;
};

struct EnergyRow {
    int k = 0;
    double energy = 0.0;
    double cap_measure = 0.0;       // quadrature measure of {|Df| > 0}
    double sup_df = 0.0;
    double bound_certificate = 0.0; // P(sup |Df|) * cap_measure
};

enum class DecayVerdict { DecaysToZero, BoundedAway, Inconclusive };

const char* to_string(DecayVerdict v);

struct EnergyReport {
    std::string family;
    std::string gauge;
    int dimension = 2;
    std::vector<EnergyRow> rows;        // strictly increasing in k
    std::vector<double> reference;      // reference_bound per row
    double slope = 0.0;                 // least-squares log energy vs log k
    DecayVerdict verdict = DecayVerdict::Inconclusive;
};

/// A one-parameter family of maps with the mesh rule to resolve each
/// member.  parse() accepts "bubble" (S^2 bubbles) and composite
/// descriptors like "compose:power:d=2|bubble|collapse" where the bare
/// "bubble" marks the k slot.
struct DecayFamily {
    static DecayFamily parse(std::string_view descriptor, int mesh_multiplier = 0);

    std::string descriptor;
    MeshKind domain = MeshKind::Sphere2;
    int mesh_multiplier = 64; // driving axis gets multiplier * k cells
    std::function<MapExpr(int)> map_for_k;
    std::function<ManifoldMesh(int)> mesh_for_k;
};

/// Runs the family across k_list (>= 4 strictly increasing values), fits
/// the log-log slope, and classifies the decay:
///   DecaysToZero  slope <= -0.2 and last energy < half the first
///   BoundedAway   |slope| < 0.1 and max/min energies within a factor 2
///   Inconclusive  otherwise
EnergyReport decay_experiment(const DecayFamily& family, const EnergyGauge& gauge,
                              const std::vector<int>& k_list);

} // namespace degreelab

#endif
