#ifndef DEGREELAB_DEGREE_HPP
#define DEGREELAB_DEGREE_HPP

#include <array>

#include "degreelab/maps.hpp"
#include "degreelab/mesh.hpp"

namespace degreelab {

enum class DegreeMethod { Jacobian, Preimage };

const char* to_string(DegreeMethod m);

/// A degree value together with how far the raw computation sat from the
/// integer.  Estimates with residual >= 0.05 never construct; the
/// computation throws non_integral_degree_error instead.
struct DegreeEstimate {
    double raw = 0.0;
    long long rounded = 0;
    double residual = 0.0;
    DegreeMethod method = DegreeMethod::Jacobian;
};

/// Degree as the normalized integral of the signed Jacobian over the
/// domain: (1/|N|) * sum_i w_i J(x_i).  Requires equal dimensions and a
/// mesh obeying the bubble resolution rule.
DegreeEstimate degree_by_jacobian(const MapExpr& map, const ManifoldMesh& domain,
                                  double target_volume);

/// Independent route: count preimages of a regular value with signs.
/// Candidate cells are found by sign changes of the chart residual at the
/// cell corners and refined by Newton steps.  The target value must keep
/// 0.1 of latitude away from both poles (the south pole absorbs the
/// non-smooth locus of the built-in families).  S^2 targets only.
DegreeEstimate degree_by_preimage(const MapExpr& map,
                                  std::array<double, 2> target_value,
                                  const ManifoldMesh& domain);

/// Shared precondition: every bubble factor k in `map` needs mesh
/// resolution >= 64 k on the driving axis.  Throws resolution_error.
void check_resolution_rule(const MapExpr& map, const ManifoldMesh& domain);

} // namespace degreelab

#endif
