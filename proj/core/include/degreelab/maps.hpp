#ifndef DEGREELAB_MAPS_HPP
#define DEGREELAB_MAPS_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "degreelab/mesh.hpp"

namespace degreelab {

/// Differential of a map at a point, expressed in orthonormal frames of
/// the chart coordinates on both sides.
///
/// Frames: S^2 (e_phi, e_theta); S^3 (e_phi, e_theta2, e_theta);
/// T^2 (e_x, e_y).  `frame[r][c]` is the r-th target-frame component of
/// the image of the c-th domain-frame vector, so the Hilbert-Schmidt norm
/// is the Frobenius norm and the Jacobian is the determinant.
struct DifferentialSample {
    int rows = 0, cols = 0;
    std::array<std::array<double, 3>, 3> frame{};
    std::array<double, 3> singular_values{}; // descending; first min(rows,cols) valid
    double hs_norm = 0.0;
    double jacobian = 0.0;                   // signed, only when rows == cols
};

/// An analytic map between meshes, evaluated in chart coordinates.
///
/// Variants:
///   bubble(k, n)   S^n -> S^n: (z, theta) -> (z, k pi theta) on the polar
///                  cap theta < 1/k, the south pole outside
///   power_map(d)   S^2 -> S^2: (phi, theta) -> (d phi mod 2pi, theta)
///   collapse(c,rho) T^2 -> S^2: the disk of radius rho about c wraps
///                  radially onto the sphere minus the south pole
///                  (theta' = pi r / rho), the complement to the south pole
///   identity, constant, compose (right-to-left application)
///
/// bubble and collapse are Lipschitz with a kink on a measure-zero locus
/// (the cap boundary / the disk rim); differentials are undefined exactly
/// there, and mesh midpoints never sample it at the documented resolutions.
class MapExpr {
public:
    static MapExpr bubble(int k, int sphere_dim = 2);
    static MapExpr power_map(int d);
    static MapExpr collapse(std::array<double, 2> center = {0.5, 0.5},
                            double rho = 0.25);
    static MapExpr identity(MeshKind kind);
    static MapExpr constant(MeshKind target, std::array<double, 3> chart_point);
    static MapExpr compose(std::vector<MapExpr> factors);

    /// "bubble:k=16", "power:d=3", "collapse:rho=0.25", "identity:s2",
    /// "compose:power:d=2|bubble:k=8|collapse".
    static MapExpr parse(std::string_view descriptor);

    MeshKind domain_kind() const { return domain_; }
    MeshKind target_kind() const { return target_; }
    int domain_dim() const { return dimension_of(domain_); }
    int target_dim() const { return dimension_of(target_); }

    std::array<double, 3> evaluate(const std::array<double, 3>& chart_point) const;
    DifferentialSample differential(const std::array<double, 3>& chart_point) const;

    /// Largest bubble parameter appearing in the expression (0 if none);
    /// drives the N >= 64k mesh resolution rule.
    int max_bubble_k() const;

    std::string describe() const;

private:
    enum class Kind { Bubble, PowerMap, Collapse, Identity, Constant, Compose };
    MapExpr() = default;

    Kind kind_ = Kind::Identity;
    MeshKind domain_ = MeshKind::Sphere2;
    MeshKind target_ = MeshKind::Sphere2;
    int k_ = 0;
    int d_ = 0;
    std::array<double, 2> center_{0.5, 0.5};
    double rho_ = 0.25;
    std::array<double, 3> const_point_{};
    std::vector<MapExpr> factors_; // compose: applied right-to-left
};

/// Quadrature measure of the polar cap {theta <= 1/k} on S^n at the rule
/// resolution N_theta = 64k (or the supplied override): the theta-axis
/// midpoint sum times the equatorial sphere volume.
double cap_measure(int k, int n, int n_theta = 0);

} // namespace degreelab

#endif
