#include "degreelab/degree.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "small_matrix.hpp"

namespace degreelab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_pm_pi(double a) {
    a = std::fmod(a, kTwoPi);
    if (a > kPi) a -= kTwoPi;
    if (a <= -kPi) a += kTwoPi;
    return a;
}
} // namespace

const char* to_string(DegreeMethod m) {
    return m == DegreeMethod::Jacobian ? "jacobian" : "preimage";
}

void check_resolution_rule(const MapExpr& map, const ManifoldMesh& domain) {
    const int k = map.max_bubble_k();
    if (k == 0) return;
    const auto& res = domain.resolution();
    const int axis = domain.kind() == MeshKind::Torus2
                         ? *std::min_element(res.begin(), res.end())
                         : res[0];
    if (axis < 64 * k)
        throw resolution_error("mesh " + domain.describe() + " under-resolves " +
                               map.describe() + ": need >= " +
                               std::to_string(64 * k) + " cells on the driving axis");
}

DegreeEstimate degree_by_jacobian(const MapExpr& map, const ManifoldMesh& domain,
                                  double target_volume) {
    if (map.domain_kind() != domain.kind())
        throw config_error("map domain " + std::string(to_string(map.domain_kind())) +
                           " does not match mesh " + domain.describe());
    if (map.domain_dim() != map.target_dim())
        throw config_error("degree needs equal dimensions");
    if (!(target_volume > 0.0)) throw config_error("target volume must be positive");
    check_resolution_rule(map, domain);

    const double integral = domain.integrate_with(
        [&](const ChartSample& s) { return map.differential(s.chart).jacobian; });
    DegreeEstimate est;
    est.raw = integral / target_volume;
    est.rounded = std::llround(est.raw);
    est.residual = std::abs(est.raw - static_cast<double>(est.rounded));
    est.method = DegreeMethod::Jacobian;
    if (est.residual >= 0.05)
        throw non_integral_degree_error(
            "jacobian degree " + std::to_string(est.raw) +
                " is not close to an integer (under-resolved quadrature)",
            est.raw);
    return est;
}

namespace {

struct NewtonResult {
    bool converged = false;
    std::array<double, 3> root{};
    double jacobian = 0.0;
};

// Chart residual of f(x) against the target, in the target orthonormal
// frame: (sin(theta_v) * wrapped phi offset, theta offset).
std::array<double, 2> frame_residual(const std::array<double, 3>& fx,
                                     const std::array<double, 2>& v) {
    return {std::sin(v[1]) * wrap_pm_pi(fx[0] - v[0]), fx[1] - v[1]};
}

NewtonResult refine(const MapExpr& map, const ManifoldMesh& domain,
                    std::array<double, 3> x, const std::array<double, 2>& v,
                    double max_step) {
    NewtonResult out;
    const bool torus = domain.kind() == MeshKind::Torus2;
    for (int it = 0; it < 20; ++it) {
        const auto fx = map.evaluate(x);
        const auto r = frame_residual(fx, v);
        const double rn = std::hypot(r[0], r[1]);
        DifferentialSample ds;
        try {
            ds = map.differential(x);
        } catch (const singular_locus_error&) {
            if (rn < 1e-10)
                throw regular_value_error("a preimage sits on the non-smooth "
                                          "locus; pick another target value");
            return out; // seed walked onto the kink; treat as non-converged
        }
        if (rn < 1e-10) {
            out.converged = true;
            out.root = x;
            out.jacobian = ds.jacobian;
            return out;
        }
        const double det = ds.frame[0][0] * ds.frame[1][1] -
                           ds.frame[0][1] * ds.frame[1][0];
        if (std::abs(det) < 1e-14) return out;
        double d0 = (-r[0] * ds.frame[1][1] + r[1] * ds.frame[0][1]) / det;
        double d1 = (-r[1] * ds.frame[0][0] + r[0] * ds.frame[1][0]) / det;
        const double dn = std::hypot(d0, d1);
        if (dn > max_step) {
            d0 *= max_step / dn;
            d1 *= max_step / dn;
        }
        if (torus) {
            x[0] += d0;
            x[1] += d1;
            x[0] -= std::floor(x[0]);
            x[1] -= std::floor(x[1]);
        } else {
            // frame displacement back to chart steps
            x[0] += d0 / std::max(std::sin(x[1]), 1e-9);
            x[1] += d1;
            x[1] = std::clamp(x[1], 1e-9, kPi - 1e-9);
        }
    }
    return out;
}

} // namespace

DegreeEstimate degree_by_preimage(const MapExpr& map,
                                  std::array<double, 2> target_value,
                                  const ManifoldMesh& domain) {
    if (map.domain_kind() != domain.kind())
        throw config_error("map domain does not match mesh " + domain.describe());
    if (map.target_kind() != MeshKind::Sphere2)
        throw config_error("preimage counting is implemented for S^2 targets");
    check_resolution_rule(map, domain);
    target_value[0] = std::fmod(target_value[0], kTwoPi);
    if (target_value[0] < 0) target_value[0] += kTwoPi;
    if (!(target_value[1] >= 0.1 && target_value[1] <= kPi - 0.1))
        throw regular_value_error("target value must keep 0.1 latitude away from "
                                  "the poles");

    const bool torus = domain.kind() == MeshKind::Torus2;
    const int n0 = domain.resolution()[0], n1 = domain.resolution()[1];
    const double h0 = (torus ? 1.0 : kPi) / n0;
    const double h1 = (torus ? 1.0 : kTwoPi) / n1;

    // residuals at cell corners; on the sphere axis 0 is theta, axis 1 phi
    auto corner = [&](int i, int j) -> std::array<double, 3> {
        if (torus) return {i * h0, j * h1, 0.0};
        const double theta = std::clamp(i * h0, 1e-12, kPi - 1e-12);
        return {j * h1, theta, 0.0};
    };

    // unscaled chart residual (wrapped phi offset, theta offset) at corners
    std::vector<std::array<double, 2>> residual(
        static_cast<std::size_t>(n0 + 1) * (n1 + 1));
    for (int i = 0; i <= n0; ++i)
        for (int j = 0; j <= n1; ++j) {
            const auto fx = map.evaluate(corner(i, j));
            residual[static_cast<std::size_t>(i) * (n1 + 1) + j] = {
                wrap_pm_pi(fx[0] - target_value[0]), fx[1] - target_value[1]};
        }

    std::vector<std::array<double, 3>> seeds;
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n1; ++j) {
            const std::array<const std::array<double, 2>*, 4> c = {
                &residual[static_cast<std::size_t>(i) * (n1 + 1) + j],
                &residual[static_cast<std::size_t>(i + 1) * (n1 + 1) + j],
                &residual[static_cast<std::size_t>(i) * (n1 + 1) + j + 1],
                &residual[static_cast<std::size_t>(i + 1) * (n1 + 1) + j + 1]};
            bool phi_neg = false, phi_pos = false, th_neg = false, th_pos = false;
            bool near_branch = false;
            for (const auto* r : c) {
                if (std::abs((*r)[0]) > kPi / 2) near_branch = true; // wrap seam
                ((*r)[0] < 0 ? phi_neg : phi_pos) = true;
                ((*r)[1] < 0 ? th_neg : th_pos) = true;
            }
            if (near_branch || !(phi_neg && phi_pos && th_neg && th_pos)) continue;
            const auto a = corner(i, j);
            const auto b = corner(i + 1, j + 1);
            seeds.push_back({0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]), 0.0});
        }

    std::vector<NewtonResult> roots;
    const double cell = std::max(h0, h1);
    for (const auto& seed : seeds) {
        const auto r = refine(map, domain, seed, target_value, 4.0 * cell);
        if (!r.converged)
            throw resolution_error("preimage candidate near cell (" +
                                   std::to_string(seed[0]) + ", " +
                                   std::to_string(seed[1]) +
                                   ") did not converge; refine the mesh");
        if (std::abs(r.jacobian) < 1e-9)
            throw regular_value_error("degenerate preimage: target value is not "
                                      "regular; pick another value");
        bool duplicate = false;
        for (const auto& q : roots) {
            double d0 = r.root[0] - q.root[0], d1 = r.root[1] - q.root[1];
            if (!torus) d0 = wrap_pm_pi(d0);
            else {
                d0 -= std::round(d0);
                d1 -= std::round(d1);
            }
            if (std::hypot(d0, d1) < 1e-6) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) roots.push_back(r);
    }

    long long signed_count = 0;
    for (const auto& r : roots) signed_count += r.jacobian > 0 ? 1 : -1;

    DegreeEstimate est;
    est.raw = static_cast<double>(signed_count);
    est.rounded = signed_count;
    est.residual = 0.0;
    est.method = DegreeMethod::Preimage;
    return est;
}

} // namespace degreelab
