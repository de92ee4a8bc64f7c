#ifndef DEGREELAB_MESH_HPP
#define DEGREELAB_MESH_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <future>
#include <memory>
#include <mutex>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degreelab/detail/reduce.hpp"
#include "degreelab/errors.hpp"

namespace degreelab {

enum class MeshKind { Sphere2, Sphere3, Torus2 };

const char* to_string(MeshKind k);
int dimension_of(MeshKind k);

/// One quadrature node: chart coordinates, the point in the ambient
/// embedding, and the midpoint-rule weight.
///
/// Charts:
///   Sphere2  (phi, theta)          theta in (0, pi) latitude from the north pole
///   Sphere3  (phi, theta2, theta)  recursive: point = (z sin theta, cos theta),
///                                  z in S^2 with chart (phi, theta2)
///   Torus2   (x, y)                flat unit square, periodic
struct MeshNode {
    std::array<double, 3> chart{};
    std::array<double, 4> ambient{};
    double weight = 0.0;
};

/// Chart-and-weight view of a node, skipping the ambient trigonometry.
struct ChartSample {
    std::array<double, 3> chart{};
    double weight = 0.0;
};

/// Thread cap for node-parallel integration: DEGREE_LAB_THREADS if set,
/// otherwise 1.  Summation order is independent of the thread count.
int thread_budget();

/// Midpoint-rule product mesh on S^2, S^3 or T^2.  Nodes sit at cell
/// midpoints, so the coordinate singularities at the poles are never
/// sampled.  Construction is deterministic: the node list is a pure
/// function of (kind, resolution).
class ManifoldMesh {
public:
    static ManifoldMesh build(MeshKind kind, std::vector<int> resolution);

    /// "s2:256x512" (N_theta x N_phi), "s3:64" (cube), "t2:128";
    /// bare kinds pick the default resolution.
    static ManifoldMesh parse(std::string_view descriptor);

    MeshKind kind() const { return kind_; }
    int dimension() const { return dimension_of(kind_); }
    const std::vector<int>& resolution() const { return resolution_; }
    std::string describe() const;

    std::size_t node_count() const { return node_count_; }
    MeshNode node(std::size_t i) const;
    ChartSample chart_node(std::size_t i) const;

    /// Exact volume of the underlying manifold (4pi, 2pi^2, 1).
    double total_volume() const { return total_volume_; }
    /// Sum of quadrature weights (computed on first use, then cached).
    double weight_sum() const;

    /// Pairwise-reduced quadrature sum of a field sampled at the nodes.
    /// A non-finite value aborts with the offending node index.
    double integrate(std::span<const double> node_values) const;

    /// Streaming form: evaluates `f` at every node.  The reduction tree
    /// has a fixed shape, so results do not depend on thread count.
    template <class F>
    double integrate_with(F&& f) const {
        return reduce_range(0, node_count_, f, thread_budget());
    }
    double integrate(const std::function<double(const ChartSample&)>& f) const;

    /// coords,weight rows, one per node, preceded by a '#' header.
    void write_csv(std::ostream& out) const;

private:
    ManifoldMesh() = default;
    void build_axes();

    template <class F>
    double reduce_range(std::size_t begin, std::size_t end, F& f,
                        int threads) const {
        const std::size_t n = end - begin;
        if (threads > 1 && n > 4 * detail::reduce_leaf_size) {
            const std::size_t mid = begin + n / 2;
            auto right = std::async(std::launch::async, [&] {
                return reduce_range(mid, end, f, threads / 2);
            });
            const double left = reduce_range(begin, mid, f, threads - threads / 2);
            return left + right.get();
        }
        return detail::pairwise_sum_indexed(begin, end, [&](std::size_t i) {
            const ChartSample s = chart_node(i);
            const double v = f(s);
            if (!std::isfinite(v))
                throw evaluation_error("non-finite field value at node " +
                                       std::to_string(i));
            return v * s.weight;
        });
    }

    MeshKind kind_ = MeshKind::Sphere2;
    std::vector<int> resolution_;
    std::size_t node_count_ = 0;
    double total_volume_ = 0.0;
    mutable std::shared_ptr<std::once_flag> weight_once_ =
        std::make_shared<std::once_flag>();
    mutable double weight_sum_ = 0.0;
    // per-axis midpoint tables
    std::vector<double> theta_, sin_theta_, weight_theta_; // sin^{n-1} * dtheta
    std::vector<double> theta2_, sin_theta2_;
    std::vector<double> phi_;
    double cell_weight_ = 0.0; // torus: uniform cell area; spheres: dphi
};

} // namespace degreelab

#endif
