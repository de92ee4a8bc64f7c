#include "degreelab/mesh.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>

#include "descriptor_util.hpp"

namespace degreelab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

int parse_axis(std::string_view s, std::string_view context) {
    const double v = detail::to_double(s, context);
    const int n = static_cast<int>(v);
    if (v != n) throw config_error("resolution must be an integer in " +
                                   std::string(context));
    return n;
}
} // namespace

const char* to_string(MeshKind k) {
    switch (k) {
        case MeshKind::Sphere2: return "s2";
        case MeshKind::Sphere3: return "s3";
        default: return "t2";
    }
}

int dimension_of(MeshKind k) { return k == MeshKind::Sphere3 ? 3 : 2; }

int thread_budget() {
    if (const char* env = std::getenv("DEGREE_LAB_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return std::min(n, 64);
    }
    return 1;
}

ManifoldMesh ManifoldMesh::build(MeshKind kind, std::vector<int> resolution) {
    const std::size_t axes = kind == MeshKind::Sphere3 ? 3 : 2;
    if (resolution.size() != axes)
        throw config_error(std::string("mesh ") + to_string(kind) + " needs " +
                           std::to_string(axes) + " resolution axes");
    for (int r : resolution)
        if (r < 8)
            throw config_error("mesh resolution must be >= 8 per coordinate, got " +
                               std::to_string(r));

    ManifoldMesh m;
    m.kind_ = kind;
    m.resolution_ = std::move(resolution);
    m.build_axes();
    return m;
}

double ManifoldMesh::weight_sum() const {
    std::call_once(*weight_once_, [&] {
        weight_sum_ = integrate_with([](const ChartSample&) { return 1.0; });
    });
    return weight_sum_;
}

void ManifoldMesh::build_axes() {
    switch (kind_) {
        case MeshKind::Sphere2: {
            const int nt = resolution_[0], np = resolution_[1];
            const double dt = kPi / nt, dp = kTwoPi / np;
            for (int i = 0; i < nt; ++i) {
                const double th = (i + 0.5) * dt;
                theta_.push_back(th);
                sin_theta_.push_back(std::sin(th));
                weight_theta_.push_back(std::sin(th) * dt);
            }
            for (int j = 0; j < np; ++j) phi_.push_back((j + 0.5) * dp);
            cell_weight_ = dp;
            node_count_ = static_cast<std::size_t>(nt) * np;
            total_volume_ = 4.0 * kPi;
            break;
        }
        case MeshKind::Sphere3: {
            const int nt = resolution_[0], nt2 = resolution_[1], np = resolution_[2];
            const double dt = kPi / nt, dt2 = kPi / nt2, dp = kTwoPi / np;
            for (int i = 0; i < nt; ++i) {
                const double th = (i + 0.5) * dt;
                theta_.push_back(th);
                sin_theta_.push_back(std::sin(th));
                weight_theta_.push_back(std::sin(th) * std::sin(th) * dt);
            }
            for (int i = 0; i < nt2; ++i) {
                const double t2 = (i + 0.5) * dt2;
                theta2_.push_back(t2);
                sin_theta2_.push_back(std::sin(t2) * dt2);
            }
            for (int j = 0; j < np; ++j) phi_.push_back((j + 0.5) * dp);
            cell_weight_ = dp;
            node_count_ = static_cast<std::size_t>(nt) * nt2 * np;
            total_volume_ = 2.0 * kPi * kPi;
            break;
        }
        case MeshKind::Torus2: {
            const int nx = resolution_[0], ny = resolution_[1];
            for (int i = 0; i < nx; ++i) theta_.push_back((i + 0.5) / nx);
            for (int j = 0; j < ny; ++j) phi_.push_back((j + 0.5) / ny);
            cell_weight_ = (1.0 / nx) * (1.0 / ny);
            node_count_ = static_cast<std::size_t>(nx) * ny;
            total_volume_ = 1.0;
            break;
        }
    }
}

ChartSample ManifoldMesh::chart_node(std::size_t i) const {
    ChartSample s;
    switch (kind_) {
        case MeshKind::Sphere2: {
            const std::size_t np = phi_.size();
            const std::size_t it = i / np, ip = i % np;
            s.chart = {phi_[ip], theta_[it], 0.0};
            s.weight = weight_theta_[it] * cell_weight_;
            break;
        }
        case MeshKind::Sphere3: {
            const std::size_t np = phi_.size(), nt2 = theta2_.size();
            const std::size_t it = i / (nt2 * np);
            const std::size_t rem = i % (nt2 * np);
            const std::size_t it2 = rem / np, ip = rem % np;
            s.chart = {phi_[ip], theta2_[it2], theta_[it]};
            s.weight = weight_theta_[it] * sin_theta2_[it2] * cell_weight_;
            break;
        }
        case MeshKind::Torus2: {
            const std::size_t ny = phi_.size();
            s.chart = {theta_[i / ny], phi_[i % ny], 0.0};
            s.weight = cell_weight_;
            break;
        }
    }
    return s;
}

MeshNode ManifoldMesh::node(std::size_t i) const {
    const ChartSample s = chart_node(i);
    MeshNode n;
    n.chart = s.chart;
    n.weight = s.weight;
    switch (kind_) {
        case MeshKind::Sphere2: {
            const double phi = s.chart[0], th = s.chart[1];
            n.ambient = {std::cos(phi) * std::sin(th), std::sin(phi) * std::sin(th),
                         std::cos(th), 0.0};
            break;
        }
        case MeshKind::Sphere3: {
            const double phi = s.chart[0], t2 = s.chart[1], th = s.chart[2];
            const double st = std::sin(th);
            n.ambient = {std::cos(phi) * std::sin(t2) * st,
                         std::sin(phi) * std::sin(t2) * st, std::cos(t2) * st,
                         std::cos(th)};
            break;
        }
        case MeshKind::Torus2: {
            const double x = s.chart[0], y = s.chart[1];
            n.ambient = {std::cos(kTwoPi * x) / kTwoPi, std::sin(kTwoPi * x) / kTwoPi,
                         std::cos(kTwoPi * y) / kTwoPi, std::sin(kTwoPi * y) / kTwoPi};
            break;
        }
    }
    return n;
}

double ManifoldMesh::integrate(std::span<const double> node_values) const {
    if (node_values.size() != node_count_)
        throw config_error("field has " + std::to_string(node_values.size()) +
                           " samples for " + std::to_string(node_count_) + " nodes");
    return detail::pairwise_sum_indexed(0, node_count_, [&](std::size_t i) {
        if (!std::isfinite(node_values[i]))
            throw evaluation_error("non-finite field value at node " +
                                   std::to_string(i));
        return node_values[i] * chart_node(i).weight;
    });
}

double ManifoldMesh::integrate(
    const std::function<double(const ChartSample&)>& f) const {
    return integrate_with(f);
}

std::string ManifoldMesh::describe() const {
    std::string s = to_string(kind_);
    s += ':';
    for (std::size_t i = 0; i < resolution_.size(); ++i) {
        if (i) s += 'x';
        s += std::to_string(resolution_[i]);
    }
    return s;
}

ManifoldMesh ManifoldMesh::parse(std::string_view d) {
    std::string_view head = d, body;
    if (auto c = d.find(':'); c != std::string_view::npos) {
        head = d.substr(0, c);
        body = d.substr(c + 1);
    }
    auto axes = [&](std::size_t want, std::vector<int> defaults) {
        if (body.empty()) return defaults;
        auto parts = detail::split(body, 'x');
        std::vector<int> out;
        for (auto p : parts) out.push_back(parse_axis(p, d));
        if (out.size() == 1 && want > 1) out.resize(want, out[0]);
        if (out.size() != want)
            throw config_error("mesh descriptor '" + std::string(d) +
                               "' has the wrong number of axes");
        return out;
    };
    if (head == "s2") return build(MeshKind::Sphere2, axes(2, {256, 512}));
    if (head == "s3") return build(MeshKind::Sphere3, axes(3, {64, 64, 64}));
    if (head == "t2") return build(MeshKind::Torus2, axes(2, {128, 128}));
    throw config_error("unknown mesh descriptor '" + std::string(d) + "'");
}

void ManifoldMesh::write_csv(std::ostream& out) const {
    out << "# mesh: " << describe() << "\n";
    const int dim = dimension();
    out << (dim == 3 ? "c0,c1,c2,weight" : "c0,c1,weight") << "\n";
    char buf[160];
    for (std::size_t i = 0; i < node_count_; ++i) {
        const ChartSample s = chart_node(i);
        if (dim == 3)
            std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g,%.15g\n", s.chart[0],
                          s.chart[1], s.chart[2], s.weight);
        else
            std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g\n", s.chart[0],
                          s.chart[1], s.weight);
        out << buf;
    }
}

} // namespace degreelab
