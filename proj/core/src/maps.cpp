#include "degreelab/maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "descriptor_util.hpp"
#include "small_matrix.hpp"

namespace degreelab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLocusTol = 1e-12;

double wrap_angle(double phi) {
    phi = std::fmod(phi, kTwoPi);
    return phi < 0.0 ? phi + kTwoPi : phi;
}

// shortest periodic offset into [-1/2, 1/2)
double wrap_offset(double dx) {
    dx -= std::floor(dx + 0.5);
    return dx;
}

int latitude_index(MeshKind kind) { return kind == MeshKind::Sphere3 ? 2 : 1; }

void check_latitude(double theta) {
    if (!(theta >= 0.0 && theta <= kPi))
        throw evaluation_error("latitude outside [0, pi]: " + std::to_string(theta));
}

DifferentialSample zero_sample(int rows, int cols) {
    DifferentialSample s;
    s.rows = rows;
    s.cols = cols;
    return s;
}

// Fills singular values / HS norm / Jacobian from the frame matrix.
void finish_sample(DifferentialSample& s) {
    const int n = std::min(s.rows, s.cols);
    detail::Mat3 m{};
    for (int r = 0; r < s.rows; ++r)
        for (int c = 0; c < s.cols; ++c) m[r][c] = s.frame[r][c];
    const auto sv = detail::singular_values(m, s.rows, s.cols);
    for (int i = 0; i < n; ++i) s.singular_values[i] = sv[i];
    s.hs_norm = detail::frobenius(m, s.rows, s.cols);
    s.jacobian = s.rows == s.cols ? detail::determinant(m, s.rows) : 0.0;
}

} // namespace

MapExpr MapExpr::bubble(int k, int sphere_dim) {
    if (k < 1) throw config_error("bubble map needs k >= 1");
    if (sphere_dim != 2 && sphere_dim != 3)
        throw config_error("bubble map lives on S^2 or S^3");
    MapExpr m;
    m.kind_ = Kind::Bubble;
    m.k_ = k;
    m.domain_ = m.target_ =
        sphere_dim == 3 ? MeshKind::Sphere3 : MeshKind::Sphere2;
    return m;
}

MapExpr MapExpr::power_map(int d) {
    MapExpr m;
    m.kind_ = Kind::PowerMap;
    m.d_ = d;
    m.domain_ = m.target_ = MeshKind::Sphere2;
    return m;
}

MapExpr MapExpr::collapse(std::array<double, 2> center, double rho) {
    if (!(rho > 0.0 && rho < 0.5))
        throw config_error("collapse map needs 0 < rho < 1/2");
    MapExpr m;
    m.kind_ = Kind::Collapse;
    m.center_ = center;
    m.rho_ = rho;
    m.domain_ = MeshKind::Torus2;
    m.target_ = MeshKind::Sphere2;
    return m;
}

MapExpr MapExpr::identity(MeshKind kind) {
    MapExpr m;
    m.kind_ = Kind::Identity;
    m.domain_ = m.target_ = kind;
    return m;
}

MapExpr MapExpr::constant(MeshKind target, std::array<double, 3> chart_point) {
    MapExpr m;
    m.kind_ = Kind::Constant;
    m.target_ = target;
    m.domain_ = target;
    m.const_point_ = chart_point;
    return m;
}

MapExpr MapExpr::compose(std::vector<MapExpr> factors) {
    if (factors.empty()) throw config_error("compose needs at least one factor");
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        if (factors[i].domain_ != factors[i + 1].target_)
            throw config_error("compose: factor " + std::to_string(i + 1) +
                               " targets " + to_string(factors[i + 1].target_) +
                               " but factor " + std::to_string(i) + " expects " +
                               to_string(factors[i].domain_));
    MapExpr m;
    m.kind_ = Kind::Compose;
    m.domain_ = factors.back().domain_;
    m.target_ = factors.front().target_;
    m.factors_ = std::move(factors);
    return m;
}

std::array<double, 3> MapExpr::evaluate(const std::array<double, 3>& x) const {
    switch (kind_) {
        case Kind::Bubble: {
            const int lat = latitude_index(domain_);
            const double theta = x[static_cast<std::size_t>(lat)];
            check_latitude(theta);
            std::array<double, 3> y = x;
            if (theta < 1.0 / k_) {
                y[static_cast<std::size_t>(lat)] = k_ * kPi * theta;
            } else {
                y = {0.0, lat == 2 ? kPi / 2.0 : kPi, 0.0};
                y[static_cast<std::size_t>(lat)] = kPi; // south pole
            }
            return y;
        }
        case Kind::PowerMap: {
            check_latitude(x[1]);
            return {wrap_angle(d_ * x[0]), x[1], 0.0};
        }
        case Kind::Collapse: {
            const double dx = wrap_offset(x[0] - center_[0]);
            const double dy = wrap_offset(x[1] - center_[1]);
            const double r = std::hypot(dx, dy);
            if (r >= rho_) return {0.0, kPi, 0.0};
            return {wrap_angle(std::atan2(-dy, dx)), kPi * r / rho_, 0.0};
        }
        case Kind::Identity:
            return x;
        case Kind::Constant:
            return const_point_;
        case Kind::Compose: {
            std::array<double, 3> p = x;
            for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
                p = it->evaluate(p);
            return p;
        }
    }
    return x;
}

DifferentialSample MapExpr::differential(const std::array<double, 3>& x) const {
    const int n = domain_dim();
    switch (kind_) {
        case Kind::Bubble: {
            const int lat = latitude_index(domain_);
            const double theta = x[static_cast<std::size_t>(lat)];
            check_latitude(theta);
            if (std::abs(theta - 1.0 / k_) < kLocusTol)
                throw singular_locus_error("bubble differential on the cap boundary "
                                           "theta = 1/k");
            if (theta < kLocusTol || kPi - theta < kLocusTol)
                throw singular_locus_error("bubble differential at a chart pole");
            if (theta > 1.0 / k_) return zero_sample(n, n);

            DifferentialSample s = zero_sample(n, n);
            const double stretch = k_ * kPi;
            const double equatorial = std::sin(stretch * theta) / std::sin(theta);
            // z-directions scale by sin(k pi theta)/sin(theta), latitude by k pi
            for (int i = 0; i < n - 1; ++i) s.frame[i][i] = equatorial;
            s.frame[n - 1][n - 1] = stretch;
            finish_sample(s);
            return s;
        }
        case Kind::PowerMap: {
            check_latitude(x[1]);
            if (x[1] < kLocusTol || kPi - x[1] < kLocusTol)
                throw singular_locus_error("power map differential at a chart pole");
            DifferentialSample s = zero_sample(2, 2);
            s.frame[0][0] = static_cast<double>(d_);
            s.frame[1][1] = 1.0;
            finish_sample(s);
            return s;
        }
        case Kind::Collapse: {
            const double dx = wrap_offset(x[0] - center_[0]);
            const double dy = wrap_offset(x[1] - center_[1]);
            const double r = std::hypot(dx, dy);
            if (std::abs(r - rho_) < kLocusTol)
                throw singular_locus_error("collapse differential on the disk rim");
            if (r > rho_) return zero_sample(2, 2);
            if (r < kLocusTol)
                throw singular_locus_error("collapse differential at the disk center "
                                           "(target chart pole)");
            const double theta = kPi * r / rho_;
            DifferentialSample s = zero_sample(2, 2);
            // rows: (e_phi', e_theta'); the clockwise angle keeps J positive
            s.frame[0][0] = std::sin(theta) * dy / (r * r);
            s.frame[0][1] = -std::sin(theta) * dx / (r * r);
            s.frame[1][0] = (kPi / rho_) * dx / r;
            s.frame[1][1] = (kPi / rho_) * dy / r;
            finish_sample(s);
            return s;
        }
        case Kind::Identity: {
            DifferentialSample s = zero_sample(n, n);
            for (int i = 0; i < n; ++i) s.frame[i][i] = 1.0;
            finish_sample(s);
            return s;
        }
        case Kind::Constant:
            return zero_sample(target_dim(), n);
        case Kind::Compose: {
            // chain frame matrices right-to-left; a locally constant factor
            // (zero differential) makes the whole composite locally constant
            std::array<double, 3> p = x;
            detail::Mat3 acc{};
            bool first = true;
            int rows = n;
            for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
                const DifferentialSample fs = it->differential(p);
                bool all_zero = true;
                for (int r = 0; r < fs.rows && all_zero; ++r)
                    for (int c = 0; c < fs.cols; ++c)
                        if (fs.frame[r][c] != 0.0) { all_zero = false; break; }
                if (all_zero) return zero_sample(target_dim(), n);

                detail::Mat3 fm{};
                for (int r = 0; r < fs.rows; ++r)
                    for (int c = 0; c < fs.cols; ++c) fm[r][c] = fs.frame[r][c];
                if (first) {
                    acc = fm;
                    first = false;
                } else {
                    acc = detail::multiply(fm, acc, fs.rows, fs.cols, n);
                }
                rows = fs.rows;
                p = it->evaluate(p);
            }
            DifferentialSample s = zero_sample(rows, n);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < n; ++c) s.frame[r][c] = acc[r][c];
            finish_sample(s);
            return s;
        }
    }
    return zero_sample(n, n);
}

int MapExpr::max_bubble_k() const {
    if (kind_ == Kind::Bubble) return k_;
    int k = 0;
    for (const auto& f : factors_) k = std::max(k, f.max_bubble_k());
    return k;
}

std::string MapExpr::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Bubble:
            os << "bubble:k=" << k_;
            if (domain_ == MeshKind::Sphere3) os << ",n=3";
            break;
        case Kind::PowerMap:
            os << "power:d=" << d_;
            break;
        case Kind::Collapse:
            os << "collapse:rho=" << rho_;
            break;
        case Kind::Identity:
            os << "identity:" << to_string(domain_);
            break;
        case Kind::Constant:
            os << "constant:" << to_string(target_);
            break;
        case Kind::Compose: {
            os << "compose:";
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (i) os << '|';
                os << factors_[i].describe();
            }
            break;
        }
    }
    return os.str();
}

MapExpr MapExpr::parse(std::string_view d) {
    if (d.rfind("compose:", 0) == 0) {
        std::vector<MapExpr> factors;
        for (auto part : detail::split(d.substr(8), '|'))
            factors.push_back(parse(part));
        return compose(std::move(factors));
    }
    if (d.rfind("bubble", 0) == 0) {
        auto kv = detail::parse_kv(d.size() > 7 ? d.substr(7) : "", d);
        const int k = static_cast<int>(detail::require(kv, "k", d));
        const int n = kv.count("n") ? static_cast<int>(kv.at("n")) : 2;
        return bubble(k, n);
    }
    if (d.rfind("power:", 0) == 0) {
        auto kv = detail::parse_kv(d.substr(6), d);
        return power_map(static_cast<int>(detail::require(kv, "d", d)));
    }
    if (d.rfind("collapse", 0) == 0) {
        auto kv = detail::parse_kv(d.size() > 9 ? d.substr(9) : "", d);
        std::array<double, 2> c{0.5, 0.5};
        if (kv.count("cx")) c[0] = kv.at("cx");
        if (kv.count("cy")) c[1] = kv.at("cy");
        return collapse(c, kv.count("rho") ? kv.at("rho") : 0.25);
    }
    if (d.rfind("identity:", 0) == 0) {
        const auto tail = d.substr(9);
        if (tail == "s2") return identity(MeshKind::Sphere2);
        if (tail == "s3") return identity(MeshKind::Sphere3);
        if (tail == "t2") return identity(MeshKind::Torus2);
    }
    if (d.rfind("constant:", 0) == 0) {
        auto kv = detail::parse_kv(d.substr(9), d);
        const double phi = kv.count("phi") ? kv.at("phi") : 0.0;
        const double theta = kv.count("theta") ? kv.at("theta") : kPi;
        return constant(MeshKind::Sphere2, {phi, theta, 0.0});
    }
    throw config_error("unknown map descriptor '" + std::string(d) + "'");
}

double cap_measure(int k, int n, int n_theta) {
    if (k < 1) throw config_error("cap measure needs k >= 1");
    if (n != 2 && n != 3) throw config_error("cap measure defined on S^2 and S^3");
    if (n_theta == 0) n_theta = 64 * k;
    const double dt = kPi / n_theta;
    const double cap = 1.0 / k;
    double sum = 0.0;
    for (int i = 0; i < n_theta; ++i) {
        const double lo = i * dt;
        if (lo >= cap) break;
        // clip the straddling boundary cell to the cap
        const double hi = std::min((i + 1) * dt, cap);
        const double mid = 0.5 * (lo + hi);
        const double density = n == 2 ? std::sin(mid) : std::sin(mid) * std::sin(mid);
        sum += density * (hi - lo);
    }
    const double equatorial = n == 2 ? kTwoPi : 4.0 * kPi;
    return equatorial * sum;
}

} // namespace degreelab
