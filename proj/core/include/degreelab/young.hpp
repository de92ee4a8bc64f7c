#ifndef DEGREELAB_YOUNG_HPP
#define DEGREELAB_YOUNG_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace degreelab {

/// A convex, strictly increasing gauge P with P(0) = 0.
///
/// Built-in families:
///   power(p)            P(t) = t^p,                 p >= 1
///   power_log(n, a)     P(t) = t^n / log^a(e + t)
///   tabulated(rows)     log-linear interpolation of a strictly increasing
///                       sample table, extrapolated by the boundary slopes
///
/// Construction validates the gauge axioms on a 1024-point grid spanning
/// [1e-6, 1e6]: P(0) = 0, strict monotonicity, and midpoint convexity
/// P((s+t)/2) <= (P(s)+P(t))/2 on all grid pairs to 1e-12 relative.
class YoungFunction {
public:
    static YoungFunction power(double p);
    static YoungFunction power_log(double n, double a);
    static YoungFunction tabulated(std::vector<std::array<double, 2>> rows,
                                   std::string label);

    /// Descriptor forms: "power:p=1.5", "powlog:n=2,a=1", "table:path.csv".
    static YoungFunction parse(std::string_view descriptor);

    /// P(t).  Throws evaluation_error for t < 0 or a non-finite result.
    double operator()(double t) const;

    /// log P(exp(log_t)), computed without overflow.  Valid for log_t
    /// large enough that P(t) > 0; used by the growth checks far beyond
    /// the range representable in double.
    double log_eval(double log_t) const;

    const std::string& description() const { return label_; }

    bool is_power() const { return family_ == Family::Power; }
    double power_exponent() const { return p_; }

    /// For tabulated gauges: the sampled t-range; empty otherwise.
    std::optional<std::pair<double, double>> table_range() const;

private:
    enum class Family { Power, PowerLog, Tabulated };
    YoungFunction() = default;
    void validate() const;

    Family family_ = Family::Power;
    double p_ = 2.0;           // exponent (power) or n (power_log)
    double a_ = 0.0;           // log exponent (power_log)
    std::vector<double> log_t_;    // tabulated knots, log scale
    std::vector<double> log_p_;
    std::string label_;
};

enum class ConditionStatus { Holds, Fails, Inconclusive };

const char* to_string(ConditionStatus s);

/// Outcome of a numeric condition check, with enough diagnostics to audit
/// the decision.  Inconclusive verdicts always carry a non-empty diagnostic.
struct ConditionVerdict {
    ConditionStatus status = ConditionStatus::Inconclusive;
    std::string diagnostic;
    std::vector<double> partial_sums;           // window integrals / sampled ratios
    std::map<std::string, double> parameters;   // thresholds, estimates, ranges used

    bool holds() const { return status == ConditionStatus::Holds; }
    bool fails() const { return status == ConditionStatus::Fails; }
};

/// Integration budget for the tail checks.  The defaults implement the
/// documented decision rules; tests may shrink them to force Inconclusive.
struct CheckBudget {
    int window_count = 41;          // dyadic windows [2^j, 2^{j+1}], j = 0..40
    int radial_window_count = 61;   // dyadic windows in r, j = 0..60
    int samples_per_window = 64;    // Simpson subintervals per window (log space)
    int tail_length = 10;           // windows examined by the ratio test
    int small_o_max_exponent = 4096;// P(t)/t^n sampled at t = 2^j, j <= this
    double diverge_ratio = 0.98;    // tail ratios >= this  => diverges
    double converge_ratio = 0.90;   // tail ratios <= this  => converges
    double raabe_diverge = 1.10;    // middle zone: j(1 - I_{j+1}/I_j) <= this => diverges
    double raabe_converge = 1.25;   //              all >= this => converges
};

/// Decides divergence of the tail integral of P(t)/t^{n+1} over [1, inf).
///
/// Window integrals I_j over [2^j, 2^{j+1}] are classified by a ratio test
/// on the last `tail_length` windows: all ratios >= diverge_ratio is
/// divergent, all <= converge_ratio is convergent.  Ratios in between are
/// resolved by the Raabe statistic j(1 - I_{j+1}/I_j), which separates
/// harmonic-type tails (statistic -> <= 1, divergent) from
/// log^{1+eps}-type tails (statistic > 1, convergent).  Anything else is
/// Inconclusive, with the window integrals as witness.
ConditionVerdict check_divergence(const YoungFunction& gauge, int dimension,
                                  const CheckBudget& budget = {});

/// Decides P(t) = o(t^n): samples the ratio P(t)/t^n at t = 2^j in log
/// space.  Holds when the tail of the sequence is non-increasing and the
/// final ratio is below 1e-3 of the maximum.
ConditionVerdict check_small_o(const YoungFunction& gauge, int dimension,
                               const CheckBudget& budget = {});

/// Estimates the doubling constant K = sup P(2t)/P(t) on a log grid.
/// Holds with parameters["K"] when the sup is attained away from the top
/// of the grid; a ratio still climbing at the boundary is Inconclusive,
/// and a ratio above 1e6 Fails.
ConditionVerdict check_doubling(const YoungFunction& gauge,
                                std::pair<double, double> t_range = {1e-6, 1e6},
                                int samples = 4096);

/// Checks that t^{-alpha} P(t) is non-decreasing on a log grid over
/// t_range (1e-12 relative tolerance).  The range used is recorded in the
/// verdict parameters.
ConditionVerdict check_growth_alpha(const YoungFunction& gauge, double alpha,
                                    std::pair<double, double> t_range = {1e-6, 1e6},
                                    int samples = 4096);

enum class RadialVerdict { Finite, Infinite, Inconclusive };

const char* to_string(RadialVerdict v);

struct RadialEnergy {
    RadialVerdict verdict = RadialVerdict::Inconclusive;
    double value = 0.0;                  // partial integral over the windows computed
    std::vector<double> window_integrals;
    std::string diagnostic;
};

/// Energy of the radial projection x -> x/|x| on the unit n-ball:
///   integral over B^n of P(|Du0|) = omega_{n-1} * int_0^1 P(sqrt(n-1)/r) r^{n-1} dr
/// with |Du0| the Hilbert-Schmidt norm sqrt(n-1)/r.  The r -> 0 singularity
/// is resolved by geometric windows r in [2^{-j-1}, 2^{-j}] and the same
/// tail classification as check_divergence, so the two verdicts agree:
/// Infinite here if and only if the divergence condition holds.
RadialEnergy radial_projection_energy(const YoungFunction& gauge, int dimension,
                                      const CheckBudget& budget = {});

/// A finite weighted sample of nonnegative values, standing in for a
/// measurable field |f| on a finite measure space.
struct WeightedField {
    std::vector<double> values;
    std::vector<double> weights;
};

/// Luxemburg norm inf{ k > 0 : sum_i w_i P(v_i / k) <= 1 }, by bracketing
/// and bisection to 1e-8 relative width.  An all-zero field has norm 0.
double luxemburg_norm(const WeightedField& field, const YoungFunction& gauge);

/// Orlicz mean sum_i w_i P(v_i).
double orlicz_mean(const WeightedField& field, const YoungFunction& gauge);

} // namespace degreelab

#endif
