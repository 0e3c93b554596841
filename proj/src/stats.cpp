#include "corpuscope/stats.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "corpuscope/error.hpp"

namespace corpuscope {

namespace {

// Continued fraction for the incomplete beta function, modified Lentz.
double beta_cont_fraction(double a, double b, double x) {
    constexpr int kMaxIterations = 500;
    constexpr double kEps = 1e-14;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    fail(ErrorCode::invalid_argument, "incomplete beta did not converge");
}

struct SampleMoments {
    double mean;
    double sd;       // sample standard deviation (n-1)
    double sq_dev;   // sum of squared deviations
    std::size_t n;
};

SampleMoments moments(std::span<const double> values) {
    SampleMoments m{0.0, 0.0, 0.0, values.size()};
    for (const double v : values) m.mean += v;
    m.mean /= static_cast<double>(m.n);
    for (const double v : values) m.sq_dev += (v - m.mean) * (v - m.mean);
    m.sd = m.n > 1 ? std::sqrt(m.sq_dev / static_cast<double>(m.n - 1)) : 0.0;
    return m;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0) fail(ErrorCode::invalid_argument, "incomplete beta needs a,b > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double log_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
    const double bt = std::exp(log_bt);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return bt * beta_cont_fraction(a, b, x) / a;
    }
    return 1.0 - bt * beta_cont_fraction(b, a, 1.0 - x) / b;
}

double t_cdf(double t, std::uint64_t df) {
    if (df < 1) fail(ErrorCode::invalid_argument, "t_cdf needs df >= 1");
    if (t == 0.0) return 0.5;
    const double v = static_cast<double>(df);
    const double x = v / (v + t * t);
    const double tail = 0.5 * incomplete_beta(0.5 * v, 0.5, x);
    return t > 0.0 ? 1.0 - tail : tail;
}

TTestResult student_t_unpaired(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() < 2 || ys.size() < 2) {
        fail(ErrorCode::invalid_argument, "t-test needs at least 2 values per sample (got " +
                                              std::to_string(xs.size()) + " and " +
                                              std::to_string(ys.size()) + ")");
    }
    const SampleMoments ma = moments(xs);
    const SampleMoments mb = moments(ys);

    TTestResult result;
    result.df = xs.size() + ys.size() - 2;
    result.mean_a = ma.mean;
    result.mean_b = mb.mean;
    result.sd_a = ma.sd;
    result.sd_b = mb.sd;

    const double pooled_var = (ma.sq_dev + mb.sq_dev) / static_cast<double>(result.df);
    if (pooled_var == 0.0) {
        if (ma.mean == mb.mean) {
            result.t = 0.0;
            result.p_two_tailed = 1.0;
        } else {
            result.t = ma.mean > mb.mean ? std::numeric_limits<double>::infinity()
                                         : -std::numeric_limits<double>::infinity();
            result.p_two_tailed = 0.0;
        }
        return result;
    }

    const double se = std::sqrt(pooled_var * (1.0 / static_cast<double>(xs.size()) +
                                              1.0 / static_cast<double>(ys.size())));
    result.t = (ma.mean - mb.mean) / se;
    const double v = static_cast<double>(result.df);
    // two-tailed p directly via the beta tail; exact 1.0 at t == 0
    result.p_two_tailed = incomplete_beta(0.5 * v, 0.5, v / (v + result.t * result.t));
    return result;
}

}  // namespace corpuscope
