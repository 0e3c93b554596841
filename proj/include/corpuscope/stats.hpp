#ifndef CORPUSCOPE_STATS_HPP
#define CORPUSCOPE_STATS_HPP

#include <cstdint>
#include <span>

namespace corpuscope {

struct TTestResult {
    double t = 0.0;
    std::uint64_t df = 0;  // pooled: n_a + n_b - 2
    double p_two_tailed = 1.0;
    double mean_a = 0.0;
    double mean_b = 0.0;
    double sd_a = 0.0;
    double sd_b = 0.0;
};

// Two-tailed unpaired Student's t-test with pooled variance.
// Degenerate samples: zero pooled variance with equal means gives t=0, p=1;
// with unequal means, p=0.
TTestResult student_t_unpaired(std::span<const double> xs, std::span<const double> ys);

// CDF of Student's t with df degrees of freedom. t_cdf(0, df) is exactly 0.5.
double t_cdf(double t, std::uint64_t df);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

}  // namespace corpuscope

#endif
