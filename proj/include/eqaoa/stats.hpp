#pragma once

#include <string>
#include <vector>

namespace eqaoa {

struct SampleSet {
    std::string label;
    std::vector<double> values;
};

struct Summary {
    double mean = 0.0;
    double median = 0.0;
    double min = 0.0;
    long count = 0;
};

Summary summarize(const SampleSet& s);

// Fraction of values strictly below the threshold.
double fraction_below(const SampleSet& s, double threshold);

enum class TTestVariant { Pooled, Welch };

// The pooled (classic Student) variant reproduces the published comparison
// tables and is the default everywhere.
inline constexpr TTestVariant kDefaultTTestVariant = TTestVariant::Pooled;

struct TTestResult {
    double t = 0.0;
    double df = 0.0;
    double p_two_sided = 1.0;
};

TTestResult t_test(const SampleSet& a, const SampleSet& b,
                   TTestVariant variant = kDefaultTTestVariant);

struct HistogramCounts {
    std::vector<long> counts;
    long dropped = 0;  // values outside [min, max) are not clipped
};

// Left-closed equal-width bins over [min, max).
HistogramCounts histogram(const SampleSet& s, double min, double max, int bins);

// Regularized incomplete beta I_x(a, b) by the Lentz continued fraction;
// relative error around 1e-14 over the t-test range.
double regularized_incomplete_beta(double x, double a, double b);

// Two-sided p-value of Student's t at df degrees of freedom:
// I_{df/(df+t^2)}(df/2, 1/2).
double student_t_two_sided_p(double t, double df);

}  // namespace eqaoa
