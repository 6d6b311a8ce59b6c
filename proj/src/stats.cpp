#include "eqaoa/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eqaoa {

Summary summarize(const SampleSet& s) {
    if (s.values.empty()) {
        throw std::invalid_argument("summarize: empty sample set '" + s.label + "'");
    }
    std::vector<double> sorted = s.values;
    std::sort(sorted.begin(), sorted.end());
    Summary out;
    out.count = static_cast<long>(sorted.size());
    double sum = 0.0;
    for (double v : sorted) sum += v;
    out.mean = sum / static_cast<double>(out.count);
    const size_t n = sorted.size();
    out.median = (n % 2 == 1) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    out.min = sorted.front();
    return out;
}

double fraction_below(const SampleSet& s, double threshold) {
    if (s.values.empty()) {
        throw std::invalid_argument("fraction_below: empty sample set");
    }
    long hits = 0;
    for (double v : s.values) hits += v < threshold;
    return static_cast<double>(hits) / static_cast<double>(s.values.size());
}

namespace {

double sample_variance(const std::vector<double>& v, double mean) {
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return acc / static_cast<double>(v.size() - 1);
}

// Continued fraction for I_x(a,b), modified Lentz.
double beta_cf(double x, double a, double b) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-15;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps) return h;
    }
    throw std::runtime_error("incomplete beta continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
    if (a <= 0.0 || b <= 0.0) {
        throw std::invalid_argument("incomplete beta: parameters must be positive");
    }
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return std::exp(ln_front) * beta_cf(x, a, b) / a;
    }
    return 1.0 - std::exp(ln_front) * beta_cf(1.0 - x, b, a) / b;
}

double student_t_two_sided_p(double t, double df) {
    if (df <= 0.0) throw std::invalid_argument("t distribution needs positive df");
    if (t == 0.0) return 1.0;
    return regularized_incomplete_beta(df / (df + t * t), 0.5 * df, 0.5);
}

TTestResult t_test(const SampleSet& a, const SampleSet& b, TTestVariant variant) {
    const size_t na = a.values.size();
    const size_t nb = b.values.size();
    if (na < 2 || nb < 2) {
        throw std::invalid_argument("t-test needs at least two values per set");
    }
    double ma = 0.0, mb = 0.0;
    for (double v : a.values) ma += v;
    for (double v : b.values) mb += v;
    ma /= static_cast<double>(na);
    mb /= static_cast<double>(nb);
    const double va = sample_variance(a.values, ma);
    const double vb = sample_variance(b.values, mb);

    TTestResult out;
    if (va == 0.0 && vb == 0.0) {
        out.t = 0.0;
        out.df = static_cast<double>(na + nb - 2);
        out.p_two_sided = ma == mb ? 1.0 : 0.0;
        return out;
    }
    if (variant == TTestVariant::Pooled) {
        const double pooled =
            ((na - 1) * va + (nb - 1) * vb) / static_cast<double>(na + nb - 2);
        out.df = static_cast<double>(na + nb - 2);
        out.t = (ma - mb) / std::sqrt(pooled * (1.0 / na + 1.0 / nb));
    } else {
        const double sa = va / static_cast<double>(na);
        const double sb = vb / static_cast<double>(nb);
        out.t = (ma - mb) / std::sqrt(sa + sb);
        out.df = (sa + sb) * (sa + sb) /
                 (sa * sa / static_cast<double>(na - 1) + sb * sb / static_cast<double>(nb - 1));
    }
    out.p_two_sided = student_t_two_sided_p(out.t, out.df);
    return out;
}

HistogramCounts histogram(const SampleSet& s, double min, double max, int bins) {
    if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
    if (!(max > min)) throw std::invalid_argument("histogram needs max > min");
    HistogramCounts out;
    out.counts.assign(bins, 0);
    const double width = (max - min) / bins;
    for (double v : s.values) {
        if (v < min || v >= max) {
            ++out.dropped;
            continue;
        }
        int bin = static_cast<int>((v - min) / width);
        if (bin >= bins) bin = bins - 1;  // right edge rounding
        ++out.counts[bin];
    }
    return out;
}

}  // namespace eqaoa
