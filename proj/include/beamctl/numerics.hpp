#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace beamctl::num {

using cplx = std::complex<double>;

std::vector<double> linspace(double a, double b, std::size_t n_points);

// Composite Simpson on uniformly sampled values (spacing h). Odd panel
// counts are closed with a 3/8 tail so any size >= 2 integrates at
// fourth order.
double simpson(const std::vector<double>& f, double h);
cplx simpson(const std::vector<cplx>& f, double h);

double simpson(const std::function<double(double)>& f, double a, double b,
               std::size_t n_panels);
cplx simpson_c(const std::function<cplx(double)>& f, double a, double b,
               std::size_t n_panels);

// exp_moment(mu, T, p) = integral_0^T t^p e^{mu t} dt for p in {0,1,2},
// with a series fallback near mu = 0 where the closed forms cancel.
cplx exp_moment(cplx mu, double T, int p);

// Roots of x^2 + b x + c = 0 with b, c > 0, in cancellation-free form:
// the small root is computed as -2c/(b + sqrt(D)). discriminant = b^2-4c.
struct QuadRoots {
    cplx plus;  // root of smaller magnitude when both are real
    cplx minus;
    double discriminant;
};
QuadRoots damped_quadratic_roots(double b, double c);

struct LinFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rss = 0.0; // residual sum of squares
};
LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

// L2 norm of uniformly sampled values: sqrt(simpson(|v|^2) * dt spacing),
// scaled against overflow for very large samples.
double norm2_sampled(const std::vector<cplx>& v, double dt);
double norm2_sampled(const std::vector<double>& v, double dt);

// Runs body(i) for i in [0, n). Work is split across up to max_threads()
// workers; bodies must write only to disjoint slots so results do not
// depend on the partition.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);
int max_threads(); // honors BEAMCTL_THREADS, defaults to hardware

} // namespace beamctl::num
