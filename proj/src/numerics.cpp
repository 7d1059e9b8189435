#include "beamctl/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace beamctl::num {

std::vector<double> linspace(double a, double b, std::size_t n_points) {
    if (n_points < 2) return {a};
    std::vector<double> x(n_points);
    const double h = (b - a) / double(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) x[i] = a + h * double(i);
    x.back() = b;
    return x;
}

namespace {

// Simpson weights over m panels (m = size-1). Even m: plain composite rule.
// Odd m >= 3: composite over the first m-3 panels plus a 3/8 rule tail.
template <typename T>
T simpson_impl(const std::vector<T>& f, double h) {
    const std::size_t n = f.size();
    if (n < 2) return T{};
    if (n == 2) return (f[0] + f[1]) * (h / 2.0); // trapezoid, nothing better
    const std::size_t m = n - 1;
    T acc{};
    std::size_t even_end = (m % 2 == 0) ? m : m - 3;
    for (std::size_t i = 0; i + 2 <= even_end; i += 2)
        acc += (f[i] + 4.0 * f[i + 1] + f[i + 2]) * (h / 3.0);
    if (m % 2 != 0) {
        if (m == 3) {
            return (f[0] + 3.0 * f[1] + 3.0 * f[2] + f[3]) * (3.0 * h / 8.0);
        }
        const std::size_t i = m - 3;
        acc += (f[i] + 3.0 * f[i + 1] + 3.0 * f[i + 2] + f[i + 3]) * (3.0 * h / 8.0);
    }
    return acc;
}

} // namespace

double simpson(const std::vector<double>& f, double h) { return simpson_impl(f, h); }
cplx simpson(const std::vector<cplx>& f, double h) { return simpson_impl(f, h); }

double simpson(const std::function<double(double)>& f, double a, double b,
               std::size_t n_panels) {
    if (n_panels < 2) n_panels = 2;
    std::vector<double> v(n_panels + 1);
    const double h = (b - a) / double(n_panels);
    for (std::size_t i = 0; i <= n_panels; ++i) v[i] = f(a + h * double(i));
    return simpson_impl(v, h);
}

cplx simpson_c(const std::function<cplx(double)>& f, double a, double b,
               std::size_t n_panels) {
    if (n_panels < 2) n_panels = 2;
    std::vector<cplx> v(n_panels + 1);
    const double h = (b - a) / double(n_panels);
    for (std::size_t i = 0; i <= n_panels; ++i) v[i] = f(a + h * double(i));
    return simpson_impl(v, h);
}

cplx exp_moment(cplx mu, double T, int p) {
    if (p < 0 || p > 2) throw std::invalid_argument("exp_moment: p must be 0, 1 or 2");
    const cplx z = mu * T;
    if (std::abs(z) < 1e-4) {
        // t^p e^{mu t} integrated termwise; |z|<1e-4 keeps the truncation
        // below 1e-30 after 6 terms.
        cplx sum = 0.0, zk = 1.0;
        double kfact = 1.0;
        for (int k = 0; k < 8; ++k) {
            if (k > 0) {
                zk *= z;
                kfact *= double(k);
            }
            sum += zk / (kfact * double(p + k + 1));
        }
        return sum * std::pow(T, p + 1);
    }
    const cplx eT = std::exp(z);
    const cplx i0 = (eT - 1.0) / mu;
    if (p == 0) return i0;
    const cplx i1 = (T * eT - i0) / mu;
    if (p == 1) return i1;
    return (T * T * eT - 2.0 * i1) / mu;
}

QuadRoots damped_quadratic_roots(double b, double c) {
    QuadRoots r{};
    const double disc = b * b - 4.0 * c;
    r.discriminant = disc;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        r.minus = cplx(-(b + s) / 2.0, 0.0);
        r.plus = cplx(-2.0 * c / (b + s), 0.0);
    } else {
        const double w = std::sqrt(-disc) / 2.0;
        r.plus = cplx(-b / 2.0, w);
        r.minus = cplx(-b / 2.0, -w);
    }
    return r;
}

LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("linear_fit: need two equal-length samples");
    const double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("linear_fit: degenerate abscissae");
    LinFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.slope * x[i] + fit.intercept);
        fit.rss += r * r;
    }
    return fit;
}

namespace {

template <typename T>
double norm2_impl(const std::vector<T>& v, double dt) {
    double peak = 0.0;
    for (const auto& z : v) peak = std::max(peak, std::abs(z));
    if (peak == 0.0) return 0.0;
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]) / peak;
        sq[i] = a * a;
    }
    return peak * std::sqrt(std::max(0.0, simpson(sq, dt)));
}

} // namespace

double norm2_sampled(const std::vector<cplx>& v, double dt) { return norm2_impl(v, dt); }
double norm2_sampled(const std::vector<double>& v, double dt) { return norm2_impl(v, dt); }

int max_threads() {
    if (const char* env = std::getenv("BEAMCTL_THREADS")) {
        const int k = std::atoi(env);
        if (k >= 1) return k;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t nw = std::min<std::size_t>(std::max(1, max_threads()), n);
    if (nw <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nw);
    std::exception_ptr first_error = nullptr;
    std::mutex err_mtx;
    for (std::size_t w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += nw) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mtx);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace beamctl::num
