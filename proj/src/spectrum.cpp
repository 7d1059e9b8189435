#include "beamctl/spectrum.hpp"
#include "beamctl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace beamctl::spectrum {

void SpectralParams::validate() const {
    if (!(alpha >= 0.0 && alpha <= 2.0))
        throw ConfigError("alpha must lie in [0, 2]");
    if (!(rho > 0.0)) throw ConfigError("rho must be positive");
    if (n_modes < 1) throw ConfigError("n_modes must be >= 1");
}

RootPair char_roots(int n, const SpectralParams& params) {
    if (n < 1) throw ConfigError("mode index must be >= 1");
    const double nn = double(n);
    const double b = params.rho * std::pow(nn, 2.0 * params.alpha);
    const double c = nn * nn * nn * nn;
    RootPair rp;
    rp.mode = n;
    // Relative test: collapses roots whose separation is below rounding so
    // no spurious near-Jordan gap q ~ 1e-13 leaks into the moment solves.
    if (std::abs(b * b - 4.0 * c) <= 1e-9 * (b * b + 4.0 * c)) {
        rp.is_double = true;
        rp.lambda_plus = rp.lambda_minus = cplx(-b / 2.0, 0.0);
        rp.q = 0.0;
        return rp;
    }
    const auto roots = num::damped_quadratic_roots(b, c);
    rp.lambda_plus = roots.plus;
    rp.lambda_minus = roots.minus;
    rp.q = rp.lambda_plus - rp.lambda_minus;
    rp.is_double = false;
    return rp;
}

bool FrequencySet::is_double_mode(int n) const {
    return std::binary_search(double_modes.begin(), double_modes.end(), n);
}

std::vector<cplx> FrequencySet::unique_values() const {
    std::vector<cplx> vals;
    vals.reserve(entries.size());
    for (const auto& [k, v] : entries) {
        if (k < 0 && is_double_mode(-k)) continue; // same point as +|k|
        vals.push_back(v);
    }
    return vals;
}

FrequencySet frequency_set(const SpectralParams& params) {
    params.validate();
    FrequencySet fs;
    fs.params = params;
    const cplx mi(0.0, -1.0);
    for (int n = 1; n <= params.n_modes; ++n) {
        RootPair rp = char_roots(n, params);
        fs.entries[n] = mi * rp.lambda_plus;
        fs.entries[-n] = mi * rp.lambda_minus;
        if (rp.is_double) fs.double_modes.push_back(n);
        fs.root_cache[n] = rp;
    }
    return fs;
}

bool ClusterMap::in_plus(int n) const {
    return std::find(n_plus.begin(), n_plus.end(), n) != n_plus.end();
}
bool ClusterMap::in_minus(int n) const {
    return std::find(n_minus.begin(), n_minus.end(), n) != n_minus.end();
}

ClusterMap cluster_map(const FrequencySet& fs, double epsilon) {
    if (!(epsilon > 0.0)) throw ConfigError("cluster epsilon must be positive");
    // Proximity graph over frequency indices; exact double modes contribute a
    // single node (+n) since both indices carry the same point.
    std::vector<int> keys;
    for (const auto& [k, v] : fs.entries) {
        if (k < 0 && fs.is_double_mode(-k)) continue;
        keys.push_back(k);
    }
    const std::size_t K = keys.size();
    std::vector<std::vector<std::size_t>> adj(K);
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = i + 1; j < K; ++j) {
            const double d = std::abs(fs.at(keys[i]) - fs.at(keys[j]));
            if (d < epsilon) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }

    ClusterMap cm;
    cm.epsilon = epsilon;
    std::vector<char> seen(K, 0);
    for (std::size_t i = 0; i < K; ++i) {
        if (seen[i]) continue;
        // flood the component
        std::vector<std::size_t> comp, stack{i};
        seen[i] = 1;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::size_t w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (comp.size() == 1) continue;
        if (comp.size() > 2) {
            std::ostringstream os;
            os << "epsilon " << epsilon << " merges " << comp.size()
               << " frequencies into one cluster; shrink epsilon";
            throw EpsilonTooLarge(os.str());
        }
        const int ka = keys[comp[0]], kb = keys[comp[1]];
        if ((ka > 0) == (kb > 0)) {
            std::ostringstream os;
            os << "epsilon " << epsilon << " pairs two same-branch frequencies ("
               << ka << ", " << kb << "); shrink epsilon";
            throw EpsilonTooLarge(os.str());
        }
        const int l = ka > 0 ? ka : kb;  // + branch member
        const int m = ka > 0 ? -kb : -ka; // - branch member's mode
        if (l == m) {
            std::ostringstream os;
            os << "epsilon " << epsilon << " captures the near-double mode " << l
               << " (branches " << l << " and " << -l
               << " closer than epsilon but not an exact double); shrink epsilon";
            throw EpsilonTooLarge(os.str());
        }
        cm.pairs.emplace_back(l, m);
    }
    std::sort(cm.pairs.begin(), cm.pairs.end());
    for (const auto& [l, m] : cm.pairs) {
        cm.iota[l] = m;
        cm.n_plus.push_back(l);
        cm.n_minus.push_back(m);
    }
    std::sort(cm.n_plus.begin(), cm.n_plus.end());
    std::sort(cm.n_minus.begin(), cm.n_minus.end());
    std::set_intersection(cm.n_plus.begin(), cm.n_plus.end(), cm.n_minus.begin(),
                          cm.n_minus.end(), std::back_inserter(cm.n_both));
    return cm;
}

double default_epsilon(const FrequencySet& fs) {
    const auto vals = fs.unique_values();
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
            const double d = std::abs(vals[i] - vals[j]);
            if (d > 0.0) dmin = std::min(dmin, d);
        }
    if (!std::isfinite(dmin)) return 1.0; // single point; no clusters anywhere
    return dmin / 2.0;
}

int counting_function(const FrequencySet& fs, double r) {
    if (r < 0.0) throw ConfigError("counting radius must be >= 0");
    const auto vals = fs.unique_values();
    int best = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        int cnt = 0;
        for (std::size_t j = 0; j < vals.size(); ++j)
            if (j != i && std::abs(vals[j] - vals[i]) < r) ++cnt;
        best = std::max(best, cnt);
    }
    return best;
}

double blaschke_partial_sum(const SpectralParams& params, long n_terms) {
    SpectralParams p = params;
    p.n_modes = 1;
    p.validate();
    double s = 0.0;
    for (long n = 1; n <= n_terms; ++n) {
        const RootPair rp = char_roots(int(n), params);
        const double a2 = std::norm(rp.lambda_plus);
        if (a2 > 0.0) s += std::abs(rp.lambda_plus.real()) / a2;
    }
    return s;
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::OneDim: return "OneDim";
        case Regime::TwoDim: return "TwoDim";
        case Regime::WeakOnly: return "WeakOnly";
        case Regime::NotControllable: return "NotControllable";
    }
    return "?";
}

double counting_exponent_fit(const SpectralParams& params, int n_fit,
                             double r_lo, double r_hi) {
    SpectralParams p = params;
    p.n_modes = n_fit;
    const FrequencySet fs = frequency_set(p);
    std::vector<double> lx, ly;
    const int samples = 13;
    for (int i = 0; i < samples; ++i) {
        const double r =
            r_lo * std::pow(r_hi / r_lo, double(i) / double(samples - 1));
        const int nu = counting_function(fs, r);
        if (nu >= 1) {
            lx.push_back(std::log(r));
            ly.push_back(std::log(double(nu)));
        }
    }
    if (lx.size() < 3)
        throw ConfigError("counting exponent fit: not enough populated radii");
    return num::linear_fit(lx, ly).slope;
}

RegimeReport classify_regime(const SpectralParams& params) {
    params.validate();
    RegimeReport rep;
    const double a = params.alpha;
    rep.blaschke_divergent = a >= 1.5;
    if (a == 2.0) {
        rep.regime = Regime::NotControllable;
        rep.kappa = 0.95;
        rep.notes =
            "alpha = 2: |lambda_n^+| stays bounded, the frequency set "
            "accumulates and no control synthesis applies";
        return rep;
    }
    if (a >= 1.5) {
        rep.regime = Regime::WeakOnly;
        rep.kappa = std::clamp(1.0 / (4.0 - 2.0 * a), 0.05, 0.95);
        rep.notes =
            "alpha in [3/2, 2): Blaschke sum diverges, exponential family "
            "not minimal; only weak (epsilon-)steering is synthesized";
        return rep;
    }
    if (a == 0.0 || (a <= 1.0 && params.rho <= 2.0)) {
        rep.regime = Regime::OneDim;
        rep.kappa = 0.5;
        if (a == 0.0 && params.rho > 2.0)
            rep.notes = "alpha = 0 stays one-dimensional for every rho "
                        "(double-root branch covers rho in 2N)";
        return rep;
    }
    rep.regime = Regime::TwoDim;
    if (a <= 1.0) {
        rep.kappa = 0.5;
        rep.notes = "rho > 2 can produce cross-branch clusters; profiles split";
    } else {
        // Exponent measured on the actual truncated set; the branch union
        // gives r^{1/(4-2a)} and the fit lands there.
        double k = counting_exponent_fit(params, 200, 10.0, 1e3);
        rep.kappa = std::clamp(k, 0.05, 0.95);
        std::ostringstream os;
        os << "kappa fitted empirically on N=200 (raw slope " << k << ")";
        rep.notes = os.str();
    }
    return rep;
}

} // namespace beamctl::spectrum
