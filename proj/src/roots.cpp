#include "slicealg/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "slicealg/errors.hpp"

namespace slicealg {

namespace {

using cdouble = std::complex<double>;

constexpr int kMaxSweeps = 500;
constexpr double kStepTol = 1e-13;
constexpr double kClusterBase = 1e-6;
constexpr double kInitialAngleOffset = 0.376;  // breaks symmetry w.r.t. real-axis guesses

struct Horner {
    cdouble p, dp;
};

Horner eval(const std::vector<cdouble>& c, cdouble z) {
    cdouble p = 0.0, dp = 0.0;
    for (size_t k = c.size(); k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
    return {p, dp};
}

// Running bound on the attainable |p(z)|: machine noise of the Horner sum.
double noise_floor(const std::vector<cdouble>& c, double az) {
    double s = 0.0, zk = 1.0;
    for (size_t k = 0; k < c.size(); ++k) {
        s += std::abs(c[k]) * zk * static_cast<double>(4 * k + 1);
        zk *= az;
    }
    return 4.0 * std::numeric_limits<double>::epsilon() * s;
}

std::vector<cdouble> derivative(const std::vector<cdouble>& c) {
    std::vector<cdouble> d;
    for (size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<double>(k));
    if (d.empty()) d.push_back(0.0);
    return d;
}

}  // namespace

std::vector<RootCluster> complex_roots(const std::vector<cdouble>& coeffs, double tol) {
    // Strip trailing (leading-power) zeros and exact zero roots at the origin.
    std::vector<cdouble> c = coeffs;
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    if (c.size() <= 1 || c.back() == 0.0)
        throw Error("complex_roots requires a nonzero leading coefficient and degree >= 1");
    int zero_roots = 0;
    while (c.size() > 1 && c.front() == 0.0) {
        c.erase(c.begin());
        ++zero_roots;
    }

    const bool real_input = std::all_of(coeffs.begin(), coeffs.end(),
                                        [](cdouble v) { return v.imag() == 0.0; });

    const int deg = static_cast<int>(c.size()) - 1;
    std::vector<cdouble> roots;
    std::vector<double> last_step;

    if (deg >= 1) {
        // Monic normalization.
        const cdouble lead = c.back();
        for (auto& v : c) v /= lead;

        double r0 = 0.0;
        for (int k = 0; k < deg; ++k) r0 = std::max(r0, std::abs(c[k]));
        r0 += 1.0;

        roots.resize(deg);
        for (int j = 0; j < deg; ++j) {
            const double th = 2.0 * M_PI * j / deg + kInitialAngleOffset;
            roots[j] = r0 * cdouble(std::cos(th), std::sin(th));
        }
        last_step.assign(deg, r0);

        std::vector<bool> settled(deg, false);
        bool done = false;
        int sweep = 0;
        for (; sweep < kMaxSweeps && !done; ++sweep) {
            done = true;
            for (int j = 0; j < deg; ++j) {
                if (settled[j]) continue;
                const Horner h = eval(c, roots[j]);
                if (std::abs(h.p) <= noise_floor(c, std::abs(roots[j]))) {
                    settled[j] = true;
                    continue;
                }
                cdouble newton;
                if (h.dp == 0.0) {
                    roots[j] += 1e-4 * (1.0 + std::abs(roots[j]));
                    done = false;
                    continue;
                }
                newton = h.p / h.dp;
                cdouble s = 0.0;
                for (int k = 0; k < deg; ++k)
                    if (k != j) s += 1.0 / (roots[j] - roots[k]);
                const cdouble denom = 1.0 - newton * s;
                const cdouble step = (denom == 0.0) ? newton : newton / denom;
                roots[j] -= step;
                last_step[j] = std::abs(step);
                if (last_step[j] <= kStepTol * (1.0 + std::abs(roots[j])))
                    settled[j] = true;
                else
                    done = false;
            }
        }
        if (!done) throw NoConvergence("Aberth iteration exceeded 500 sweeps");

        if (real_input) {
            // Snap near-real roots, then average conjugate partners so the
            // output is exactly symmetric. The snap band widens with the final
            // step size: approximants to an m-fold real root settle on a ring
            // of radius ~eps^(1/m), far above the base band for m >= 3.
            auto snap_band = [&](int j) {
                return std::max(kClusterBase * (1.0 + std::abs(roots[j])), 4.0 * last_step[j]);
            };
            std::vector<bool> used(deg, false);
            for (int j = 0; j < deg; ++j)
                if (std::abs(roots[j].imag()) <= snap_band(j)) {
                    roots[j] = cdouble(roots[j].real(), 0.0);
                    used[j] = true;
                }
            for (int j = 0; j < deg; ++j) {
                if (used[j]) continue;
                int best = -1;
                double bd = std::numeric_limits<double>::max();
                for (int k = 0; k < deg; ++k) {
                    if (used[k] || k == j) continue;
                    const double dd = std::abs(std::conj(roots[j]) - roots[k]);
                    if (dd < bd) {
                        bd = dd;
                        best = k;
                    }
                }
                if (best < 0) throw NumericalError("unpaired complex root of a real polynomial");
                const cdouble avg = 0.5 * (roots[j] + std::conj(roots[best]));
                roots[j] = avg;
                roots[best] = std::conj(avg);
                used[j] = used[best] = true;
            }
        }
    }

    // Cluster. The base radius covers simple and double roots; for higher
    // multiplicities the approximants settle on a ring of radius roughly
    // eps^(1/m), which the final Aberth step sizes track, so the radius is
    // widened by the step estimates of the pair under comparison.
    const int n = static_cast<int>(roots.size());
    std::vector<int> cluster_id(n, -1);
    int clusters = 0;
    for (int j = 0; j < n; ++j) {
        if (cluster_id[j] >= 0) continue;
        cluster_id[j] = clusters;
        for (int k = j + 1; k < n; ++k) {
            if (cluster_id[k] >= 0) continue;
            const double radius = std::max(kClusterBase * (1.0 + std::abs(roots[j])),
                                           4.0 * (last_step[j] + last_step[k]));
            if (std::abs(roots[j] - roots[k]) <= radius) cluster_id[k] = cluster_id[j];
        }
        ++clusters;
    }

    std::vector<RootCluster> out;
    for (int cid = 0; cid < clusters; ++cid) {
        cdouble centroid = 0.0;
        int count = 0;
        for (int j = 0; j < n; ++j)
            if (cluster_id[j] == cid) {
                centroid += roots[j];
                ++count;
            }
        centroid /= static_cast<double>(count);
        double spread = 0.0;
        for (int j = 0; j < n; ++j)
            if (cluster_id[j] == cid) spread = std::max(spread, std::abs(roots[j] - centroid));
        if (real_input && std::abs(centroid.imag()) <= kClusterBase * (1.0 + std::abs(centroid)))
            centroid = cdouble(centroid.real(), 0.0);

        // An m-fold root of p is a simple root of p^(m-1): a few Newton steps
        // there polish the centroid to full precision. The polished value may
        // legitimately move by up to the cluster spread.
        if (count > 1) {
            std::vector<cdouble> g = c;
            for (int t = 0; t + 1 < count; ++t) g = derivative(g);
            cdouble z = centroid;
            for (int it = 0; it < 8; ++it) {
                const Horner h = eval(g, z);
                if (h.dp == 0.0) break;
                const cdouble step = h.p / h.dp;
                z -= step;
                if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
            }
            if (std::abs(z - centroid) <=
                4.0 * spread + kClusterBase * (1.0 + std::abs(centroid))) {
                centroid = z;
                if (real_input && centroid.imag() != 0.0 &&
                    std::abs(centroid.imag()) <= kClusterBase * (1.0 + std::abs(centroid)))
                    centroid = cdouble(centroid.real(), 0.0);
            }
        }
        out.push_back({centroid, count});
    }

    if (real_input) {
        // The polish can perturb conjugate cluster pairs independently;
        // restore exact symmetry.
        for (size_t a = 0; a < out.size(); ++a) {
            if (out[a].root.imag() <= 0.0) continue;
            for (size_t b = 0; b < out.size(); ++b) {
                if (b == a || out[b].root.imag() >= 0.0) continue;
                if (out[b].multiplicity == out[a].multiplicity &&
                    std::abs(out[b].root - std::conj(out[a].root)) <=
                        1e-4 * (1.0 + std::abs(out[a].root))) {
                    const cdouble avg = 0.5 * (out[a].root + std::conj(out[b].root));
                    out[a].root = avg;
                    out[b].root = std::conj(avg);
                    break;
                }
            }
        }
    }

    if (zero_roots > 0) out.push_back({cdouble(0.0, 0.0), zero_roots});

    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
        return a.root.imag() < b.root.imag();
    });
    (void)tol;  // convergence and clustering use the pinned internal constants
    return out;
}

std::vector<RootCluster> complex_roots(const std::vector<double>& coeffs, double tol) {
    std::vector<cdouble> c(coeffs.begin(), coeffs.end());
    return complex_roots(c, tol);
}

}  // namespace slicealg
