#include "hilbq/hilbquot.hpp"

#include <cstdlib>
#include <stdexcept>

#include "hilbq/qspecial.hpp"
#include "hilbq/theta.hpp"

namespace hilbq {

namespace {

/// q-shift of the t^{kn-j} slot in the product formula:
/// k^2 n/2 + (n/2 - j)k = nk(k+1)/2 - jk. Always >= 0 for 0 <= j <= n-1.
long twist_shift(int n, int j, long k) { return n * k * (k + 1) / 2 - static_cast<long>(j) * k; }

}  // namespace

QSeries hilb_series_A(int n_sing, int M) {
    if (n_sing < 0) throw std::invalid_argument("hilb_series_A: n_sing must be >= 0");
    const int n = n_sing + 1;
    return double_product(n, M, 0).coeff(0);
}

QSeries quot_series_from_product(const TLaurentSeries& product, int n, int j, long k, int M) {
    if (n < 1) throw std::invalid_argument("quot_series: n must be >= 1");
    if (j < 0 || j > n - 1) throw std::invalid_argument("quot_series: need 0 <= j <= n-1");
    const long e = k * n - j;
    const long s = twist_shift(n, j, k);
    const long need_order = M + s;
    if (std::labs(e) > product.window() || need_order > product.q_order())
        throw std::invalid_argument(
            "quot_series: product cannot supply slot t^" + std::to_string(e) +
            "; requires window >= " + std::to_string(std::labs(e)) +
            " and q-order >= " + std::to_string(need_order) + " (have window " +
            std::to_string(product.window()) + ", q-order " +
            std::to_string(product.q_order()) + ")");
    const QSeries slot = product.coeff(static_cast<int>(e));
    QSeries out(M);
    for (int i = 0; i <= M; ++i) out.at(i) = slot[static_cast<int>(i + s)];
    return out;
}

QSeries quot_series_A(int n, int j, long k, int M) {
    if (n < 1) throw std::invalid_argument("quot_series_A: n must be >= 1");
    if (j < 0 || j > n - 1) throw std::invalid_argument("quot_series_A: need 0 <= j <= n-1");
    const long e = k * n - j;
    const long s = twist_shift(n, j, k);
    const int E = static_cast<int>(std::labs(e));
    const int order = static_cast<int>(M + s);
    return quot_series_from_product(double_product(n, order, E), n, j, k, M);
}

QSeries theta_from_hilb(int n, int M) {
    if (n < 1) throw std::invalid_argument("theta_from_hilb: n must be >= 1");
    // Theta_n pairs with the A_n local model, i.e. product parameter n + 1.
    return euler_product_power(n + 1, M) * double_product(n + 1, M, 0).coeff(0);
}

SurfaceSpec::Resolved SurfaceSpec::resolve() const {
    if (!chi_resolution && !chi_surface)
        throw std::invalid_argument("SurfaceSpec: one Euler characteristic is required");
    long delta = 0;  // chi(resolution) - chi(surface) = sum(n_i + 1) - l
    for (int n : singularities) {
        if (n < 1) throw std::invalid_argument("SurfaceSpec: singularity indices must be >= 1");
        delta += n;
    }
    if (chi_resolution && chi_surface && *chi_resolution != *chi_surface + delta)
        throw std::invalid_argument(
            "SurfaceSpec: inconsistent Euler characteristics: chi(resolution) = " +
            std::to_string(*chi_resolution) + " but chi(surface) + sum(n_i) = " +
            std::to_string(*chi_surface + delta));
    const long chi_res = chi_resolution ? *chi_resolution : *chi_surface + delta;
    return {chi_res, chi_res - delta};
}

SurfaceSeries surface_hilb_series(const SurfaceSpec& spec, int M, bool normalized) {
    const SurfaceSpec::Resolved chi = spec.resolve();
    QSeries s = eta_power(-chi.chi_resolution, M);
    for (int n : spec.singularities) s = s * theta_n(n, M);
    if (normalized) s = s.with_offset(Rat(0));
    Rat weight(-chi.chi_surface, 2);
    weight.canonicalize();
    return {s, weight};
}

CheckReport k_independence_check(int n, int j, long k_range, int M) {
    // One product evaluation covers every slot |k| <= k_range.
    long max_shift = 0, max_deg = 0;
    for (long k = -k_range; k <= k_range; ++k) {
        max_shift = std::max(max_shift, twist_shift(n, j, k));
        max_deg = std::max(max_deg, std::labs(k * n - j));
    }
    const TLaurentSeries product =
        double_product(n, static_cast<int>(M + max_shift), static_cast<int>(max_deg));
    const QSeries reference = quot_series_from_product(product, n, j, 0, M);
    for (long k = -k_range; k <= k_range; ++k) {
        const QSeries got = quot_series_from_product(product, n, j, k, M);
        for (int i = 0; i <= M; ++i)
            if (got[i] != reference[i])
                return CheckReport::fail("slot k=" + std::to_string(k) + " differs at q^" +
                                         std::to_string(i) + ": " + got[i].get_str() + " vs " +
                                         reference[i].get_str());
    }
    return CheckReport::ok();
}

}  // namespace hilbq
