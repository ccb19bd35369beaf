#include "pluriperiod/eichler.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pluriperiod/errors.hpp"

namespace pluriperiod {

namespace {

struct BitKeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (const std::uint64_t v : {k.first, k.second}) {
            for (int byte = 0; byte < 8; ++byte) {
                h ^= (v >> (8 * byte)) & 0xffu;
                h *= 1099511628211ull;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

std::pair<std::uint64_t, std::uint64_t> bit_key(Complex z) {
    return {std::bit_cast<std::uint64_t>(z.real()), std::bit_cast<std::uint64_t>(z.imag())};
}

// Batch integrand (tau - sigma)^n * phi(sigma) for fixed tau.
BatchFn kernel_integrand(const AutomorphicForm& phi, Complex tau, int n) {
    return [phi, tau, n](std::span<const Complex> sigma, std::span<Complex> out) {
        phi.eval_batch(sigma, out);
        for (std::size_t i = 0; i < sigma.size(); ++i)
            out[i] *= ipow(tau - sigma[i], n);
    };
}

// Batch integrand sigma^q * phi(sigma).
BatchFn moment_integrand(const AutomorphicForm& phi, int q) {
    return [phi, q](std::span<const Complex> sigma, std::span<Complex> out) {
        phi.eval_batch(sigma, out);
        for (std::size_t i = 0; i < sigma.size(); ++i)
            out[i] *= ipow(sigma[i], q);
    };
}

}  // namespace

struct EichlerIntegral::Cache {
    std::mutex mu;
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Complex, BitKeyHash> map;
};

EichlerIntegral::EichlerIntegral(AutomorphicForm phi, Complex tau1, double tol)
    : phi_(std::move(phi)), tau1_(tau1), tol_(tol), cache_(std::make_shared<Cache>()) {
    if (!(tau1_.imag() > 0.0))
        throw DomainViolation("EichlerIntegral: base point off the upper half-plane");
    if (tol_ <= 0.0) throw ConfigError("EichlerIntegral: tolerance must be positive");
}

Complex EichlerIntegral::eval(Complex tau) const {
    if (!(tau.imag() > 0.0))
        throw DomainViolation("EichlerIntegral: evaluation off the upper half-plane");
    if (tau == tau1_) return Complex(0.0, 0.0);
    {
        std::scoped_lock lock(cache_->mu);
        const auto it = cache_->map.find(bit_key(tau));
        if (it != cache_->map.end()) return it->second;
    }
    const int n = -2 * phi_.m;
    const Complex raw = integrate_chord(kernel_integrand(phi_, tau, n), tau1_, tau, tol_).value;
    const Complex value = raw / factorial(n);
    std::scoped_lock lock(cache_->mu);
    cache_->map.emplace(bit_key(tau), value);
    return value;
}

void EichlerIntegral::eval_batch(std::span<const Complex> taus, std::span<Complex> out) const {
    if (taus.size() != out.size())
        throw DomainViolation("EichlerIntegral::eval_batch: span size mismatch");
    for (std::size_t i = 0; i < taus.size(); ++i) out[i] = eval(taus[i]);
}

PointFn EichlerIntegral::as_pointfn() const {
    EichlerIntegral copy = *this;
    return [copy](Complex tau) { return copy.eval(tau); };
}

BoundedPoly moment_polynomial(const AutomorphicForm& phi, Complex from, Complex to,
                              double tol) {
    const int n = -2 * phi.m;
    std::vector<Complex> mu(static_cast<std::size_t>(n) + 1);
    for (int q = 0; q <= n; ++q)
        mu[static_cast<std::size_t>(q)] =
            integrate_chord(moment_integrand(phi, q), from, to, tol).value;
    BoundedPoly P(n);
    for (int j = 0; j <= n; ++j) {
        const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
        P.set_coeff(j, binomial(n, j) * sign * mu[static_cast<std::size_t>(n - j)] /
                           factorial(n));
    }
    return P;
}

PeriodPoly period_polynomial(const EichlerIntegral& Phi, const MoebiusMap& A) {
    const int n = -2 * Phi.m();
    std::vector<std::pair<Complex, Complex>> samples;
    for (const Complex tau : fit_nodes(n)) {
        const Complex slashed = Phi.eval(A.apply(tau)) * ipow(A.automorphy_factor(tau), n);
        samples.emplace_back(tau, slashed - Phi.eval(tau));
    }
    PolyFit fit = fit_poly(samples, n);
    const double threshold = std::max(1e-8, 50.0 * Phi.form().defect_estimate);
    if (fit.residual > threshold)
        throw NotPolynomial("period_polynomial: fit residual " + std::to_string(fit.residual) +
                            " exceeds threshold " + std::to_string(threshold) +
                            "; the integrand does not transform with weight " +
                            std::to_string(2 + n));
    return PeriodPoly{std::move(fit.poly), fit.residual, threshold, fit.condition};
}

BoundedPoly period_via_integral(const EichlerIntegral& Phi, const MoebiusMap& A) {
    const Complex start = A.inverse().apply(Phi.base_point());
    return moment_polynomial(Phi.form(), start, Phi.base_point(), Phi.tol());
}

CocycleCheck verify_cocycle(const EichlerIntegral& Phi, const MoebiusMap& A,
                            const MoebiusMap& B) {
    const int n = -2 * Phi.m();
    BoundedPoly lhs = period_via_integral(Phi, compose(A, B));
    BoundedPoly rhs = poly_slash(period_via_integral(Phi, A), B, n);
    rhs += period_via_integral(Phi, B);
    const double d = coeff_distance(lhs, rhs);
    return CocycleCheck{std::move(lhs), std::move(rhs), d};
}

BoundedPoly connecting_polynomial(const EichlerIntegral& Phi, Complex tau2) {
    return moment_polynomial(Phi.form(), Phi.base_point(), tau2, Phi.tol());
}

BolCheck bol_check(const PointFn& f, const MoebiusMap& A, Complex z, int order,
                   int weight_out, double radius) {
    const Complex az = A.apply(z);
    const double r = std::min({radius, 0.5 * z.imag(), 0.5 * az.imag()});
    double max_z = 0.0, max_az = 0.0;
    const Complex lhs = cauchy_derivative(f, az, order, r, &max_az);
    const Complex rhs =
        cauchy_derivative(f, z, order, r, &max_z) * ipow(A.automorphy_factor(z), weight_out);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    const double resid = scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
    const double deriv_noise =
        1e-12 * factorial(order) * std::max(max_z, max_az) / std::pow(r, order);
    const double floor = scale > 0.0 ? deriv_noise / scale : 0.0;
    return BolCheck{lhs, rhs, resid, floor};
}

}  // namespace pluriperiod
