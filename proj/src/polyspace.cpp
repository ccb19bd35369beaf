#include "pluriperiod/polyspace.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "pluriperiod/errors.hpp"

namespace pluriperiod {

BoundedPoly::BoundedPoly(int degree_bound)
    : degree_bound_(degree_bound), c_(static_cast<std::size_t>(degree_bound) + 1, 0.0) {
    if (degree_bound < 0) throw DegreeOverflow("BoundedPoly: negative degree bound");
}

BoundedPoly::BoundedPoly(int degree_bound, std::vector<Complex> coeffs)
    : BoundedPoly(degree_bound) {
    if (coeffs.size() > c_.size())
        throw DegreeOverflow("BoundedPoly: coefficient list exceeds degree bound");
    for (std::size_t k = 0; k < coeffs.size(); ++k) c_[k] = coeffs[k];
}

void BoundedPoly::set_coeff(int k, Complex v) {
    if (k < 0 || k > degree_bound_)
        throw DegreeOverflow("BoundedPoly::set_coeff: index outside degree bound");
    c_[static_cast<std::size_t>(k)] = v;
}

Complex BoundedPoly::eval(Complex tau) const {
    Complex r = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * tau + c_[k];
    return r;
}

BoundedPoly& BoundedPoly::operator+=(const BoundedPoly& o) {
    if (o.degree_bound_ > degree_bound_)
        throw DegreeOverflow("BoundedPoly::operator+=: degree bounds differ");
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

BoundedPoly& BoundedPoly::operator-=(const BoundedPoly& o) {
    if (o.degree_bound_ > degree_bound_)
        throw DegreeOverflow("BoundedPoly::operator-=: degree bounds differ");
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

BoundedPoly& BoundedPoly::operator*=(Complex s) {
    for (Complex& x : c_) x *= s;
    return *this;
}

double BoundedPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const Complex& x : c_) m = std::max(m, std::abs(x));
    return m;
}

BoundedPoly poly_slash(const BoundedPoly& P, const MoebiusMap& A, int degree_bound) {
    if (P.degree_bound() > degree_bound)
        throw DegreeOverflow("poly_slash: polynomial exceeds the action degree");
    const int d = degree_bound;
    // (a tau + b)^k (c tau + dd)^{d-k} accumulated by iterated convolution.
    std::vector<Complex> out(static_cast<std::size_t>(d) + 1, 0.0);
    for (int k = 0; k <= d; ++k) {
        const Complex ck = k <= P.degree_bound() ? P.coeff(k) : Complex(0.0);
        if (ck == Complex(0.0)) continue;
        std::vector<Complex> term{1.0};
        for (int j = 0; j < k; ++j) {
            std::vector<Complex> nxt(term.size() + 1, 0.0);
            for (std::size_t t = 0; t < term.size(); ++t) {
                nxt[t] += term[t] * A.b;
                nxt[t + 1] += term[t] * A.a;
            }
            term = std::move(nxt);
        }
        for (int j = 0; j < d - k; ++j) {
            std::vector<Complex> nxt(term.size() + 1, 0.0);
            for (std::size_t t = 0; t < term.size(); ++t) {
                nxt[t] += term[t] * A.d;
                nxt[t + 1] += term[t] * A.c;
            }
            term = std::move(nxt);
        }
        for (std::size_t t = 0; t < term.size(); ++t) out[t] += ck * term[t];
    }
    return BoundedPoly(d, std::move(out));
}

double coeff_distance(const BoundedPoly& P, const BoundedPoly& Q) {
    const int d = std::max(P.degree_bound(), Q.degree_bound());
    double m = 0.0;
    for (int k = 0; k <= d; ++k) {
        const Complex p = k <= P.degree_bound() ? P.coeff(k) : Complex(0.0);
        const Complex q = k <= Q.degree_bound() ? Q.coeff(k) : Complex(0.0);
        m = std::max(m, std::abs(p - q) / (1.0 + std::abs(p)));
    }
    return m;
}

PolyFit fit_poly(const std::vector<std::pair<Complex, Complex>>& samples, int d) {
    const int n = static_cast<int>(samples.size());
    if (n < d + 2)
        throw IllConditioned("fit_poly: need at least d+2 samples for an over-determined fit");
    Eigen::MatrixXcd V(n, d + 1);
    Eigen::VectorXcd y(n);
    for (int i = 0; i < n; ++i) {
        Complex p = 1.0;
        for (int k = 0; k <= d; ++k) {
            V(i, k) = p;
            p *= samples[static_cast<std::size_t>(i)].first;
        }
        y(i) = samples[static_cast<std::size_t>(i)].second;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(V, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(d);
    const double cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
    if (cond > 1e8)
        throw IllConditioned("fit_poly: Vandermonde condition " + std::to_string(cond));
    Eigen::VectorXcd x = svd.solve(y);
    std::vector<Complex> coeffs(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) coeffs[static_cast<std::size_t>(k)] = x(k);
    BoundedPoly poly(d, std::move(coeffs));
    double res = 0.0;
    for (const auto& [node, value] : samples)
        res = std::max(res, std::abs(poly.eval(node) - value));
    return PolyFit{std::move(poly), res, cond};
}

std::vector<Complex> fit_nodes(int d) {
    std::vector<Complex> nodes;
    const int n = d + 3;
    nodes.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double th = 2.0 * kPi * k / n;
        nodes.emplace_back(0.5 * std::cos(th), 2.0 + 0.5 * std::sin(th));
    }
    return nodes;
}

}  // namespace pluriperiod
