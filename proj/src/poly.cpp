#include "polygeo/poly.hpp"

#include <algorithm>
#include <cmath>

#include "polygeo/errors.hpp"

namespace polygeo {

namespace {

void trim(std::vector<Complex>& c) {
    double scale = 0.0;
    for (const Complex& v : c) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) {
        c.clear();
        return;
    }
    const double threshold = kTrimRel * scale;
    while (!c.empty() && std::abs(c.back()) <= threshold) c.pop_back();
}

/// result *= (a*z + b), in place.
void mul_linear(std::vector<Complex>& c, Complex a, Complex b) {
    c.push_back({0.0, 0.0});
    for (std::size_t i = c.size() - 1; i > 0; --i) {
        c[i] = c[i] * b + c[i - 1] * a;
    }
    c[0] *= b;
}

}  // namespace

AffineMap AffineMap::inverse() const {
    if (!invertible()) throw DomainError("affine map with a = 0 has no inverse");
    return {Complex{1.0, 0.0} / a, -b / a};
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

Polynomial Polynomial::monomial(int deg, Complex scale) {
    if (deg < 0) throw DomainError("monomial degree must be nonnegative");
    std::vector<Complex> c(static_cast<std::size_t>(deg) + 1, Complex{0.0, 0.0});
    c.back() = scale;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, Complex leading) {
    if (leading == Complex{0.0, 0.0}) {
        throw DomainError("from_roots: zero leading coefficient rejected");
    }
    std::vector<Complex> c{leading};
    for (const Complex& r : roots) mul_linear(c, Complex{1.0, 0.0}, -r);
    return Polynomial(std::move(c));
}

double Polynomial::coeff_scale() const {
    double scale = 0.0;
    for (const Complex& v : coeffs_) scale = std::max(scale, std::abs(v));
    return scale;
}

Complex Polynomial::evaluate(Complex z) const {
    Complex acc{0.0, 0.0};
    for (std::size_t i = coeffs_.size(); i > 0; --i) {
        acc = acc * z + coeffs_[i - 1];
    }
    return acc;
}

Polynomial Polynomial::derivative(int k) const {
    if (k < 0) throw DomainError("derivative order must be nonnegative");
    if (k == 0) return *this;
    if (degree() < k) return Polynomial{};
    std::vector<Complex> c = coeffs_;
    for (int round = 0; round < k; ++round) {
        for (std::size_t j = 1; j < c.size(); ++j) {
            c[j - 1] = c[j] * static_cast<double>(j);
        }
        c.pop_back();
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::compose_affine(const AffineMap& m) const {
    if (is_zero()) return Polynomial{};
    // Horner in the polynomial ring: acc = acc*(az+b) + c_j.
    std::vector<Complex> acc{coeffs_.back()};
    for (std::size_t i = coeffs_.size() - 1; i > 0; --i) {
        mul_linear(acc, m.a, m.b);
        acc[0] += coeffs_[i - 1];
    }
    return Polynomial(std::move(acc));
}

Polynomial linear_combination(std::span<const std::pair<Complex, Polynomial>> terms) {
    std::size_t size = 0;
    for (const auto& [w, p] : terms) size = std::max(size, p.coeffs().size());
    std::vector<Complex> c(size, Complex{0.0, 0.0});
    for (const auto& [w, p] : terms) {
        const auto& pc = p.coeffs();
        for (std::size_t j = 0; j < pc.size(); ++j) c[j] += w * pc[j];
    }
    return Polynomial(std::move(c));
}

Polynomial scale(const Polynomial& p, Complex s) {
    std::vector<Complex> c = p.coeffs();
    for (Complex& v : c) v *= s;
    return Polynomial(std::move(c));
}

double coeff_distance(const Polynomial& p, const Polynomial& q) {
    const std::size_t size = std::max(p.coeffs().size(), q.coeffs().size());
    double dist = 0.0;
    for (std::size_t j = 0; j < size; ++j) {
        dist = std::max(dist, std::abs(p.coeff(static_cast<int>(j)) - q.coeff(static_cast<int>(j))));
    }
    return dist;
}

}  // namespace polygeo
