#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace polygeo {

using Complex = std::complex<double>;

/// Relative trim threshold: a trailing coefficient counts as zero when its
/// magnitude is <= kTrimRel times the largest coefficient magnitude. Degree
/// decisions are therefore scale invariant.
inline constexpr double kTrimRel = 1e-12;

/// degree() of the zero polynomial.
inline constexpr int kZeroPolyDegree = -1;

/// The map z -> a*z + b.
struct AffineMap {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};

    Complex operator()(Complex z) const { return a * z + b; }

    bool invertible() const { return std::abs(a) > 0.0; }

    /// Inverse map (1/a, -b/a). Requires invertible().
    AffineMap inverse() const;

    /// Composition z -> (*this)(inner(z)).
    AffineMap after(const AffineMap& inner) const {
        return {a * inner.a, a * inner.b + b};
    }
};

/// Complex polynomial, coefficients ascending so that index = exponent.
/// The zero polynomial is a first-class value (empty coefficient vector,
/// degree sentinel kZeroPolyDegree); operators may legitimately map nonzero
/// inputs to it.
class Polynomial {
public:
    Polynomial() = default;

    /// Takes ownership and trims trailing near-zero coefficients.
    explicit Polynomial(std::vector<Complex> coeffs);

    /// scale * z^deg.
    static Polynomial monomial(int deg, Complex scale = Complex{1.0, 0.0});

    /// leading * prod (z - r_i), expanded by a left fold in input order.
    /// Rejects leading == 0.
    static Polynomial from_roots(std::span<const Complex> roots, Complex leading);

    int degree() const {
        return coeffs_.empty() ? kZeroPolyDegree : static_cast<int>(coeffs_.size()) - 1;
    }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return degree() <= 0; }

    /// Coefficient of z^j; zero beyond the stored range.
    Complex coeff(int j) const {
        if (j < 0 || j >= static_cast<int>(coeffs_.size())) return {0.0, 0.0};
        return coeffs_[static_cast<std::size_t>(j)];
    }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Largest coefficient magnitude; 0 for the zero polynomial.
    double coeff_scale() const;

    /// Horner evaluation; the zero polynomial evaluates to 0.
    Complex evaluate(Complex z) const;

    /// k-fold formal derivative; the zero polynomial when k > degree.
    Polynomial derivative(int k = 1) const;

    /// Coefficients of P(a*z + b).
    Polynomial compose_affine(const AffineMap& m) const;

private:
    std::vector<Complex> coeffs_;
};

/// Coefficient-wise weighted sum of the given terms, trimmed.
Polynomial linear_combination(std::span<const std::pair<Complex, Polynomial>> terms);

/// Convenience: s * p.
Polynomial scale(const Polynomial& p, Complex s);

/// max_j |p_j - q_j| over the union of coefficient ranges.
double coeff_distance(const Polynomial& p, const Polynomial& q);

}  // namespace polygeo
