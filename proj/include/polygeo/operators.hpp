#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polygeo/extremal.hpp"
#include "polygeo/poly.hpp"
#include "polygeo/roots.hpp"

namespace polygeo {

/// Scalar-valued linear map on polynomials of degree <= n, represented by
/// weights against the monomial coefficient basis: l(P) = sum w_j * coeff_j(P).
struct LinearFunctional {
    std::vector<Complex> weights;

    Complex operator()(const Polynomial& p) const {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < weights.size(); ++j) {
            acc += weights[j] * p.coeff(static_cast<int>(j));
        }
        return acc;
    }
    bool is_zero() const {
        for (const Complex& w : weights) {
            if (std::abs(w) > 0.0) return false;
        }
        return true;
    }
};

/// Linear operator on polynomials of degree <= n, stored as the n+1 monomial
/// images L[z^0..z^n]. Images live in the full polynomial ring (their degree
/// may exceed n), so a square matrix would be the wrong shape.
class MonomialOperator {
public:
    MonomialOperator(int n, std::vector<Polynomial> images);

    int n() const { return n_; }
    const Polynomial& image(int j) const { return images_[static_cast<std::size_t>(j)]; }
    const std::vector<Polynomial>& images() const { return images_; }

    /// sum_j coeff_j(p) * images[j], trimmed. Rejects degree(p) > n.
    Polynomial apply(const Polynomial& p) const;

private:
    int n_;
    std::vector<Polynomial> images_;
};

/// L[P] = l1(P)*z + l2(P): every image has degree <= 1.
MonomialOperator make_form1(const LinearFunctional& l1, const LinearFunctional& l2, int n);

/// L[P] = l3(P)*(z-c)^m with m >= 2 and l3 not identically zero.
MonomialOperator make_form2(Complex c, int m, const LinearFunctional& l3, int n);

/// L[P] = c * (P o map)^(k) with c != 0, map.a != 0 and 0 <= k <= n-2.
MonomialOperator make_form3(Complex c, int k, const AffineMap& map, int n);

struct Form1Match {
    LinearFunctional l1, l2;
};
struct Form2Match {
    Complex c;
    int m = 0;
    LinearFunctional l3;
};
struct Form3Match {
    Complex c;
    int k = 0;
    AffineMap map;
};

enum class Verdict { StructurallyNonexpansive, ConditionViolated, NoCanonicalForm };

enum class DnkProvenance { Exact, LowerBound };

struct DnkValue {
    double value = 1.0;
    DnkProvenance provenance = DnkProvenance::Exact;
};

/// Supplies d_{n,k}: exact where known (1 when 2k <= n-2, 2/3 at (3,1)),
/// otherwise a cached numerical lower bound from the extremal search. A lower
/// bound can only strengthen ConditionViolated; verdicts that rely on one are
/// flagged conditional.
class DnkSource {
public:
    DnkSource() = default;
    explicit DnkSource(EstimateBudget estimate_budget, std::uint64_t seed = 17)
        : budget_(estimate_budget), seed_(seed) {}

    DnkValue lookup(int n, int k) const;

private:
    EstimateBudget budget_{64, 100};
    std::uint64_t seed_ = 17;
    mutable std::map<std::pair<int, int>, DnkValue> cache_;
};

struct DnkUsed {
    int n = 0, k = 0;
    DnkValue value;
};

struct FormReport {
    std::optional<Form1Match> form1;
    std::optional<Form2Match> form2;
    std::optional<Form3Match> form3;
    Verdict verdict = Verdict::NoCanonicalForm;
    /// Set when the verdict rests on an estimated lower bound for d_{n,k}.
    bool conditional = false;
    std::string detail;
    std::optional<DnkUsed> dnk_used;
};

/// Structural classification against the three canonical forms. Form2
/// detection clusters the roots of the first nonzero image; Form3 parameters
/// are read off images[k] and images[k+1] and verified against every image.
FormReport classify(const MonomialOperator& op, double tol = 1e-7,
                    const DnkSource& dnk = DnkSource{});

struct Counterexample {
    Polynomial p;
    double diam_p = 0.0;
    double diam_lp = 0.0;
    long trial_index = 0;
    std::string label;
};

struct RefutationResult {
    std::optional<Counterexample> counterexample;
    long trials_run = 0;
    long skipped_constant = 0;
    long skipped_solver = 0;
    std::string note;
};

struct RefuteConfig {
    long trials = 1000;          ///< random trials after the adversarial batch
    double tol = 1e-7;           ///< slack in the diameter comparison
    std::uint64_t seed = 1;
    /// Adaptive clustering by default: the adversarial families have multiple
    /// roots, whose noise stars must not masquerade as positive diameters.
    RootConfig roots = multiplicity_config();
};

/// Searches for P with diam Z(L[P]) > diam Z(P) + tol. Adversarial families
/// ((z+a)^s on a grid, z^{t+1} - M z^{t-1} for M in {10,100,1000}) run first,
/// then seeded random trials (half root-sampled, half coefficient-sampled).
/// Trials where P or L[P] is constant are skipped; solver failures are
/// recorded as skipped, never as passes. Finding nothing is a statistical
/// statement, not a certificate.
RefutationResult test_nonexpansive(const MonomialOperator& op, const RefuteConfig& cfg);

struct ProbeViolation {
    int s = 0;
    Complex alpha;
    int distinct_zeros = 0;
};

struct ProbeResult {
    std::vector<ProbeViolation> violations;
    long cases_run = 0;
    long skipped = 0;
};

/// Default 20-point alpha grid (four rings, five angles, no zero).
std::vector<Complex> default_alpha_grid();

/// For each s <= n and alpha in the grid, forms L[(z+alpha)^s] from the
/// monomial images and flags it when it has two or more distinct zeros. Any
/// diameter-nonexpansive operator must produce zero violations (a necessary
/// condition only).
ProbeResult single_zero_probe(const MonomialOperator& op, std::span<const Complex> alpha_grid,
                              const RootConfig& cfg = multiplicity_config());

struct ClaimSolution {
    Complex d, gamma, delta;
    double residual = 0.0;
};

struct ClaimConfig {
    int starts = 64;
    std::uint64_t seed = 1;
};

/// All (d, gamma, delta) with (w+beta)^l - w^l == d[(w+gamma)^l - (w+delta)^l]
/// identically in w, found by seeded multi-start Newton on the coefficient
/// equations and verified against the identity at sample points (residual
/// <= 1e-9). Requires l >= 3 and beta != 0; for l = 2 a one-parameter family
/// exists and the call is rejected.
std::vector<ClaimSolution> claim_solutions(int l, Complex beta, const ClaimConfig& cfg = {});

struct BasisMatrixResult {
    std::vector<std::vector<Complex>> rows;  ///< rows[i][j] = coeff of w^j in (w+lambda_i)^l
    double det_magnitude = 0.0;
    double scale = 0.0;  ///< Hadamard bound, for the scale-invariant test
    bool nonsingular = false;
};

/// Coefficient matrix of the shifted powers (w+lambda_0)^l .. (w+lambda_l)^l;
/// nonsingular exactly when the shifts are pairwise distinct.
BasisMatrixResult shifted_power_basis_matrix(std::span<const Complex> lambdas, int l);

}  // namespace polygeo
