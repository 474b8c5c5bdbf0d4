/**
 * @file polynomial.hpp
 * @brief Univariate real polynomials with real-root extraction.
 */
#pragma once

#include <optional>
#include <span>
#include <vector>

namespace steinerhat {

/// Coefficients in ascending degree; trailing exact zeros are dropped.
class RealPolynomial {
public:
    RealPolynomial() = default;
    explicit RealPolynomial(std::vector<double> ascending);
    RealPolynomial(std::initializer_list<double> ascending);

    [[nodiscard]] bool is_zero() const noexcept { return coefficients_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    [[nodiscard]] std::span<const double> coefficients() const noexcept { return coefficients_; }
    [[nodiscard]] double coefficient(int k) const noexcept;
    [[nodiscard]] double leading() const noexcept { return coefficients_.empty() ? 0.0 : coefficients_.back(); }

    [[nodiscard]] double operator()(double x) const noexcept;
    [[nodiscard]] RealPolynomial derivative() const;
    /// Σ |c_k| |x|^k, the magnitude against which residuals at x are judged.
    [[nodiscard]] double scale_at(double x) const noexcept;

    friend RealPolynomial operator*(const RealPolynomial& p, const RealPolynomial& q);

private:
    std::vector<double> coefficients_;
};

/// Discriminant of a cubic c3 x³ + c2 x² + c1 x + c0 (degree must be exactly 3).
[[nodiscard]] double cubic_discriminant(const RealPolynomial& p);

struct RealRoot {
    double value{0.0};
    int multiplicity{1};
};

struct Interval {
    double lo{0.0};
    double hi{0.0};
};

struct RootOptions {
    /// A critical point c is a multiple root when |p(c)| <= zero_eps * scale_at(c).
    double zero_eps{1e-12};
    /// Derivatives with |p^(k)(r)| <= derivative_eps * scale_at(r) count toward multiplicity.
    double derivative_eps{1e-6};
    /// Slack applied to both ends of an interval filter.
    double interval_slack{1e-9};
};

/**
 * All real roots of `p` (degree <= 8) in ascending order.
 *
 * Roots are isolated between consecutive real critical points (found
 * recursively from the derivative), where `p` is monotone, then bracketed
 * by bisection and polished with Newton steps. A critical point at which
 * `p` vanishes is reported once, with multiplicity read off the derivative
 * residuals.
 *
 * Throws DegenerateInput for the zero polynomial and InvalidArgument for degree > 8.
 */
[[nodiscard]] std::vector<RealRoot> poly_real_roots(const RealPolynomial& p,
                                                    std::optional<Interval> interval = std::nullopt,
                                                    const RootOptions& options = {});

/// Sum of multiplicities.
[[nodiscard]] int root_count(std::span<const RealRoot> roots) noexcept;

/// Trigonometric / Cardano closed form for a cubic; roots ascending, repeated roots repeated.
[[nodiscard]] std::vector<double> cubic_real_roots_closed_form(const RealPolynomial& p);

}  // namespace steinerhat
