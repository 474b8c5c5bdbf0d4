#include <steinerhat/error.hpp>
#include <steinerhat/polynomial.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace steinerhat {

RealPolynomial::RealPolynomial(std::vector<double> ascending) : coefficients_(std::move(ascending)) {
    while (!coefficients_.empty() && coefficients_.back() == 0.0) coefficients_.pop_back();
}

RealPolynomial::RealPolynomial(std::initializer_list<double> ascending)
    : RealPolynomial(std::vector<double>(ascending)) {}

double RealPolynomial::coefficient(int k) const noexcept {
    if (k < 0 || k > degree()) return 0.0;
    return coefficients_[static_cast<std::size_t>(k)];
}

double RealPolynomial::operator()(double x) const noexcept {
    double acc = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RealPolynomial RealPolynomial::derivative() const {
    if (coefficients_.size() <= 1) return {};
    std::vector<double> d(coefficients_.size() - 1);
    for (std::size_t k = 1; k < coefficients_.size(); ++k) d[k - 1] = static_cast<double>(k) * coefficients_[k];
    return RealPolynomial(std::move(d));
}

double RealPolynomial::scale_at(double x) const noexcept {
    double acc = 0.0;
    const double ax = std::abs(x);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * ax + std::abs(*it);
    return acc;
}

RealPolynomial operator*(const RealPolynomial& p, const RealPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<double> out(p.coefficients_.size() + q.coefficients_.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < q.coefficients_.size(); ++j) {
            out[i + j] += p.coefficients_[i] * q.coefficients_[j];
        }
    }
    return RealPolynomial(std::move(out));
}

double cubic_discriminant(const RealPolynomial& p) {
    if (p.degree() != 3) throw GeometryError(ErrorCode::InvalidArgument, "cubic_discriminant needs degree 3");
    const double a = p.coefficient(3), b = p.coefficient(2), c = p.coefficient(1), d = p.coefficient(0);
    return 18.0 * a * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * a * c * c * c - 27.0 * a * a * d * d;
}

int root_count(std::span<const RealRoot> roots) noexcept {
    int n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
}

namespace {

double cauchy_bound(const RealPolynomial& p) {
    const double lead = std::abs(p.leading());
    double m = 0.0;
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, std::abs(p.coefficient(k)) / lead);
    return 1.0 + m;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Root of a polynomial that is monotone on [lo, hi] with a strict sign change.
double bracketed_root(const RealPolynomial& p, const RealPolynomial& dp, double lo, double hi) {
    double flo = p(lo);
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double fx = p(x);
        if (fx == 0.0) return x;
        if (sign_of(fx) == sign_of(flo)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        // Newton candidate, accepted only if it stays inside the bracket.
        const double d = dp(x);
        double next = (d != 0.0) ? x - fx / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x)) ||
            hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
            return next;
        }
        x = next;
    }
    return x;
}

// Multiplicity of a root located at a critical point: at least two, plus one for
// every further derivative that vanishes there.
int critical_multiplicity(const RealPolynomial& p, double r, const RootOptions& opt) {
    int m = 2;
    RealPolynomial d = p.derivative().derivative();
    while (!d.is_zero() && m < p.degree()) {
        if (std::abs(d(r)) > opt.derivative_eps * d.scale_at(r)) break;
        ++m;
        d = d.derivative();
    }
    return m;
}

std::vector<RealRoot> isolate_roots(const RealPolynomial& p, const RootOptions& opt) {
    const int n = p.degree();
    if (n <= 0) return {};
    if (n == 1) return {{-p.coefficient(0) / p.coefficient(1), 1}};

    const RealPolynomial dp = p.derivative();
    const std::vector<RealRoot> critical = isolate_roots(dp, opt);
    const double bound = cauchy_bound(p);

    std::vector<double> knots;
    knots.reserve(critical.size() + 2);
    knots.push_back(-bound);
    for (const auto& c : critical) {
        if (c.value > -bound && c.value < bound) knots.push_back(c.value);
    }
    knots.push_back(bound);

    std::vector<bool> zero_at(knots.size(), false);
    std::vector<RealRoot> roots;
    for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
        const double c = knots[i];
        if (std::abs(p(c)) <= opt.zero_eps * p.scale_at(c)) {
            zero_at[i] = true;
            roots.push_back({c, critical_multiplicity(p, c, opt)});
        }
    }
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        if (zero_at[i] || zero_at[i + 1]) continue;
        const double lo = knots[i];
        const double hi = knots[i + 1];
        if (sign_of(p(lo)) * sign_of(p(hi)) < 0) roots.push_back({bracketed_root(p, dp, lo, hi), 1});
    }
    std::sort(roots.begin(), roots.end(), [](const RealRoot& x, const RealRoot& y) { return x.value < y.value; });
    return roots;
}

}  // namespace

std::vector<RealRoot> poly_real_roots(const RealPolynomial& p, std::optional<Interval> interval,
                                      const RootOptions& options) {
    if (p.is_zero()) throw GeometryError(ErrorCode::DegenerateInput, "zero polynomial has no isolated roots");
    if (p.degree() > 8) throw GeometryError(ErrorCode::InvalidArgument, "degree above 8 is not supported");

    std::vector<RealRoot> out;
    for (const RealRoot& r : isolate_roots(p, options)) {
        if (interval) {
            const double slack = options.interval_slack * std::max({1.0, std::abs(interval->lo), std::abs(interval->hi)});
            if (r.value < interval->lo - slack || r.value > interval->hi + slack) continue;
        }
        out.push_back(r);
    }
    return out;
}

std::vector<double> cubic_real_roots_closed_form(const RealPolynomial& p) {
    if (p.degree() != 3) throw GeometryError(ErrorCode::InvalidArgument, "closed form needs degree 3");
    const double a = p.coefficient(3);
    const double b = p.coefficient(2) / a;
    const double c = p.coefficient(1) / a;
    const double d = p.coefficient(0) / a;
    // Depressed cubic y³ + P y + Q with x = y - b/3.
    const double shift = b / 3.0;
    const double P = c - b * b / 3.0;
    const double Q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const double disc = Q * Q / 4.0 + P * P * P / 27.0;
    const double scale = std::max(std::abs(P) * std::abs(P) * std::abs(P) / 27.0, Q * Q / 4.0);
    const double size = std::max({std::abs(b * b), std::abs(c), 1e-300});

    std::vector<double> roots;
    if (std::abs(disc) <= 1e-14 * scale || scale == 0.0) {
        if (std::abs(P) <= 1e-14 * size) {
            roots = {-shift, -shift, -shift};
        } else {
            const double u = std::cbrt(-Q / 2.0);
            roots = {2.0 * u - shift, -u - shift, -u - shift};
        }
    } else if (disc < 0.0) {
        const double r = 2.0 * std::sqrt(-P / 3.0);
        const double arg = std::clamp(3.0 * Q / (P * r), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) {
            roots.push_back(r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - shift);
        }
    } else {
        const double s = std::sqrt(disc);
        roots = {std::cbrt(-Q / 2.0 + s) + std::cbrt(-Q / 2.0 - s) - shift};
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace steinerhat
