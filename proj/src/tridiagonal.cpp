#include "mie/tridiagonal.hpp"

#include "mie/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mie {

void Tridiagonal::validate() const {
    if (diag.empty()) throw domain_error("Tridiagonal: empty matrix");
    if (offdiag.size() + 1 != diag.size())
        throw domain_error("Tridiagonal: offdiag must have length m - 1");
    for (double d : diag)
        if (!std::isfinite(d)) throw domain_error("Tridiagonal: non-finite diagonal entry");
    for (double e : offdiag)
        if (!std::isfinite(e)) throw domain_error("Tridiagonal: non-finite off-diagonal entry");
}

namespace {

struct SturmData {
    const std::vector<double>& diag;
    std::vector<double> e2;
    double pivmin;
};

SturmData prepare(const Tridiagonal& t) {
    SturmData s{t.diag, std::vector<double>(t.offdiag.size()), 0.0};
    double emax = 1.0;
    for (std::size_t i = 0; i < t.offdiag.size(); ++i) {
        s.e2[i] = t.offdiag[i] * t.offdiag[i];
        emax = std::max(emax, s.e2[i]);
    }
    s.pivmin = std::numeric_limits<double>::min() * emax;
    return s;
}

std::size_t count_below(const SturmData& s, double x) {
    std::size_t neg = 0;
    double q = s.diag[0] - x;
    if (std::abs(q) < s.pivmin) q = -s.pivmin;
    if (q < 0.0) ++neg;
    for (std::size_t i = 1; i < s.diag.size(); ++i) {
        q = s.diag[i] - x - s.e2[i - 1] / q;
        if (std::abs(q) < s.pivmin) q = -s.pivmin;
        if (q < 0.0) ++neg;
    }
    return neg;
}

} // namespace

std::size_t sturm_count(const Tridiagonal& t, double x) {
    t.validate();
    return count_below(prepare(t), x);
}

std::pair<double, double> gershgorin_bounds(const Tridiagonal& t) {
    t.validate();
    const std::size_t m = t.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < m; ++i) {
        double rad = 0.0;
        if (i > 0) rad += std::abs(t.offdiag[i - 1]);
        if (i + 1 < m) rad += std::abs(t.offdiag[i]);
        lo = std::min(lo, t.diag[i] - rad);
        hi = std::max(hi, t.diag[i] + rad);
    }
    // Widen slightly so the endpoints are strict bounds after rounding.
    const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)) +
                       std::numeric_limits<double>::min();
    return {lo - pad, hi + pad};
}

std::vector<double> eigen_lowest(const Tridiagonal& t, std::size_t count, double tolerance) {
    t.validate();
    if (count > t.size()) throw domain_error("eigen_lowest: more eigenvalues requested than matrix size");
    if (tolerance < 0.0) throw domain_error("eigen_lowest: tolerance must be non-negative");

    const SturmData s = prepare(t);
    const auto [glo, ghi] = gershgorin_bounds(t);
    constexpr double ulp = std::numeric_limits<double>::epsilon();

    std::vector<double> out;
    out.reserve(count);
    double floor = glo; // eigenvalue j >= eigenvalue j-1
    for (std::size_t j = 0; j < count; ++j) {
        double lo = floor, hi = ghi;
        // Invariant: count_below(lo) <= j < count_below(hi).
        while (true) {
            const double width = hi - lo;
            const double scale = std::max(std::abs(lo), std::abs(hi));
            if (width <= std::max(tolerance, 4.0 * ulp * scale)) break;
            const double mid = lo + 0.5 * width;
            if (mid <= lo || mid >= hi) break;
            if (count_below(s, mid) > j)
                hi = mid;
            else
                lo = mid;
        }
        const double lambda = lo + 0.5 * (hi - lo);
        out.push_back(lambda);
        floor = lo;
    }
    return out;
}

} // namespace mie
