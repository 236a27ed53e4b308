#include "irrlat/ehrhart.hpp"

#include "irrlat/errors.hpp"

#include <utility>

namespace irrlat {

const Int& EhrhartSeries::at(size_t t) const {
    if (t < 1 || t > counts.size())
        throw DomainError("series has no sample at t = " + std::to_string(t));
    return counts[t - 1];
}

namespace {

void audit_against_bruteforce(const std::vector<Int>& counts, const Polygon& reference,
                              const std::string& label) {
    for (size_t t : {size_t(1), counts.size()}) {
        Int oracle = count_bruteforce(reference, Int(t)).count;
        if (oracle != counts[t - 1])
            throw InternalError("count audit failed for " + label + " at t = " +
                                std::to_string(t) + ": fast " + counts[t - 1].str() +
                                " vs brute force " + oracle.str());
    }
}

}  // namespace

EhrhartSeries sample_series(const Polygon& p, size_t t_max, std::string label) {
    if (t_max < 3) throw DomainError("t_max must be at least 3");
    std::vector<Int> counts;
    counts.reserve(t_max);
    const bool convex = is_convex(p);
    for (size_t t = 1; t <= t_max; ++t)
        counts.push_back(convex ? count_scanline(p, Int(t)).count
                                : count_bruteforce(p, Int(t)).count);
    if (convex) audit_against_bruteforce(counts, p, label);
    return {std::move(label), std::move(counts)};
}

EhrhartSeries sample_series(const AssembledPolygon& a, size_t t_max, std::string label) {
    if (t_max < 3) throw DomainError("t_max must be at least 3");
    std::vector<Int> counts;
    counts.reserve(t_max);
    for (size_t t = 1; t <= t_max; ++t) counts.push_back(count_assembled(a, Int(t)).count);
    audit_against_bruteforce(counts, a.outer, label);
    return {std::move(label), std::move(counts)};
}

namespace {

// Exact Gaussian elimination; matrices here are at most 4x4.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m,
                                   std::vector<Rational> rhs) {
    const size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw InternalError("singular system in exact solve");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Rational> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = rhs[i] / m[i][i];
    return out;
}

// Interpolates through the first degree+1 points and returns the exact
// coefficients; the caller verifies the rest.
std::vector<Rational> interpolate(const std::vector<std::pair<Int, Int>>& pts,
                                  unsigned degree) {
    const size_t n = degree + 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (size_t i = 0; i < n; ++i) {
        Rational t(pts[i].first);
        Rational power = 1;
        for (size_t j = 0; j < n; ++j) {
            m[i][j] = power;
            power *= t;
        }
        rhs[i] = Rational(pts[i].second);
    }
    return solve_linear(std::move(m), std::move(rhs));
}

}  // namespace

Rational eval_polynomial(const std::vector<Rational>& coeffs, const Int& t) {
    Rational acc = 0;
    Rational tf(t);
    for (size_t j = coeffs.size(); j-- > 0;) acc = acc * tf + coeffs[j];
    return acc;
}

std::string format_polynomial(const std::vector<Rational>& coeffs, const std::string& var) {
    std::string out;
    for (size_t j = coeffs.size(); j-- > 0;) {
        const Rational& c = coeffs[j];
        if (c == 0 && coeffs.size() > 1) continue;
        std::string term;
        if (j == 0)
            term = format_rational(abs(c));
        else {
            if (abs(c) != 1) term = format_rational(abs(c)) + "*";
            term += var;
            if (j > 1) term += "^" + std::to_string(j);
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    if (out.empty()) out = "0";
    return out;
}

PolynomialFit fit_polynomial(const EhrhartSeries& series, unsigned degree) {
    if (degree > 3) throw DomainError("fit degree must be at most 3");
    if (series.counts.size() < degree + 2)
        throw DomainError("need at least degree + 2 samples to fit and verify");
    std::vector<std::pair<Int, Int>> lead;
    for (size_t t = 1; t <= degree + 1; ++t) lead.emplace_back(Int(t), series.at(t));
    std::vector<Rational> coeffs = interpolate(lead, degree);
    for (size_t t = 1; t <= series.t_max(); ++t) {
        if (eval_polynomial(coeffs, Int(t)) != Rational(series.at(t)))
            return {false, {}, Int(t)};
    }
    return {true, std::move(coeffs), 0};
}

Rational QuasiPolynomial::eval(const Int& t) const {
    Int r = t % period;
    if (r < 0) r += period;
    return eval_polynomial(classes[r.convert_to<size_t>()], t);
}

CollapseReport detect_quasi(const EhrhartSeries& series, unsigned degree, const Int& p_max) {
    if (p_max < 1) throw DomainError("p_max must be at least 1");
    if (Int(series.t_max()) < Int(degree + 2) * p_max)
        throw DomainError("need t_max >= (degree + 2) * p_max so every residue class is determined");

    CollapseReport rep;
    rep.source = series.source;
    rep.t_max = series.t_max();
    rep.degree = degree;
    rep.period_searched = p_max;

    for (Int p = 1; p <= p_max; ++p) {
        const size_t period = p.convert_to<size_t>();
        std::vector<std::vector<Rational>> classes(period);
        bool all_fit = true;
        for (size_t r = 0; r < period && all_fit; ++r) {
            std::vector<std::pair<Int, Int>> pts;
            for (size_t t = (r == 0 ? period : r); t <= series.t_max(); t += period)
                pts.emplace_back(Int(t), series.at(t));
            if (pts.size() < degree + 2) throw InternalError("undersampled residue class");
            std::vector<Rational> coeffs = interpolate(
                std::vector<std::pair<Int, Int>>(pts.begin(), pts.begin() + degree + 1),
                degree);
            for (const auto& [t, v] : pts) {
                if (eval_polynomial(coeffs, t) != Rational(v)) {
                    all_fit = false;
                    break;
                }
            }
            classes[r] = std::move(coeffs);
        }
        if (all_fit) {
            rep.verdict = period == 1 ? CollapseVerdict::Polynomial : CollapseVerdict::Quasi;
            rep.period = p;
            rep.fitted = QuasiPolynomial{p, std::move(classes)};
            return rep;
        }
    }
    rep.verdict = CollapseVerdict::NoFit;
    return rep;
}

namespace {

Int exact_int(const Rational& q, const char* what) {
    if (!is_integer(q))
        throw InternalError(std::string(what) + " evaluated to non-integer " +
                            format_rational(q));
    return numerator(q);
}

}  // namespace

Int closed_form_cgls(const Int& alpha, const Int& beta, const Int& t) {
    Rational v = Rational(beta, 2 * alpha) * t * t + Rational(beta, 2) * t + 1;
    return exact_int(v, "CGLS closed form");
}

Int closed_form_leg_sum(const Int& leg_sum, const Int& t) {
    Rational v = Rational(leg_sum, 2) * t * t + Rational(leg_sum, 2) * t + 1;
    return exact_int(v, "leg-sum closed form");
}

Int closed_form_pyramid(const Int& base_len, const Int& t) {
    return closed_form_leg_sum(base_len, t);
}

Int closed_form_counterexample(const QuadraticNumber& h, const Int& beta, const Int& t) {
    return beta * t * t + beta * t - floor_int(h * Rational(t)) + 1;
}

Int closed_form_fan_edges(const Int& n_total, const Int& k_half, const Int& beta,
                          const Int& t) {
    return (n_total + beta * k_half) * t + k_half;
}

Int closed_form_fan(const AssembledPolygon& a, const Int& t) {
    if (a.kind != AssemblyKind::Fan)
        throw DomainError("fan closed form needs a fan assembly");
    Int total = 0;
    for (const Int& s : a.piece_leg_sums) total += closed_form_leg_sum(s, t);
    total -= closed_form_fan_edges(a.n_total, a.half_sectors, a.beta, t);
    return total + 1;
}

bool has_non_integral_vertex(const Polygon& p) {
    for (const Point& v : p.vertices())
        if (!v.x.is_integer() || !v.y.is_integer()) return true;
    return false;
}

namespace {

std::optional<Int> closed_form_value(const ClosedFormRef& cf, const AssembledPolygon* a,
                                     const Int& t) {
    if (std::holds_alternative<NoClosedForm>(cf)) return std::nullopt;
    if (const auto* f = std::get_if<CglsForm>(&cf))
        return closed_form_cgls(f->alpha, f->beta, t);
    if (const auto* f = std::get_if<LegSumForm>(&cf)) return closed_form_leg_sum(f->sum, t);
    if (const auto* f = std::get_if<CounterexampleForm>(&cf))
        return closed_form_counterexample(f->h, f->beta, t);
    if (!a) throw DomainError("fan closed form needs the assembly data");
    return closed_form_fan(*a, t);
}

void attach_closed_form(CollapseReport& rep, const EhrhartSeries& series,
                        const ClosedFormRef& cf, const AssembledPolygon* a) {
    if (std::holds_alternative<NoClosedForm>(cf)) return;
    rep.closed_form = ClosedFormOutcome::Match;
    for (size_t t = 1; t <= series.t_max(); ++t) {
        Int expected = *closed_form_value(cf, a, Int(t));
        if (expected != series.at(t)) {
            rep.closed_form = ClosedFormOutcome::Mismatch;
            rep.closed_form_mismatch_t = Int(t);
            rep.closed_form_expected = expected;
            rep.closed_form_got = series.at(t);
            return;
        }
    }
}

}  // namespace

CollapseReport verify_collapse(const Polygon& p, const ClosedFormRef& cf, size_t t_max,
                               const Int& p_max, unsigned degree, std::string label) {
    EhrhartSeries series = sample_series(p, t_max, std::move(label));
    CollapseReport rep = detect_quasi(series, degree, p_max);
    rep.non_integral_vertices = has_non_integral_vertex(p);
    attach_closed_form(rep, series, cf, nullptr);
    return rep;
}

CollapseReport verify_collapse(const AssembledPolygon& a, const ClosedFormRef& cf,
                               size_t t_max, const Int& p_max, unsigned degree,
                               std::string label) {
    EhrhartSeries series = sample_series(a, t_max, std::move(label));
    CollapseReport rep = detect_quasi(series, degree, p_max);
    rep.non_integral_vertices = has_non_integral_vertex(a.outer);
    attach_closed_form(rep, series, cf, &a);
    return rep;
}

std::string CollapseReport::render() const {
    std::string out;
    out += "target: " + source + "\n";
    out += "samples: t = 1.." + std::to_string(t_max) + " (exact, audited against brute force)\n";
    out += std::string("non-integral vertices: ") + (non_integral_vertices ? "yes" : "no") +
           "\n";
    switch (verdict) {
        case CollapseVerdict::Polynomial:
            out += "verdict: polynomial (period 1)\n";
            out += "  L(t) = " + format_polynomial(fitted->classes[0]) + "\n";
            break;
        case CollapseVerdict::Quasi:
            out += "verdict: quasi-polynomial with period " + period.str() + "\n";
            for (size_t r = 0; r < fitted->classes.size(); ++r)
                out += "  t = " + std::to_string(r) + " (mod " + period.str() +
                       "): L(t) = " + format_polynomial(fitted->classes[r]) + "\n";
            break;
        case CollapseVerdict::NoFit:
            out += "verdict: no quasi-polynomial of degree " + std::to_string(degree) +
                   " with period <= " + period_searched.str() + " fits t = 1.." +
                   std::to_string(t_max) +
                   " (bounded search over finite samples, not a proof)\n";
            break;
    }
    switch (closed_form) {
        case ClosedFormOutcome::NotApplicable:
            out += "closed form: none applicable\n";
            break;
        case ClosedFormOutcome::Match:
            out += "closed form: matches every sample\n";
            break;
        case ClosedFormOutcome::Mismatch:
            out += "closed form: MISMATCH at t = " + closed_form_mismatch_t.str() +
                   " (expected " + closed_form_expected.str() + ", sampled " +
                   closed_form_got.str() + ")\n";
            break;
    }
    return out;
}

}  // namespace irrlat
