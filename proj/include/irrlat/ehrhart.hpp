#pragma once

#include "irrlat/counting.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace irrlat {

// Exact samples (t, L(t)) for t = 1..t_max, no gaps.
struct EhrhartSeries {
    std::string source;
    std::vector<Int> counts;  // counts[i] = L(i + 1)

    size_t t_max() const { return counts.size(); }
    const Int& at(size_t t) const;  // t in 1..t_max
};

// Samples with the fastest valid counter (scanline for convex polygons,
// inclusion-exclusion for assemblies, brute force otherwise) and audits the
// result against brute force at t = 1 and t = t_max.
EhrhartSeries sample_series(const Polygon& p, size_t t_max, std::string label = "polygon");
EhrhartSeries sample_series(const AssembledPolygon& a, size_t t_max,
                            std::string label = "assembly");

struct PolynomialFit {
    bool ok = false;
    std::vector<Rational> coeffs;  // coeffs[j] multiplies t^j
    Int first_violation_t = 0;     // meaningful when !ok
};

// Solves the leading samples exactly on the Vandermonde system and verifies
// every remaining sample exactly; no least squares anywhere.
PolynomialFit fit_polynomial(const EhrhartSeries& series, unsigned degree);

Rational eval_polynomial(const std::vector<Rational>& coeffs, const Int& t);
std::string format_polynomial(const std::vector<Rational>& coeffs,
                              const std::string& var = "t");

// Period p with one rational polynomial per residue class of t mod p.
struct QuasiPolynomial {
    Int period;
    std::vector<std::vector<Rational>> classes;  // indexed by t mod period

    Rational eval(const Int& t) const;
};

enum class CollapseVerdict { Polynomial, Quasi, NoFit };

enum class ClosedFormOutcome { NotApplicable, Match, Mismatch };

struct CollapseReport {
    std::string source;
    CollapseVerdict verdict = CollapseVerdict::NoFit;
    Int period = 0;  // 1 for Polynomial, p for Quasi, 0 for NoFit
    Int period_searched = 0;
    size_t t_max = 0;
    unsigned degree = 0;
    std::optional<QuasiPolynomial> fitted;
    bool non_integral_vertices = false;
    ClosedFormOutcome closed_form = ClosedFormOutcome::NotApplicable;
    Int closed_form_mismatch_t = 0;
    Int closed_form_expected = 0;
    Int closed_form_got = 0;

    std::string render() const;
};

// Searches periods p = 1..p_max in order, fitting every residue class
// exactly; the verdict is Polynomial iff p = 1 fits. A NoFit verdict is a
// bounded-search negative over the sampled range, never a proof.
CollapseReport detect_quasi(const EhrhartSeries& series, unsigned degree, const Int& p_max);

// Closed forms. Values are exact integers; each evaluation uses exact
// rational arithmetic and exact floors.
Int closed_form_cgls(const Int& alpha, const Int& beta, const Int& t);
Int closed_form_leg_sum(const Int& leg_sum, const Int& t);  // (s/2)t^2 + (s/2)t + 1
Int closed_form_pyramid(const Int& base_len, const Int& t);
Int closed_form_counterexample(const QuadraticNumber& h, const Int& beta, const Int& t);
// Total of the 2k ray-edge counts: (n_total + beta*k)t + k.
Int closed_form_fan_edges(const Int& n_total, const Int& k_half, const Int& beta,
                          const Int& t);
// Inclusion-exclusion form: sum of piece closed forms minus the ray edges
// plus the origin.
Int closed_form_fan(const AssembledPolygon& a, const Int& t);

// Which closed form applies to a target, if any.
struct NoClosedForm {};
struct CglsForm {
    Int alpha, beta;
};
struct LegSumForm {
    Int sum;
};
struct CounterexampleForm {
    QuadraticNumber h;
    Int beta;
};
struct FanForm {};
using ClosedFormRef =
    std::variant<NoClosedForm, CglsForm, LegSumForm, CounterexampleForm, FanForm>;

bool has_non_integral_vertex(const Polygon& p);

// Full pipeline: sample (audited), fit, compare against the applicable
// closed form sample-by-sample, and report non-integrality of the vertices.
CollapseReport verify_collapse(const Polygon& p, const ClosedFormRef& cf, size_t t_max,
                               const Int& p_max, unsigned degree,
                               std::string label = "polygon");
CollapseReport verify_collapse(const AssembledPolygon& a, const ClosedFormRef& cf,
                               size_t t_max, const Int& p_max, unsigned degree,
                               std::string label = "assembly");

}  // namespace irrlat
