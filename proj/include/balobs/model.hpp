#pragma once

#include "balobs/numeric.hpp"

namespace balobs {

struct ParseError : std::runtime_error {
    int line = 0, col = 0;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + msg),
          line(l), col(c) {}
};

/// Parsed and resolved model: algebra, characters, metrics, curves,
/// metric curves and assumption notes.
struct ModelFile {
    std::string name;
    VarTablePtr vars;
    AlgebraPtr algebra;
    std::vector<std::string> real_vars;    // declaration order, for printing
    std::vector<std::string> complex_vars; // declaration order, for printing
    std::map<std::string, HermMetric> metrics;
    std::map<std::string, OmegaConvention> metric_conventions;
    std::map<std::string, DeformationCurve> curves;
    std::map<std::string, MetricCurve> metric_curves;
    std::vector<std::string> assumptions;
    std::string default_metric;
    std::string default_curve;

    const HermMetric& metric(const std::string& nm = "") const;
    const DeformationCurve& curve(const std::string& nm = "") const;
};

ModelFile parse_model(const std::string& text, const std::string& source_name = "<input>");

/// Canonical re-parseable rendering; parse(print(parse(x))) is stable.
std::string print_model(const ModelFile& m);

/// Expression helpers shared with tests: parse a polynomial / form in
/// the model surface syntax against an existing table or algebra.
GaussPoly parse_poly_expr(const VarTablePtr& table, const std::string& text);
WForm parse_form_expr(const AlgebraPtr& alg, const std::string& text);

/// Re-parseable rendering of a form in the model surface syntax.
std::string form_expr_str(const AlgebraPtr& alg, const WForm& f);

/// Built-in models: iwasawa, nakamura-i, nakamura-ii. A ":curve" suffix
/// (e.g. nakamura-i:class2) selects the default curve.
ModelFile registry(const std::string& name);
std::vector<std::string> registry_names();
/// Raw model source text as embedded (base name, no curve suffix).
const std::string& registry_source(const std::string& name);
/// Default numeric direction used by verify-theorem when no assignment
/// is given; covers the curve coefficients of the registry model.
std::map<std::string, Cplx> registry_fd_defaults(const std::string& name);

} // namespace balobs
