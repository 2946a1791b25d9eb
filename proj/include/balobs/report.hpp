#pragma once

#include "balobs/model.hpp"

namespace balobs {

/// Shared header of every report.
struct ReportContext {
    std::string command;
    std::string model;
    std::string convention;
    std::string curve;
    std::string metric;
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;
};

enum class ReportFormat { Text, Json };

std::string fmt_double(double v);
std::string fmt_complex(const Cplx& z);

std::string report_check_algebra(const ReportContext& cx, const DSquaredReport& rep, ReportFormat f);
std::string report_balanced(const ReportContext& cx, const AlgebraPtr& alg,
                            const BalancedResult& res, ReportFormat f);
std::string report_mc_residual(const ReportContext& cx, const AlgebraPtr& alg, const VForm& residual,
                               ReportFormat f);
std::string report_obstruction(const ReportContext& cx, const AlgebraPtr& alg, const WForm& theta,
                               ReportFormat f);
std::string report_conditions(const ReportContext& cx, const AlgebraPtr& alg,
                              const ClassResidual& cr, ReportFormat f);
std::string report_verdict(const ReportContext& cx, const AlgebraPtr& alg, const ClassResidual& cr,
                           const VerdictResult& v, ReportFormat f);
std::string report_fd(const ReportContext& cx, const FDReport& rep, ReportFormat f);
std::string report_cohomology(const ReportContext& cx, const AlgebraPtr& alg,
                              const std::vector<std::pair<Weight, int>>& dims, int total,
                              ReportFormat f);

} // namespace balobs
