#pragma once

#include "allclear/labels.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace allclear {

// 2x2 contingency counts with XM as the positive class.
struct ContingencyTable {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    std::int64_t tn = 0;

    std::int64_t observed_positives() const { return tp + fn; }
    std::int64_t observed_negatives() const { return fp + tn; }
    std::int64_t total() const { return tp + fp + fn + tn; }
};

ContingencyTable tabulate(const std::vector<BinaryLabel>& y_true,
                          const std::vector<BinaryLabel>& y_pred);

// Every metric returns nullopt when its denominator is zero: an all-clear
// evaluation routinely produces all-CBN predictions where Precision(XM) is
// genuinely undefined, and coercing to 0 would corrupt grid-search rankings.
// Each formula is evaluated in exact integer arithmetic up to one final
// division.
std::optional<double> pofd(const ContingencyTable& ct);
std::optional<double> tss(const ContingencyTable& ct);
std::optional<double> hss(const ContingencyTable& ct);
std::optional<double> gss(const ContingencyTable& ct);
std::optional<double> precision_xm(const ContingencyTable& ct);
std::optional<double> recall_xm(const ContingencyTable& ct);
std::optional<double> precision_cbn(const ContingencyTable& ct);
std::optional<double> recall_cbn(const ContingencyTable& ct);
std::optional<double> far(const ContingencyTable& ct);

struct SkillReport {
    std::optional<double> tss;
    std::optional<double> hss;
    std::optional<double> gss;
    std::optional<double> pofd;
    std::optional<double> far;
    std::optional<double> precision_xm;
    std::optional<double> recall_xm;
    std::optional<double> precision_cbn;
    std::optional<double> recall_cbn;
};

SkillReport report_from_table(const ContingencyTable& ct);
SkillReport full_report(const std::vector<BinaryLabel>& y_true,
                        const std::vector<BinaryLabel>& y_pred);

// Metric names in the CSV/JSON emission order.
const std::vector<std::string>& metric_names();
std::optional<double> metric_by_name(const SkillReport& report, const std::string& name);

} // namespace allclear
