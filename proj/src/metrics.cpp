#include "allclear/metrics.hpp"

#include "allclear/errors.hpp"

namespace allclear {

ContingencyTable tabulate(const std::vector<BinaryLabel>& y_true,
                          const std::vector<BinaryLabel>& y_pred) {
    if (y_true.empty()) throw DataError("tabulate: empty label sequence");
    if (y_true.size() != y_pred.size()) {
        throw DataError("tabulate: length mismatch (" + std::to_string(y_true.size()) + " vs " +
                        std::to_string(y_pred.size()) + ")");
    }
    ContingencyTable ct;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const bool actual = y_true[i] == BinaryLabel::XM;
        const bool predicted = y_pred[i] == BinaryLabel::XM;
        if (actual && predicted) ++ct.tp;
        else if (!actual && predicted) ++ct.fp;
        else if (actual && !predicted) ++ct.fn;
        else ++ct.tn;
    }
    return ct;
}

static std::optional<double> ratio(std::int64_t num, std::int64_t den) {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
}

std::optional<double> pofd(const ContingencyTable& ct) {
    return ratio(ct.fp, ct.fp + ct.tn);
}

std::optional<double> tss(const ContingencyTable& ct) {
    const auto pod = ratio(ct.tp, ct.tp + ct.fn);
    const auto false_detection = pofd(ct);
    if (!pod || !false_detection) return std::nullopt;
    return *pod - *false_detection;
}

std::optional<double> hss(const ContingencyTable& ct) {
    const std::int64_t p = ct.observed_positives();
    const std::int64_t n = ct.observed_negatives();
    const std::int64_t den = p * (ct.fn + ct.tn) + n * (ct.tp + ct.fp);
    if (den == 0) return std::nullopt;
    const std::int64_t num = 2 * (ct.tp * ct.tn - ct.fn * ct.fp);
    return static_cast<double>(num) / static_cast<double>(den);
}

std::optional<double> gss(const ContingencyTable& ct) {
    // CH = (TP+FP)(TP+FN)/total is rational; clearing the shared /total
    // keeps both sides integral:
    //   GSS = (TP*total - (TP+FP)(TP+FN)) / ((TP+FP+FN)*total - (TP+FP)(TP+FN))
    const std::int64_t total = ct.total();
    if (total == 0) return std::nullopt;
    const std::int64_t chance = (ct.tp + ct.fp) * (ct.tp + ct.fn);
    const std::int64_t num = ct.tp * total - chance;
    const std::int64_t den = (ct.tp + ct.fp + ct.fn) * total - chance;
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
}

std::optional<double> precision_xm(const ContingencyTable& ct) {
    return ratio(ct.tp, ct.tp + ct.fp);
}

std::optional<double> recall_xm(const ContingencyTable& ct) {
    return ratio(ct.tp, ct.tp + ct.fn);
}

std::optional<double> precision_cbn(const ContingencyTable& ct) {
    return ratio(ct.tn, ct.tn + ct.fn);
}

std::optional<double> recall_cbn(const ContingencyTable& ct) {
    return ratio(ct.tn, ct.tn + ct.fp);
}

std::optional<double> far(const ContingencyTable& ct) {
    return ratio(ct.fp, ct.fp + ct.tp);
}

SkillReport report_from_table(const ContingencyTable& ct) {
    SkillReport r;
    r.tss = tss(ct);
    r.hss = hss(ct);
    r.gss = gss(ct);
    r.pofd = pofd(ct);
    r.far = far(ct);
    r.precision_xm = precision_xm(ct);
    r.recall_xm = recall_xm(ct);
    r.precision_cbn = precision_cbn(ct);
    r.recall_cbn = recall_cbn(ct);
    return r;
}

SkillReport full_report(const std::vector<BinaryLabel>& y_true,
                        const std::vector<BinaryLabel>& y_pred) {
    return report_from_table(tabulate(y_true, y_pred));
}

const std::vector<std::string>& metric_names() {
    static const std::vector<std::string> names = {
        "tss", "hss", "gss", "pofd", "far",
        "precision_xm", "recall_xm", "precision_cbn", "recall_cbn"};
    return names;
}

std::optional<double> metric_by_name(const SkillReport& report, const std::string& name) {
    if (name == "tss") return report.tss;
    if (name == "hss") return report.hss;
    if (name == "gss") return report.gss;
    if (name == "pofd") return report.pofd;
    if (name == "far") return report.far;
    if (name == "precision_xm") return report.precision_xm;
    if (name == "recall_xm") return report.recall_xm;
    if (name == "precision_cbn") return report.precision_cbn;
    if (name == "recall_cbn") return report.recall_cbn;
    throw ConfigError("unknown metric '" + name + "'");
}

} // namespace allclear
