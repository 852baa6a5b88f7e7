#include "sft/average.hpp"

#include "sft/errors.hpp"

namespace sft {

AverageReport average_report(const std::vector<EpBiSeq>& points,
                             const std::optional<EpBiSeq>& candidate, std::int64_t horizon) {
    if (horizon < 1) throw PreconditionError("average_report: horizon must be positive");
    const auto len = static_cast<std::int64_t>(points.size());
    if (len < horizon + 1)
        throw HorizonTooLongError("average_report: need horizon + 1 points for one step-error window");

    std::vector<DyadicDist> step;
    step.reserve(static_cast<std::size_t>(len - 1));
    for (std::int64_t i = 0; i + 1 < len; ++i)
        step.push_back(dist(points[static_cast<std::size_t>(i)].shifted(1),
                            points[static_cast<std::size_t>(i) + 1]));

    AverageReport report;
    report.horizon = horizon;
    BigRat worst = BigRat::zero();
    for (std::int64_t start = 0; start + horizon <= len - 1; ++start) {
        DyadicSum window;
        for (std::int64_t i = 0; i < horizon; ++i)
            window.add(step[static_cast<std::size_t>(start + i)]);
        BigRat avg = window.averaged_over(static_cast<std::uint64_t>(horizon));
        if (worst < avg) worst = avg;
    }
    report.worst_window_average = std::move(worst);

    if (candidate) {
        DyadicSum trace;
        report.running_tracing_average.reserve(static_cast<std::size_t>(horizon));
        for (std::int64_t j = 1; j <= horizon; ++j) {
            trace.add(dist(candidate->shifted(j - 1), points[static_cast<std::size_t>(j - 1)]));
            report.running_tracing_average.push_back(
                trace.averaged_over(static_cast<std::uint64_t>(j)));
        }
    }
    return report;
}

} // namespace sft
