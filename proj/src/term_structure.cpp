#include "tvo/term_structure.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "tvo/errors.hpp"

namespace tvo {

TermStructure::TermStructure(std::vector<double> times, std::vector<double> values,
                             std::string name)
    : times_(std::move(times)), values_(std::move(values)), name_(std::move(name)) {
    if (times_.empty()) throw InputError(name_ + ": needs at least one pillar");
    if (times_.size() != values_.size())
        throw InputError(name_ + ": pillar times/values size mismatch");
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (!std::isfinite(times_[i]) || !std::isfinite(values_[i]))
            throw InputError(name_ + ": pillar " + std::to_string(i) + " not finite");
        if (times_[i] < 0.0)
            throw InputError(name_ + ": pillar " + std::to_string(i) + " time is negative");
        if (i > 0 && !(times_[i] > times_[i - 1]))
            throw InputError(name_ + ": pillar times not strictly increasing at index " +
                             std::to_string(i));
    }
}

TermStructure TermStructure::flat(double value) { return TermStructure({0.0}, {value}); }

double TermStructure::value(double t) const {
    // First interval whose start exceeds t, step back one.
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    if (it == times_.begin()) return values_.front();
    const std::size_t idx = static_cast<std::size_t>(it - times_.begin()) - 1;
    return values_[idx];
}

double TermStructure::integral(double t1, double t2) const {
    if (t2 < t1) throw InputError(name_ + ": integral needs t1 <= t2");
    if (t2 == t1) return 0.0;
    double acc = 0.0;
    double left = t1;
    // Walk pillar boundaries inside (t1, t2).
    auto it = std::upper_bound(times_.begin(), times_.end(), t1);
    for (; it != times_.end() && *it < t2; ++it) {
        acc += value(left) * (*it - left);
        left = *it;
    }
    acc += value(left) * (t2 - left);
    return acc;
}

}  // namespace tvo
