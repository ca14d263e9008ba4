#pragma once

#include <string>
#include <vector>

namespace tvo {

// Piecewise-constant curve: value(t) = values[i] on [times[i], times[i+1]),
// flat extrapolation on both sides. Times are year fractions, strictly
// increasing, at least one pillar. Integrals are exact.
class TermStructure {
public:
    TermStructure(std::vector<double> times, std::vector<double> values,
                  std::string name = "curve");

    static TermStructure flat(double value);

    double value(double t) const;

    // Exact integral over [t1, t2]; throws InputError if t2 < t1.
    double integral(double t1, double t2) const;

    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& values() const { return values_; }
    const std::string& name() const { return name_; }

private:
    std::vector<double> times_;
    std::vector<double> values_;
    std::string name_;
};

}  // namespace tvo
