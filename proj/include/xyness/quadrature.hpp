#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace xyness {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

// Globally adaptive 7/15-point Gauss-Kronrod integration over the partition
// given by `points` (sorted, first and last are the integration limits).
// The interval with the largest |K15 - G7| is bisected until the summed
// estimate drops below abs_tol. Throws QuadratureError when max_intervals
// is exhausted.
QuadResult integrate(const std::function<double(double)>& f, std::vector<double> points,
                     double abs_tol, int max_intervals = 200000);

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_intervals = 200000);

} // namespace xyness
