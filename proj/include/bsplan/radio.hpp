#pragma once

#include "bsplan/scenario.hpp"

namespace bsplan {

inline constexpr double kSingularEps = 1e-9;
inline constexpr double kDefaultSinrCap = 1e6;

struct RadioParams {
    double alpha = 4.0;
    double beta = 1.0;
    double bandwidth_w = 1.0;
    double h = 0.0;
    double kappa = 1.0;
    double sinr_cap = kDefaultSinrCap;
};

// |.|^{-alpha} from a squared distance; even integer exponents avoid pow.
double pow_neg_alpha(double d2, double alpha);

// g(z) = sum_i |z - z_i|^{-alpha}
double interference(const Point& z, const StationSet& stations);

// grad g(z) = sum_i -alpha (z - z_i) / |z - z_i|^{alpha+2}
Point interference_gradient(const Point& z, const StationSet& stations);

// SINR of station k at z: |z-z_k|^{-alpha} / sum_{j!=k} |z-z_j|^{-alpha},
// capped at sinr_cap. A single-station network has SINR = sinr_cap.
double sinr(const Point& z, int k, const StationSet& stations,
            double sinr_cap = kDefaultSinrCap);

// Nearest station index (ties to the lowest index); maximizes SINR under
// uniform power.
int best_server(const Point& z, const StationSet& stations);

double shannon_rate(double s, const RadioParams& params);

// kappa / (h^2 + d^2)^{alpha/2}
double channel_gain(double d, const RadioParams& params);

} // namespace bsplan
