#include "bsplan/radio.hpp"

#include <cmath>

namespace bsplan {

double pow_neg_alpha(double d2, double alpha) {
    if (alpha == 4.0) {
        const double inv = 1.0 / d2;
        return inv * inv;
    }
    if (alpha == 2.0) return 1.0 / d2;
    const double rounded = std::nearbyint(alpha);
    if (alpha == rounded && std::fmod(rounded, 2.0) == 0.0 && rounded >= 2.0 &&
        rounded <= 16.0) {
        const double inv = 1.0 / d2;
        double r = 1.0;
        for (int i = 0; i < static_cast<int>(rounded) / 2; ++i) r *= inv;
        return r;
    }
    return std::pow(d2, -0.5 * alpha);
}

double interference(const Point& z, const StationSet& stations) {
    constexpr double eps2 = kSingularEps * kSingularEps;
    double g = 0.0;
    for (const Point& s : stations.positions) {
        const double d2 = dist2(z, s);
        if (d2 <= eps2) throw SingularPoint("interference: query point at a station");
        g += pow_neg_alpha(d2, stations.alpha);
    }
    return g;
}

Point interference_gradient(const Point& z, const StationSet& stations) {
    constexpr double eps2 = kSingularEps * kSingularEps;
    const double alpha = stations.alpha;
    double gx = 0.0, gy = 0.0;
    for (const Point& s : stations.positions) {
        const double d2 = dist2(z, s);
        if (d2 <= eps2)
            throw SingularPoint("interference_gradient: query point at a station");
        // -alpha * (z - s) * |z - s|^{-(alpha+2)}
        const double w = -alpha * pow_neg_alpha(d2, alpha + 2.0);
        gx += w * (z.x - s.x);
        gy += w * (z.y - s.y);
    }
    return {gx, gy};
}

double sinr(const Point& z, int k, const StationSet& stations, double sinr_cap) {
    if (k < 0 || k >= stations.size()) throw BadIndex("sinr: station index out of range");
    if (stations.size() == 1) return sinr_cap;
    constexpr double eps2 = kSingularEps * kSingularEps;
    const double alpha = stations.alpha;
    double f = 0.0, others = 0.0;
    for (int j = 0; j < stations.size(); ++j) {
        const double d2 = dist2(z, stations.positions[j]);
        if (d2 <= eps2) throw SingularPoint("sinr: query point at a station");
        const double term = pow_neg_alpha(d2, alpha);
        if (j == k)
            f = term;
        else
            others += term;
    }
    if (others <= 0.0) return sinr_cap;
    return std::min(f / others, sinr_cap);
}

int best_server(const Point& z, const StationSet& stations) {
    if (stations.empty()) throw EmptySet("best_server: no stations");
    constexpr double eps2 = kSingularEps * kSingularEps;
    int best = 0;
    double best_d2 = dist2(z, stations.positions[0]);
    for (int j = 1; j < stations.size(); ++j) {
        const double d2 = dist2(z, stations.positions[j]);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = j;
        }
    }
    if (best_d2 <= eps2) throw SingularPoint("best_server: query point at a station");
    return best;
}

double shannon_rate(double s, const RadioParams& params) {
    return params.bandwidth_w * std::log2(1.0 + std::min(s, params.sinr_cap));
}

double channel_gain(double d, const RadioParams& params) {
    const double r2 = params.h * params.h + d * d;
    if (r2 <= kSingularEps * kSingularEps)
        throw SingularPoint("channel_gain: d = h = 0");
    return params.kappa * pow_neg_alpha(r2, params.alpha);
}

} // namespace bsplan
