// Distance-dependent connectivity kernels and the derived column stencil.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "csnn/grid.hpp"

namespace csnn {

enum class KernelShape { gaussian, exponential };

inline const char* to_string(KernelShape s) {
    return s == KernelShape::gaussian ? "gaussian" : "exponential";
}

// Remote (inter-column) connection probability law. local_probability applies
// to pairs within one column and bypasses the decay law entirely.
struct ConnectivityKernel {
    KernelShape shape = KernelShape::gaussian;
    double amplitude = 0.05;        // A, probability at r = 0
    double scale_um = 100.0;        // sigma (gaussian) or lambda (exponential)
    double cutoff = 1e-3;           // theta, minimum remote probability
    double local_probability = 0.8;

    void validate() const {
        if (!(amplitude > 0.0) || amplitude > 1.0)
            throw std::invalid_argument("kernel amplitude must be in (0,1]");
        if (!(scale_um > 0.0))
            throw std::invalid_argument("kernel scale must be > 0");
        if (!(cutoff > 0.0))
            throw std::invalid_argument("kernel cutoff must be > 0");
        if (cutoff > amplitude)
            throw std::invalid_argument(
                "kernel cutoff must not exceed amplitude (stencil constraint)");
        if (local_probability < 0.0 || local_probability > 1.0)
            throw std::invalid_argument("local_probability must be in [0,1]");
    }
};

// p(r) for a remote pair at center-to-center distance r micrometers.
inline double kernel_probability(const ConnectivityKernel& k, double r_um) {
    if (r_um < 0.0) throw std::domain_error("kernel distance must be >= 0");
    switch (k.shape) {
        case KernelShape::gaussian:
            return k.amplitude * std::exp(-(r_um * r_um) / (2.0 * k.scale_um * k.scale_um));
        case KernelShape::exponential:
            return k.amplitude * std::exp(-r_um / k.scale_um);
    }
    throw std::logic_error("unknown kernel shape");
}

// Distance r* at which p(r*) == cutoff; 0 when the cutoff excludes all
// remote columns (cutoff >= amplitude).
inline double stencil_radius_um(const ConnectivityKernel& k) {
    if (k.cutoff >= k.amplitude) return 0.0;
    double ratio = std::log(k.amplitude / k.cutoff);
    switch (k.shape) {
        case KernelShape::gaussian:
            return k.scale_um * std::sqrt(2.0 * ratio);
        case KernelShape::exponential:
            return k.scale_um * ratio;
    }
    throw std::logic_error("unknown kernel shape");
}

// Half-width H of the bounding square of column offsets; the stencil is the
// (2H+1)x(2H+1) square centered on the source column. H = 0 means local-only.
inline int stencil_halfwidth(const ConnectivityKernel& k, double alpha_um) {
    if (!(alpha_um > 0.0)) throw std::invalid_argument("alpha_um must be > 0");
    double r = stencil_radius_um(k);
    if (r <= 0.0) return 0;
    return static_cast<int>(std::ceil(r / alpha_um));
}

struct StencilOffset {
    int dx = 0;
    int dy = 0;
    double probability = 0.0;
};

// Offsets (target column minus source column) whose probability clears the
// cutoff. The bounding square is scanned row-major; corners below the cutoff
// are pruned by the probability test, not by the square boundary.
struct StencilMask {
    int halfwidth = 0;
    std::vector<StencilOffset> offsets;  // excludes (0,0)

    bool contains(int dx, int dy) const {
        if (dx == 0 && dy == 0) return false;
        if (std::abs(dx) > halfwidth || std::abs(dy) > halfwidth) return false;
        int side = 2 * halfwidth + 1;
        return lut_[static_cast<std::size_t>((dy + halfwidth) * side + (dx + halfwidth))] != 0;
    }

    double sum_probability() const {
        double s = 0.0;
        for (const auto& o : offsets) s += o.probability;
        return s;
    }

    static StencilMask build(const ConnectivityKernel& k, double alpha_um) {
        StencilMask m;
        m.halfwidth = stencil_halfwidth(k, alpha_um);
        int side = 2 * m.halfwidth + 1;
        m.lut_.assign(static_cast<std::size_t>(side) * side, 0);
        for (int dy = -m.halfwidth; dy <= m.halfwidth; ++dy) {
            for (int dx = -m.halfwidth; dx <= m.halfwidth; ++dx) {
                if (dx == 0 && dy == 0) continue;
                double r = alpha_um * std::hypot(static_cast<double>(dx),
                                                 static_cast<double>(dy));
                double p = kernel_probability(k, r);
                if (p >= k.cutoff) {
                    m.offsets.push_back({dx, dy, p});
                    m.lut_[static_cast<std::size_t>((dy + m.halfwidth) * side +
                                                    (dx + m.halfwidth))] = 1;
                }
            }
        }
        return m;
    }

private:
    std::vector<std::uint8_t> lut_;
};

inline StencilMask make_stencil_mask(const ConnectivityKernel& k, double alpha_um) {
    return StencilMask::build(k, alpha_um);
}

struct OutDegree {
    double local = 0.0;
    double remote = 0.0;
    double total() const { return local + remote; }
};

// Expected synapses projected by one neuron of an interior column (full
// stencil available on all sides).
inline OutDegree expected_out_degree(const ConnectivityKernel& k, const GridSpec& spec) {
    spec.validate();
    k.validate();
    StencilMask mask = make_stencil_mask(k, spec.alpha_um);
    OutDegree d;
    d.local = k.local_probability * static_cast<double>(spec.neurons_per_column - 1);
    d.remote = static_cast<double>(spec.neurons_per_column) * mask.sum_probability();
    return d;
}

// Expected recurrent synapse count over the whole grid, with the stencil
// clipped (not renormalized) at the boundary. Column granularity, exact.
inline double expected_synapse_count(const GridSpec& spec, const ConnectivityKernel& k) {
    spec.validate();
    k.validate();
    ColumnGrid grid(spec);
    StencilMask mask = make_stencil_mask(k, spec.alpha_um);
    double npc = static_cast<double>(spec.neurons_per_column);
    double local_pairs_per_column = npc * (npc - 1.0);
    double total = static_cast<double>(grid.columns()) * local_pairs_per_column *
                   k.local_probability;
    for (ColumnId c = 0; c < grid.columns(); ++c) {
        auto [cx, cy] = grid.coords(c);
        for (const auto& o : mask.offsets) {
            std::int64_t tx = static_cast<std::int64_t>(cx) + o.dx;
            std::int64_t ty = static_cast<std::int64_t>(cy) + o.dy;
            if (grid.in_grid(tx, ty)) total += npc * npc * o.probability;
        }
    }
    return total;
}

// Variance of the recurrent synapse count under Bernoulli-per-pair sampling:
// sum of p(1-p) over all candidate ordered pairs, clipped like the count.
inline double expected_synapse_variance(const GridSpec& spec, const ConnectivityKernel& k) {
    spec.validate();
    k.validate();
    ColumnGrid grid(spec);
    StencilMask mask = make_stencil_mask(k, spec.alpha_um);
    double npc = static_cast<double>(spec.neurons_per_column);
    double lp = k.local_probability;
    double var = static_cast<double>(grid.columns()) * npc * (npc - 1.0) * lp * (1.0 - lp);
    for (ColumnId c = 0; c < grid.columns(); ++c) {
        auto [cx, cy] = grid.coords(c);
        for (const auto& o : mask.offsets) {
            std::int64_t tx = static_cast<std::int64_t>(cx) + o.dx;
            std::int64_t ty = static_cast<std::int64_t>(cy) + o.dy;
            if (grid.in_grid(tx, ty))
                var += npc * npc * o.probability * (1.0 - o.probability);
        }
    }
    return var;
}

}  // namespace csnn
