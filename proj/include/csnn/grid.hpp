// 2D grid of cortical columns: geometry and the global neuron id layout.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace csnn {

using NeuronId = std::uint64_t;  // global neuron id
using ColumnId = std::uint32_t;  // row-major column index
using Timestep = std::uint64_t;
using WorkerId = std::uint32_t;

struct GridSpec {
    std::uint32_t grid_x = 0;
    std::uint32_t grid_y = 0;
    double alpha_um = 100.0;  // columnar spacing
    std::uint32_t neurons_per_column = 0;
    double excitatory_fraction = 0.8;

    std::uint32_t columns() const { return grid_x * grid_y; }

    std::uint64_t total_neurons() const {
        return static_cast<std::uint64_t>(columns()) * neurons_per_column;
    }

    std::uint32_t excitatory_per_column() const {
        return static_cast<std::uint32_t>(
            std::llround(excitatory_fraction * neurons_per_column));
    }

    void validate() const {
        if (grid_x < 1) throw std::invalid_argument("grid_x must be >= 1");
        if (grid_y < 1) throw std::invalid_argument("grid_y must be >= 1");
        if (!(alpha_um > 0.0)) throw std::invalid_argument("alpha_um must be > 0");
        if (neurons_per_column < 1)
            throw std::invalid_argument("neurons_per_column must be >= 1");
        if (excitatory_fraction < 0.0 || excitatory_fraction > 1.0)
            throw std::invalid_argument("excitatory_fraction must be in [0,1]");
    }
};

// Column ids run row-major over (cx, cy); each column owns a contiguous block
// of global neuron ids, excitatory indices first.
class ColumnGrid {
public:
    explicit ColumnGrid(const GridSpec& spec) : spec_(spec) {
        spec_.validate();
        exc_per_column_ = spec_.excitatory_per_column();
    }

    const GridSpec& spec() const { return spec_; }
    std::uint32_t columns() const { return spec_.columns(); }
    std::uint64_t total_neurons() const { return spec_.total_neurons(); }

    ColumnId column_at(std::uint32_t cx, std::uint32_t cy) const {
        check_coords(cx, cy);
        return cy * spec_.grid_x + cx;
    }

    std::pair<std::uint32_t, std::uint32_t> coords(ColumnId c) const {
        check_column(c);
        return {c % spec_.grid_x, c / spec_.grid_x};
    }

    bool in_grid(std::int64_t cx, std::int64_t cy) const {
        return cx >= 0 && cy >= 0 && cx < spec_.grid_x && cy < spec_.grid_y;
    }

    NeuronId first_neuron(ColumnId c) const {
        check_column(c);
        return static_cast<NeuronId>(c) * spec_.neurons_per_column;
    }

    ColumnId column_of(NeuronId n) const {
        check_neuron(n);
        return static_cast<ColumnId>(n / spec_.neurons_per_column);
    }

    std::uint32_t index_in_column(NeuronId n) const {
        check_neuron(n);
        return static_cast<std::uint32_t>(n % spec_.neurons_per_column);
    }

    bool is_excitatory(NeuronId n) const {
        return index_in_column(n) < exc_per_column_;
    }

    // Euclidean center-to-center distance in micrometers.
    double distance_um(ColumnId a, ColumnId b) const {
        auto [ax, ay] = coords(a);
        auto [bx, by] = coords(b);
        double dx = static_cast<double>(bx) - static_cast<double>(ax);
        double dy = static_cast<double>(by) - static_cast<double>(ay);
        return spec_.alpha_um * std::hypot(dx, dy);
    }

private:
    void check_coords(std::uint32_t cx, std::uint32_t cy) const {
        if (cx >= spec_.grid_x || cy >= spec_.grid_y)
            throw std::out_of_range("column coordinates outside grid");
    }
    void check_column(ColumnId c) const {
        if (c >= columns()) throw std::out_of_range("column id outside grid");
    }
    void check_neuron(NeuronId n) const {
        if (n >= total_neurons())
            throw std::out_of_range("neuron id " + std::to_string(n) +
                                    " outside grid population");
    }

    GridSpec spec_;
    std::uint32_t exc_per_column_ = 0;
};

}  // namespace csnn
