#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "spincat/multipartite.hpp"

namespace spincat {

enum class Measure {
    e_pair,
    e_pure,
    d_right,
    d_left,
    total,
    delta_e,
    delta_d,
    conservation_residuals,
};

// comma separated list of measure names, e.g. "e_pair,total"
std::vector<Measure> parse_measures(const std::string& list);
std::string measure_name(Measure m);

struct SweepSpec {
    HalfInt j;
    Parity m = Parity::even;
    std::vector<SplitScheme> schemes;  // all the same part count, 2 or 3
    double p_start = 0.0;
    double p_end = 1.0;
    int steps = 201;
    std::vector<Measure> measures;  // empty picks the defaults for the part count
};

using Cell = std::variant<int, double, std::string>;

struct Table {
    struct Meta {
        std::string j;
        int m = 0;
        std::string scheme;
        int steps = 0;
        std::string version;
    };
    Meta meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// long format: one row per (p, scheme), columns p,scheme,m,<measures...>,limit
Table run_sweep(const SweepSpec& spec);

// preset figure sweeps, wide format: one row per p, one column per curve
struct FigureCurve {
    std::string label;
    Parity m = Parity::even;
    SplitScheme scheme;
    Measure quantity = Measure::e_pure;
};

struct FigurePreset {
    int id = 0;
    std::vector<FigureCurve> curves;
    int steps = 201;
};

FigurePreset figure_preset(int id);  // ids 1..10
Table figure(int id);

std::vector<double> p_grid(double start, double end, int steps);

void emit_csv(const Table& table, std::ostream& out);
void emit_json(const Table& table, std::ostream& out);

}  // namespace spincat
