#include "spincat/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace spincat {

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr std::array<std::pair<const char*, Measure>, 8> kMeasureNames{{
    {"e_pair", Measure::e_pair},
    {"e_pure", Measure::e_pure},
    {"d_right", Measure::d_right},
    {"d_left", Measure::d_left},
    {"total", Measure::total},
    {"delta_e", Measure::delta_e},
    {"delta_d", Measure::delta_d},
    {"conservation_residuals", Measure::conservation_residuals},
}};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// canonical order, duplicates dropped
std::vector<Measure> normalize_measures(const std::vector<Measure>& in) {
    std::vector<Measure> out;
    for (const auto& [name, m] : kMeasureNames) {
        (void)name;
        if (std::find(in.begin(), in.end(), m) != in.end()) out.push_back(m);
    }
    return out;
}

bool bipartite_measure(Measure m) {
    return m == Measure::e_pure || m == Measure::d_right || m == Measure::d_left;
}

void append_tripartite_columns(Measure m, std::vector<std::string>& cols) {
    switch (m) {
        case Measure::e_pair:
            cols.insert(cols.end(), {"E_12", "E_13", "E_23"});
            break;
        case Measure::e_pure:
            cols.insert(cols.end(), {"E_1_23", "E_2_13", "E_3_12"});
            break;
        case Measure::d_right:
            cols.insert(cols.end(), {"D_12", "D_13", "D_23"});
            break;
        case Measure::d_left:
            cols.insert(cols.end(), {"DL_12", "DL_13", "DL_23"});
            break;
        case Measure::total:
            cols.push_back("Q_total");
            break;
        case Measure::delta_e:
            cols.push_back("dE");
            break;
        case Measure::delta_d:
            cols.push_back("dD");
            break;
        case Measure::conservation_residuals:
            cols.insert(cols.end(),
                        {"res_sum_discord", "res_delta_plus", "res_delta_minus", "res_total"});
            break;
    }
}

void append_tripartite_values(Measure m, const TripartiteRecord& rec,
                              std::vector<Cell>& row) {
    switch (m) {
        case Measure::e_pair:
            for (int i = 0; i < 3; ++i) row.emplace_back(rec.e_pair[i]);
            break;
        case Measure::e_pure:
            for (int i = 0; i < 3; ++i) row.emplace_back(rec.e_pure[i]);
            break;
        case Measure::d_right:
            row.emplace_back(rec.d_dir[0][1]);
            row.emplace_back(rec.d_dir[0][2]);
            row.emplace_back(rec.d_dir[1][2]);
            break;
        case Measure::d_left:
            row.emplace_back(rec.d_dir[1][0]);
            row.emplace_back(rec.d_dir[2][0]);
            row.emplace_back(rec.d_dir[2][1]);
            break;
        case Measure::total:
            row.emplace_back(rec.total_d);
            break;
        case Measure::delta_e:
            row.emplace_back(rec.delta_e[0]);
            break;
        case Measure::delta_d:
            row.emplace_back(rec.delta_d[0]);
            break;
        case Measure::conservation_residuals: {
            ConservationResiduals res = conservation_residuals(rec);
            row.emplace_back(res.sum_discord);
            row.emplace_back(res.delta_plus);
            row.emplace_back(res.delta_minus);
            row.emplace_back(res.total);
            break;
        }
    }
}

std::string join_labels(const std::vector<SplitScheme>& schemes) {
    std::string out;
    for (size_t i = 0; i < schemes.size(); ++i) {
        if (i) out += ",";
        out += schemes[i].label();
    }
    return out;
}

}  // namespace

std::string measure_name(Measure m) {
    for (const auto& [name, v] : kMeasureNames)
        if (v == m) return name;
    throw std::invalid_argument("unknown measure value");
}

std::vector<Measure> parse_measures(const std::string& list) {
    std::vector<Measure> out;
    size_t pos = 0;
    while (pos <= list.size()) {
        size_t comma = list.find(',', pos);
        if (comma == std::string::npos) comma = list.size();
        std::string token = list.substr(pos, comma - pos);
        size_t a = token.find_first_not_of(" \t");
        size_t b = token.find_last_not_of(" \t");
        token = (a == std::string::npos) ? std::string{} : token.substr(a, b - a + 1);
        if (!token.empty()) {
            bool found = false;
            for (const auto& [name, m] : kMeasureNames) {
                if (token == name) {
                    out.push_back(m);
                    found = true;
                    break;
                }
            }
            if (!found) {
                std::string valid;
                for (const auto& [name, m] : kMeasureNames) {
                    (void)m;
                    if (!valid.empty()) valid += ", ";
                    valid += name;
                }
                throw std::invalid_argument("unknown measure '" + token + "' (valid: " + valid + ")");
            }
        }
        pos = comma + 1;
    }
    return out;
}

std::vector<double> p_grid(double start, double end, int steps) {
    if (steps < 1) throw std::invalid_argument("steps must be at least 1");
    if (start < 0.0 || end > 1.0 || start > end)
        throw std::invalid_argument("p range must sit inside [0, 1] with start <= end");
    std::vector<double> grid(steps);
    if (steps == 1) {
        grid[0] = start;
        return grid;
    }
    for (int i = 0; i < steps; ++i)
        grid[i] = start + (end - start) * static_cast<double>(i) / (steps - 1);
    return grid;
}

Table run_sweep(const SweepSpec& spec) {
    if (spec.schemes.empty()) throw std::invalid_argument("at least one scheme is required");
    size_t parts = spec.schemes.front().size();
    if (parts != 2 && parts != 3)
        throw std::invalid_argument("schemes must split into 2 or 3 parts");
    for (const auto& scheme : spec.schemes) validate_scheme(scheme, spec.j, parts);

    std::vector<Measure> measures = normalize_measures(
        spec.measures.empty()
            ? (parts == 2 ? std::vector<Measure>{Measure::e_pure}
                          : std::vector<Measure>{Measure::e_pair, Measure::e_pure,
                                                 Measure::total, Measure::delta_e,
                                                 Measure::delta_d})
            : spec.measures);
    if (parts == 2)
        for (Measure m : measures)
            if (!bipartite_measure(m))
                throw std::invalid_argument("measure " + measure_name(m) +
                                            " needs a 3-part scheme");

    Table table;
    table.meta = {spec.j.label(), parity_bit(spec.m), join_labels(spec.schemes), spec.steps,
                  kVersion};
    table.columns = {"p", "scheme", "m"};
    if (parts == 2) {
        for (Measure m : measures) {
            if (m == Measure::e_pure) {
                table.columns.emplace_back("C");
                table.columns.emplace_back("E");
            } else {
                table.columns.emplace_back(m == Measure::d_right ? "D_right" : "D_left");
            }
        }
    } else {
        for (Measure m : measures) append_tripartite_columns(m, table.columns);
    }
    table.columns.emplace_back("limit");

    for (double p : p_grid(spec.p_start, spec.p_end, spec.steps)) {
        for (const auto& scheme : spec.schemes) {
            CatState state{spec.j, spec.m, p};
            std::vector<Cell> row;
            row.emplace_back(p);
            row.emplace_back(scheme.label());
            row.emplace_back(parity_bit(spec.m));
            bool limit = false;
            if (parts == 2) {
                double c, e;
                if (state.degenerate()) {
                    BipartiteValues lim = pure_split_limit(scheme, spec.m, LimitPoint::p1);
                    c = lim.c;
                    e = lim.e;
                    limit = true;
                } else {
                    c = concurrence_pure_bipartite(state, scheme);
                    e = eof_pure_bipartite(state, scheme);
                }
                for (Measure m : measures) {
                    if (m == Measure::e_pure) {
                        row.emplace_back(c);
                        row.emplace_back(e);
                    } else {
                        row.emplace_back(e);  // pure-split discord equals the entropy either way
                    }
                }
            } else {
                TripartiteRecord rec = evaluate_tripartite(state, scheme);
                limit = rec.limit;
                for (Measure m : measures) append_tripartite_values(m, rec, row);
            }
            row.emplace_back(limit ? 1 : 0);
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

FigurePreset figure_preset(int id) {
    auto sch = [](const char* s) { return SplitScheme::parse(s); };
    FigurePreset preset;
    preset.id = id;
    switch (id) {
        case 1:
        case 2: {
            Parity m = (id == 1) ? Parity::even : Parity::odd;
            preset.curves = {{"E_3/2;1/2", m, sch("3/2,1/2"), Measure::e_pure},
                             {"E_1;1", m, sch("1,1"), Measure::e_pure}};
            break;
        }
        case 3:
            preset.curves = {{"dE_m0", Parity::even, sch("1/2,1/2,1/2"), Measure::delta_e},
                             {"dE_m1", Parity::odd, sch("1/2,1/2,1/2"), Measure::delta_e}};
            break;
        case 4:
        case 5: {
            Parity m = (id == 4) ? Parity::even : Parity::odd;
            preset.curves = {{"dE_1/2;1/2;1", m, sch("1/2,1/2,1"), Measure::delta_e},
                             {"dE_1;1/2;1/2", m, sch("1,1/2,1/2"), Measure::delta_e}};
            break;
        }
        case 6:
        case 7: {
            Parity m = (id == 6) ? Parity::even : Parity::odd;
            preset.curves = {{"Q_1;1;1", m, sch("1,1,1"), Measure::total},
                             {"Q_1/2;1/2;2", m, sch("1/2,1/2,2"), Measure::total},
                             {"Q_1/2;1;3/2", m, sch("1/2,1,3/2"), Measure::total}};
            break;
        }
        case 8:
            preset.curves = {{"dD_m0", Parity::even, sch("1/2,1/2,1/2"), Measure::delta_d},
                             {"dD_m1", Parity::odd, sch("1/2,1/2,1/2"), Measure::delta_d}};
            break;
        case 9:
        case 10: {
            Parity m = (id == 9) ? Parity::even : Parity::odd;
            preset.curves = {{"dD_1;1/2;1/2", m, sch("1,1/2,1/2"), Measure::delta_d},
                             {"dD_1/2;1/2;1", m, sch("1/2,1/2,1"), Measure::delta_d}};
            break;
        }
        default:
            throw std::invalid_argument("figure id must be between 1 and 10");
    }
    return preset;
}

Table figure(int id) {
    FigurePreset preset = figure_preset(id);
    HalfInt j = preset.curves.front().scheme.total();
    bool same_parity = true;
    for (const auto& c : preset.curves) {
        if (!(c.scheme.total() == j))
            throw std::invalid_argument("figure curves must share one total spin");
        if (c.m != preset.curves.front().m) same_parity = false;
    }

    Table table;
    table.meta = {j.label(), same_parity ? parity_bit(preset.curves.front().m) : -1,
                  "fig" + std::to_string(id), preset.steps, kVersion};
    table.columns = {"p"};
    for (const auto& c : preset.curves) table.columns.push_back(c.label);
    table.columns.emplace_back("limit");

    for (double p : p_grid(0.0, 1.0, preset.steps)) {
        std::vector<Cell> row;
        row.emplace_back(p);
        bool limit = false;
        for (const auto& c : preset.curves) {
            CatState state{j, c.m, p};
            double value;
            if (c.scheme.size() == 2) {
                if (state.degenerate()) {
                    value = pure_split_limit(c.scheme, c.m, LimitPoint::p1).e;
                    limit = true;
                } else {
                    value = eof_pure_bipartite(state, c.scheme);
                }
            } else {
                TripartiteRecord rec = evaluate_tripartite(state, c.scheme);
                limit = limit || rec.limit;
                switch (c.quantity) {
                    case Measure::delta_e:
                        value = rec.delta_e[0];
                        break;
                    case Measure::delta_d:
                        value = rec.delta_d[0];
                        break;
                    case Measure::total:
                        value = rec.total_d;
                        break;
                    case Measure::e_pure:
                        value = rec.e_pure[0];
                        break;
                    default:
                        throw std::invalid_argument("unsupported figure quantity");
                }
            }
            row.emplace_back(value);
        }
        row.emplace_back(limit ? 1 : 0);
        table.rows.push_back(std::move(row));
    }
    return table;
}

void emit_csv(const Table& table, std::ostream& out) {
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>)
                        out << fmt_double(v);
                    else
                        out << v;
                },
                row[i]);
        }
        out << '\n';
    }
}

void emit_json(const Table& table, std::ostream& out) {
    nlohmann::json doc;
    doc["meta"] = {{"j", table.meta.j},
                   {"m", table.meta.m},
                   {"scheme", table.meta.scheme},
                   {"steps", table.meta.steps},
                   {"version", table.meta.version}};
    doc["rows"] = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json entry;
        nlohmann::json values = nlohmann::json::object();
        for (size_t i = 0; i < row.size(); ++i) {
            const std::string& col = table.columns[i];
            nlohmann::json cell;
            std::visit([&](const auto& v) { cell = v; }, row[i]);
            if (col == "p" || col == "scheme" || col == "m" || col == "limit")
                entry[col] = cell;
            else
                values[col] = cell;
        }
        entry["values"] = std::move(values);
        doc["rows"].push_back(std::move(entry));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace spincat
