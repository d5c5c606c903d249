#include "spincat/multipartite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spincat {

namespace {

// totals and per-head deficits follow from the pair / split / directed arrays
void finish_record(TripartiteRecord& r) {
    double pair_sum = r.e_pair[0] + r.e_pair[1] + r.e_pair[2];
    double pure_sum = r.e_pure[0] + r.e_pure[1] + r.e_pure[2];
    double dir_sum = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) dir_sum += r.d_dir[a][b];
    r.total_e = (pair_sum + pure_sum) / 6.0;
    r.total_d = (dir_sum + 2.0 * pure_sum) / 12.0;
    for (int h = 0; h < 3; ++h) {
        double pair_part = 0.0;
        double dir_part = 0.0;
        for (int b = 0; b < 3; ++b) {
            if (b == h) continue;
            pair_part += r.e_pair[pair_index(std::min(h, b), std::max(h, b))];
            dir_part += r.d_dir[h][b];
        }
        r.delta_e[h] = r.e_pure[h] - pair_part;
        r.delta_d[h] = r.e_pure[h] - dir_part;
    }
}

}  // namespace

int pair_index(int a, int b) {
    if (a < 0 || b > 2 || a >= b) throw std::invalid_argument("pair_index wants 0 <= a < b <= 2");
    return a + b - 1;
}

TripartiteRecord evaluate_tripartite(const CatState& state, const SplitScheme& scheme) {
    validate_scheme(scheme, state.j, 3);
    if (state.degenerate()) {
        TripartiteRecord rec = limit_values(scheme, state.m, LimitPoint::p1);
        rec.p = state.p;
        return rec;
    }
    TripartiteRecord rec;
    rec.scheme = scheme;
    rec.m = state.m;
    rec.p = state.p;
    const auto& l = scheme.parts;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            rec.e_pair[pair_index(a, b)] = eof_mixed_pair(state, l[a], l[b]);
    for (int h = 0; h < 3; ++h) rec.e_pure[h] = eof_tripartite_pure(state, scheme, h);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) rec.d_dir[a][b] = discord_closed(state, l[a], l[b]);
    finish_record(rec);
    return rec;
}

double total_eof(const CatState& state, const SplitScheme& scheme) {
    return evaluate_tripartite(state, scheme).total_e;
}

double total_discord(const CatState& state, const SplitScheme& scheme) {
    return evaluate_tripartite(state, scheme).total_d;
}

double delta_plus(const CatState& state, HalfInt l1, HalfInt l2) {
    return 0.5 * (discord_closed(state, l1, l2) + discord_closed(state, l2, l1));
}

double delta_minus(const CatState& state, HalfInt l1, HalfInt l2) {
    return 0.5 * (discord_closed(state, l1, l2) - discord_closed(state, l2, l1));
}

double delta_minus_cycle(const CatState& state, const SplitScheme& scheme) {
    validate_scheme(scheme, state.j, 3);
    const auto& l = scheme.parts;
    return delta_minus(state, l[0], l[1]) + delta_minus(state, l[1], l[2]) +
           delta_minus(state, l[2], l[0]);
}

double monogamy_delta_eof(const CatState& state, const SplitScheme& scheme, int head) {
    if (head < 0 || head > 2) throw std::invalid_argument("head part index out of range");
    return evaluate_tripartite(state, scheme).delta_e[head];
}

double monogamy_delta_discord(const CatState& state, const SplitScheme& scheme, int head) {
    if (head < 0 || head > 2) throw std::invalid_argument("head part index out of range");
    return evaluate_tripartite(state, scheme).delta_d[head];
}

TripartiteRecord limit_values(const SplitScheme& scheme, Parity m, LimitPoint which) {
    if (scheme.size() != 3) throw std::invalid_argument("limit_values wants a 3-part scheme");
    TripartiteRecord rec;
    rec.scheme = scheme;
    rec.m = m;
    rec.limit = true;
    rec.p = (which == LimitPoint::p0) ? 0.0 : 1.0;
    if (which == LimitPoint::p0) {
        // GHZ-type limit: pairs carry nothing, every one-vs-rest split is maximal
        for (int h = 0; h < 3; ++h) rec.e_pure[h] = 1.0;
        finish_record(rec);
        return rec;
    }
    if (m == Parity::even) {
        finish_record(rec);  // product state, everything vanishes
        return rec;
    }
    // odd parity: W-type limit with excitation weights l_k / j
    double j = scheme.total().value();
    double l[3];
    for (int k = 0; k < 3; ++k) l[k] = scheme.parts[k].value();
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            rec.e_pair[pair_index(a, b)] =
                eof_from_concurrence(2.0 * std::sqrt(l[a] * l[b]) / j);
    for (int h = 0; h < 3; ++h) rec.e_pure[h] = binary_entropy(l[h] / j);
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            int c = 3 - a - b;
            double d = binary_entropy(l[a] / j) - binary_entropy((l[a] + l[b]) / j) +
                       eof_from_concurrence(2.0 * std::sqrt(l[b] * l[c]) / j);
            rec.d_dir[a][b] = std::max(0.0, d);
        }
    }
    finish_record(rec);
    return rec;
}

BipartiteValues pure_split_limit(const SplitScheme& scheme, Parity m, LimitPoint which) {
    if (scheme.size() != 2) throw std::invalid_argument("pure_split_limit wants a 2-part scheme");
    if (which == LimitPoint::p0) return {1.0, 1.0};
    if (m == Parity::even) return {0.0, 0.0};
    double j1 = scheme.parts[0].value();
    double j2 = scheme.parts[1].value();
    double j = j1 + j2;
    return {2.0 * std::sqrt(j1 * j2) / j, binary_entropy(j1 / j)};
}

double ConservationResiduals::worst() const {
    return std::max(std::max(sum_discord, delta_plus), std::max(delta_minus, total));
}

ConservationResiduals conservation_residuals(const TripartiteRecord& r) {
    ConservationResiduals res;
    // both directed discords aimed at a common target balance the target's pair EoFs
    for (int t = 0; t < 3; ++t) {
        int a = (t + 1) % 3;
        int c = (t + 2) % 3;
        double lhs = r.d_dir[a][t] + r.d_dir[c][t];
        double rhs = r.e_pair[pair_index(std::min(t, a), std::max(t, a))] +
                     r.e_pair[pair_index(std::min(t, c), std::max(t, c))];
        res.sum_discord = std::max(res.sum_discord, std::abs(lhs - rhs));
    }
    double plus = 0.0;
    double pair_sum = 0.0;
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            plus += 0.5 * (r.d_dir[a][b] + r.d_dir[b][a]);
            pair_sum += r.e_pair[pair_index(a, b)];
        }
    }
    res.delta_plus = std::abs(plus - pair_sum);
    res.delta_minus = 0.5 * std::abs((r.d_dir[0][1] - r.d_dir[1][0]) +
                                     (r.d_dir[1][2] - r.d_dir[2][1]) +
                                     (r.d_dir[2][0] - r.d_dir[0][2]));
    res.total = std::abs(r.total_e - r.total_d);
    return res;
}

}  // namespace spincat
