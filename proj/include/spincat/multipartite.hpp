#pragma once

#include "spincat/measures.hpp"

namespace spincat {

// Position of the unordered pair {a, b} in the fixed order (0,1), (0,2), (1,2).
int pair_index(int a, int b);

// Every correlation quantity of one 3-part scheme at one overlap value.
struct TripartiteRecord {
    SplitScheme scheme;
    Parity m = Parity::even;
    double p = 0.0;
    bool limit = false;  // filled from an analytic limit instead of closed forms

    double e_pair[3] = {};     // mixed-pair EoF per unordered pair
    double e_pure[3] = {};     // one-vs-rest EoF per head part
    double d_dir[3][3] = {};   // directed discord, row = measured part
    double total_e = 0.0;      // (sum pairs + sum one-vs-rest) / 6
    double total_d = 0.0;      // (sum directed pairs + 2 sum one-vs-rest) / 12
    double delta_e[3] = {};    // monogamy deficit of EoF per head
    double delta_d[3] = {};    // monogamy deficit of discord per head
};

// Closed-form evaluation; a degenerate state (m odd, p = 1) dispatches to the
// analytic W-limit record automatically.
TripartiteRecord evaluate_tripartite(const CatState& state, const SplitScheme& scheme);

double total_eof(const CatState& state, const SplitScheme& scheme);
double total_discord(const CatState& state, const SplitScheme& scheme);

// Average and balance of the two directed discords of the pair (l1, l2).
double delta_plus(const CatState& state, HalfInt l1, HalfInt l2);
double delta_minus(const CatState& state, HalfInt l1, HalfInt l2);

// Balance summed around the oriented cycle (1|2), (2|3), (3|1); identically
// zero for every pure tripartite state. (Summing the unordered pair list
// (1|2), (1|3), (2|3) instead does not vanish; the orientation matters
// because the balance is antisymmetric.)
double delta_minus_cycle(const CatState& state, const SplitScheme& scheme);

// One-vs-rest correlation of the head part minus its two pairwise
// correlations; negative values mean the monogamy inequality fails.
double monogamy_delta_eof(const CatState& state, const SplitScheme& scheme, int head = 0);
double monogamy_delta_discord(const CatState& state, const SplitScheme& scheme, int head = 0);

enum class LimitPoint { p0, p1 };

// Analytic GHZ (p -> 0) and product/W (p -> 1) values; the odd p -> 1 case is
// the W state the closed forms cannot be evaluated at.
TripartiteRecord limit_values(const SplitScheme& scheme, Parity m, LimitPoint which);

struct BipartiteValues {
    double c = 0.0;
    double e = 0.0;  // discord coincides with e on pure splits
};

BipartiteValues pure_split_limit(const SplitScheme& scheme, Parity m, LimitPoint which);

// Residuals of the identities every record must satisfy.
struct ConservationResiduals {
    double sum_discord = 0.0;  // worst of the three directed-sum relations
    double delta_plus = 0.0;   // |sum of pair averages - sum of pair EoF|
    double delta_minus = 0.0;  // |cyclic balance sum|
    double total = 0.0;        // |total_e - total_d|
    double worst() const;
};

ConservationResiduals conservation_residuals(const TripartiteRecord& record);

}  // namespace spincat
