#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spincat {

// Angular momenta are stored as twice-values so that splitting arithmetic is
// exact integer arithmetic: spin 3/2 <-> twice() == 3.
class HalfInt {
  public:
    HalfInt() = default;

    static HalfInt from_twice(int twice) {
        if (twice < 0) throw std::invalid_argument("HalfInt: negative twice-value");
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    int twice() const { return twice_; }
    double value() const { return 0.5 * twice_; }
    bool is_integer() const { return twice_ % 2 == 0; }

    HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    HalfInt operator-(HalfInt o) const {
        if (o.twice_ > twice_) throw std::invalid_argument("HalfInt: negative difference");
        return from_twice(twice_ - o.twice_);
    }
    bool operator==(const HalfInt&) const = default;
    bool operator<(HalfInt o) const { return twice_ < o.twice_; }

    // "2", "3/2", ...
    std::string label() const;
    // Accepts "2", "3/2" and "1.5" spellings.
    static HalfInt parse(const std::string& text);

  private:
    int twice_ = 0;
};

enum class Parity { even, odd };

// cos(m pi): exactly +1 for even m, -1 for odd m.
inline int cos_m_pi(Parity m) { return m == Parity::even ? 1 : -1; }

inline int parity_bit(Parity m) { return m == Parity::odd ? 1 : 0; }

// Branch overlap p, the single sweep parameter of every measure. Valid range
// [0, 1]; values within 1e-12 outside are clamped, anything further is an error.
class Overlap {
  public:
    Overlap(double p) {  // NOLINT: implicit by design, p is used as a number everywhere
        constexpr double slack = 1e-12;
        if (p < -slack || p > 1.0 + slack)
            throw std::invalid_argument("Overlap: p must lie in [0, 1]");
        p_ = p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
    }
    double get() const { return p_; }
    operator double() const { return p_; }

  private:
    double p_;
};

struct DegenerateCatError : std::domain_error {
    explicit DegenerateCatError(const std::string& what) : std::domain_error(what) {}
};

// Even/odd superposition of |j,eta> and |j,-eta>, parametrized by the overlap p.
struct CatState {
    HalfInt j;
    Parity m = Parity::even;
    Overlap p{0.0};

    // The odd cat at p = 1 has vanishing norm; closed forms must not be
    // evaluated there (callers dispatch to analytic limits instead).
    bool degenerate() const { return m == Parity::odd && p.get() == 1.0; }
};

// Ordered decomposition of j into 2 or 3 parts, each at least spin 1/2.
struct SplitScheme {
    std::vector<HalfInt> parts;

    HalfInt total() const;
    std::size_t size() const { return parts.size(); }
    // Parts joined with ';' ("3/2;1/2"), safe inside CSV fields.
    std::string label() const;
    // Accepts parts joined with ',' or ';'.
    static SplitScheme parse(const std::string& text);
    bool operator==(const SplitScheme&) const = default;
};

// Throws when the scheme does not decompose j (wrong sum, wrong part count,
// or a part below 1/2).
void validate_scheme(const SplitScheme& scheme, HalfInt j, std::size_t expected_parts);

// p = (1 - eta^2)/(1 + eta^2) for real eta in [0, 1].
double overlap_from_eta(double eta);

// <j,eta|j,-eta> = p^{2j}; the exponent is the exact twice-value.
double coherent_pair_overlap(HalfInt j, double p);

// N_m = [2 + 2 p^{2j} cos(m pi)]^{-1/2}.
double cat_normalization(const CatState& state);

// The 2j-1 ordered bipartitions (j - s/2, s/2), s = 1..2j-1.
std::vector<SplitScheme> enumerate_bipartitions(HalfInt j);

// All ordered decompositions of j into three parts >= 1/2.
std::vector<SplitScheme> enumerate_tripartitions(HalfInt j);

}  // namespace spincat
