#include "spincat/spin_states.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace spincat {

std::string HalfInt::label() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("HalfInt: empty token");
    auto bad = [&] { return std::invalid_argument("HalfInt: cannot parse '" + text + "'"); };

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        char* end = nullptr;
        long n = std::strtol(num.c_str(), &end, 10);
        if (end == num.c_str() || *end != '\0' || n < 0) throw bad();
        if (den == "1") return from_twice(static_cast<int>(2 * n));
        if (den == "2") return from_twice(static_cast<int>(n));
        throw bad();
    }
    if (text.find('.') != std::string::npos) {
        char* end = nullptr;
        double v = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || *end != '\0' || v < 0) throw bad();
        double t = 2.0 * v;
        double r = std::round(t);
        if (std::abs(t - r) > 1e-9) throw bad();
        return from_twice(static_cast<int>(r));
    }
    char* end = nullptr;
    long n = std::strtol(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0' || n < 0) throw bad();
    return from_twice(static_cast<int>(2 * n));
}

HalfInt SplitScheme::total() const {
    int t = 0;
    for (const auto& part : parts) t += part.twice();
    return HalfInt::from_twice(t);
}

std::string SplitScheme::label() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ';';
        out += parts[i].label();
    }
    return out;
}

SplitScheme SplitScheme::parse(const std::string& text) {
    SplitScheme scheme;
    std::string token;
    std::istringstream in(text);
    // accept both "1/2,1/2,1" and "1/2;1/2;1"
    std::string normalized = text;
    for (auto& ch : normalized)
        if (ch == ';') ch = ',';
    std::istringstream stream(normalized);
    while (std::getline(stream, token, ','))
        scheme.parts.push_back(HalfInt::parse(token));
    if (scheme.parts.empty()) throw std::invalid_argument("SplitScheme: empty scheme");
    return scheme;
}

void validate_scheme(const SplitScheme& scheme, HalfInt j, std::size_t expected_parts) {
    if (scheme.parts.size() != expected_parts)
        throw std::invalid_argument("scheme must have " + std::to_string(expected_parts) +
                                    " parts, got " + std::to_string(scheme.parts.size()));
    for (const auto& part : scheme.parts)
        if (part.twice() < 1)
            throw std::invalid_argument("scheme parts must be at least 1/2");
    if (scheme.total() != j)
        throw std::invalid_argument("scheme " + scheme.label() + " does not sum to j = " +
                                    j.label());
}

double overlap_from_eta(double eta) {
    if (eta < 0.0 || eta > 1.0)
        throw std::invalid_argument("overlap_from_eta: eta must lie in [0, 1]");
    return (1.0 - eta * eta) / (1.0 + eta * eta);
}

double coherent_pair_overlap(HalfInt j, double p) {
    // p^{2j}; the twice-value is the integer exponent, so no fractional powers.
    return std::pow(p, j.twice());
}

double cat_normalization(const CatState& state) {
    if (state.degenerate())
        throw DegenerateCatError("cat_normalization: odd cat at p = 1 has zero norm");
    const double q = coherent_pair_overlap(state.j, state.p);
    return 1.0 / std::sqrt(2.0 + 2.0 * q * cos_m_pi(state.m));
}

std::vector<SplitScheme> enumerate_bipartitions(HalfInt j) {
    std::vector<SplitScheme> out;
    for (int s = 1; s < j.twice(); ++s)
        out.push_back({{HalfInt::from_twice(j.twice() - s), HalfInt::from_twice(s)}});
    return out;
}

std::vector<SplitScheme> enumerate_tripartitions(HalfInt j) {
    std::vector<SplitScheme> out;
    const int total = j.twice();
    for (int t1 = 1; t1 <= total - 2; ++t1)
        for (int t2 = 1; t2 <= total - t1 - 1; ++t2)
            out.push_back({{HalfInt::from_twice(t1), HalfInt::from_twice(t2),
                            HalfInt::from_twice(total - t1 - t2)}});
    return out;
}

}  // namespace spincat
