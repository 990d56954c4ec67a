#include "ospchar/character_sum.hpp"

#include <algorithm>
#include <stdexcept>

#include "ospchar/schur.hpp"

namespace ospchar {

std::string family_name(Family family) {
    switch (family) {
        case Family::SoOdd: return "soOdd";
        case Family::SoEvenTheorem: return "soEvenTheorem";
        case Family::Osp1: return "osp1";
        case Family::OspB: return "ospB";
        case Family::OspD: return "ospD";
        case Family::OspDConjecture: return "ospDConjecture";
    }
    throw std::logic_error("unknown family");
}

namespace {

std::vector<int> uniform_prefactor(int count, int value2) {
    return std::vector<int>(static_cast<std::size_t>(count), value2);
}

std::vector<int> mixed_prefactor(int m, int n, int p) {
    std::vector<int> pre = uniform_prefactor(m, -p);
    std::vector<int> ypre = uniform_prefactor(n, p);
    pre.insert(pre.end(), ypre.begin(), ypre.end());
    return pre;
}

void check_positive(int value, const char* what) {
    if (value < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

void check_cutoff(int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
}

void check_strip_index(int r, int p) {
    if (r < 0 || r > p) throw std::invalid_argument("strip index must lie in [0, p]");
}

} // namespace

CharacterSum so_odd_character(int n, int p) {
    check_positive(n, "n");
    check_positive(p, "p");
    CharacterSum cs;
    cs.family = Family::SoOdd;
    cs.num_x = n;
    cs.params = {{"n", n}, {"p", p}};
    cs.prefactor2 = uniform_prefactor(n, -p);
    cs.labels = partitions_in_rect({n, p});
    return cs;
}

CharacterSum so_even_character(int k, int p, int r) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    check_positive(p, "p");
    check_strip_index(r, p);
    CharacterSum cs;
    cs.family = Family::SoEvenTheorem;
    cs.num_x = k;
    cs.params = {{"k", k}, {"p", p}, {"r", r}};
    cs.prefactor2 = uniform_prefactor(k, -p);
    int r_eff = (k % 2 == 0) ? r : p - r;
    cs.labels = doubled_plus_strip_in_rect({k, p}, r_eff);
    return cs;
}

CharacterSum osp1_character(int n, int p, int cutoff) {
    check_positive(n, "n");
    check_positive(p, "p");
    check_cutoff(cutoff);
    CharacterSum cs;
    cs.family = Family::Osp1;
    cs.num_x = n;
    cs.params = {{"n", n}, {"p", p}};
    cs.prefactor2 = uniform_prefactor(n, p);
    cs.cutoff = cutoff;
    int max_len = std::min(n, p);
    for (int w = 0; w <= cutoff; ++w) {
        auto lay = partitions_of_weight(w, w, max_len);
        cs.labels.insert(cs.labels.end(), lay.begin(), lay.end());
    }
    return cs;
}

CharacterSum osp_odd_character(int m, int n, int p, int cutoff) {
    check_positive(m, "m");
    check_positive(n, "n");
    check_positive(p, "p");
    check_cutoff(cutoff);
    CharacterSum cs;
    cs.family = Family::OspB;
    cs.num_x = m;
    cs.num_y = n;
    cs.params = {{"m", m}, {"n", n}, {"p", p}};
    cs.prefactor2 = mixed_prefactor(m, n, p);
    cs.cutoff = cutoff;
    for (int w = 0; w <= cutoff; ++w) {
        auto lay = partitions_in_hook_of_weight({m, n}, p, w);
        cs.labels.insert(cs.labels.end(), lay.begin(), lay.end());
    }
    return cs;
}

CharacterSum osp_even_character(int m, int n, int p, int cutoff) {
    check_positive(m, "m");
    check_positive(n, "n");
    check_positive(p, "p");
    check_cutoff(cutoff);
    CharacterSum cs;
    cs.family = Family::OspD;
    cs.num_x = m;
    cs.num_y = n;
    cs.params = {{"m", m}, {"n", n}, {"p", p}};
    cs.prefactor2 = mixed_prefactor(m, n, p);
    cs.cutoff = cutoff;
    for (int w = 0; w <= cutoff; ++w)
        for (const Partition& lam : partitions_in_hook_of_weight({m, n}, p, w))
            if (is_doubled(lam)) cs.labels.push_back(lam);
    return cs;
}

CharacterSum osp_even_strip_character(int m, int n, int p, int r, int cutoff) {
    check_positive(m, "m");
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    check_positive(p, "p");
    check_strip_index(r, p);
    check_cutoff(cutoff);
    CharacterSum cs;
    cs.family = Family::OspDConjecture;
    cs.num_x = m;
    cs.num_y = n;
    cs.params = {{"m", m}, {"n", n}, {"p", p}, {"r", r}};
    cs.prefactor2 = mixed_prefactor(m, n, p);
    cs.cutoff = cutoff;
    int r_eff = ((m - n) % 2 == 0) ? r : p - r;
    cs.labels = doubled_plus_strip_in_hook({m, n}, p, r_eff, cutoff);
    return cs;
}

TruncatedSeries::TruncatedSeries(int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    coeffs.assign(static_cast<std::size_t>(degree) + 1, Integer(0));
}

TruncatedSeries TruncatedSeries::one(int degree) {
    TruncatedSeries s(degree);
    s.coeffs[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::alternated() const {
    TruncatedSeries s = *this;
    for (std::size_t i = 1; i < s.coeffs.size(); i += 2) s.coeffs[i] = -s.coeffs[i];
    return s;
}

TruncatedSeries t_series(const CharacterSum& sum, SeriesMode mode, int degree) {
    bool super_family = sum.family == Family::OspB || sum.family == Family::OspD ||
                        sum.family == Family::OspDConjecture;
    if (mode == SeriesMode::Sdim && !super_family)
        throw std::invalid_argument("superdimension series requires an osp(2m+1|2n) or osp(2m|2n) family");
    if (mode == SeriesMode::Dim && super_family)
        throw std::invalid_argument("dimension series requires a classical or osp(1|2n) family");
    if (sum.cutoff && degree > *sum.cutoff)
        throw std::invalid_argument("series degree exceeds the label cutoff");
    TruncatedSeries s(degree);
    for (const Partition& lam : sum.labels) {
        int w = lam.weight();
        if (w > degree) continue;
        s.coeffs[static_cast<std::size_t>(w)] +=
            (mode == SeriesMode::Dim) ? gl_dimension(lam, sum.num_x)
                                      : gl_superdimension(lam, sum.num_x, sum.num_y);
    }
    return s;
}

} // namespace ospchar
