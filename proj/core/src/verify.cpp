#include "ospchar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>

#include "ospchar/json_io.hpp"
#include "ospchar/schur.hpp"
#include "ospchar/weyl.hpp"

namespace ospchar {

std::string status_name(VerifyStatus status) {
    switch (status) {
        case VerifyStatus::Pass: return "pass";
        case VerifyStatus::Fail: return "fail";
        case VerifyStatus::EvidencePass: return "evidence-pass";
    }
    throw std::logic_error("unknown status");
}

namespace {

using nlohmann::json;

template <typename Body>
VerificationReport run_timed(std::string identity, std::map<std::string, int> params,
                             Body body) {
    VerificationReport report;
    report.identity = std::move(identity);
    report.params = std::move(params);
    auto start = std::chrono::steady_clock::now();
    std::pair<VerifyStatus, json> result = body();
    auto stop = std::chrono::steady_clock::now();
    report.status = result.first;
    report.witness = std::move(result.second);
    report.ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

std::optional<json> expansion_mismatch(const MonomialExpansion& lhs,
                                       const MonomialExpansion& rhs) {
    auto li = lhs.terms().begin(), le = lhs.terms().end();
    auto ri = rhs.terms().begin(), re = rhs.terms().end();
    while (li != le || ri != re) {
        if (ri == re || (li != le && li->first < ri->first)) {
            return json{{"monomial", li->first}, {"lhs", li->second.str()}, {"rhs", "0"}};
        }
        if (li == le || ri->first < li->first) {
            return json{{"monomial", ri->first}, {"lhs", "0"}, {"rhs", ri->second.str()}};
        }
        if (li->second != ri->second) {
            return json{
                {"monomial", li->first}, {"lhs", li->second.str()}, {"rhs", ri->second.str()}};
        }
        ++li;
        ++ri;
    }
    return std::nullopt;
}

std::optional<json> series_mismatch(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    for (int w = 0; w <= std::max(lhs.degree(), rhs.degree()); ++w) {
        Integer a = w <= lhs.degree() ? lhs.coeffs[static_cast<std::size_t>(w)] : Integer(0);
        Integer b = w <= rhs.degree() ? rhs.coeffs[static_cast<std::size_t>(w)] : Integer(0);
        if (a != b)
            return json{{"degree", w}, {"lhs", a.str()}, {"rhs", b.str()}};
    }
    return std::nullopt;
}

std::optional<json> label_mismatch(const std::vector<Partition>& lhs,
                                   const std::vector<Partition>& rhs) {
    for (std::size_t i = 0; i < std::max(lhs.size(), rhs.size()); ++i) {
        bool l = i < lhs.size(), r = i < rhs.size();
        if (!l || !r || lhs[i] != rhs[i])
            return json{{"position", i},
                        {"lhs", l ? to_json(lhs[i]) : json(nullptr)},
                        {"rhs", r ? to_json(rhs[i]) : json(nullptr)}};
    }
    return std::nullopt;
}

// Highest weight of the so(2k) family [0,...,0,r,p-r] in doubled epsilon
// coordinates: (p,...,p,p-2r).
HalfWeight even_family_weight(int k, int p, int r) {
    std::vector<int> d(static_cast<std::size_t>(k), p);
    d.back() = p - 2 * r;
    return HalfWeight(std::move(d));
}

MonomialExpansion schur_label_sum(const std::vector<Partition>& labels, int n) {
    MonomialExpansion sum(n, 0);
    for (const Partition& lam : labels) sum += schur_expansion(lam, n);
    return sum;
}

// Series of the plain-dimension rectangle sum over the given labels.
TruncatedSeries label_dim_series(const std::vector<Partition>& labels, int rank, int degree) {
    TruncatedSeries s(degree);
    for (const Partition& lam : labels) {
        int w = lam.weight();
        if (w <= degree) s.coeffs[static_cast<std::size_t>(w)] += gl_dimension(lam, rank);
    }
    return s;
}

} // namespace

VerificationReport verify_so_even_character(int k, int p, int r) {
    return run_timed("theorem", {{"k", k}, {"p", p}, {"r", r}},
                     [&]() -> std::pair<VerifyStatus, json> {
        CharacterSum cs = so_even_character(k, p, r);
        MonomialExpansion sum = schur_label_sum(cs.labels, k);
        ShiftedCharacter oracle = weyl_character(WeylKind::D, k, even_family_weight(k, p, r));
        if (oracle.shift2 > p)
            return {VerifyStatus::Fail,
                    json{{"reason", "character reaches below the prefactor shift"},
                         {"shift2", oracle.shift2}}};
        if (auto w = expansion_mismatch(sum, oracle.rebased(p).expansion))
            return {VerifyStatus::Fail, *w};
        return {VerifyStatus::Pass, json()};
    });
}

VerificationReport verify_so_branching(int k, int p) {
    return run_timed("e28", {{"k", k}, {"p", p}},
                     [&]() -> std::pair<VerifyStatus, json> {
        ShiftedCharacter odd =
            weyl_character(WeylKind::B, k, HalfWeight(std::vector<int>(static_cast<std::size_t>(k), p)));
        if (odd.shift2 > p)
            return {VerifyStatus::Fail,
                    json{{"reason", "character reaches below the prefactor shift"},
                         {"shift2", odd.shift2}}};
        MonomialExpansion even_total(k, 0);
        std::vector<Partition> joined;
        for (int r = 0; r <= p; ++r) {
            ShiftedCharacter piece = weyl_character(WeylKind::D, k, even_family_weight(k, p, r));
            even_total += piece.rebased(p).expansion;
            CharacterSum cs = so_even_character(k, p, r);
            joined.insert(joined.end(), cs.labels.begin(), cs.labels.end());
        }
        if (auto w = expansion_mismatch(odd.rebased(p).expansion, even_total))
            return {VerifyStatus::Fail, *w};
        std::sort(joined.begin(), joined.end(), weight_lex_less);
        if (auto w = label_mismatch(joined, so_odd_character(k, p).labels)) {
            (*w)["reason"] = "joined strip classes differ from the rectangle labels";
            return {VerifyStatus::Fail, *w};
        }
        return {VerifyStatus::Pass, json()};
    });
}

VerificationReport verify_union_property(int k, int p) {
    return run_timed("union", {{"k", k}, {"p", p}},
                     [&]() -> std::pair<VerifyStatus, json> {
        std::map<Partition, std::vector<int>> classes;
        for (int r = 0; r <= p; ++r)
            for (const Partition& lam : doubled_plus_strip_in_rect({k, p}, r))
                classes[lam].push_back(r);
        for (const Partition& lam : partitions_in_rect({k, p})) {
            auto it = classes.find(lam);
            std::vector<int> owners = it == classes.end() ? std::vector<int>{} : it->second;
            if (owners.size() != 1)
                return {VerifyStatus::Fail,
                        json{{"partition", to_json(lam)}, {"classes", owners}}};
        }
        return {VerifyStatus::Pass, json()};
    });
}

VerificationReport verify_superdim_case(SuperdimCase kase, int base, int k, int p, int degree) {
    switch (kase) {
        case SuperdimCase::BEqual:
            return run_timed("case1", {{"n", base}, {"p", p}, {"degree", degree}},
                             [&]() -> std::pair<VerifyStatus, json> {
                TruncatedSeries lhs =
                    t_series(osp_odd_character(base, base, p, degree), SeriesMode::Sdim, degree);
                if (auto w = series_mismatch(lhs, TruncatedSeries::one(degree)))
                    return {VerifyStatus::Fail, *w};
                return {VerifyStatus::Pass, json()};
            });
        case SuperdimCase::BMoreX:
            return run_timed("case2", {{"n", base}, {"k", k}, {"p", p}, {"degree", degree}},
                             [&]() -> std::pair<VerifyStatus, json> {
                TruncatedSeries lhs = t_series(osp_odd_character(base + k, base, p, degree),
                                               SeriesMode::Sdim, degree);
                TruncatedSeries rhs =
                    t_series(so_odd_character(k, p), SeriesMode::Dim, degree);
                if (auto w = series_mismatch(lhs, rhs)) return {VerifyStatus::Fail, *w};
                return {VerifyStatus::Pass, json()};
            });
        case SuperdimCase::BMoreY:
            return run_timed("case3", {{"m", base}, {"k", k}, {"p", p}, {"degree", degree}},
                             [&]() -> std::pair<VerifyStatus, json> {
                TruncatedSeries lhs = t_series(osp_odd_character(base, base + k, p, degree),
                                               SeriesMode::Sdim, degree);
                TruncatedSeries rhs =
                    t_series(osp1_character(k, p, degree), SeriesMode::Dim, degree).alternated();
                if (auto w = series_mismatch(lhs, rhs)) return {VerifyStatus::Fail, *w};
                return {VerifyStatus::Pass, json()};
            });
        case SuperdimCase::DCase:
            return run_timed("caseD", {{"n", base}, {"k", k}, {"p", p}, {"degree", degree}},
                             [&]() -> std::pair<VerifyStatus, json> {
                TruncatedSeries lhs = t_series(osp_even_character(base + k, base, p, degree),
                                               SeriesMode::Sdim, degree);
                TruncatedSeries rhs =
                    label_dim_series(doubled_plus_strip_in_rect({k, p}, 0), k, degree);
                if (auto w = series_mismatch(lhs, rhs)) return {VerifyStatus::Fail, *w};
                return {VerifyStatus::Pass, json()};
            });
    }
    throw std::logic_error("unknown case");
}

VerificationReport verify_superdimension_law(int m, int n, int max_weight) {
    return run_timed("dimsdim", {{"m", m}, {"n", n}, {"maxWeight", max_weight}},
                     [&]() -> std::pair<VerifyStatus, json> {
        for (int w = 0; w <= max_weight; ++w) {
            for (const Partition& lam : partitions_of_weight(w, w, w)) {
                Rational closed(gl_superdimension(lam, m, n));
                Rational evaluated =
                    evaluate(super_schur_expansion(lam, m, n), EvaluationPoint::ones_minus_ones(m, n));
                if (closed != evaluated)
                    return {VerifyStatus::Fail,
                            json{{"lambda", to_json(lam)},
                                 {"closed", boost::multiprecision::numerator(closed).str()},
                                 {"evaluated", evaluated.str()}}};
            }
        }
        return {VerifyStatus::Pass, json()};
    });
}

VerificationReport verify_conjecture_evidence(int m, int n, int p, int degree) {
    return run_timed("conjecture", {{"m", m}, {"n", n}, {"p", p}, {"degree", degree}},
                     [&]() -> std::pair<VerifyStatus, json> {
        // (a) At n = 0 the hook labels must reduce to the proven rectangle
        // strip classes of so(2m).
        for (int r = 0; r <= p; ++r) {
            std::vector<Partition> lhs = osp_even_strip_character(m, 0, p, r, degree).labels;
            std::vector<Partition> rhs;
            std::vector<Partition> rect_labels =
                m >= 2 ? so_even_character(m, p, r).labels
                       : doubled_plus_strip_in_rect({1, p}, p - r);
            for (const Partition& lam : rect_labels)
                if (lam.weight() <= degree) rhs.push_back(lam);
            if (auto w = label_mismatch(lhs, rhs)) {
                (*w)["check"] = "reduction";
                (*w)["r"] = r;
                return {VerifyStatus::Fail, *w};
            }
        }
        // (b) The strip classes over r = 0..p partition the hook labels.
        if (n >= 1) {
            std::vector<Partition> joined;
            for (int r = 0; r <= p; ++r) {
                CharacterSum cs = osp_even_strip_character(m, n, p, r, degree);
                joined.insert(joined.end(), cs.labels.begin(), cs.labels.end());
            }
            std::sort(joined.begin(), joined.end(), weight_lex_less);
            if (auto w = label_mismatch(joined, osp_odd_character(m, n, p, degree).labels)) {
                (*w)["check"] = "union";
                return {VerifyStatus::Fail, *w};
            }
        }
        // (c) For m >= n the superdimension series must match the dimension
        // series of the reduced rectangle strip class.
        if (m >= n) {
            int excess = m - n;
            for (int r = 0; r <= p; ++r) {
                TruncatedSeries lhs = t_series(osp_even_strip_character(m, n, p, r, degree),
                                               SeriesMode::Sdim, degree);
                int r_eff = ((m - n) % 2 == 0) ? r : p - r;
                TruncatedSeries rhs = label_dim_series(
                    doubled_plus_strip_in_rect({excess, p}, r_eff), excess, degree);
                if (auto w = series_mismatch(lhs, rhs)) {
                    (*w)["check"] = "superdim";
                    (*w)["r"] = r;
                    return {VerifyStatus::Fail, *w};
                }
            }
        }
        return {VerifyStatus::EvidencePass, json()};
    });
}

} // namespace ospchar
