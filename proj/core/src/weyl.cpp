#include "ospchar/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ospchar {

HalfWeight::HalfWeight(std::vector<int> doubled_) : doubled(std::move(doubled_)) {
    if (doubled.empty())
        throw std::invalid_argument("weight must have positive rank");
    for (int v : doubled)
        if (((v % 2) + 2) % 2 != ((doubled[0] % 2) + 2) % 2)
            throw std::invalid_argument("weight coordinates must share one parity");
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<SignedPermutation> build_group(WeylKind kind, int k) {
    std::vector<SignedPermutation> group;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int psign = permutation_sign(perm);
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            int negs = 0;
            std::vector<int> signs(static_cast<std::size_t>(k), 1);
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) {
                    signs[static_cast<std::size_t>(i)] = -1;
                    ++negs;
                }
            if (kind == WeylKind::D && negs % 2 != 0) continue;
            SignedPermutation w;
            w.perm = perm;
            w.signs = std::move(signs);
            w.det = (negs % 2 == 0) ? psign : -psign;
            group.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return group;
}

} // namespace

const std::vector<SignedPermutation>& weyl_group(WeylKind kind, int k) {
    if (k < 1 || (kind == WeylKind::D && k < 2))
        throw std::invalid_argument("rank too small for the requested series");
    if (k > 8)
        throw std::invalid_argument("rank above 8 not supported");
    static std::map<std::pair<int, int>, std::vector<SignedPermutation>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(static_cast<int>(kind), k);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_group(kind, k)).first;
    return it->second;
}

std::vector<int> rho_doubled(WeylKind kind, int k) {
    std::vector<int> rho(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        rho[static_cast<std::size_t>(i)] =
            (kind == WeylKind::B) ? 2 * (k - i) - 1 : 2 * (k - 1 - i);
    return rho;
}

bool is_dominant(WeylKind kind, const HalfWeight& hw) {
    const auto& a = hw.doubled;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] < a[i + 1]) return false;
    if (kind == WeylKind::B) return a.back() >= 0;
    // D allows a negative last coordinate (the two chiralities).
    if (a.size() < 2) return false;
    return a[a.size() - 2] >= std::abs(a.back());
}

namespace {

MonomialExpansion orbit_alternation(WeylKind kind, int k, const std::vector<int>& doubled) {
    MonomialExpansion out(k, 0);
    for (const SignedPermutation& w : weyl_group(kind, k)) {
        std::vector<int> e(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            e[static_cast<std::size_t>(w.perm[static_cast<std::size_t>(i)])] =
                w.signs[static_cast<std::size_t>(i)] * doubled[static_cast<std::size_t>(i)];
        out.add_term(std::move(e), Integer(w.det));
    }
    return out;
}

} // namespace

MonomialExpansion weyl_numerator(WeylKind kind, int k, const HalfWeight& hw) {
    if (hw.rank() != k) throw std::invalid_argument("weight rank mismatch");
    std::vector<int> a = hw.doubled;
    std::vector<int> rho = rho_doubled(kind, k);
    for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)] += rho[static_cast<std::size_t>(i)];
    return orbit_alternation(kind, k, a);
}

MonomialExpansion weyl_denominator(WeylKind kind, int k) {
    return orbit_alternation(kind, k, rho_doubled(kind, k));
}

MonomialExpansion laurent_quotient(const MonomialExpansion& numerator,
                                   const MonomialExpansion& denominator) {
    if (denominator.is_zero())
        throw std::invalid_argument("division by the zero expansion");
    if (numerator.num_x() != denominator.num_x() ||
        numerator.num_y() != denominator.num_y())
        throw std::invalid_argument("variable layout mismatch in division");
    // Eliminate the lexicographically leading remainder term against the
    // leading denominator term.  Addition of exponent tuples preserves lex
    // order, so every step strictly lowers the remainder's leading term and
    // the loop cannot cycle; a cap guards against non-terminating inputs.
    const auto& lead = *denominator.terms().rbegin();
    MonomialExpansion remainder = numerator;
    MonomialExpansion quotient(numerator.num_x(), numerator.num_y());
    std::size_t steps = 0;
    const std::size_t max_steps = 1000000;
    while (!remainder.is_zero()) {
        if (++steps > max_steps)
            throw DivisionError("leading-term elimination did not terminate");
        const auto& top = *remainder.terms().rbegin();
        Integer q = top.second / lead.second;
        if (q * lead.second != top.second)
            throw DivisionError("leading coefficient does not divide");
        std::vector<int> shift(top.first.size());
        for (std::size_t i = 0; i < shift.size(); ++i)
            shift[i] = top.first[i] - lead.first[i];
        quotient.add_term(shift, q);
        for (const auto& [dexp, dcoef] : denominator.terms()) {
            std::vector<int> e(shift.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = shift[i] + dexp[i];
            remainder.add_term(std::move(e), -q * dcoef);
        }
    }
    return quotient;
}

ShiftedCharacter ShiftedCharacter::rebased(int new_shift2) const {
    int delta = new_shift2 - shift2;
    if (delta < 0)
        throw std::invalid_argument("cannot rebase to a smaller shift");
    if (delta % 2 != 0)
        throw std::invalid_argument("shift increment must be even");
    ShiftedCharacter out;
    out.shift2 = new_shift2;
    out.expansion = MonomialExpansion(expansion.num_x(), expansion.num_y());
    for (const auto& [exp, coef] : expansion.terms()) {
        std::vector<int> e = exp;
        for (int& v : e) v += delta / 2;
        out.expansion.add_term(std::move(e), coef);
    }
    return out;
}

ShiftedCharacter weyl_character(WeylKind kind, int k, const HalfWeight& hw) {
    if (hw.rank() != k) throw std::invalid_argument("weight rank mismatch");
    if (!is_dominant(kind, hw))
        throw std::invalid_argument("weight must be dominant");
    MonomialExpansion num = weyl_numerator(kind, k, hw);
    MonomialExpansion den = weyl_denominator(kind, k);
    MonomialExpansion quotient = laurent_quotient(num, den);
    if (quotient * den != num)
        throw DivisionError("character quotient failed the multiplication check");
    // Quotient exponents are doubled weights; shift them up to non-negative
    // integers by the smallest admissible uniform amount.
    int min_exp = 0;
    for (const auto& [exp, coef] : quotient.terms())
        for (int v : exp) min_exp = std::min(min_exp, v);
    ShiftedCharacter out;
    out.shift2 = -min_exp;
    out.expansion = MonomialExpansion(k, 0);
    for (const auto& [exp, coef] : quotient.terms()) {
        std::vector<int> e(exp.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            int shifted = exp[i] + out.shift2;
            if (shifted % 2 != 0)
                throw DivisionError("character exponents have mixed parity");
            e[i] = shifted / 2;
        }
        out.expansion.add_term(std::move(e), coef);
    }
    return out;
}

Integer weyl_dimension(WeylKind kind, int k, const HalfWeight& hw) {
    if (hw.rank() != k) throw std::invalid_argument("weight rank mismatch");
    if (!is_dominant(kind, hw))
        throw std::invalid_argument("weight must be dominant");
    std::vector<int> rho = rho_doubled(kind, k);
    std::vector<int> a = hw.doubled;
    for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)] += rho[static_cast<std::size_t>(i)];
    Rational prod(1);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            prod *= Rational(a[i] - a[j], rho[i] - rho[j]);
            prod *= Rational(a[i] + a[j], rho[i] + rho[j]);
        }
        if (kind == WeylKind::B) prod *= Rational(a[i], rho[i]);
    }
    if (boost::multiprecision::denominator(prod) != 1)
        throw std::logic_error("Weyl dimension product must be an integer");
    return boost::multiprecision::numerator(prod);
}

} // namespace ospchar
