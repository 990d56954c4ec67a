#include "ospchar/schur.hpp"

#include <functional>
#include <stdexcept>

namespace ospchar {

namespace {

// Branching recursion: the exponent of the last variable is the size of the
// horizontal strip removed, and the rest of the tableau lives in the first
// n-1 variables.  Candidates nu interlace outer while containing inner:
// max(inner_i, outer_{i+1}) <= nu_i <= outer_i.
MonomialExpansion expand_branching(const Partition& outer, const Partition& inner, int n) {
    if (n == 0) {
        MonomialExpansion out(0, 0);
        if (outer == inner) out.add_term({}, Integer(1));
        return out;
    }
    MonomialExpansion out(n, 0);
    std::vector<int> acc;
    std::function<void(int)> choose = [&](int row) {
        if (row == outer.length()) {
            std::vector<int> trimmed = acc;
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            Partition nu(std::move(trimmed));
            MonomialExpansion sub = expand_branching(nu, inner, n - 1);
            int strip = outer.weight() - nu.weight();
            for (const auto& [exp, coef] : sub.terms()) {
                std::vector<int> e = exp;
                e.push_back(strip);
                out.add_term(std::move(e), coef);
            }
            return;
        }
        int lo = std::max(inner.part(row), outer.part(row + 1));
        int hi = outer.part(row);
        for (int v = hi; v >= lo; --v) {
            acc.push_back(v);
            choose(row + 1);
            acc.pop_back();
        }
    };
    choose(0);
    return out;
}

} // namespace

MonomialExpansion schur_expansion(const Partition& lambda, int n) {
    if (n < 0) throw std::invalid_argument("variable count must be non-negative");
    if (lambda.length() > n) return MonomialExpansion(n, 0);
    return expand_branching(lambda, Partition(), n);
}

MonomialExpansion skew_schur_expansion(const SkewShape& shape, int n) {
    if (n < 0) throw std::invalid_argument("variable count must be non-negative");
    return expand_branching(shape.outer, shape.inner, n);
}

MonomialExpansion super_schur_expansion(const Partition& lambda, int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("variable counts must be non-negative");
    MonomialExpansion out(m, n);
    if (lambda.part(m) > n) return out;
    Partition lambda_conj = conjugate(lambda);
    // Sum over subdiagrams mu with at most m rows: the x-part carries an
    // ordinary Schur factor, the y-part the conjugate skew factor.
    std::vector<int> acc;
    std::function<void(int)> choose = [&](int row) {
        if (row == std::min(lambda.length(), m)) {
            std::vector<int> trimmed = acc;
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            Partition mu(std::move(trimmed));
            MonomialExpansion ypart =
                skew_schur_expansion(SkewShape(lambda_conj, conjugate(mu)), n);
            if (ypart.is_zero()) return;
            out += tensor_product(schur_expansion(mu, m), ypart);
            return;
        }
        int hi = std::min(lambda.part(row), row == 0 ? lambda.part(0) : acc.back());
        for (int v = hi; v >= 0; --v) {
            acc.push_back(v);
            choose(row + 1);
            acc.pop_back();
        }
    };
    choose(0);
    return out;
}

Integer gl_dimension(const Partition& lambda, int n) {
    if (n < 0) throw std::invalid_argument("rank must be non-negative");
    if (lambda.length() > n) return 0;
    Rational prod(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            prod *= Rational(lambda.part(i) - lambda.part(j) + j - i, j - i);
    if (boost::multiprecision::denominator(prod) != 1)
        throw std::logic_error("gl dimension product must be an integer");
    return boost::multiprecision::numerator(prod);
}

Integer gl_superdimension(const Partition& lambda, int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("ranks must be non-negative");
    if (lambda.part(m) > n) return 0;
    if (m >= n) return gl_dimension(lambda, m - n);
    Integer d = gl_dimension(conjugate(lambda), n - m);
    return (lambda.weight() % 2 == 0) ? d : -d;
}

} // namespace ospchar
