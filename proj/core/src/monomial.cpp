#include "ospchar/monomial.hpp"

#include <stdexcept>

namespace ospchar {

MonomialExpansion::MonomialExpansion(int num_x, int num_y)
    : num_x_(num_x), num_y_(num_y) {
    if (num_x < 0 || num_y < 0)
        throw std::invalid_argument("variable counts must be non-negative");
}

MonomialExpansion MonomialExpansion::constant(int num_x, int num_y, Integer value) {
    MonomialExpansion e(num_x, num_y);
    e.add_term(std::vector<int>(static_cast<std::size_t>(num_x + num_y), 0), std::move(value));
    return e;
}

Integer MonomialExpansion::coefficient(const std::vector<int>& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

void MonomialExpansion::add_term(std::vector<int> exponent, Integer coefficient) {
    if (static_cast<int>(exponent.size()) != num_vars())
        throw std::invalid_argument("exponent tuple length mismatch");
    if (coefficient == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exponent), std::move(coefficient));
    } else {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

MonomialExpansion& MonomialExpansion::operator+=(const MonomialExpansion& other) {
    if (other.num_x_ != num_x_ || other.num_y_ != num_y_)
        throw std::invalid_argument("variable layout mismatch in addition");
    if (this == &other) return scale(Integer(2));
    for (const auto& [exp, coef] : other.terms_) add_term(exp, coef);
    return *this;
}

MonomialExpansion& MonomialExpansion::operator-=(const MonomialExpansion& other) {
    if (other.num_x_ != num_x_ || other.num_y_ != num_y_)
        throw std::invalid_argument("variable layout mismatch in subtraction");
    if (this == &other) {
        terms_.clear();
        return *this;
    }
    for (const auto& [exp, coef] : other.terms_) add_term(exp, -coef);
    return *this;
}

MonomialExpansion MonomialExpansion::operator*(const MonomialExpansion& other) const {
    if (other.num_x_ != num_x_ || other.num_y_ != num_y_)
        throw std::invalid_argument("variable layout mismatch in multiplication");
    MonomialExpansion out(num_x_, num_y_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    }
    return out;
}

MonomialExpansion& MonomialExpansion::scale(const Integer& factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exp, coef] : terms_) coef *= factor;
    return *this;
}

EvaluationPoint EvaluationPoint::ones_minus_ones(int num_x, int num_y) {
    return EvaluationPoint{
        std::vector<Rational>(static_cast<std::size_t>(num_x), Rational(1)),
        std::vector<Rational>(static_cast<std::size_t>(num_y), Rational(-1))};
}

EvaluationPoint EvaluationPoint::all_ones(int num_x, int num_y) {
    return EvaluationPoint{
        std::vector<Rational>(static_cast<std::size_t>(num_x), Rational(1)),
        std::vector<Rational>(static_cast<std::size_t>(num_y), Rational(1))};
}

namespace {

Rational rational_pow(const Rational& base, int e) {
    if (e < 0) {
        if (base == 0)
            throw std::invalid_argument("negative exponent at zero");
        return rational_pow(Rational(1) / base, -e);
    }
    Rational out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

} // namespace

Rational evaluate(const MonomialExpansion& e, const EvaluationPoint& point) {
    if (static_cast<int>(point.x.size()) != e.num_x() ||
        static_cast<int>(point.y.size()) != e.num_y())
        throw std::invalid_argument("evaluation point does not match variable layout");
    std::vector<Rational> values = point.x;
    values.insert(values.end(), point.y.begin(), point.y.end());
    Rational total(0);
    for (const auto& [exp, coef] : e.terms()) {
        Rational term(coef);
        for (std::size_t i = 0; i < values.size(); ++i)
            term *= rational_pow(values[i], exp[i]);
        total += term;
    }
    return total;
}

MonomialExpansion tensor_product(const MonomialExpansion& a, const MonomialExpansion& b) {
    MonomialExpansion out(a.num_vars(), b.num_vars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            std::vector<int> e = ea;
            e.insert(e.end(), eb.begin(), eb.end());
            out.add_term(std::move(e), ca * cb);
        }
    }
    return out;
}

MonomialExpansion cancellation_substitution(const MonomialExpansion& e) {
    if (e.num_x() < 1 || e.num_y() < 1)
        throw std::invalid_argument("cancellation substitution needs at least one x and one y");
    int m = e.num_x(), n = e.num_y();
    MonomialExpansion out(1 + (m - 1) + (n - 1), 0);
    for (const auto& [exp, coef] : e.terms()) {
        std::vector<int> merged;
        merged.reserve(exp.size() - 1);
        merged.push_back(exp[0] + exp[static_cast<std::size_t>(m)]);
        for (int i = 1; i < m; ++i) merged.push_back(exp[static_cast<std::size_t>(i)]);
        for (int j = 1; j < n; ++j) merged.push_back(exp[static_cast<std::size_t>(m + j)]);
        Integer c = (exp[static_cast<std::size_t>(m)] % 2 == 0) ? coef : -coef;
        out.add_term(std::move(merged), std::move(c));
    }
    return out;
}

} // namespace ospchar
