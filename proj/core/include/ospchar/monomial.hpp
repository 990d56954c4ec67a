#pragma once

#include <map>
#include <vector>

#include "ospchar/types.hpp"

namespace ospchar {

// Exact sparse polynomial in num_x variables x_1..x_m followed by num_y
// variables y_1..y_n.  Exponent tuples have length m+n and may be negative
// (Laurent monomials); stored coefficients are never zero.  Terms are kept
// in lexicographic exponent order.
class MonomialExpansion {
public:
    MonomialExpansion() = default;
    MonomialExpansion(int num_x, int num_y);
    static MonomialExpansion constant(int num_x, int num_y, Integer value);

    int num_x() const { return num_x_; }
    int num_y() const { return num_y_; }
    int num_vars() const { return num_x_ + num_y_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<int>, Integer>& terms() const { return terms_; }
    Integer coefficient(const std::vector<int>& exponent) const;

    // Accumulates into the existing term, dropping it if the sum is zero.
    void add_term(std::vector<int> exponent, Integer coefficient);

    MonomialExpansion& operator+=(const MonomialExpansion& other);
    MonomialExpansion& operator-=(const MonomialExpansion& other);
    MonomialExpansion operator*(const MonomialExpansion& other) const;
    MonomialExpansion& scale(const Integer& factor);

    bool operator==(const MonomialExpansion&) const = default;

private:
    int num_x_ = 0;
    int num_y_ = 0;
    std::map<std::vector<int>, Integer> terms_;
};

struct EvaluationPoint {
    std::vector<Rational> x;
    std::vector<Rational> y;
    // x_i = 1 for all i, y_j = -1 for all j: the superdimension evaluation.
    static EvaluationPoint ones_minus_ones(int num_x, int num_y);
    static EvaluationPoint all_ones(int num_x, int num_y);
};

Rational evaluate(const MonomialExpansion& e, const EvaluationPoint& point);

// Product with concatenated exponent tuples: the variables of `a` become the
// x-block of the result and the variables of `b` its y-block.
MonomialExpansion tensor_product(const MonomialExpansion& a, const MonomialExpansion& b);

// Substitutes x_1 = t, y_1 = -t and merges the two exponents into the first
// variable of the result, which is the polynomial in (t, x_2..x_m, y_2..y_n).
MonomialExpansion cancellation_substitution(const MonomialExpansion& e);

} // namespace ospchar
