#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ospchar/partition.hpp"
#include "ospchar/types.hpp"

namespace ospchar {

enum class Family { SoOdd, SoEvenTheorem, Osp1, OspB, OspD, OspDConjecture };

std::string family_name(Family family);

// A character written as prefactor * sum of (super) Schur polynomials:
//   (x_1...x_m)^(prefactor2[i]/2-like per-variable exponents) *
//   sum over labels of s_lambda(x|y).
// prefactor2 holds the doubled exponent of each variable in order x then y.
// For finite families `cutoff` is empty and `labels` is the complete list;
// otherwise `labels` holds every label of weight <= cutoff.
struct CharacterSum {
    Family family = Family::SoOdd;
    int num_x = 0;
    int num_y = 0;
    std::map<std::string, int> params;
    std::vector<int> prefactor2;
    std::vector<Partition> labels;
    std::optional<int> cutoff;
};

// so(2n+1), family [0,...,0,p]: labels are the partitions in the n x p
// rectangle, prefactor (x_1...x_n)^(-p/2).
CharacterSum so_odd_character(int n, int p);

// so(2k), family [0,...,0,r,p-r]: labels are the strip classes inside the
// k x p rectangle, with the class index reflected for odd k.  Needs k >= 2.
CharacterSum so_even_character(int k, int p, int r);

// osp(1|2n), family [0,...,0,p]: labels have at most min(n,p) rows, all
// weights up to the cutoff; prefactor (x_1...x_n)^(+p/2).
CharacterSum osp1_character(int n, int p, int cutoff);

// osp(2m+1|2n), family [0,...,0,p]: labels are (m,n)-hook partitions with
// first part at most p; prefactor (x_1...x_m)^(-p/2) (y_1...y_n)^(+p/2).
CharacterSum osp_odd_character(int m, int n, int p, int cutoff);

// osp(2m|2n), family [0,...,0,p]: as above restricted to doubled labels.
CharacterSum osp_even_character(int m, int n, int p, int cutoff);

// osp(2m|2n), family [0,...,0,r,p-r]: hook labels in the strip class, the
// class index reflected when m - n is odd.  n = 0 is allowed here.
CharacterSum osp_even_strip_character(int m, int n, int p, int r, int cutoff);

// Polynomial truncation of a power series: coefficients of t^0 .. t^degree.
struct TruncatedSeries {
    std::vector<Integer> coeffs;
    TruncatedSeries() = default;
    explicit TruncatedSeries(int degree);
    static TruncatedSeries one(int degree);
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    TruncatedSeries alternated() const; // t -> -t
    bool operator==(const TruncatedSeries&) const = default;
};

enum class SeriesMode { Dim, Sdim };

// Sum over labels of dim (or superdimension) times t^|label|, ignoring the
// prefactor.  Dim applies to the classical and osp(1|2n) families, Sdim to
// the osp(2m+1|2n) and osp(2m|2n) families.  The degree may not exceed the
// cutoff of a truncated family.
TruncatedSeries t_series(const CharacterSum& sum, SeriesMode mode, int degree);

} // namespace ospchar
