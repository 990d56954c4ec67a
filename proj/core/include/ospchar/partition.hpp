#pragma once

#include <compare>
#include <optional>
#include <vector>

namespace ospchar {

// Integer partition in canonical form: weakly decreasing positive parts,
// trailing zeros stripped.  The empty partition is the weight-0 partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    // 0-based row index; rows past the length read as 0.
    int part(int i) const {
        return (i >= 0 && i < static_cast<int>(parts_.size())) ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Orders by weight first, then lexicographically on parts.  This is the
// canonical enumeration order used throughout.
bool weight_lex_less(const Partition& a, const Partition& b);

Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);

// Difference of two nested Young diagrams.
struct SkewShape {
    Partition outer;
    Partition inner;
    SkewShape(Partition outer_, Partition inner_);
    int size() const { return outer.weight() - inner.weight(); }
};

// True iff the skew shape has at most one cell per column.
bool is_horizontal_strip(const SkewShape& shape);

// At most `rows` rows, each part at most `cols`.
struct RectBound {
    int rows = 0;
    int cols = 0;
    bool admits(const Partition& p) const;
};

// (m,n)-hook: rows beyond the m-th have at most n cells, i.e. part(m) <= n.
struct HookBound {
    int m = 0;
    int n = 0;
    bool admits(const Partition& p) const;
};

// All partitions of the given weight with parts <= max_part and at most
// max_len rows, in lexicographic order.
std::vector<Partition> partitions_of_weight(int weight, int max_part, int max_len);

// All partitions fitting in the rectangle, in (weight, lex) order.
std::vector<Partition> partitions_in_rect(const RectBound& bound);

// Partitions of one fixed weight inside the hook, optionally capped in the
// first part, in lexicographic order.
std::vector<Partition> partitions_in_hook_of_weight(const HookBound& bound,
                                                    std::optional<int> max_part,
                                                    int weight);

// True iff every part value occurs an even number of times (equivalently the
// column lengths of the diagram are all even ones doubled: rows pair up).
bool is_doubled(const Partition& p);

// True iff p = nu + horizontal strip of exactly `strip` cells for some
// doubled partition nu contained in p.  Decided by searching the witnesses.
bool is_doubled_plus_strip(const Partition& p, int strip);

// Rectangle enumeration filtered by the strip predicate; (weight, lex) order.
std::vector<Partition> doubled_plus_strip_in_rect(const RectBound& bound, int strip);

// Hook enumeration filtered by the strip predicate, all weights up to
// max_weight; (weight, lex) order.
std::vector<Partition> doubled_plus_strip_in_hook(const HookBound& bound,
                                                  std::optional<int> max_part,
                                                  int strip,
                                                  int max_weight);

} // namespace ospchar
