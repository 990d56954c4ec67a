#include "ospchar/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ospchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool weight_lex_less(const Partition& a, const Partition& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.parts() < b.parts();
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    cols.reserve(static_cast<std::size_t>(p.part(0)));
    for (int j = 1; j <= p.part(0); ++j) {
        int count = 0;
        for (int v : p.parts())
            if (v >= j) ++count;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!contains(outer, inner))
        throw std::invalid_argument("skew shape requires inner contained in outer");
}

bool is_horizontal_strip(const SkewShape& shape) {
    // One cell per column means row i+1 of the outer shape may not extend
    // past row i of the inner shape.
    for (int i = 0; i + 1 < shape.outer.length(); ++i)
        if (shape.outer.part(i + 1) > shape.inner.part(i)) return false;
    return true;
}

bool RectBound::admits(const Partition& p) const {
    return p.length() <= rows && p.part(0) <= cols;
}

bool HookBound::admits(const Partition& p) const {
    return p.part(m) <= n;
}

namespace {

// All partitions of `remaining` extending `acc`, with each new part bounded
// above by `cap` and the row budget by `rows_left`; hook rows (index >= m)
// are additionally capped at n when a hook is given.
void extend_layer(int remaining, int cap, int rows_left,
                  const std::optional<HookBound>& hook,
                  std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (rows_left == 0) return;
    int limit = std::min(cap, remaining);
    if (hook && static_cast<int>(acc.size()) >= hook->m)
        limit = std::min(limit, hook->n);
    for (int v = limit; v >= 1; --v) {
        acc.push_back(v);
        extend_layer(remaining - v, v, rows_left - 1, hook, acc, out);
        acc.pop_back();
    }
}

std::vector<Partition> layer(int weight, int max_part, int max_len,
                             const std::optional<HookBound>& hook) {
    std::vector<Partition> out;
    if (weight < 0) return out;
    std::vector<int> acc;
    extend_layer(weight, max_part, max_len, hook, acc, out);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
    return out;
}

} // namespace

std::vector<Partition> partitions_of_weight(int weight, int max_part, int max_len) {
    if (weight < 0) throw std::invalid_argument("weight must be non-negative");
    return layer(weight, max_part, max_len, std::nullopt);
}

std::vector<Partition> partitions_in_rect(const RectBound& bound) {
    if (bound.rows < 0 || bound.cols < 0)
        throw std::invalid_argument("rectangle bounds must be non-negative");
    std::vector<Partition> out;
    for (int w = 0; w <= bound.rows * bound.cols; ++w) {
        auto lay = layer(w, bound.cols, bound.rows, std::nullopt);
        out.insert(out.end(), lay.begin(), lay.end());
    }
    return out;
}

std::vector<Partition> partitions_in_hook_of_weight(const HookBound& bound,
                                                    std::optional<int> max_part,
                                                    int weight) {
    if (bound.m < 0 || bound.n < 0)
        throw std::invalid_argument("hook bounds must be non-negative");
    if (weight < 0) throw std::invalid_argument("weight must be non-negative");
    if (max_part && *max_part < 0)
        throw std::invalid_argument("max_part must be non-negative");
    // Row count never exceeds the weight, so `weight` is a safe row budget.
    return layer(weight, max_part ? *max_part : weight, weight, bound);
}

bool is_doubled(const Partition& p) {
    if (p.length() % 2 != 0) return false;
    for (int i = 0; i + 1 < p.length(); i += 2)
        if (p.part(i) != p.part(i + 1)) return false;
    return true;
}

namespace {

// Search over partitions nu interlacing p (p/nu a horizontal strip) with
// |nu| = |p| - strip, testing each candidate for doubledness.
bool witness_search(const Partition& p, int row, int target, std::vector<int>& acc) {
    if (row == p.length()) {
        if (target != 0) return false;
        std::vector<int> trimmed = acc;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        return is_doubled(Partition(std::move(trimmed)));
    }
    int lo = p.part(row + 1);
    int hi = p.part(row);
    for (int v = hi; v >= lo; --v) {
        if (v > target) continue;
        acc.push_back(v);
        if (witness_search(p, row + 1, target - v, acc)) {
            acc.pop_back();
            return true;
        }
        acc.pop_back();
    }
    return false;
}

} // namespace

bool is_doubled_plus_strip(const Partition& p, int strip) {
    if (strip < 0) return false;
    int target = p.weight() - strip;
    if (target < 0) return false;
    std::vector<int> acc;
    return witness_search(p, 0, target, acc);
}

std::vector<Partition> doubled_plus_strip_in_rect(const RectBound& bound, int strip) {
    std::vector<Partition> out;
    for (const Partition& p : partitions_in_rect(bound))
        if (is_doubled_plus_strip(p, strip)) out.push_back(p);
    return out;
}

std::vector<Partition> doubled_plus_strip_in_hook(const HookBound& bound,
                                                  std::optional<int> max_part,
                                                  int strip,
                                                  int max_weight) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w)
        for (const Partition& p : partitions_in_hook_of_weight(bound, max_part, w))
            if (is_doubled_plus_strip(p, strip)) out.push_back(p);
    return out;
}

} // namespace ospchar
