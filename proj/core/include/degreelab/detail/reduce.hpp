#ifndef DEGREELAB_DETAIL_REDUCE_HPP
#define DEGREELAB_DETAIL_REDUCE_HPP

#include <cstddef>
#include <span>

namespace degreelab::detail {

// Fixed-shape pairwise (tree) reduction.  The combination order depends
// only on the index range, never on scheduling, so sums are reproducible
// bit-for-bit across runs and thread counts.
inline constexpr std::size_t reduce_leaf_size = 1024;

template <class F>
double pairwise_sum_indexed(std::size_t begin, std::size_t end, F&& value_at) {
    const std::size_t n = end - begin;
    if (n <= reduce_leaf_size) {
        double s = 0.0;
        for (std::size_t i = begin; i < end; ++i) s += value_at(i);
        return s;
    }
    const std::size_t mid = begin + n / 2;
    return pairwise_sum_indexed(begin, mid, value_at) +
           pairwise_sum_indexed(mid, end, value_at);
}

inline double pairwise_sum(std::span<const double> values) {
    return pairwise_sum_indexed(0, values.size(),
                                [&](std::size_t i) { return values[i]; });
}

} // namespace degreelab::detail

#endif
