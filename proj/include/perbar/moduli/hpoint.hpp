#pragma once

#include <stdexcept>
#include <vector>

#include "cross_ratio.hpp"

namespace perbar {

// Point of H_{d,n} in the chart a_* = inf, a_1 = 0, a_{2,0} = 1; x holds x_3..x_n.
template <class K>
struct HPoint {
    int d = 2, n = 5;
    std::vector<K> x;

    K source(int i) const {
        if (i == 1) return K(0);
        if (i == 2) return K(1);
        return x.at(i - 3);
    }
    // b_{i+1 mod n} = x_i^d, b_2 = 0, b_3 = 1.
    K target(int j) const {
        if (j == 2) return K(0);
        int i = j - 1;
        if (i <= 0) i += n;
        K v = source(i), r(1);
        for (int k = 0; k < d; ++k) r = r * v;
        return r;
    }

    // Invariant check; tol is used for floating types through the supplied near-zero test.
    template <class Z>
    void validate(Z near_zero) const {
        if (static_cast<int>(x.size()) != n - 2) throw std::invalid_argument("HPoint needs n - 2 coordinates");
        for (int i = 3; i <= n; ++i) {
            if (near_zero(source(i))) throw std::domain_error("HPoint: x_i = 0");
            K p = target(i % n + 1);
            if (near_zero(p - K(1))) throw std::domain_error("HPoint: x_i^d = 1");
            for (int j = i + 1; j <= n; ++j)
                if (near_zero(p - target(j % n + 1))) throw std::domain_error("HPoint: x_i^d = x_j^d");
        }
    }
    void validate() const {
        validate([](const K& a) { return is_zero(a); });
    }
};

template <class K>
struct PiCoords {
    std::vector<K> source;  // CR(1,2,3,i) of the stabilized source, i = 4..n
    std::vector<K> target;  // the same cross-ratios of the target marks b_1..b_n
};

// pi_2 (source, forgetting a_*) and pi_1 (target, forgetting b_*) in the common chart CR(1,2,3,i).
template <class K>
PiCoords<K> pi_maps(const HPoint<K>& h) {
    PiCoords<K> r;
    for (int i = 4; i <= h.n; ++i) {
        r.source.push_back(cross_ratio_value(h.source(1), h.source(2), h.source(3), h.source(i)));
        r.target.push_back(cross_ratio_value(h.target(1), h.target(2), h.target(3), h.target(i)));
    }
    return r;
}

}  // namespace perbar
