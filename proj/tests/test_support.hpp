#pragma once

#include <random>

#include "cdp/cdp_set.hpp"
#include "cdp/family.hpp"

namespace cdp::test {

inline CMat random_hermitian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    CMat x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = Complex(dist(rng), dist(rng));
    return (x + x.adjoint()) / 2.0;
}

inline CMat random_complex(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    CMat x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = Complex(dist(rng), dist(rng));
    return x;
}

inline CoefficientFamily random_hermitian_family(int n, std::mt19937_64& rng) {
    std::vector<CMat> mats;
    mats.reserve(n);
    for (int k = 0; k < n; ++k) mats.push_back(random_hermitian(n, rng));
    return CoefficientFamily(std::move(mats));
}

/// Hermitian PSD family with unit total trace.
inline CoefficientFamily random_state_family(int n, std::mt19937_64& rng) {
    std::vector<CMat> mats;
    mats.reserve(n);
    for (int k = 0; k < n; ++k) {
        const CMat g = random_complex(n, rng);
        mats.push_back(g * g.adjoint());
    }
    return CoefficientFamily(std::move(mats)).normalized();
}

inline Permutation random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

inline CdpSet regular_z2m(int m) {
    const int n = 1 << m;
    std::vector<Permutation> perms;
    perms.reserve(n);
    for (int k = 0; k < n; ++k) {
        std::vector<int> img(n);
        for (int t = 0; t < n; ++t) img[t] = t ^ k;
        perms.emplace_back(std::move(img));
    }
    return CdpSet::verify(std::move(perms));
}

}  // namespace cdp::test
