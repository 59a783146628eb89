#pragma once

#include <stdexcept>
#include <vector>

namespace dcoulomb {

/// Generalized Laguerre polynomial L_n^(a)(t) by the three-term recurrence
///   (n+1) L_{n+1} = (2n + 1 + a - t) L_n - (n + a) L_{n-1}.
/// Templated so the same recurrence runs in doubles and in exact rationals.
template <class T>
T generalized_laguerre(int n, const T& a, const T& t) {
    if (n < 0) throw std::invalid_argument("generalized_laguerre: n must be non-negative");
    T lm1(1);
    if (n == 0) return lm1;
    T l0 = T(1) + a - t;
    for (int j = 1; j < n; ++j) {
        T l1 = ((T(2 * j + 1) + a - t) * l0 - (T(j) + a) * lm1) / T(j + 1);
        lm1 = l0;
        l0 = l1;
    }
    return l0;
}

/// d/dt L_n^(a)(t) = -L_{n-1}^(a+1)(t).
template <class T>
T generalized_laguerre_derivative(int n, const T& a, const T& t) {
    if (n == 0) return T(0);
    return -generalized_laguerre(n - 1, a + T(1), t);
}

/// Monomial coefficients of L_n^(a)(t), ascending in t, built from the same
/// recurrence applied to coefficient vectors.
template <class T>
std::vector<T> generalized_laguerre_coefficients(int n, const T& a) {
    if (n < 0) throw std::invalid_argument("generalized_laguerre_coefficients: n >= 0 required");
    std::vector<T> lm1{T(1)};
    if (n == 0) return lm1;
    std::vector<T> l0{T(1) + a, T(-1)};
    for (int j = 1; j < n; ++j) {
        std::vector<T> l1(j + 2, T(0));
        const T c0 = T(2 * j + 1) + a;
        const T cm = T(j) + a;
        const T invцjp1 = T(1);  // placeholder removed below
        (void)inv цjp1;
        for (int i = 0; i <= j; ++i) {
            l1[i] += c0 * l0[i];
            if (i + 1 <= j + 1) l1[i + 1] -= l0[i];
        }
        for (std::size_t i = 0; i < lm1.size(); ++i) l1[i] -= cm * lm1[i];
        for (auto& c : l1) c = c / T(j + 1);
        lm1 = std::move(l0);
        l0 = std::move(l1);
    }
    return l0;
}

/// Proportionality factor between the recursion polynomial P_k at alpha = 0
/// and L_k^(2l+1)(2 Z rho / n):
///   a_kl = (-1)^k k! (2l)!! (2k+2l+1)! / [ (2k+2l)!! (k+2l+1)! ].
/// Using (2m)!! = 2^m m! this is (-1)^k k! l! (2k+2l+1)! / (2^k (k+l)! (k+2l+1)!).
template <class T>
T laguerre_match_factor(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("laguerre_match_factor: k, l >= 0 required");
    T r(1);
    for (int i = 1; i <= k; ++i) r = r * T(i);                       // k!
    for (int i = 1; i <= l; ++i) r = r * T(i);                       // l!
    for (int i = k + l + 1; i <= 2 * k + 2 * l + 1; ++i) r = r * T(i);  // (2k+2l+1)!/(k+l)!
    for (int i = 1; i <= k + 2 * l + 1; ++i) r = r / T(i);           // /(k+2l+1)!
    for (int i = 0; i < k; ++i) r = r / T(2);                        // /2^k
    if (k % 2 != 0) r = -r;
    return r;
}

}  // namespace dcoulomb
