// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "exfeec/combinatorics.hpp"
#include "exfeec/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace exfeec {

namespace detail {
// Masks of k-subsets of [1..n] (bit i <-> index i) in lexicographic order.
const std::vector<std::uint32_t>& coordinate_masks(int n, int k);
int coordinate_rank(int n, int k, std::uint32_t mask);
}  // namespace detail

// Constant k-form Σ_ρ c_ρ (dx)_ρ on R^n, ρ ∈ Σ([1..k],[1..n]).
template <class F>
class AltForm {
public:
    AltForm() = default;
    AltForm(int n, int k) : n_(n), k_(k) {
        if (n < 0 || k < 0 || k > n) throw std::invalid_argument("AltForm: need 0 <= k <= n");
        c_.assign(detail::coordinate_masks(n, k).size(), F(0));
    }

    // (dx)_ρ with ρ given by its values in [1..n]
    static AltForm basis(int n, const IncreasingMap& rho) {
        AltForm w(n, rho.size());
        w[rho.mask()] = F(1);
        return w;
    }
    static AltForm dx(int n, int i) { return basis(n, IncreasingMap(1, {i})); }
    static AltForm scalar(int n, const F& c) {
        AltForm w(n, 0);
        w.c_[0] = c;
        return w;
    }
    static AltForm volume(int n) { return basis(n, IncreasingMap::interval(1, n)); }

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return c_.size(); }
    const std::vector<std::uint32_t>& masks() const { return detail::coordinate_masks(n_, k_); }
    F& coeff_at(std::size_t i) { return c_[i]; }
    const F& coeff_at(std::size_t i) const { return c_[i]; }
    F& operator[](std::uint32_t mask) { return c_[static_cast<std::size_t>(detail::coordinate_rank(n_, k_, mask))]; }
    const F& operator[](std::uint32_t mask) const {
        return c_[static_cast<std::size_t>(detail::coordinate_rank(n_, k_, mask))];
    }
    F coeff(const IncreasingMap& rho) const { return (*this)[rho.mask()]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const F& x) { return exfeec::is_zero(x); });
    }

    AltForm& operator+=(const AltForm& o) {
        same_shape(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    AltForm& operator-=(const AltForm& o) {
        same_shape(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    AltForm& operator*=(const F& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
    friend AltForm operator-(AltForm a, const AltForm& b) { return a -= b; }
    friend AltForm operator*(const F& s, AltForm a) { return a *= s; }
    AltForm operator-() const { return F(-1) * (*this); }

    friend bool operator==(const AltForm& a, const AltForm& b) { return a.n_ == b.n_ && a.k_ == b.k_ && a.c_ == b.c_; }

    std::string str() const {
        std::string s;
        const auto& ms = masks();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (exfeec::is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += to_string(c_[i]);
            if (k_ > 0) s += " * dx" + IncreasingMap::from_mask(ms[i], 1).str();
        }
        return s.empty() ? "0" : s;
    }

    template <class G>
    AltForm<G> cast() const {
        AltForm<G> w(n_, k_);
        for (std::size_t i = 0; i < c_.size(); ++i) w.coeff_at(i) = G(c_[i]);
        return w;
    }

private:
    void same_shape(const AltForm& o) const {
        if (o.n_ != n_ || o.k_ != k_) throw std::invalid_argument("AltForm: shape mismatch");
    }

    int n_ = 0, k_ = 0;
    std::vector<F> c_;
};

template <class F>
AltForm<F> wedge(const AltForm<F>& a, const AltForm<F>& b) {
    if (a.n() != b.n()) throw std::invalid_argument("wedge: dimension mismatch");
    const int n = a.n();
    if (a.k() + b.k() > n) return AltForm<F>(n, n);  // zero in the top degree slot
    AltForm<F> out(n, a.k() + b.k());
    const auto& ma = a.masks();
    const auto& mb = b.masks();
    for (std::size_t i = 0; i < ma.size(); ++i) {
        if (is_zero(a.coeff_at(i))) continue;
        for (std::size_t j = 0; j < mb.size(); ++j) {
            if (is_zero(b.coeff_at(j)) || (ma[i] & mb[j])) continue;
            F t = a.coeff_at(i) * b.coeff_at(j);
            if (merge_sign(ma[i], mb[j]) > 0)
                out[ma[i] | mb[j]] += t;
            else
                out[ma[i] | mb[j]] -= t;
        }
    }
    return out;
}

// ω⌟v for v = (v_1..v_n)
template <class F>
AltForm<F> interior(const AltForm<F>& w, const std::vector<F>& v) {
    if (w.k() == 0) throw std::invalid_argument("interior: 0-form");
    if (static_cast<int>(v.size()) != w.n()) throw std::invalid_argument("interior: vector dimension mismatch");
    AltForm<F> out(w.n(), w.k() - 1);
    const auto& ms = w.masks();
    for (std::size_t t = 0; t < ms.size(); ++t) {
        if (is_zero(w.coeff_at(t))) continue;
        auto rho = IncreasingMap::from_mask(ms[t], 1);
        for (int i = 1; i <= rho.size(); ++i) {
            const F& vi = v[static_cast<std::size_t>(rho(i) - 1)];
            if (is_zero(vi)) continue;
            F term = w.coeff_at(t) * vi;
            std::uint32_t rest = ms[t] & ~(1u << rho(i));
            if ((i - 1) % 2 == 0)
                out[rest] += term;
            else
                out[rest] -= term;
        }
    }
    return out;
}

// ω(v_1..v_k) with vectors as columns of V (n × k)
template <class F>
F evaluate(const AltForm<F>& w, const Matrix<F>& V) {
    if (static_cast<int>(V.rows()) != w.n() || static_cast<int>(V.cols()) != w.k())
        throw std::invalid_argument("evaluate: shape mismatch");
    F total(0);
    const auto& ms = w.masks();
    for (std::size_t t = 0; t < ms.size(); ++t) {
        if (is_zero(w.coeff_at(t))) continue;
        auto rho = IncreasingMap::from_mask(ms[t], 1);
        Matrix<F> minor(static_cast<std::size_t>(w.k()), static_cast<std::size_t>(w.k()));
        for (int i = 0; i < w.k(); ++i)
            for (int j = 0; j < w.k(); ++j)
                minor(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    V(static_cast<std::size_t>(rho.at_position(i) - 1), static_cast<std::size_t>(j));
        total += w.coeff_at(t) * determinant(minor);
    }
    return total;
}

// J*ω for J : R^{n_in} -> R^{n_out} (J is n_out × n_in), ω on R^{n_out}.
template <class F>
AltForm<F> pullback(const Matrix<F>& J, const AltForm<F>& w) {
    if (static_cast<int>(J.rows()) != w.n()) throw std::invalid_argument("pullback: dimension mismatch");
    const int nin = static_cast<int>(J.cols());
    const int k = w.k();
    if (k > nin) return AltForm<F>(nin, nin);
    AltForm<F> out(nin, k);
    const auto& msrc = w.masks();
    const auto& mdst = out.masks();
    for (std::size_t s = 0; s < msrc.size(); ++s) {
        if (is_zero(w.coeff_at(s))) continue;
        auto sig = IncreasingMap::from_mask(msrc[s], 1);
        for (std::size_t t = 0; t < mdst.size(); ++t) {
            auto rho = IncreasingMap::from_mask(mdst[t], 1);
            Matrix<F> minor(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    minor(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                        J(static_cast<std::size_t>(sig.at_position(i) - 1), static_cast<std::size_t>(rho.at_position(j) - 1));
            out.coeff_at(t) += w.coeff_at(s) * determinant(minor);
        }
    }
    return out;
}

template <class F>
F inner(const AltForm<F>& a, const AltForm<F>& b) {
    if (a.n() != b.n() || a.k() != b.k()) throw std::invalid_argument("inner: shape mismatch");
    F s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a.coeff_at(i) * b.coeff_at(i);
    return s;
}

// ⋆(dx)_ρ = sign(ρ)(dx)_{ρ*}
template <class F>
AltForm<F> hodge(const AltForm<F>& w) {
    const int n = w.n();
    AltForm<F> out(n, n - w.k());
    const IntSet S = interval_set(1, n);
    const auto& ms = w.masks();
    const std::uint32_t full = ((1u << (n + 1)) - 1u) & ~1u;
    for (std::size_t t = 0; t < ms.size(); ++t) {
        if (is_zero(w.coeff_at(t))) continue;
        int s = sign(IncreasingMap::from_mask(ms[t], 1), S);
        if (s > 0)
            out[full & ~ms[t]] += w.coeff_at(t);
        else
            out[full & ~ms[t]] -= w.coeff_at(t);
    }
    return out;
}

}  // namespace exfeec
