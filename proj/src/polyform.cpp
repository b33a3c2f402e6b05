// SPDX-License-Identifier: Apache-2.0
#include "exfeec/polyform.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace exfeec {

namespace {
std::size_t sz(int i) { return static_cast<std::size_t>(i); }

int bit_sign(int s) { return s % 2 ? -1 : 1; }

// dλ_i ∧ (dλ)_mask = sign · (dλ)_{mask ∪ i}
int prepend_sign(int i, std::uint32_t mask) { return merge_sign(1u << i, mask); }

using PolyTerms = std::vector<std::pair<Exps, Rational>>;

PolyTerms poly_mul(const PolyTerms& a, const PolyTerms& b) {
    std::map<Exps, Rational> acc;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) acc[ea + eb].addmul(ca, cb);
    PolyTerms out;
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.emplace_back(e, std::move(c));
    return out;
}

// (Σ_{i<nvars} λ_i)^j, or (1 - Σ_{1≤i<nvars} λ_i)^j when affine is set
const PolyTerms& power_cache(int nvars, int j, bool affine) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, bool>, PolyTerms> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(nvars, j, affine);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    PolyTerms base;
    if (affine) {
        base.emplace_back(Exps{0}, Rational(1));
        for (int i = 1; i < nvars; ++i) base.emplace_back(exps_unit(i), Rational(-1));
    } else {
        for (int i = 0; i < nvars; ++i) base.emplace_back(exps_unit(i), Rational(1));
    }
    PolyTerms p{{Exps{0}, Rational(1)}};
    for (int t = 0; t < j; ++t) p = poly_mul(p, base);
    return cache.emplace(key, std::move(p)).first->second;
}

std::string term_text(std::uint32_t mask, Exps e, const Rational& c, const IncreasingMap& host) {
    const int nvars = host.size();
    std::string s = c.str();
    std::string mono;
    for (int i = 0; i < nvars; ++i) {
        int a = exps_get(e, i);
        if (a == 0) continue;
        if (!mono.empty()) mono += " ";
        mono += "l" + std::to_string(host.at_position(i));
        if (a > 1) mono += "^" + std::to_string(a);
    }
    std::string form;
    for (int i = 0; mask >> i; ++i)
        if (mask & (1u << i)) form += (form.empty() ? "" : " ^ ") + std::string("dl") + std::to_string(host.at_position(i));
    if (!mono.empty() || !form.empty()) s += " *";
    if (!mono.empty()) s += " " + mono;
    if (!form.empty()) s += (mono.empty() ? " " : " ^ ") + form;
    return s;
}

std::string terms_text(const PolyForm::Terms& terms, const IncreasingMap& host) {
    const int nvars = host.size();
    std::vector<std::pair<TermKey, const Rational*>> list;
    for (const auto& [k, c] : terms) list.emplace_back(k, &c);
    std::sort(list.begin(), list.end(), [nvars](const auto& x, const auto& y) {
        auto rx = IncreasingMap::from_mask(x.first.mask).values();
        auto ry = IncreasingMap::from_mask(y.first.mask).values();
        if (rx.size() != ry.size()) return rx.size() < ry.size();
        if (rx != ry) return rx < ry;
        auto ex = unpack_exps(x.first.exps, nvars), ey = unpack_exps(y.first.exps, nvars);
        int dx = exps_degree(x.first.exps), dy = exps_degree(y.first.exps);
        if (dx != dy) return dx > dy;
        return ex > ey;
    });
    if (list.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : list) {
        if (!s.empty()) s += " + ";
        s += term_text(k.mask, k.exps, *c, host);
    }
    return s;
}
}  // namespace

Exps pack_exps(const std::vector<int>& e) {
    if (e.size() > sz(kMaxVertices)) throw std::invalid_argument("too many barycentric variables");
    Exps p = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > 255) throw std::invalid_argument("exponent out of range");
        p |= static_cast<Exps>(e[i]) << (8 * i);
    }
    return p;
}

std::vector<int> unpack_exps(Exps e, int nvars) {
    std::vector<int> v(sz(nvars));
    for (int i = 0; i < nvars; ++i) v[sz(i)] = exps_get(e, i);
    return v;
}

int exps_degree(Exps e) {
    int s = 0;
    for (int i = 0; i < kMaxVertices; ++i) s += exps_get(e, i);
    return s;
}

PolyForm::PolyForm(IncreasingMap host, int k) : host_(std::move(host)), k_(k) {
    if (host_.empty() || host_.size() > kMaxVertices) throw std::invalid_argument("PolyForm: host must have 1..8 vertices");
    if (k < 0 || k > dim()) throw std::invalid_argument("PolyForm: need 0 <= k <= dim");
}

PolyForm PolyForm::constant(const IncreasingMap& host, const Rational& c) {
    PolyForm w(host, 0);
    w.add_term(0, 0, c);
    return w;
}

PolyForm PolyForm::lambda(const IncreasingMap& host, int i) {
    PolyForm w(host, 0);
    if (i < 0 || i >= w.nvars()) throw std::out_of_range("lambda: index outside host");
    w.add_term(0, exps_unit(i), Rational(1));
    return w;
}

PolyForm PolyForm::dlambda(const IncreasingMap& host, int i) { return dlambda(host, IncreasingMap(0, {i})); }

PolyForm PolyForm::dlambda(const IncreasingMap& host, const IncreasingMap& rho) {
    PolyForm w(host, rho.size());
    for (int v : rho.values())
        if (v < 0 || v >= w.nvars()) throw std::out_of_range("dlambda: index outside host");
    w.add_term(rho.mask(), 0, Rational(1));
    return w;
}

PolyForm PolyForm::monomial(const IncreasingMap& host, const MultiIndex& alpha, const IncreasingMap& rho, const Rational& c) {
    PolyForm w(host, rho.size());
    if (alpha.size() != w.nvars()) throw std::invalid_argument("monomial: multi-index size must equal vertex count");
    for (int v : rho.values())
        if (v < 0 || v >= w.nvars()) throw std::out_of_range("monomial: form index outside host");
    w.add_term(rho.mask(), pack_exps(alpha.exponents), c);
    return w;
}

PolyForm PolyForm::bubble(const IncreasingMap& host, const IncreasingMap& sigma) {
    PolyForm w(host, 0);
    Exps e = 0;
    for (int v : sigma.values()) {
        if (v < 0 || v >= w.nvars()) throw std::out_of_range("bubble: index outside host");
        e += exps_unit(v);
    }
    w.add_term(0, e, Rational(1));
    return w;
}

void PolyForm::add_term(std::uint32_t mask, Exps exps, const Rational& c) {
    if (c.is_zero()) return;
    if (popcount(mask) != k_ || (mask >> nvars()) != 0) throw std::invalid_argument("add_term: form index mismatch");
    auto [it, inserted] = terms_.try_emplace(TermKey{mask, exps}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int PolyForm::max_degree() const {
    int m = -1;
    for (const auto& [k, c] : terms_) m = std::max(m, exps_degree(k.exps));
    return m;
}

void PolyForm::check_compatible(const PolyForm& o, const char* op) const {
    if (!(o.host_ == host_) || o.k_ != k_)
        throw std::invalid_argument(std::string(op) + ": forms live on different hosts or degrees");
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
    check_compatible(o, "add");
    for (const auto& [k, c] : o.terms_) add_term(k.mask, k.exps, c);
    return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
    check_compatible(o, "subtract");
    for (const auto& [k, c] : o.terms_) add_term(k.mask, k.exps, -c);
    return *this;
}

PolyForm& PolyForm::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

PolyForm PolyForm::operator-() const {
    PolyForm w = *this;
    for (auto& [k, v] : w.terms_) v = -v;
    return w;
}

bool PolyForm::is_zero() const {
    if (terms_.empty()) return true;
    PolyForm e = eliminate(*this, 0);
    return homogenize(e, e.max_degree()).terms_.empty();
}

bool operator==(const PolyForm& a, const PolyForm& b) {
    a.check_compatible(b, "compare");
    return (a - b).is_zero();
}

std::string PolyForm::str() const { return terms_text(canonicalize(*this).terms(), host_); }

std::string PolyForm::raw_str() const { return terms_text(terms_, host_); }

std::ostream& operator<<(std::ostream& os, const PolyForm& w) { return os << w.str(); }

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    if (!(a.host() == b.host())) throw std::invalid_argument("wedge: forms live on different hosts");
    if (a.k() + b.k() > a.dim()) throw std::invalid_argument("wedge: degree exceeds host dimension");
    PolyForm out(a.host(), a.k() + b.k());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            if (ka.mask & kb.mask) continue;
            Rational c = ca * cb;
            if (merge_sign(ka.mask, kb.mask) < 0) c = -c;
            out.add_term(ka.mask | kb.mask, ka.exps + kb.exps, c);
        }
    return out;
}

PolyForm d(const PolyForm& w) {
    if (w.k() == w.dim()) throw std::invalid_argument("d: top-degree form has no successor degree on this host");
    PolyForm out(w.host(), w.k() + 1);
    for (const auto& [key, c] : w.terms()) {
        for (int i = 0; i < w.nvars(); ++i) {
            int a = exps_get(key.exps, i);
            if (a == 0 || (key.mask & (1u << i))) continue;
            Rational t = c * Rational(a);
            if (prepend_sign(i, key.mask) < 0) t = -t;
            out.add_term(key.mask | (1u << i), key.exps - exps_unit(i), t);
        }
    }
    return out;
}

PolyForm eliminate(const PolyForm& w, int e) {
    if (e < 0 || e >= w.nvars()) throw std::out_of_range("eliminate: index outside host");
    const std::uint32_t be = 1u << e;
    bool any = false;
    for (const auto& [key, c] : w.terms())
        if (key.mask & be) {
            any = true;
            break;
        }
    if (!any) return w;
    PolyForm out(w.host(), w.k());
    for (const auto& [key, c] : w.terms()) {
        if (!(key.mask & be)) {
            out.add_term(key.mask, key.exps, c);
            continue;
        }
        const std::uint32_t rest = key.mask & ~be;
        // (dλ)_ρ = ε dλ_e ∧ (dλ)_rest, dλ_e = -Σ_{i≠e} dλ_i
        const int eps = prepend_sign(e, rest);
        for (int i = 0; i < w.nvars(); ++i) {
            if (i == e || (rest & (1u << i))) continue;
            Rational t = c;
            if (-eps * prepend_sign(i, rest) < 0) t = -t;
            out.add_term(rest | (1u << i), key.exps, t);
        }
    }
    return out;
}

PolyForm homogenize(const PolyForm& w, int R) {
    const int m = w.max_degree();
    if (m > R) throw std::invalid_argument("homogenize: target degree below form degree");
    bool already = true;
    for (const auto& [key, c] : w.terms())
        if (exps_degree(key.exps) != R) {
            already = false;
            break;
        }
    if (already) return w;
    PolyForm out(w.host(), w.k());
    for (const auto& [key, c] : w.terms()) {
        const int deg = exps_degree(key.exps);
        if (deg == R) {
            out.add_term(key.mask, key.exps, c);
            continue;
        }
        for (const auto& [e, m2] : power_cache(w.nvars(), R - deg, false)) out.add_term(key.mask, key.exps + e, c * m2);
    }
    return out;
}

PolyForm dehomogenize(const PolyForm& w) {
    PolyForm e = eliminate(w, 0);
    PolyForm out(w.host(), w.k());
    const Exps low = 0xffu;
    for (const auto& [key, c] : e.terms()) {
        const int a = static_cast<int>(key.exps & low);
        if (a == 0) {
            out.add_term(key.mask, key.exps, c);
            continue;
        }
        const Exps rest = key.exps & ~low;
        for (const auto& [x, m] : power_cache(w.nvars(), a, true)) out.add_term(key.mask, rest + x, c * m);
    }
    return out;
}

int true_degree(const PolyForm& w) { return dehomogenize(w).max_degree(); }

PolyForm canonicalize(const PolyForm& w) {
    PolyForm a = dehomogenize(w);
    const int R = a.max_degree();
    if (R < 0) return PolyForm(w.host(), w.k());
    return homogenize(a, R);
}

PolyForm canonical_at_degree(const PolyForm& w, int R) {
    PolyForm e = eliminate(w, 0);
    if (e.max_degree() <= R) return homogenize(e, R);
    PolyForm a = dehomogenize(w);
    if (a.max_degree() > R)
        throw std::invalid_argument("canonical_at_degree: form has degree " + std::to_string(a.max_degree()) +
                                    " > " + std::to_string(R));
    return homogenize(a, R);
}

PolyForm pullback(const AffineSimplexMap& phi, const PolyForm& w) {
    if (!(phi.target == w.host())) throw std::invalid_argument("pullback: form host differs from map target");
    const int nt = phi.target.size(), ns = phi.source.size();
    const auto& M = phi.bary;
    // Rows with at most one nonzero entry equal to 1 map λ_j to a single λ_i or to 0.
    bool simple = true;
    std::vector<int> image(sz(nt), -1);
    for (int j = 0; j < nt && simple; ++j) {
        for (int i = 0; i < ns; ++i) {
            const Rational& x = M(sz(j), sz(i));
            if (x.is_zero()) continue;
            if (x != Rational(1) || image[sz(j)] >= 0) {
                simple = false;
                break;
            }
            image[sz(j)] = i;
        }
    }
    PolyForm out(phi.source, w.k());
    if (w.k() > out.dim()) throw std::invalid_argument("pullback: form degree exceeds source dimension");
    if (simple) {
        for (const auto& [key, c] : w.terms()) {
            Exps e = 0;
            bool dead = false;
            for (int j = 0; j < nt && !dead; ++j) {
                int a = exps_get(key.exps, j);
                if (a == 0) continue;
                if (image[sz(j)] < 0)
                    dead = true;
                else
                    e += static_cast<Exps>(a) << (8 * image[sz(j)]);
            }
            if (dead) continue;
            std::vector<int> targets;
            for (int j = 0; j < nt && !dead; ++j) {
                if (!(key.mask & (1u << j))) continue;
                if (image[sz(j)] < 0) dead = true;
                targets.push_back(image[sz(j)]);
            }
            if (dead) continue;
            std::uint32_t mask = 0;
            for (int t : targets) {
                if (mask & (1u << t)) {
                    dead = true;
                    break;
                }
                mask |= 1u << t;
            }
            if (dead) continue;
            out.add_term(mask, e, permutation_sign(targets) < 0 ? -c : c);
        }
        return out;
    }
    std::vector<PolyForm> lin, dlin;
    for (int j = 0; j < nt; ++j) {
        PolyForm l(phi.source, 0);
        for (int i = 0; i < ns; ++i) l.add_term(0, exps_unit(i), M(sz(j), sz(i)));
        lin.push_back(std::move(l));
        if (w.k() == 0) continue;
        PolyForm dl(phi.source, 1);
        for (int i = 0; i < ns; ++i) dl.add_term(1u << i, 0, M(sz(j), sz(i)));
        dlin.push_back(std::move(dl));
    }
    std::map<std::pair<int, int>, PolyForm> powers;
    std::function<const PolyForm&(int, int)> power = [&](int j, int a) -> const PolyForm& {
        auto it = powers.find({j, a});
        if (it != powers.end()) return it->second;
        PolyForm p = a == 0 ? PolyForm::constant(phi.source, 1) : wedge(power(j, a - 1), lin[sz(j)]);
        return powers.emplace(std::make_pair(j, a), std::move(p)).first->second;
    };
    for (const auto& [key, c] : w.terms()) {
        PolyForm t = PolyForm::constant(phi.source, c);
        for (int j = 0; j < nt; ++j) {
            int a = exps_get(key.exps, j);
            if (a) t = wedge(t, power(j, a));
        }
        for (int j = 0; j < nt; ++j)
            if (key.mask & (1u << j)) t = wedge(t, dlin[sz(j)]);
        out += t;
    }
    return out;
}

PolyForm trace(const PolyForm& w, const IncreasingMap& sigma) {
    if (sigma == w.host()) return w;
    return pullback(inclusion(sigma, w.host()), w);
}

PolyForm restrict_coefficients(const PolyForm& w, const IncreasingMap& sigma_local) {
    Exps keep_mask = 0;
    for (int v : sigma_local.values()) keep_mask |= Exps{0xff} << (8 * v);
    PolyForm out(w.host(), w.k());
    for (const auto& [key, c] : w.terms())
        if ((key.exps & ~keep_mask) == 0) out.add_term(key.mask, key.exps, c);
    return out;
}

PolyForm relabel(const PolyForm& w, const IncreasingMap& new_host, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != w.nvars() || new_host.size() != w.nvars())
        throw std::invalid_argument("relabel: size mismatch");
    AffineSimplexMap m{new_host, w.host(), Matrix<Rational>(sz(w.nvars()), sz(w.nvars()))};
    for (int i = 0; i < w.nvars(); ++i) m.bary(sz(i), sz(new_host.position_of(perm[sz(i)]))) = 1;
    return pullback(m, w);
}

PolyForm whitney(const IncreasingMap& host, const IncreasingMap& rho) {
    if (rho.empty()) throw std::invalid_argument("whitney: empty index map");
    PolyForm out(host, rho.size() - 1);
    for (int p = 0; p < rho.size(); ++p) {
        int v = rho.at_position(p);
        if (v < 0 || v >= out.nvars()) throw std::out_of_range("whitney: index outside host");
        out.add_term(rho.mask() & ~(1u << v), exps_unit(v), Rational(bit_sign(p)));
    }
    return out;
}

namespace {
PolyForm contract(const PolyForm& w, const std::vector<Rational>& delta, bool koszul_mode) {
    if (w.k() == 0) throw std::invalid_argument(koszul_mode ? "koszul: 0-form" : "interior: 0-form");
    if (static_cast<int>(delta.size()) != w.nvars()) throw std::invalid_argument("contraction: point size mismatch");
    PolyForm out(w.host(), w.k() - 1);
    for (const auto& [key, c] : w.terms()) {
        int p = 0;
        for (int i = 0; i < w.nvars(); ++i) {
            if (!(key.mask & (1u << i))) continue;
            const std::uint32_t rest = key.mask & ~(1u << i);
            Rational sgn_c = bit_sign(p) < 0 ? -c : c;
            if (koszul_mode) out.add_term(rest, key.exps + exps_unit(i), sgn_c);
            if (!delta[sz(i)].is_zero()) out.add_term(rest, key.exps, koszul_mode ? -(sgn_c * delta[sz(i)]) : sgn_c * delta[sz(i)]);
            ++p;
        }
    }
    return out;
}
}  // namespace

PolyForm koszul(const PolyForm& w, const std::vector<Rational>& b) {
    Rational s(0);
    for (const auto& x : b) s += x;
    if (s != Rational(1)) throw std::invalid_argument("koszul: barycentric coordinates must sum to 1");
    return contract(w, b, true);
}

PolyForm koszul_centroid(const PolyForm& w) {
    return koszul(w, std::vector<Rational>(sz(w.nvars()), Rational(1, w.nvars())));
}

PolyForm interior_constant(const PolyForm& w, const std::vector<Rational>& delta) {
    Rational s(0);
    for (const auto& x : delta) s += x;
    if (!s.is_zero()) throw std::invalid_argument("interior: barycentric differences must sum to 0");
    return contract(w, delta, false);
}

Rational integrate(const PolyForm& w) {
    if (w.k() != w.dim()) throw std::invalid_argument("integrate: need a top-degree form");
    PolyForm e = eliminate(w, 0);
    Rational total(0);
    for (const auto& [key, c] : e.terms()) {
        Rational num(1);
        for (int i = 0; i < e.nvars(); ++i) num *= factorial(exps_get(key.exps, i));
        total += c * num / factorial(exps_degree(key.exps) + w.dim());
    }
    return total;
}

Rational evaluate_scalar(const PolyForm& w, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != w.nvars()) throw std::invalid_argument("evaluate: point size mismatch");
    Rational total(0);
    for (const auto& [key, c] : w.terms()) {
        Rational t = c;
        for (int i = 0; i < w.nvars() && !t.is_zero(); ++i) {
            int a = exps_get(key.exps, i);
            if (a) t *= pow(b[sz(i)], a);
        }
        total += t;
    }
    return total;
}

AltForm<Rational> evaluate(const PolyForm& w, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != w.nvars()) throw std::invalid_argument("evaluate: point size mismatch");
    PolyForm e = eliminate(w, 0);
    AltForm<Rational> out(w.dim(), w.k());
    for (const auto& [key, c] : e.terms()) {
        Rational t = c;
        for (int i = 0; i < w.nvars() && !t.is_zero(); ++i) {
            int a = exps_get(key.exps, i);
            if (a) t *= pow(b[sz(i)], a);
        }
        out[key.mask] += t;
    }
    return out;
}

PolyForm top_density(const PolyForm& w) {
    if (w.k() != w.dim()) throw std::invalid_argument("top_density: need a top-degree form");
    PolyForm e = eliminate(w, 0);
    PolyForm out(w.host(), 0);
    for (const auto& [key, c] : e.terms()) out.add_term(0, key.exps, c);
    return out;
}

AltForm<Rational> frame_to_cartesian(const AltForm<Rational>& v, const Simplex& T) {
    if (v.n() != T.dim()) throw std::invalid_argument("frame_to_cartesian: dimension mismatch");
    return pullback(T.edge_matrix_inverse(), v);
}

PolyForm monomial_of(const IncreasingMap& host, Exps e) {
    PolyForm w(host, 0);
    w.add_term(0, e, Rational(1));
    return w;
}

}  // namespace exfeec
