// SPDX-License-Identifier: Apache-2.0
#include "exfeec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace exfeec {

namespace {
std::size_t sz(int i) { return static_cast<std::size_t>(i); }

using Emit = std::function<void(VerificationReport)>;

IncreasingMap cell(int n) { return IncreasingMap::interval(0, n); }

// all faces of the host including itself, by dimension then lex
std::vector<IncreasingMap> all_faces(const IncreasingMap& host, int lo) {
    std::vector<IncreasingMap> out;
    for (int e = std::max(lo, 0); e < host.size(); ++e)
        for (const auto& f : enumerate_sigma(0, e, host.values())) out.push_back(f);
    return out;
}

std::vector<Rational> centroid_in(const IncreasingMap& sigma, const IncreasingMap& host) {
    std::vector<Rational> b(sz(host.size()), Rational(0));
    for (int v : sigma.values()) b[sz(host.position_of(v))] = Rational(1, sigma.size());
    return b;
}

// barycentric sample points of a face, in the host's coordinates
std::vector<std::vector<Rational>> face_samples(const IncreasingMap& face, const IncreasingMap& host) {
    std::vector<std::vector<Rational>> pts;
    for (int v : face.values()) {
        std::vector<Rational> b(sz(host.size()), Rational(0));
        b[sz(host.position_of(v))] = 1;
        pts.push_back(std::move(b));
    }
    pts.push_back(centroid_in(face, host));
    std::vector<Rational> b(sz(host.size()), Rational(0));
    int total = face.size() * (face.size() + 1) / 2;
    for (int p = 0; p < face.size(); ++p) b[sz(host.position_of(face.at_position(p)))] = Rational(p + 1, total);
    pts.push_back(std::move(b));
    return pts;
}

std::vector<Simplex> simplices_for(const SuiteConfig& c, Rng& rng, int n, std::vector<std::string>& labels) {
    std::vector<Simplex> out;
    if (c.simplex_source == "reference" || c.simplex_source == "both") {
        out.push_back(Simplex::unit(n));
        labels.push_back("reference");
    }
    if (c.simplex_source == "random-rational" || c.simplex_source == "both") {
        for (int i = 0; i < c.random_simplices; ++i) {
            out.push_back(random_simplex(rng, n));
            labels.push_back("random-" + std::to_string(i));
        }
    }
    return out;
}

Matrix<QuadExt> to_quad(const Matrix<Rational>& A) {
    Matrix<QuadExt> Q(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) Q(i, j) = QuadExt(A(i, j));
    return Q;
}

AltForm<QuadExt> to_quad(const AltForm<Rational>& w) { return w.cast<QuadExt>(); }

Simplex image_simplex(const CartesianAffine<Rational>& phi, const Simplex& T) {
    std::vector<Point<Rational>> v;
    for (int i = 0; i <= T.dim(); ++i) {
        Vector<Rational> y = phi.A * Vector<Rational>(T.vertex(i));
        Point<Rational> p;
        for (int c = 0; c < T.dim(); ++c) p.push_back(y[sz(c)] + phi.t[sz(c)]);
        v.push_back(std::move(p));
    }
    return Simplex(std::move(v));
}

AltForm<Rational> cartesian_value(const PolyForm& w, const Simplex& T, const std::vector<Rational>& b) {
    return frame_to_cartesian(evaluate(w, b), T);
}

AffineSimplexMap random_bary_map(Rng& rng, const IncreasingMap& source, const IncreasingMap& target) {
    AffineSimplexMap m{source, target, Matrix<Rational>(sz(target.size()), sz(source.size()))};
    for (int i = 0; i < source.size(); ++i) {
        Rational rest(1);
        for (int j = 0; j + 1 < target.size(); ++j) {
            Rational x = rng.rational(3, 4);
            m.bary(sz(j), sz(i)) = x;
            rest -= x;
        }
        m.bary(sz(target.size() - 1), sz(i)) = rest;
    }
    return m;
}

std::vector<Rational> random_point(Rng& rng, int nvars) {
    std::vector<Rational> b;
    Rational rest(1);
    for (int i = 0; i + 1 < nvars; ++i) {
        Rational x = rng.rational(3, 5);
        b.push_back(x);
        rest -= x;
    }
    b.push_back(rest);
    return b;
}

// Trace-free spans per face, computed once per suite case.
class TraceFreeCache {
public:
    const Span& get(Family f, const IncreasingMap& host, int r, int k) {
        auto key = std::make_tuple(static_cast<int>(f), host, r, k);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, trace_free_subspace(space(f, host, r, k))).first->second;
    }

private:
    std::map<std::tuple<int, IncreasingMap, int, int>, Span> cache_;
};

VerificationReport base(const std::string& name, int n, int k, int r, const std::string& fam = "") {
    VerificationReport rep;
    rep.statement = name;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    rep.family = fam;
    return rep;
}

void fail(VerificationReport& rep, const std::string& why) {
    if (rep.witness.empty()) rep.witness = why;
    rep.pass = false;
}

int involution_sign(int n, int k) { return (k * (n - k)) % 2 ? -1 : 1; }

// ---------------------------------------------------------------------------
// statements

void st_hodge_involution(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (int n = 1; n <= std::max(c.max_n, 4); ++n)
        for (int k = 0; k <= n; ++k) {
            auto rep = base("hodge.involution", n, k, -1);
            rep.pass = true;
            std::size_t count = 0;
            for (auto m : detail::coordinate_masks(n, k)) {
                auto w = AltForm<Rational>::basis(n, IncreasingMap::from_mask(m, 1));
                auto s = hodge(w);
                if (c.fault == "hodge-sign" && m == detail::coordinate_masks(n, k).back()) s = -s;
                auto ss = hodge(s);
                ++count;
                if (!(ss == Rational(involution_sign(n, k)) * w))
                    fail(rep, "**(dx)" + IncreasingMap::from_mask(m, 1).str() + " = " + ss.str());
            }
            rep.detail = {{"forms", count}, {"sign", involution_sign(n, k)}};
            emit(rep);
        }
}

void st_hodge_inner(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (int n = 1; n <= std::max(c.max_n, 4); ++n)
        for (int k = 0; k <= n; ++k) {
            auto rep = base("hodge.wedge_inner", n, k, -1);
            rep.pass = true;
            for (auto a : detail::coordinate_masks(n, k))
                for (auto b : detail::coordinate_masks(n, k)) {
                    auto wa = AltForm<Rational>::basis(n, IncreasingMap::from_mask(a, 1));
                    auto wb = AltForm<Rational>::basis(n, IncreasingMap::from_mask(b, 1));
                    if (!(wedge(wa, hodge(wb)) == inner(wa, wb) * AltForm<Rational>::volume(n)))
                        fail(rep, "w ^ *m != <w,m> vol for " + wa.str() + ", " + wb.str());
                }
            emit(rep);
        }
}

void st_koszul_pullback(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n)
        for (int k = 1; k <= n; ++k) {
            auto rep = base("koszul.pullback_commute", n, k, 2);
            rep.pass = true;
            const auto T = cell(n);
            Span S = space_full(T, 2, k);
            for (int trial = 0; trial < 3; ++trial) {
                auto phi = random_bary_map(rng, T, T);
                auto w = random_element(rng, S);
                auto b = random_point(rng, n + 1);
                Vector<Rational> img = phi.bary * Vector<Rational>(b);
                std::vector<Rational> bt(img.begin(), img.end());
                if (!(pullback(phi, koszul(w, bt)) == koszul(pullback(phi, w), b)))
                    fail(rep, "phi* k_{phi(x)} w != k_x phi* w for w = " + w.str());
            }
            emit(rep);
        }
}

void st_oriented_volume(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n) {
        std::vector<std::string> labels;
        auto Ts = simplices_for(c, rng, n, labels);
        for (std::size_t s = 0; s < Ts.size(); ++s) {
            auto rep = base("simplex.oriented_volume", n, -1, -1);
            rep.simplex = labels[s];
            rep.pass = true;
            std::vector<int> pi(sz(n + 1));
            for (int i = 0; i <= n; ++i) pi[sz(i)] = i;
            std::size_t count = 0;
            do {
                for (int i = 0; i <= n; ++i) {
                    ++count;
                    if (!oriented_volume_identity(Ts[s], pi, i)) {
                        std::string p;
                        for (int x : pi) p += std::to_string(x);
                        fail(rep, "identity fails for pi = " + p + ", i = " + std::to_string(i));
                    }
                }
            } while (std::next_permutation(pi.begin(), pi.end()));
            rep.detail = {{"checks", count}};
            emit(rep);
        }
    }
}

void st_whitney(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n)
        for (int k = 0; k <= n; ++k) {
            auto rep = base("whitney.properties", n, k, 1);
            rep.pass = true;
            const auto T = cell(n);
            std::vector<PolyForm> phis;
            for (const auto& rho : enumerate_sigma(0, k, interval_set(0, n))) {
                PolyForm phi = whitney(T, rho);
                phis.push_back(phi);
                if (k < n && !(d(phi) == Rational(k + 1) * PolyForm::dlambda(T, rho)))
                    fail(rep, "d phi" + rho.str() + " != (k+1) dl" + rho.str());
                for (const auto& f : faces_of(T, k, n - 1)) {
                    PolyForm tr = trace(phi, f);
                    bool inside = rho.range_subset_of(f);
                    if (!inside && !tr.is_zero()) fail(rep, "trace of phi" + rho.str() + " on " + f.str() + " is nonzero");
                    if (inside && !(tr == whitney(f, local_positions(rho, f))))
                        fail(rep, "trace of phi" + rho.str() + " on " + f.str() + " is not the face Whitney form");
                }
            }
            Span W(T, k, Family::Custom, 1, phis);
            if (W.dimension() != static_cast<std::size_t>(binomial_ll(n + 1, k + 1)))
                fail(rep, "Whitney forms are dependent");
            if (!span_equal(W, space_trimmed(T, 1, k))) fail(rep, "Whitney forms do not span P1-");
            rep.detail = {{"dimension", W.dimension()}};
            emit(rep);
        }
}

void st_trimmed_koszul(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n)
        for (int k = 0; k <= n; ++k)
            for (int r = 1; r <= c.r_max(n); ++r) {
                auto rep = base("trimmed.koszul_characterization", n, k, r);
                const auto T = cell(n);
                std::vector<PolyForm> gens = space_full(T, r - 1, k).basis();
                if (k < n)
                    for (const auto& g : space_full(T, r - 1, k + 1).basis()) gens.push_back(koszul_centroid(g));
                Span K(T, k, Family::Custom, r, gens, r);
                Span P = space_trimmed(T, r, k);
                rep.pass = span_equal(K, P);
                rep.detail = {{"dimension", P.dimension()}};
                if (!rep.pass) rep.witness = "P_{r-1} + kappa P_{r-1} has dim " + std::to_string(K.dimension());
                emit(rep);
            }
}

void st_legacy_h(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n)
        for (int k = 0; k <= n; ++k)
            for (int r = 0; r <= std::min(c.r_max(n), 3); ++r) {
                auto rep = base("legacy_h.signs", n, k, r);
                auto L = legacy_h_check(cell(n), r, k);
                rep.pass = L.ok();
                rep.detail = {{"full_checked", L.full.size()}, {"trimmed_checked", L.trimmed.size()},
                              {"all_signed", L.all_signed}, {"consistent", L.consistent}};
                if (!rep.pass) rep.witness = to_json(L).dump();
                emit(rep);
            }
}

void st_star_bijection(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n) {
        std::vector<std::string> labels;
        auto Ts = simplices_for(c, rng, n, labels);
        for (std::size_t s = 0; s < Ts.size(); ++s) {
            StarContext ctx(Ts[s]);
            for (int k = 0; k <= n; ++k) {
                auto rep = base("star_T.bijection", n, k, -1);
                rep.simplex = labels[s];
                const auto& in = detail::coordinate_masks(n, k);
                const auto& out = detail::coordinate_masks(n, n - k);
                Matrix<QuadExt> M(out.size(), in.size());
                for (std::size_t j = 0; j < in.size(); ++j) {
                    auto img = ctx.star(AltForm<QuadExt>::basis(n, IncreasingMap::from_mask(in[j], 1)));
                    for (std::size_t i = 0; i < out.size(); ++i) M(i, j) = img.coeff_at(i);
                }
                rep.pass = rank(M) == in.size() && in.size() == out.size();
                rep.detail = {{"rank", rank(M)}};
                if (!rep.pass) rep.witness = "rank deficient";
                emit(rep);
            }
        }
    }
}

void st_star_involution(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n) {
        std::vector<std::string> labels;
        auto Ts = simplices_for(c, rng, n, labels);
        for (std::size_t s = 0; s < Ts.size(); ++s) {
            StarContext ctx(Ts[s]);
            for (int k = 0; k <= n; ++k) {
                auto rep = base("star_T.involution", n, k, -1);
                rep.simplex = labels[s];
                rep.pass = true;
                for (auto m : detail::coordinate_masks(n, k)) {
                    auto w = AltForm<QuadExt>::basis(n, IncreasingMap::from_mask(m, 1));
                    auto ss = ctx.star(ctx.star(w));
                    if (!(ss == QuadExt(involution_sign(n, k)) * w)) fail(rep, "*T*T" + w.str() + " = " + ss.str());
                }
                rep.detail = {{"prefactor", ctx.prefactor().str()}};
                emit(rep);
            }
        }
    }
}

void st_star_affine(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n) {
        std::vector<std::string> labels;
        auto Ts = simplices_for(c, rng, n, labels);
        for (std::size_t s = 0; s < Ts.size(); ++s) {
            StarContext src(Ts[s]);
            for (int trial = 0; trial < 5; ++trial) {
                auto phi = random_affine(rng, n);
                StarContext dst(image_simplex(phi, Ts[s]));
                auto A = to_quad(phi.A);
                auto b = random_point(rng, n + 1);
                for (int k = 0; k <= n; ++k) {
                    auto rep = base("star_T.affine_invariance", n, k, -1);
                    rep.simplex = labels[s] + "/map-" + std::to_string(trial);
                    rep.pass = true;
                    for (auto m : detail::coordinate_masks(n, k)) {
                        auto w = AltForm<QuadExt>::basis(n, IncreasingMap::from_mask(m, 1));
                        if (!(pullback(A, dst.star(w)) == src.star(pullback(A, w))))
                            fail(rep, "phi* *_T w != *_T' phi* w for " + w.str());
                        if (!(pullback(A, dst.ring_star_pointwise(w, b)) == src.ring_star_pointwise(pullback(A, w), b)))
                            fail(rep, "pointwise ring star not invariant for " + w.str());
                    }
                    emit(rep);
                }
            }
        }
    }
}

void st_star_equilateral(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (int n = 1; n <= std::min(std::max(c.max_n, 4), 4); ++n) {
        BasicStarContext<QuadExt> ctx(equilateral_simplex(n));
        for (int k = 0; k <= n; ++k) {
            auto rep = base("star_T.equilateral", n, k, -1);
            rep.simplex = "equilateral";
            rep.pass = true;
            for (auto m : detail::coordinate_masks(n, k)) {
                auto w = AltForm<QuadExt>::basis(n, IncreasingMap::from_mask(m, 1));
                if (!(ctx.star(w) == hodge(w))) fail(rep, "*T" + w.str() + " != *" + w.str());
            }
            rep.detail = {{"scaled_volume", ctx.scaled_volume().str()}};
            emit(rep);
        }
    }
}

void st_ring_cartesian(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n) {
        std::vector<std::string> labels;
        auto Ts = simplices_for(c, rng, n, labels);
        for (std::size_t s = 0; s < Ts.size(); ++s) {
            StarContext ctx(Ts[s]);
            for (int k = 0; k <= n; ++k) {
                auto rep = base("ring_star.cartesian_agreement", n, k, 1);
                rep.simplex = labels[s];
                rep.pass = true;
                const auto T = cell(n);
                for (const auto& w : space_full(T, 1, k).basis()) {
                    PolyForm sw = ring_star(w);
                    for (const auto& b : face_samples(T, T)) {
                        auto lhs = to_quad(cartesian_value(sw, Ts[s], b));
                        auto rhs = ctx.ring_star_pointwise(to_quad(cartesian_value(w, Ts[s], b)), b);
                        if (!(lhs == rhs)) fail(rep, "symbolic and Cartesian ring star differ for " + w.str());
                    }
                }
                emit(rep);
            }
        }
    }
}

void st_ring_injective(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n)
        for (int k = 0; k <= n; ++k)
            for (int r = 0; r <= c.r_max(n); ++r) {
                auto rep = base("ring_star.injective", n, k, r);
                const auto T = cell(n);
                Span S = space_full(T, r, k);
                std::vector<PolyForm> imgs;
                for (const auto& g : S.basis()) imgs.push_back(ring_star(g));
                Span I(T, n - k, Family::Custom, r + k + 1, imgs);
                rep.pass = I.dimension() == S.dimension();
                bool tf = std::all_of(imgs.begin(), imgs.end(), [](const PolyForm& x) { return is_trace_free(x); });
                if (!tf) fail(rep, "image not trace-free");
                rep.detail = {{"dimension", S.dimension()}, {"image_rank", I.dimension()}};
                if (!rep.pass && rep.witness.empty()) rep.witness = "rank drops";
                emit(rep);
            }
}

void st_ring_twice(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n)
        for (int k = 0; k <= n; ++k) {
            auto rep = base("ring_star.twice", n, k, 2);
            rep.pass = true;
            const auto T = cell(n);
            Span S = space_full(T, 2, k);
            PolyForm bubble = PolyForm::bubble(T, IncreasingMap::interval(0, n));
            for (int i = 0; i < 10; ++i) {
                PolyForm w = random_element(rng, S);
                if (!(ring_star(ring_star(w)) == Rational(involution_sign(n, k)) * wedge(bubble, w)))
                    fail(rep, "ring*ring w != sign lambda_T w for w = " + w.str());
            }
            rep.detail = {{"samples", 10}};
            emit(rep);
        }
}

void st_ring_vanishing(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n)
        for (int k = 0; k <= n; ++k) {
            auto rep = base("ring_star.boundary_vanishing", n, k, 2);
            rep.pass = true;
            Span S = space_full(cell(n), 2, k);
            std::size_t pts = 0;
            for (int i = 0; i < 3; ++i) {
                PolyForm s = ring_star(random_element(rng, S));
                // ⋆̊ω is trace-free; ⋆̊ of it must vanish on the boundary
                auto V = vanishing_check(s);
                pts += V.points_checked;
                if (!V.ok()) fail(rep, V.witness);
            }
            rep.detail = {{"points", pts}};
            emit(rep);
        }
}

void st_iso(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n)
        for (int k = 0; k <= n; ++k)
            for (int r = 0; r <= c.r_max(n); ++r) {
                {
                    auto rep = base("ring_star.iso_full", n, k, r, "full");
                    auto I = iso_check_full(cell(n), r, k);
                    rep.pass = I.ok();
                    rep.detail = to_json(I);
                    rep.witness = I.witness;
                    if (!rep.pass && rep.witness.empty()) rep.witness = rep.detail.dump();
                    emit(rep);
                }
                if (r >= 1) {
                    auto rep = base("ring_star.iso_trimmed", n, k, r, "trimmed");
                    auto I = iso_check_trimmed(cell(n), r, k);
                    rep.pass = I.ok();
                    rep.detail = to_json(I);
                    rep.witness = I.witness;
                    if (!rep.pass && rep.witness.empty()) rep.witness = rep.detail.dump();
                    emit(rep);
                }
            }
}

void st_dual(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (Family f : c.families)
        for (int n = c.min_n; n <= c.max_n; ++n)
            for (int k = 0; k <= n; ++k)
                for (int r = f == Family::Trimmed ? 1 : 0; r <= c.r_max(n); ++r) {
                    auto rep = base("inner.dual_unisolvence", n, k, r, family_name(f));
                    try {
                        auto D = dual_vandermonde(cell(n), f, r, k);
                        rep.pass = D.square && D.invertible && D.gram_symmetric && D.gram_positive;
                        rep.detail = {{"dimension", D.trace_free_basis.size()}, {"det", D.det.str()},
                                      {"gram_symmetric", D.gram_symmetric}, {"gram_positive", D.gram_positive}};
                        if (!rep.pass) rep.witness = to_json(D).dump();
                    } catch (const EmptyDualSpace& e) {
                        auto tf = trace_free_subspace(space(f, cell(n), r, k));
                        rep.pass = tf.dimension() == 0;
                        rep.detail = {{"dimension", 0}, {"empty", true}};
                        if (!rep.pass) rep.witness = std::string(e.what()) + " but the trace-free space is nonzero";
                    }
                    emit(rep);
                }
}

void st_proxy(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = std::max(c.min_n, 2); n <= std::min(c.max_n, 3); ++n) {
        std::vector<std::string> labels;
        auto Ts = simplices_for(c, rng, n, labels);
        for (std::size_t s = 0; s < Ts.size(); ++s) {
            Span S = space_full(cell(n), 1, 0);
            VectorField u;
            for (int i = 0; i < n; ++i) u.push_back(random_element(rng, S));
            for (int normal = 1; normal >= 0; --normal) {
                auto rep = base(normal ? "proxy.normal_free" : "proxy.tangent_free", n, normal ? n - 1 : 1, 1);
                rep.simplex = labels[s];
                auto P = normal ? proxy_normal_free_check(Ts[s], u) : proxy_tangent_free_check(Ts[s], u);
                rep.pass = P.boundary_ok && P.relation_found;
                rep.detail = to_json(P);
                if (!rep.pass) rep.witness = P.witness.empty() ? "no scalar relation between the two routes" : P.witness;
                emit(rep);
            }
        }
    }
}

void st_projectors(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n) {
        const auto T = cell(n);
        auto faces = all_faces(T, 0);
        auto rep = base("projector.compose", n, -1, -1);
        rep.pass = true;
        std::size_t triples = 0;
        for (const auto& tau : faces)
            for (const auto& sigma : faces) {
                if (!sigma.range_subset_of(tau)) continue;
                for (const auto& rho : faces) {
                    if (!rho.range_subset_of(sigma)) continue;
                    ++triples;
                    auto lhs = centroid_projector(sigma, rho).compose_after(centroid_projector(tau, sigma));
                    if (!(lhs == centroid_projector(tau, rho)))
                        fail(rep, "P" + sigma.str() + rho.str() + " o P" + tau.str() + sigma.str() + " != P" + tau.str() + rho.str());
                }
            }
        rep.detail = {{"triples", triples}};
        emit(rep);

        for (int k = 0; k <= n; ++k) {
            auto tr = base("projector.trace_inverse", n, k, 2);
            tr.pass = true;
            auto kz = base("projector.koszul", n, k, 2);
            kz.pass = true;
            for (const auto& tau : faces)
                for (const auto& sigma : faces) {
                    if (!sigma.range_subset_of(tau)) continue;
                    for (const auto& rho : faces) {
                        if (!rho.range_subset_of(sigma) || rho.size() - 1 < k) continue;
                        PolyForm w = random_element(rng, space_full(rho, 2, k));
                        PolyForm ps = pullback(centroid_projector(sigma, rho), w);
                        if (!(trace(ps, rho) == w)) fail(tr, "Tr P* != id on " + rho.str());
                        if (!(ps == trace(pullback(centroid_projector(tau, rho), w), sigma)))
                            fail(tr, "P*" + sigma.str() + rho.str() + " != Tr P*" + tau.str() + rho.str());
                        if (k >= 1 && !(koszul_centroid(ps) == pullback(centroid_projector(sigma, rho), koszul_centroid(w))))
                            fail(kz, "kappa P* != P* kappa on " + sigma.str() + ", " + rho.str());
                    }
                }
            emit(tr);
            if (k >= 1) emit(kz);
        }
    }
}

void st_counterexamples(const SuiteConfig& c, Rng&, const Emit& emit) {
    if (c.max_n < 3 || c.min_n > 3) return;
    auto rep = base("legacy_extension.counterexamples", 3, 1, 3);
    json j = counterexample_report();
    rep.pass = counterexample_ok(j);
    rep.detail = j;
    if (!rep.pass) rep.witness = j.dump();
    emit(rep);
}

void st_legacy_trace(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = std::max(c.min_n, 1); n <= c.max_n; ++n)
        for (int k = 0; k < n; ++k)
            for (int r = 1; r <= std::min(c.r_max(n), 3); ++r) {
                auto rep = base("legacy_extension.trace_identity", n, k, r);
                rep.pass = true;
                const auto T = cell(n);
                Span PT = space_full(T, r, k), PmT = space_trimmed(T, r, k);
                for (const auto& sigma : faces_of(T, k, n - 1)) {
                    PolyForm w = random_element(rng, space_full(sigma, r, k));
                    PolyForm E = legacy_extend_full(T, r, w);
                    if (!(trace(E, sigma) == w)) fail(rep, "Tr E^{r,k} w != w on " + sigma.str());
                    if (!PT.contains(E)) fail(rep, "E^{r,k} w outside P_r on " + sigma.str());
                    PolyForm v = random_element(rng, space_trimmed(sigma, r, k));
                    PolyForm Em = legacy_extend_trimmed(T, r, v);
                    if (!(trace(Em, sigma) == v)) fail(rep, "Tr E^{r,k,-} w != w on " + sigma.str());
                    if (!PmT.contains(Em)) fail(rep, "E^{r,k,-} w outside P-_r on " + sigma.str());
                }
                emit(rep);
            }
}

void st_bubble_example(const SuiteConfig& c, Rng&, const Emit& emit) {
    if (c.min_n > 2 || c.max_n < 2) return;
    const auto T = cell(2);
    PolyForm w = wedge(PolyForm::lambda(T, 0), whitney(T, IncreasingMap{1, 2}));
    auto W = bubble_decompose(w);
    auto rep = base("bubble.worked_example", 2, 1, 2);
    const PolyForm& c02 = W.components.at(IncreasingMap{0, 2});
    const PolyForm& c01 = W.components.at(IncreasingMap{0, 1});
    rep.detail = {{"form", w.str()}, {"decomposition", to_json(W)},
                  {"component_0_2", c02.str()}, {"component_0_1", c01.str()}};
    // expected: +1 on (0,2) and -1 on (0,1)
    rep.pass = c02 == PolyForm::constant(IncreasingMap{0, 2}, 1) && c01 == PolyForm::constant(IncreasingMap{0, 1}, -1);
    if (!rep.pass)
        rep.witness = "lambda0 phi12 = l0 l1 dl2 - l0 l2 dl1 has components " + c02.str() + " on (0,2) and " + c01.str() +
                      " on (0,1)";
    emit(rep);

    // the expansion λ0λ2dλ1 - λ0λ1dλ2
    auto rep2 = base("bubble.worked_example_expansion", 2, 1, 2);
    PolyForm x = PolyForm::monomial(T, {1, 0, 1}, IncreasingMap{1}) - PolyForm::monomial(T, {1, 1, 0}, IncreasingMap{2});
    auto X = bubble_decompose(x);
    rep2.pass = X.components.at(IncreasingMap{0, 2}) == PolyForm::constant(IncreasingMap{0, 2}, 1) &&
                X.components.at(IncreasingMap{0, 1}) == PolyForm::constant(IncreasingMap{0, 1}, -1) && reassemble(X) == x;
    rep2.detail = {{"form", x.str()}, {"equals_lambda0_phi12", x == w}, {"decomposition", to_json(X)}};
    if (!rep2.pass) rep2.witness = to_json(X).dump();
    emit(rep2);

    auto rep3 = base("bubble.trimmed_not_closed", 2, 1, 2);
    Span P2 = space_full(T, 2, 1), Pm2 = space_trimmed(T, 2, 1);
    rep3.pass = is_trace_free(w) && trace_free_subspace(Pm2).contains(w);
    for (const auto& [sigma, comp] : W.components) {
        if (comp.terms().empty()) continue;
        PolyForm e = bubble_extend(sigma, T, comp);
        if (!P2.contains(e) || Pm2.contains(e)) fail(rep3, "component on " + sigma.str() + " is " + e.str());
    }
    emit(rep3);
}

void st_bubble_roundtrip(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (Family f : c.families)
        for (int n = c.min_n; n <= c.max_n; ++n)
            for (int k = 0; k <= n; ++k)
                for (int r = f == Family::Trimmed ? 1 : 0; r <= std::min(c.r_max(n), 3); ++r) {
                    auto rep = base("bubble.roundtrip", n, k, r, family_name(f));
                    rep.pass = true;
                    const auto T = cell(n);
                    Span S = trace_free_subspace(space(f, T, r, k));
                    std::size_t bubble_dim = 0;
                    // below r = 1 a constant n-form needs degree-one vertex components
                    const bool degree_checks = f == Family::Full && r >= 1;
                    if (degree_checks)
                        for (const auto& sigma : bubble_faces(T, k)) {
                            int s = r - (sigma.size() - 1) - 1;
                            int kt = k - (n - (sigma.size() - 1));
                            if (s >= 0) bubble_dim += space_full(sigma, s, kt).dimension();
                        }
                    for (const auto& w : S.basis()) {
                        auto W = bubble_decompose(w);
                        if (!(reassemble(W) == w)) fail(rep, "reassembly differs for " + w.str());
                        if (!degree_checks) continue;
                        for (const auto& [sigma, comp] : W.components) {
                            int s = r - (sigma.size() - 1) - 1;
                            bool ok = s < 0 ? comp.is_zero() : space_full(sigma, s, comp.k()).contains(comp);
                            if (!ok) fail(rep, "component on " + sigma.str() + " above degree " + std::to_string(s));
                        }
                    }
                    rep.detail = {{"dimension", S.dimension()}};
                    if (degree_checks) {
                        rep.detail["bubble_space_dim"] = bubble_dim;
                        if (bubble_dim != S.dimension()) fail(rep, "dimension of the bubble trace space differs");
                    }
                    emit(rep);
                }
}

void st_bubble_injective(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n)
        for (int k = 0; k <= n; ++k)
            for (int r = 0; r <= std::min(c.r_max(n), 2); ++r) {
                auto rep = base("bubble.injective", n, k, r);
                rep.pass = true;
                const auto T = cell(n);
                for (const auto& sigma : bubble_faces(T, k)) {
                    int kt = k - (n - (sigma.size() - 1));
                    Span S = space_full(sigma, r, kt);
                    std::vector<PolyForm> imgs;
                    for (const auto& g : S.basis()) {
                        imgs.push_back(bubble_extend(sigma, T, g));
                        if (!is_trace_free(imgs.back())) fail(rep, "E on " + sigma.str() + " is not trace-free");
                    }
                    Span I(T, k, Family::Custom, r, imgs);
                    if (I.dimension() != S.dimension()) fail(rep, "E on " + sigma.str() + " loses rank");
                }
                emit(rep);
            }
}

void st_bubble_cross_trace(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = std::max(c.min_n, 1); n <= c.max_n; ++n)
        for (int k = 0; k <= n; ++k) {
            auto rep = base("bubble.cross_trace", n, k, 1);
            rep.pass = true;
            const auto T = cell(n);
            std::size_t checks = 0;
            for (const auto& tau : bubble_faces(T, k)) {
                int kt = k - (n - (tau.size() - 1));
                PolyForm e = bubble_extend(tau, T, random_element(rng, space_full(tau, 1, kt)));
                for (const auto& sh : all_faces(T, 0)) {
                    if (tau.range_subset_of(sh)) continue;
                    for (const auto& b : face_samples(sh, T)) {
                        ++checks;
                        if (!evaluate(e, b).is_zero()) fail(rep, "E" + tau.str() + " nonzero on " + sh.str());
                    }
                }
            }
            rep.detail = {{"points", checks}};
            emit(rep);
        }
}

void st_dot_identity(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n)
        for (int k = 0; k <= n; ++k)
            for (int r = 0; r <= std::min(c.r_max(n), 3); ++r) {
                auto rep = base("dot_extend.trace_identity", n, k, r, "full");
                rep.pass = true;
                const auto T = cell(n);
                TraceFreeCache cache;
                for (const auto& tau : all_faces(T, k))
                    for (const auto& w : cache.get(Family::Full, tau, r, k).basis()) {
                        if (!(dot_extend(tau, w) == w)) fail(rep, "E" + tau.str() + tau.str() + " is not the identity");
                        if (!(trace(dot_extend(T, w), tau) == w)) fail(rep, "Tr E" + tau.str() + " != id");
                    }
                emit(rep);
            }
}

void st_dot_consistency(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n)
        for (int k = 0; k <= n; ++k)
            for (int r = 0; r <= std::min(c.r_max(n), 3); ++r) {
                auto rep = base("dot_extend.consistency", n, k, r, "full");
                rep.pass = true;
                const auto T = cell(n);
                TraceFreeCache cache;
                auto faces = all_faces(T, k);
                std::size_t triples = 0, forms = 0;
                for (const auto& xi : faces)
                    for (const auto& tau : faces) {
                        if (!tau.range_subset_of(xi)) continue;
                        const auto& basis = cache.get(Family::Full, tau, r, k).basis();
                        std::vector<PolyForm> ext;
                        for (const auto& w : basis) ext.push_back(dot_extend(xi, w));
                        for (const auto& rho : faces) {
                            if (!rho.range_subset_of(xi)) continue;
                            ++triples;
                            std::vector<int> meet;
                            for (int v : tau.values())
                                if (rho.contains_value(v)) meet.push_back(v);
                            IncreasingMap mu(0, meet);
                            for (std::size_t i = 0; i < basis.size(); ++i) {
                                ++forms;
                                PolyForm lhs = trace(ext[i], rho);
                                PolyForm rhs(rho, k);
                                if (mu.size() - 1 >= k) rhs = dot_extend(rho, trace(basis[i], mu));
                                if (!(lhs == rhs))
                                    fail(rep, "Tr" + xi.str() + rho.str() + " E" + tau.str() + xi.str() + " != E" + mu.str() +
                                                  rho.str() + " Tr for " + basis[i].str());
                            }
                        }
                    }
                rep.detail = {{"triples", triples}, {"checks", forms}};
                emit(rep);
            }
}

void st_dot_koszul(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = std::max(c.min_n, 1); n <= c.max_n; ++n)
        for (int k = 1; k <= n; ++k) {
            auto rep = base("dot_extend.koszul_commute", n, k, 1);
            rep.pass = true;
            const auto T = cell(n);
            for (const auto& tau : all_faces(T, k))
                for (const auto& sigma : bubble_faces(tau, k)) {
                    int kt = k - (tau.size() - sigma.size());
                    PolyForm ws = random_element(rng, space_full(sigma, 1, kt));
                    PolyForm e = bubble_extend(sigma, tau, ws);
                    PolyForm lhs = koszul(dot_extend(T, e), centroid_in(sigma, T));
                    PolyForm rhs = dot_extend(T, koszul(e, centroid_in(sigma, tau)));
                    if (!(lhs == rhs)) fail(rep, "kappa(" + sigma.str() + ") does not commute with E" + tau.str());
                }
            emit(rep);
        }
}

void st_decomposition(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (Family f : c.families)
        for (int n = c.min_n; n <= c.max_n; ++n)
            for (int k = 0; k <= n; ++k)
                for (int r = 1; r <= std::min(c.r_max(n), 3); ++r) {
                    auto G = geometric_decompose(cell(n), k, f, r);
                    auto rep = base(f == Family::Full ? "decomposition.full" : "decomposition.trimmed", n, k, r, family_name(f));
                    rep.pass = G.ok();
                    rep.detail = to_json(G);
                    rep.witness = G.witness;
                    emit(rep);

                    auto cr = base("decomposition.corollary", n, k, r, family_name(f));
                    cr.pass = true;
                    json comps = json::array();
                    for (const auto& comp : G.components) {
                        Span S = corollary_component(cell(n), comp.sigma, k, f, r);
                        bool eq = span_equal(S, comp.extended);
                        comps.push_back({{"sigma", to_json(comp.sigma)}, {"dimension", S.dimension()}, {"equal", eq}});
                        if (!eq) fail(cr, "component on " + comp.sigma.str() + " differs: dims " + std::to_string(S.dimension()) +
                                              " vs " + std::to_string(comp.extended.dimension()));
                    }
                    cr.detail = {{"components", comps}};
                    emit(cr);
                }
}

void st_decomposition_all(const SuiteConfig& c, Rng& rng, const Emit& emit) {
    for (int n = c.min_n; n <= c.max_n; ++n)
        for (int k = 0; k <= n; ++k)
            for (int r = 0; r <= std::min(c.r_max(n), 3); ++r) {
                auto rep = base("decomposition.peeling", n, k, r, "full");
                rep.pass = true;
                const auto T = cell(n);
                PolyForm w = random_element(rng, space_full(T, r, k));
                PolyForm resid = w;
                try {
                    for (int e = k; e <= n; ++e) {
                        PolyForm level(T, k);
                        for (const auto& sigma : enumerate_sigma(0, e, T.values()))
                            level += dot_extend(T, trace(resid, sigma));
                        resid -= level;
                    }
                    if (!resid.is_zero()) fail(rep, "residual " + resid.str());
                } catch (const NotTraceFree& ex) {
                    fail(rep, std::string("a peeled trace is not trace-free: ") + ex.what());
                }
                emit(rep);
            }
}

void st_two_cell(const SuiteConfig& c, Rng&, const Emit& emit) {
    for (Family f : c.families)
        for (int n = std::max(c.min_n, 2); n <= std::min(c.max_n, 3); ++n) {
            auto mesh = two_cell_mesh(n);
            for (int k = 0; k <= n; ++k)
                for (int r = 1; r <= std::min(c.r_max(n), 3); ++r) {
                    auto rep = base("two_cell.continuity", n, k, r, family_name(f));
                    auto R = two_cell_continuity(mesh, k, r, f);
                    rep.pass = R.ok();
                    rep.detail = to_json(R);
                    rep.witness = R.witness;
                    emit(rep);
                }
        }
}

std::vector<Statement> build_registry() {
    return {
        {"hodge.involution", "** = (-1)^{k(n-k)} on coordinate forms", st_hodge_involution},
        {"hodge.wedge_inner", "w ^ *m = <w,m> vol", st_hodge_inner},
        {"simplex.oriented_volume", "wedge of n gradients is a signed multiple of the volume form", st_oriented_volume},
        {"koszul.pullback_commute", "Koszul operator commutes with affine pullback", st_koszul_pullback},
        {"whitney.properties", "Whitney forms: derivative, traces, span of P1-", st_whitney},
        {"trimmed.koszul_characterization", "P-_r = P_{r-1} + kappa P_{r-1}", st_trimmed_koszul},
        {"legacy_h.signs", "legacy trace-free maps agree with ring star up to sign", st_legacy_h},
        {"star_T.bijection", "star_T is a bijection", st_star_bijection},
        {"star_T.involution", "star_T star_T = (-1)^{k(n-k)}", st_star_involution},
        {"star_T.affine_invariance", "star_T and ring star commute with affine maps", st_star_affine},
        {"star_T.equilateral", "star_T is the Hodge star on the equilateral simplex", st_star_equilateral},
        {"ring_star.cartesian_agreement", "barycentric ring star equals the Cartesian formula", st_ring_cartesian},
        {"ring_star.injective", "ring star is injective with trace-free image", st_ring_injective},
        {"ring_star.twice", "ring star twice = sign lambda_T", st_ring_twice},
        {"ring_star.boundary_vanishing", "ring star of a trace-free form vanishes on the boundary", st_ring_vanishing},
        {"ring_star.iso", "isomorphisms onto trace-free full and trimmed spaces", st_iso},
        {"inner.dual_unisolvence", "Vandermonde of the ring star duals is invertible; Gram is positive", st_dual},
        {"proxy.vector", "normal-free and tangent-free vector proxies", st_proxy},
        {"projector.identities", "centroid projectors compose, invert traces, commute with Koszul", st_projectors},
        {"legacy_extension.counterexamples", "legacy extensions leave their spaces", st_counterexamples},
        {"legacy_extension.trace_identity", "legacy extensions restrict back and stay in their spaces", st_legacy_trace},
        {"bubble.worked_example", "bubble decomposition of lambda0 phi12", st_bubble_example},
        {"bubble.roundtrip", "bubble decomposition then reassembly is the identity", st_bubble_roundtrip},
        {"bubble.injective", "each bubble extension is injective", st_bubble_injective},
        {"bubble.cross_trace", "bubble extensions vanish on faces not containing their face", st_bubble_cross_trace},
        {"dot_extend.trace_identity", "Tr E = id and E_{tau,tau} = id", st_dot_identity},
        {"dot_extend.consistency", "traces commute with the unified extension", st_dot_consistency},
        {"dot_extend.koszul_commute", "centroid Koszul operator commutes with the unified extension", st_dot_koszul},
        {"decomposition.geometric", "geometric decompositions of full and trimmed spaces, and the corollary", st_decomposition},
        {"decomposition.peeling", "every polynomial form is a sum of extended traces", st_decomposition_all},
        {"two_cell.continuity", "traces agree across a shared facet", st_two_cell},
    };
}

bool selected(const SuiteConfig& c, const std::string& name) {
    if (c.statements.empty()) return true;
    for (const auto& s : c.statements) {
        if (s == name) return true;
        if (!s.empty() && s.back() == '.' && name.rfind(s, 0) == 0) return true;
    }
    return false;
}
}  // namespace

// ---------------------------------------------------------------------------

Rng::Rng(std::uint64_t seed) : gen_(seed) {}

std::uint64_t Rng::next() { return gen_(); }

int Rng::uniform(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
}

Rational Rng::rational(int max_num, int max_den) {
    int p = uniform(-max_num, max_num);
    int q = uniform(1, max_den);
    return Rational(p, q);
}

std::uint64_t statement_seed(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return seed ^ h;
}

Simplex random_simplex(Rng& rng, int n) {
    for (;;) {
        std::vector<Point<Rational>> v;
        for (int i = 0; i <= n; ++i) {
            Point<Rational> p;
            for (int c = 0; c < n; ++c) p.push_back(rng.rational(8, 8));
            v.push_back(std::move(p));
        }
        try {
            return Simplex(std::move(v), Orientation::AutoSwap);
        } catch (const DegenerateSimplex&) {
        }
    }
}

PolyForm random_element(Rng& rng, const Span& S) {
    PolyForm w(S.host(), S.k());
    for (const auto& g : S.basis()) w += rng.rational(3, 3) * g;
    return w;
}

CartesianAffine<Rational> random_affine(Rng& rng, int n) {
    for (;;) {
        CartesianAffine<Rational> m{Matrix<Rational>(sz(n), sz(n)), Vector<Rational>(sz(n))};
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m.A(sz(i), sz(j)) = rng.rational(4, 4);
            m.t[sz(i)] = rng.rational(4, 4);
        }
        Rational det = determinant(m.A);
        if (det.is_zero()) continue;
        if (det.sgn() < 0)
            for (int i = 0; i < n; ++i) m.A(sz(i), 0) = -m.A(sz(i), 0);
        return m;
    }
}

int SuiteConfig::r_max(int n) const {
    if (max_r >= 0) return max_r;
    if (n <= 2) return 4;
    if (n == 3) return 3;
    return 2;
}

SuiteConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    SuiteConfig c;
    static const std::set<std::string> known{"min_n", "max_n", "max_r", "seed", "random_simplices", "simplex_source",
                                             "families", "statements", "timing", "fault"};
    try {
        for (const auto& [key, value] : j.items()) {
            if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");
            if (key == "min_n") c.min_n = value.get<int>();
            else if (key == "max_n") c.max_n = value.get<int>();
            else if (key == "max_r") c.max_r = value.get<int>();
            else if (key == "seed") c.seed = value.get<std::uint64_t>();
            else if (key == "random_simplices") c.random_simplices = value.get<int>();
            else if (key == "simplex_source") c.simplex_source = value.get<std::string>();
            else if (key == "timing") c.timing = value.get<bool>();
            else if (key == "fault") c.fault = value.get<std::string>();
            else if (key == "statements") c.statements = value.get<std::vector<std::string>>();
            else if (key == "families") {
                c.families.clear();
                for (const auto& f : value.get<std::vector<std::string>>()) {
                    Family fam = parse_family(f);
                    if (fam != Family::Full && fam != Family::Trimmed) throw ConfigError("families must be full or trimmed");
                    c.families.push_back(fam);
                }
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (c.min_n < 1 || c.max_n > 4) throw ConfigError("config: need 1 <= min_n and max_n <= 4");
    if (c.simplex_source != "reference" && c.simplex_source != "random-rational" && c.simplex_source != "both")
        throw ConfigError("config: simplex_source must be reference, random-rational or both");
    if (c.random_simplices < 0) throw ConfigError("config: random_simplices must be >= 0");
    for (const auto& s : c.statements) {
        bool found = false;
        for (const auto& st : registry())
            if (st.name == s || (!s.empty() && s.back() == '.' && st.name.rfind(s, 0) == 0)) found = true;
        if (!found) throw ConfigError("config: unknown statement '" + s + "'");
    }
    return c;
}

SuiteConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return parse_config(j);
}

json to_json(const VerificationReport& rep, bool timing) {
    json j{{"statement", rep.statement}};
    if (rep.n >= 0) j["n"] = rep.n;
    if (rep.k >= 0) j["k"] = rep.k;
    if (rep.r >= 0) j["r"] = rep.r;
    if (!rep.family.empty()) j["family"] = rep.family;
    if (!rep.simplex.empty()) j["simplex"] = rep.simplex;
    j["seed"] = rep.seed;
    j["verdict"] = rep.pass ? "pass" : "fail";
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    if (!rep.pass) j["witness"] = rep.witness;
    if (timing && rep.seconds >= 0) j["seconds"] = rep.seconds;
    return j;
}

const std::vector<Statement>& registry() {
    static const std::vector<Statement> r = build_registry();
    return r;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config,
                                          const std::function<void(const VerificationReport&)>& sink) {
    std::vector<VerificationReport> out;
    for (const auto& st : registry()) {
        if (!selected(config, st.name)) continue;
        const std::uint64_t seed = statement_seed(config.seed, st.name);
        Rng rng(seed);
        auto start = std::chrono::steady_clock::now();
        auto emit = [&](VerificationReport rep) {
            auto now = std::chrono::steady_clock::now();
            rep.seed = seed;
            rep.seconds = std::chrono::duration<double>(now - start).count();
            start = now;
            if (!rep.pass && rep.witness.empty()) rep.witness = rep.detail.dump();
            if (sink) sink(rep);
            out.push_back(std::move(rep));
        };
        try {
            st.run(config, rng, emit);
        } catch (const std::exception& e) {
            VerificationReport rep;
            rep.statement = st.name;
            rep.pass = false;
            rep.witness = std::string("exception: ") + e.what();
            emit(std::move(rep));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string unicode_text(const std::string& ascii) {
    static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    auto digits = [](const std::string& s, const char* const* table) {
        std::string o;
        for (char ch : s) o += table[ch - '0'];
        return o;
    };
    std::istringstream in(ascii);
    std::string tok, out;
    bool last_dl = false;
    while (in >> tok) {
        std::string open, close;
        while (!tok.empty() && tok.front() == '(') {
            open += "(";
            tok.erase(0, 1);
        }
        while (!tok.empty() && tok.back() == ')') {
            close += ")";
            tok.pop_back();
        }
        std::string piece;
        bool is_dl = false;
        if (tok == "+") piece = "+";
        else if (tok == "-") piece = "−";
        else if (tok == "*") piece = "";
        else if (tok == "^") continue;  // the wedge between dλ factors is added below
        else if (tok.rfind("phi", 0) == 0) piece = "φ" + digits(tok.substr(3), sub);
        else if (tok.rfind("dl", 0) == 0) {
            piece = (last_dl ? "∧dλ" : "dλ") + digits(tok.substr(2), sub);
            is_dl = true;
        } else if (tok[0] == 'l') {
            auto caret = tok.find('^');
            piece = "λ" + digits(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), sub);
            if (caret != std::string::npos) piece += digits(tok.substr(caret + 1), sup);
        } else {
            // a coefficient
            bool neg = tok[0] == '-';
            std::string mag = neg ? tok.substr(1) : tok;
            if (mag == "1") mag = "";
            else if (mag.find('/') != std::string::npos) mag = "(" + mag + ")";
            piece = (neg ? "−" : "") + mag;
        }
        last_dl = is_dl;
        out += open + piece + close;
    }
    // "+−" from a negative coefficient after a separator
    std::string fixed;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out.compare(i, 1, "+") == 0 && out.compare(i + 1, std::string("−").size(), "−") == 0) continue;
        fixed += out[i];
    }
    return fixed;
}

json counterexample_report() {
    const IncreasingMap T = cell(3);
    const IncreasingMap sigma{1, 2, 3};
    json out;

    // E^{3,1,-} of λ1λ2 dλ3 = λ1λ2(φ23 + φ13)
    {
        json j;
        PolyForm w = PolyForm::monomial(sigma, {1, 1, 0}, IncreasingMap{2});
        std::vector<TrimmedGenerator> gens{{Rational(1), MultiIndex{1, 1, 0}, IncreasingMap{2, 3}},
                                           {Rational(1), MultiIndex{1, 1, 0}, IncreasingMap{1, 3}}};
        PolyForm e = legacy_extend_trimmed(sigma, T, 3, 1, gens);
        PolyForm phis = whitney(T, IncreasingMap{2, 3}) + whitney(T, IncreasingMap{1, 3});
        j["sigma"] = to_json(sigma);
        j["T"] = to_json(T);
        j["omega"] = w.str();
        j["omega_trace_free"] = is_trace_free(w);
        j["omega_in_P2"] = space_full(sigma, 2, 1).contains(w);
        j["omega_generators"] = trimmed_text(sigma, gens);
        j["generators_expand_to_omega"] = expand_trimmed(sigma, 1, gens) == w;
        j["extension_generators"] = trimmed_text(sigma, gens);
        j["extension_unicode"] = unicode_text(trimmed_text(sigma, gens));
        j["extension"] = e.str();
        j["parsed_extension_agrees"] = legacy_extend_trimmed(T, 3, w) == e;
        j["phi23_plus_phi13_is_dl3"] = phis == PolyForm::dlambda(T, 3);
        j["in_P2Lambda1"] = space_full(T, 2, 1).contains(e);
        j["in_P3minusLambda1"] = space_trimmed(T, 3, 1).contains(e);
        j["verdict"] = j["in_P2Lambda1"].get<bool>() ? "in P_2Lambda^1(T)" : "not in P_2Lambda^1(T)";
        out["trimmed_extension"] = j;
    }

    // E^{3,1} of λ1λ2φ23 = λ1λ2²dλ3 - λ1λ2λ3dλ2
    {
        json j;
        std::vector<FullGenerator> gens{{Rational(1), MultiIndex{1, 2, 0}, IncreasingMap{3}},
                                        {Rational(-1), MultiIndex{1, 1, 1}, IncreasingMap{2}}};
        PolyForm w = wedge(PolyForm::monomial(sigma, {1, 1, 0}), whitney(sigma, IncreasingMap{1, 2}));
        j["sigma"] = to_json(sigma);
        j["omega"] = w.str();
        j["omega_trace_free"] = is_trace_free(w);
        j["omega_in_P3minus"] = space_trimmed(sigma, 3, 1).contains(w);
        j["generators_expand_to_omega"] = expand_full(sigma, 1, gens) == w;
        json proj = json::array();
        for (const auto& g : gens) {
            auto P = weighted_projector(T, sigma, g.alpha);
            json subs = json::array();
            for (int jj = 0; jj < sigma.size(); ++jj) {
                PolyForm l(T, 0);
                for (int i = 0; i < T.size(); ++i) l.add_term(0, exps_unit(i), P.bary(sz(jj), sz(i)));
                subs.push_back(unicode_text(l.raw_str()));
            }
            PolyForm dl = pullback(P, PolyForm::dlambda(sigma, local_positions(g.tau, sigma)));
            proj.push_back({{"alpha", to_json(g.alpha)}, {"substitution", subs},
                            {"pullback_of", "dλ" + unicode_text("l" + std::to_string(g.tau.at_position(0))).substr(2)},
                            {"pullback", unicode_text(dl.raw_str())}});
        }
        j["projections"] = proj;
        PolyForm e = legacy_extend_full(sigma, T, 3, 1, gens);
        // λ1λ2²dλ3 - λ1λ2λ3(dλ2 + (1/3)dλ0), assembled term by term
        PolyForm expected = PolyForm::monomial(T, {0, 1, 2, 0}, IncreasingMap{3}) -
                            wedge(PolyForm::monomial(T, {0, 1, 1, 1}),
                                  PolyForm::dlambda(T, 2) + Rational(1, 3) * PolyForm::dlambda(T, 0));
        j["extension_raw"] = e.raw_str();
        j["extension_unicode"] = unicode_text(e.raw_str());
        j["extension"] = e.str();
        j["matches_expected_expression"] = e == expected;
        j["parsed_extension_agrees"] = legacy_extend_full(T, 3, w) == e;
        std::vector<Rational> v1{Rational(0), Rational(1), Rational(0), Rational(0)};
        PolyForm kz = koszul(e, v1);
        j["koszul_v1"] = kz.str();
        j["koszul_v1_unicode"] = unicode_text(kz.str());
        j["koszul_matches_expected"] = kz == Rational(-1, 3) * PolyForm::monomial(T, {1, 1, 1, 1});
        j["koszul_in_P3Lambda0"] = space_full(T, 3, 0).contains(kz);
        j["in_P3Lambda1"] = space_full(T, 3, 1).contains(e);
        j["in_P3minusLambda1"] = space_trimmed(T, 3, 1).contains(e);
        j["verdict"] = j["in_P3minusLambda1"].get<bool>() ? "in P-_3Lambda^1(T)" : "not in P-_3Lambda^1(T)";
        out["full_extension"] = j;
    }
    return out;
}

bool counterexample_ok(const json& r) {
    const auto& t = r.at("trimmed_extension");
    const auto& f = r.at("full_extension");
    return t.at("omega_trace_free").get<bool>() && t.at("omega_in_P2").get<bool>() &&
           t.at("generators_expand_to_omega").get<bool>() && t.at("parsed_extension_agrees").get<bool>() &&
           !t.at("phi23_plus_phi13_is_dl3").get<bool>() && !t.at("in_P2Lambda1").get<bool>() &&
           t.at("in_P3minusLambda1").get<bool>() && t.at("extension_unicode").get<std::string>() == "λ₁λ₂(φ₂₃+φ₁₃)" &&
           f.at("omega_trace_free").get<bool>() && f.at("omega_in_P3minus").get<bool>() &&
           f.at("generators_expand_to_omega").get<bool>() && f.at("matches_expected_expression").get<bool>() &&
           f.at("parsed_extension_agrees").get<bool>() && f.at("koszul_matches_expected").get<bool>() &&
           f.at("koszul_v1_unicode").get<std::string>() == "−(1/3)λ₀λ₁λ₂λ₃" && !f.at("koszul_in_P3Lambda0").get<bool>() &&
           f.at("in_P3Lambda1").get<bool>() && !f.at("in_P3minusLambda1").get<bool>();
}

TwoCellMesh two_cell_mesh(int n) {
    using R = Rational;
    if (n == 2)
        return {Simplex({{R(0), R(0)}, {R(1), R(0)}, {R(0), R(1)}}), Simplex({{R(0), R(1)}, {R(1), R(0)}, {R(1), R(1)}}),
                {0, 1, 2}, {2, 1, 3}};
    if (n == 3)
        return {Simplex::unit(3),
                Simplex({{R(0), R(0), R(1)}, {R(1), R(0), R(0)}, {R(0), R(1), R(0)}, {R(1), R(1), R(1)}}),
                {0, 1, 2, 3}, {3, 1, 2, 4}};
    throw std::invalid_argument("two_cell_mesh: n must be 2 or 3");
}

namespace {
struct CellView {
    const Simplex* T;
    const std::vector<int>* labels;
    int local(int mesh) const {
        auto it = std::find(labels->begin(), labels->end(), mesh);
        if (it == labels->end()) throw std::invalid_argument("mesh vertex not in cell");
        return static_cast<int>(it - labels->begin());
    }
    // local face with its permutation from the mesh-sorted face
    std::pair<IncreasingMap, std::vector<int>> face(const IncreasingMap& mesh_face) const {
        std::vector<int> perm, loc;
        for (int m : mesh_face.values()) perm.push_back(local(m));
        loc = perm;
        std::sort(loc.begin(), loc.end());
        return {IncreasingMap(0, loc), perm};
    }
    // move a form on a mesh-labelled face into local labels
    PolyForm to_local(const PolyForm& w) const {
        auto [loc, perm] = face(w.host());
        return relabel(w, loc, perm);
    }
    // move a form on a local face into mesh labels
    PolyForm to_mesh(const PolyForm& w) const {
        std::vector<int> mesh, perm;
        for (int v : w.host().values()) mesh.push_back((*labels)[sz(v)]);
        std::vector<int> sorted = mesh;
        std::sort(sorted.begin(), sorted.end());
        return relabel(w, IncreasingMap(0, sorted), mesh);
    }
};
}  // namespace

TwoCellReport two_cell_continuity(const TwoCellMesh& mesh, int k, int r, Family family) {
    const int n = mesh.a.dim();
    if (mesh.b.dim() != n || static_cast<int>(mesh.a_labels.size()) != n + 1 || static_cast<int>(mesh.b_labels.size()) != n + 1)
        throw std::invalid_argument("two_cell_continuity: inconsistent mesh");
    std::vector<int> shared;
    for (int m : mesh.a_labels)
        if (std::find(mesh.b_labels.begin(), mesh.b_labels.end(), m) != mesh.b_labels.end()) shared.push_back(m);
    std::sort(shared.begin(), shared.end());
    if (static_cast<int>(shared.size()) != n) throw std::invalid_argument("two_cell_continuity: cells must share a facet");
    CellView A{&mesh.a, &mesh.a_labels}, B{&mesh.b, &mesh.b_labels};
    for (int m : shared)
        if (mesh.a.vertex(A.local(m)) != mesh.b.vertex(B.local(m)))
            throw std::invalid_argument("two_cell_continuity: shared vertex " + std::to_string(m) + " has two positions");

    TwoCellReport rep;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    rep.family = family;
    const IncreasingMap F(0, shared);
    const IncreasingMap T = cell(n);
    TraceFreeCache cache;
    if (k <= n - 1) {
        for (const auto& s : all_faces(F, k)) {
            for (const auto& w : cache.get(family, s, r, k).basis()) {
                ++rep.shared_checked;
                PolyForm fa = A.to_mesh(trace(dot_extend(T, A.to_local(w)), A.face(F).first));
                PolyForm fb = B.to_mesh(trace(dot_extend(T, B.to_local(w)), B.face(F).first));
                PolyForm direct = dot_extend(F, w);
                if (!(fa == fb) || !(fa == direct)) {
                    rep.shared_ok = false;
                    if (rep.witness.empty())
                        rep.witness = "traces differ for " + w.str() + " from " + s.str() + ": " + fa.str() + " vs " + fb.str();
                }
            }
        }
        for (const CellView* C : {&A, &B}) {
            const IncreasingMap Floc = C->face(F).first;
            for (const auto& s : all_faces(T, k)) {
                if (s.range_subset_of(Floc)) continue;
                for (const auto& w : cache.get(family, s, r, k).basis()) {
                    ++rep.interior_checked;
                    if (!trace(dot_extend(T, w), Floc).is_zero()) {
                        rep.interior_ok = false;
                        if (rep.witness.empty()) rep.witness = "extension from " + s.str() + " has a trace on the shared facet";
                    }
                }
            }
        }
    }
    return rep;
}

json to_json(const TwoCellReport& rep) {
    return json{{"n", rep.n}, {"k", rep.k}, {"r", rep.r}, {"family", family_name(rep.family)},
                {"shared_checked", rep.shared_checked}, {"interior_checked", rep.interior_checked},
                {"shared_ok", rep.shared_ok}, {"interior_ok", rep.interior_ok}};
}

json basis_table(int n, int k, int r, Family family) {
    if (n < 1 || n > 4 || k < 0 || k > n || r < 0 || (family == Family::Trimmed && r < 1))
        throw std::invalid_argument("basis: need 1 <= n <= 4, 0 <= k <= n, r >= 0 (r >= 1 for trimmed)");
    auto G = geometric_decompose(cell(n), k, family, r);
    json table = json::array(), forms = json::array();
    std::vector<std::size_t> by_dim(sz(n + 1), 0);
    for (const auto& c : G.components) {
        table.push_back({{"sigma", to_json(c.sigma)}, {"dimension", c.local.dimension()}});
        by_dim[sz(c.sigma.size() - 1)] += c.local.dimension();
        const auto local = c.local.basis();
        const auto ext = c.extended.generators();
        for (std::size_t i = 0; i < local.size(); ++i)
            forms.push_back({{"sigma", to_json(c.sigma)}, {"trace_free", local[i].str()}, {"extended", ext[i].str()}});
    }
    json by = json::array();
    for (int e = k; e <= n; ++e) by.push_back({{"face_dim", e}, {"count", by_dim[sz(e)]}});
    return json{{"n", n}, {"k", k}, {"r", r}, {"family", family_name(family)}, {"dimension", G.target_dim},
                {"direct_sum", G.ok()}, {"by_face_dimension", by}, {"table", table}, {"forms", forms},
                {"decomposition", to_json(G)}};
}

bool basis_table_ok(const json& t) { return t.at("direct_sum").get<bool>(); }

json gram_table(int n, int k, int r, Family family) {
    if (n < 1 || n > 4 || k < 0 || k > n || r < 0 || (family == Family::Trimmed && r < 1))
        throw std::invalid_argument("gram: need 1 <= n <= 4, 0 <= k <= n, r >= 0 (r >= 1 for trimmed)");
    try {
        auto D = dual_vandermonde(cell(n), family, r, k);
        json j = to_json(D);
        json forms = json::array(), duals = json::array();
        for (const auto& w : D.trace_free_basis) forms.push_back(w.str());
        for (const auto& w : D.dual_basis) duals.push_back(w.str());
        j["trace_free_basis"] = forms;
        j["dual_basis"] = duals;
        j["ok"] = D.square && D.invertible && D.gram_symmetric && D.gram_positive;
        return j;
    } catch (const EmptyDualSpace& e) {
        auto tf = trace_free_subspace(space(family, cell(n), r, k));
        return json{{"family", family_name(family)}, {"n", n}, {"k", k}, {"r", r}, {"dimension", tf.dimension()},
                    {"empty", true}, {"ok", tf.dimension() == 0}, {"note", e.what()}};
    }
}

}  // namespace exfeec
