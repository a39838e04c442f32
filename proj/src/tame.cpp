#include "greenseq/tame.hpp"

#include <numeric>

namespace greenseq {

namespace {

std::vector<Int> rat_vec_to_int(const std::vector<Rat>& v, const std::string& what) {
    std::vector<Int> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (denominator(v[i]) != 1) throw invariant_error(what + ": non-integral coordinate");
        r[i] = numerator(v[i]);
    }
    return r;
}

std::vector<Rat> apply_rat(const RatMat& m, const std::vector<Int>& x) {
    std::vector<Rat> v(x.size());
    for (size_t i = 0; i < x.size(); ++i) v[i] = x[i];
    return m.apply(v);
}

}  // namespace

Int TameContext::defect_of(const std::vector<Int>& x) const {
    if (x.size() != defect.size()) throw std::invalid_argument("defect: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += defect[i] * x[i];
    return s;
}

std::vector<Int> null_root(const IntMat& e) {
    IntMat sym = e + e.transposed();
    auto basis = nullspace(to_rat(sym));
    if (basis.size() != 1)
        throw std::invalid_argument("ker(E + E^t) has rank " + std::to_string(basis.size()) +
                                    ", expected 1 (not a connected tame quiver)");
    // Clear denominators and divide out the content to get a primitive vector.
    std::vector<Rat>& v = basis[0];
    Int lcm_den = 1;
    for (const Rat& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, Int(denominator(x)));
    std::vector<Int> w(v.size());
    Int content = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
        content = boost::multiprecision::gcd(content, w[i]);
    }
    if (content == 0) throw std::invalid_argument("null root is zero");
    for (Int& x : w) x /= content;
    bool any_neg = false, any_pos = false;
    for (const Int& x : w) {
        if (x < 0) any_neg = true;
        if (x > 0) any_pos = true;
    }
    if (any_neg && any_pos) throw std::invalid_argument("null root is not sign-definite");
    if (any_neg)
        for (Int& x : w) x = -x;
    for (const Int& x : w)
        if (x == 0) throw std::invalid_argument("null root has a zero coordinate (not connected)");
    return w;
}

TameContext make_tame_context(const ValuedQuiver& q, int period_cap) {
    q.validate();
    TameContext ctx;
    ctx.e = euler_matrix(q);
    ctx.d = q.weights;
    RatMat einv = inverse(to_rat(ctx.e));
    RatMat et = to_rat(ctx.e.transposed());
    ctx.tau = -(einv * et);
    ctx.tau_inv = -(inverse(et) * to_rat(ctx.e));
    ctx.eta = null_root(ctx.e);

    // tau eta = eta for the tame null root.
    if (rat_vec_to_int(apply_rat(ctx.tau, ctx.eta), "tau eta") != ctx.eta)
        throw std::invalid_argument("tau does not fix the null root (not tame)");

    int n = ctx.size();
    RatMat power = ctx.tau;
    for (int m = 1; m <= period_cap; ++m) {
        RatMat diff = power - RatMat::identity(n);
        // Every column of tau^m - I must be an integer multiple of eta.
        bool ok = true;
        std::vector<Int> delta(n);
        int anchor = 0;  // eta is strictly positive, so any coordinate anchors
        for (int j = 0; j < n && ok; ++j) {
            Rat ratio = diff(anchor, j) / Rat(ctx.eta[anchor]);
            if (denominator(ratio) != 1) { ok = false; break; }
            delta[j] = numerator(ratio);
            for (int i = 0; i < n; ++i)
                if (diff(i, j) != Rat(delta[j] * ctx.eta[i])) { ok = false; break; }
        }
        if (ok) {
            ctx.period = m;
            ctx.defect = std::move(delta);
            return ctx;
        }
        power = power * ctx.tau;
    }
    throw std::invalid_argument("Coxeter period not found within cap " + std::to_string(period_cap));
}

Int euler_pairing(const TameContext& ctx, const std::vector<Int>& x, const std::vector<Int>& y) {
    int n = ctx.size();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("euler_pairing: dimension mismatch");
    Int s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += x[i] * ctx.e(i, j) * y[j];
    return s;
}

std::vector<Int> ar_translate(const TameContext& ctx, const std::vector<Int>& x,
                              TranslateDirection dir) {
    const RatMat& m = dir == TranslateDirection::Forward ? ctx.tau : ctx.tau_inv;
    return rat_vec_to_int(apply_rat(m, x), "AR translate");
}

IntMat projective_roots(const TameContext& ctx) {
    int n = ctx.size();
    RatMat einv_t = inverse(to_rat(ctx.e.transposed()));
    RatMat pi(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pi(i, j) = einv_t(i, j) * Rat(ctx.d[j]);
    return to_int_checked(pi, "projective roots");
}

RootSets root_sets(const TameContext& ctx, int k) {
    if (k < 1) throw std::invalid_argument("root_sets requires k >= 1");
    int n = ctx.size();
    IntMat pi = projective_roots(ctx);
    RootSets rs;
    std::vector<std::vector<Int>> layer_p, layer_i;
    for (int i = 0; i < n; ++i) {
        layer_p.push_back(pi.column(i));
        // -tau pi_i is the i-th injective root.
        std::vector<Int> tau_pi = ar_translate(ctx, pi.column(i), TranslateDirection::Forward);
        for (Int& v : tau_pi) v = -v;
        layer_i.push_back(std::move(tau_pi));
    }
    for (int layer = 0; layer < k; ++layer) {
        for (int i = 0; i < n; ++i) {
            rs.preprojective.push_back(layer_p[i]);
            rs.preinjective.push_back(layer_i[i]);
        }
        if (layer + 1 < k)
            for (int i = 0; i < n; ++i) {
                layer_p[i] = ar_translate(ctx, layer_p[i], TranslateDirection::Backward);
                layer_i[i] = ar_translate(ctx, layer_i[i], TranslateDirection::Forward);
            }
    }
    return rs;
}

RegionMembership region_membership(const TameContext& ctx, const std::vector<Int>& x, int k) {
    RootSets rs = root_sets(ctx, k);
    RegionMembership m;
    for (const auto& alpha : rs.preprojective)
        if (euler_pairing(ctx, x, alpha) > 0) { m.in_w = true; break; }
    m.in_v = true;
    for (const auto& beta : rs.preinjective)
        if (euler_pairing(ctx, x, beta) < 0) { m.in_v = false; break; }
    return m;
}

IntMat cluster_dim_matrix(const TameContext& ctx, const IntMat& c) {
    int n = ctx.size();
    if (c.rows() != n || c.cols() != n) throw std::invalid_argument("c-matrix shape mismatch");
    // V^t E C = -D  =>  V = -E^-t C^-t D
    IntMat cinv_t = inverse_unimodular(c).transposed();
    RatMat einv_t = inverse(to_rat(ctx.e.transposed()));
    RatMat w(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w(i, j) = Rat(-cinv_t(i, j) * ctx.d[j]);
    return to_int_checked(einv_t * w, "cluster dimension-vector matrix");
}

RegionReport region_class(const TameContext& ctx, const IntMat& c, int k) {
    IntMat v = cluster_dim_matrix(ctx, c);
    int n = ctx.size();
    std::vector<Int> barycenter(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) barycenter[i] += v(i, j);

    RegionReport report;
    report.barycenter = region_membership(ctx, barycenter, k);
    report.cls = (report.barycenter.in_v && !report.barycenter.in_w) ? RegionClass::Inside
                                                                     : RegionClass::Outside;

    // The cone is all-or-nothing against V_k and W_k: a column strictly past a
    // wall forces the interior (hence the barycenter) to the same side.
    RootSets rs = root_sets(ctx, k);
    bool all_cols_strict_in_v = true;
    for (int j = 0; j < n; ++j) {
        std::vector<Int> col = v.column(j);
        bool strict_out_v = false, strict_in_v = true, strict_in_w = false;
        for (const auto& beta : rs.preinjective) {
            Int p = euler_pairing(ctx, col, beta);
            if (p < 0) strict_out_v = true;
            if (p <= 0) strict_in_v = false;
        }
        for (const auto& alpha : rs.preprojective)
            if (euler_pairing(ctx, col, alpha) > 0) strict_in_w = true;
        if (strict_out_v && report.barycenter.in_v)
            throw invariant_error("region straddles the boundary of V_k");
        if (strict_in_w && !report.barycenter.in_w)
            throw invariant_error("region straddles the boundary of W_k");
        if (!strict_in_v) all_cols_strict_in_v = false;
    }
    if (all_cols_strict_in_v && !report.barycenter.in_v)
        throw invariant_error("region straddles the boundary of V_k");
    return report;
}

}  // namespace greenseq
