#include "qstab/oracles.hpp"

#include <algorithm>

namespace qstab {

MatrixSpace to_matrix_space(const PatternSpace& p) {
    std::vector<Mat> gens;
    for (auto [r, c] : p.support) {
        if (r < 0 || r >= p.n || c < 0 || c >= p.n) throw InputError("support entry out of range");
        Mat e(p.n, p.n);
        e.at(r, c) = 1;
        gens.push_back(std::move(e));
    }
    return make_matrix_space(p.n, std::move(gens));
}

namespace {

bool kuhn_augment(int col, const std::vector<std::vector<int>>& adj, std::vector<int>& row_match,
                  std::vector<int>& col_match, std::vector<bool>& seen) {
    for (int r : adj[col]) {
        if (seen[r]) continue;
        seen[r] = true;
        if (row_match[r] < 0 || kuhn_augment(row_match[r], adj, row_match, col_match, seen)) {
            row_match[r] = col;
            col_match[col] = r;
            return true;
        }
    }
    return false;
}

}  // namespace

KoenigResult koenig_disc(const PatternSpace& p) {
    std::vector<std::vector<int>> adj(p.n);  // column -> rows
    for (auto [r, c] : p.support) {
        if (std::find(adj[c].begin(), adj[c].end(), r) == adj[c].end()) adj[c].push_back(r);
    }
    std::vector<int> row_match(p.n, -1), col_match(p.n, -1);
    long matched = 0;
    for (int c = 0; c < p.n; ++c) {
        std::vector<bool> seen(p.n, false);
        if (kuhn_augment(c, adj, row_match, col_match, seen)) ++matched;
    }
    // alternating reachability from unmatched columns
    std::vector<bool> col_in(p.n, false), row_in(p.n, false);
    std::vector<int> stack;
    for (int c = 0; c < p.n; ++c)
        if (col_match[c] < 0) {
            col_in[c] = true;
            stack.push_back(c);
        }
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int r : adj[c]) {
            if (row_in[r]) continue;
            row_in[r] = true;
            int c2 = row_match[r];
            if (c2 >= 0 && !col_in[c2]) {
                col_in[c2] = true;
                stack.push_back(c2);
            }
        }
    }
    KoenigResult res;
    res.matching_size = matched;
    res.c = p.n - matched;
    for (int c = 0; c < p.n; ++c)
        if (col_in[c]) res.column_set.push_back(c);
    return res;
}

bool oracle_supported(const Representation& w, const Weight& theta) {
    const int nv = w.quiver.num_vertices();
    if (static_cast<int>(theta.w.size()) != nv) return false;
    for (int v = 0; v < nv; ++v)
        if (theta(v) > 0 && w.dims[v] > 1) return false;
    for (const Arrow& a : w.quiver.arrows()) {
        if (theta(a.tail) <= 0) return false;
        if (theta(a.head) > 0) return false;
    }
    return true;
}

namespace {

struct ProfileScan {
    std::vector<int> sources;  // positive vertices with dim 1
    // per subset: minimal target span
};

}  // namespace

long bipartite_disc_oracle(const Representation& w, const Weight& theta) {
    if (!oracle_supported(w, theta)) throw UnsupportedInstance("outside the oracle class");
    const int nv = w.quiver.num_vertices();
    std::vector<int> sources;
    for (int v = 0; v < nv; ++v)
        if (theta(v) > 0 && w.dims[v] == 1) sources.push_back(v);
    const int ns = static_cast<int>(sources.size());
    if (ns > 20) throw UnsupportedInstance("too many source vertices to enumerate");
    long best = 0;
    for (long mask = 0; mask < (1L << ns); ++mask) {
        long val = 0;
        for (int s = 0; s < ns; ++s)
            if (mask & (1L << s)) val += theta(sources[s]);
        for (int y = 0; y < nv; ++y) {
            if (theta(y) >= 0) continue;
            std::vector<Mat> cols;
            for (int a = 0; a < w.quiver.num_arrows(); ++a) {
                const Arrow& ar = w.quiver.arrow(a);
                if (ar.head != y) continue;
                for (int s = 0; s < ns; ++s)
                    if (sources[s] == ar.tail && (mask & (1L << s))) cols.push_back(w.maps[a]);
            }
            if (cols.empty()) continue;
            Mat all = cols[0];
            for (size_t k = 1; k < cols.size(); ++k) all = hcat(all, cols[k]);
            val += theta(y) * rank_of(all);
        }
        best = std::max(best, val);
    }
    return best;
}

SlopeBrute slope_brute(const Representation& w, const Weight& theta, const Weight& kappa) {
    if (!oracle_supported(w, theta)) throw UnsupportedInstance("outside the oracle class");
    if (!kappa_check(kappa)) throw WeightError("kappa must be >= 1 at every vertex");
    if (w.is_zero()) throw ZeroRepresentationError("slope_brute of the zero representation");
    const int nv = w.quiver.num_vertices();
    std::vector<int> sources;
    for (int v = 0; v < nv; ++v)
        if (theta(v) > 0 && w.dims[v] == 1) sources.push_back(v);
    const int ns = static_cast<int>(sources.size());
    if (ns > 20) throw UnsupportedInstance("too many source vertices to enumerate");

    bool found = false;
    Rat best;
    long best_mask = 0;
    std::vector<int> best_tdims;

    std::vector<int> targets;
    for (int v = 0; v < nv; ++v)
        if (theta(v) <= 0 && w.dims[v] > 0) targets.push_back(v);

    for (long mask = 0; mask < (1L << ns); ++mask) {
        // minimal target spans forced by the chosen sources
        std::vector<Subspace> span(nv);
        for (int y : targets) span[y] = Subspace::zero(w.dims[y]);
        for (int a = 0; a < w.quiver.num_arrows(); ++a) {
            const Arrow& ar = w.quiver.arrow(a);
            for (int s = 0; s < ns; ++s)
                if (sources[s] == ar.tail && (mask & (1L << s)))
                    span[ar.head] = sum(span[ar.head], image(w.maps[a]));
        }
        std::vector<int> mins, caps;
        for (int y : targets) {
            mins.push_back(span[y].dim());
            caps.push_back(w.dims[y]);
        }
        // enumerate all target dimension profiles >= the minimal one; the
        // slope depends only on the dimension vector
        std::vector<int> t = mins;
        while (true) {
            long th = 0, ka = 0;
            for (int s = 0; s < ns; ++s)
                if (mask & (1L << s)) {
                    th += theta(sources[s]);
                    ka += kappa(sources[s]);
                }
            for (size_t k = 0; k < targets.size(); ++k) {
                th += theta(targets[k]) * t[k];
                ka += kappa(targets[k]) * t[k];
            }
            if (ka > 0) {
                Rat mu = rat(th, ka);
                if (!found || mu > best) {
                    found = true;
                    best = mu;
                    best_mask = mask;
                    best_tdims = t;
                }
            }
            int k = static_cast<int>(targets.size()) - 1;
            while (k >= 0 && t[k] == caps[k]) {
                t[k] = mins[k];
                --k;
            }
            if (k < 0) break;
            ++t[k];
        }
    }
    if (!found) throw InternalError("slope oracle found no nonzero subrepresentation");

    // realize the maximizer: minimal spans padded with standard vectors
    SlopeBrute out;
    out.best = best;
    out.maximizer.spaces.assign(nv, Subspace());
    for (int v = 0; v < nv; ++v) out.maximizer.spaces[v] = Subspace::zero(w.dims[v]);
    for (int s = 0; s < ns; ++s)
        if (best_mask & (1L << s)) out.maximizer.spaces[sources[s]] = Subspace::full(1);
    for (int a = 0; a < w.quiver.num_arrows(); ++a) {
        const Arrow& ar = w.quiver.arrow(a);
        for (int s = 0; s < ns; ++s)
            if (sources[s] == ar.tail && (best_mask & (1L << s)))
                out.maximizer.spaces[ar.head] = sum(out.maximizer.spaces[ar.head], image(w.maps[a]));
    }
    for (size_t k = 0; k < targets.size(); ++k) {
        const int y = targets[k];
        for (int e = 0; out.maximizer.spaces[y].dim() < best_tdims[k]; ++e) {
            Mat unit(w.dims[y], 1);
            unit.at(e, 0) = 1;
            Subspace cand = sum(out.maximizer.spaces[y], Subspace::from_columns(unit));
            if (cand.dim() > out.maximizer.spaces[y].dim()) out.maximizer.spaces[y] = cand;
        }
    }
    if (!is_subrep(w, out.maximizer)) throw InternalError("slope maximizer is not invariant");
    if (slope(theta, kappa, out.maximizer.dims()) != best)
        throw InternalError("slope maximizer value mismatch");
    return out;
}

}  // namespace qstab
