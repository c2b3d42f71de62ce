#include "graphpack/packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpk {

Mapping::Mapping(std::vector<int> forward) : fwd_(std::move(forward)) {
    const int n = static_cast<int>(fwd_.size());
    inv_.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        int w = fwd_[v];
        if (w < 0 || w >= n || inv_[w] != -1)
            throw std::invalid_argument("mapping: forward array is not a permutation");
        inv_[w] = v;
    }
}

Mapping Mapping::identity(int n) {
    std::vector<int> f(n);
    for (int v = 0; v < n; ++v) f[v] = v;
    return Mapping(std::move(f));
}

void Mapping::swap_images(int u, int y) {
    if (u == y) throw std::domain_error("swap: endpoints must differ");
    std::swap(fwd_[u], fwd_[y]);
    inv_[fwd_[u]] = u;
    inv_[fwd_[y]] = y;
}

Mapping Mapping::swapped(int u, int y) const {
    Mapping out = *this;
    out.swap_images(u, y);
    return out;
}

static void require_same_order(const Graph& g, const Graph& h) {
    if (g.size() != h.size())
        throw std::domain_error("packing: graphs must have the same vertex count");
}

std::vector<Conflict> conflicts(const Graph& g, const Graph& h, const Mapping& m) {
    require_same_order(g, h);
    std::vector<Conflict> out;
    for (auto [u, x] : g.edges())
        if (h.has_edge(m.image(u), m.image(x))) out.push_back({u, x});
    return out;  // g.edges() is sorted with u < x already
}

bool is_packing(const Graph& g, const Graph& h, const Mapping& m) {
    require_same_order(g, h);
    for (auto [u, x] : g.edges())
        if (h.has_edge(m.image(u), m.image(x))) return false;
    return true;
}

std::vector<Link> links_from(const Graph& g, const Graph& h, const Mapping& m, int u) {
    require_same_order(g, h);
    if (u < 0 || u >= g.size()) throw std::out_of_range("links_from: vertex out of range");
    std::vector<Link> out;
    g.neighbors(u).for_each([&](int mid) {
        h.neighbors(m.image(mid)).for_each([&](int w) {
            out.push_back({u, m.preimage(w), mid, LinkKind::GH});
        });
    });
    h.neighbors(m.image(u)).for_each([&](int z) {
        const int mid = m.preimage(z);
        g.neighbors(mid).for_each([&](int y) {
            out.push_back({u, y, mid, LinkKind::HG});
        });
    });
    return out;
}

Quasipacking::Quasipacking(const Graph& g, const Graph& h, Mapping m)
    : m_(std::move(m)) {
    auto cs = conflicts(g, h, m_);
    if (cs.size() != 1)
        throw std::domain_error("quasipacking: mapping must have exactly one conflicting pair");
    c_ = cs.front();
}

Quasipacking::Quasipacking(const Graph& g, const Graph& h, Mapping m, Conflict c)
    : Quasipacking(g, h, std::move(m)) {
    Conflict wanted{std::min(c.u, c.x), std::max(c.u, c.x)};
    if (!(c_ == wanted))
        throw std::domain_error("quasipacking: stated conflict is not the conflicting pair");
}

static int resolve_source(const Quasipacking& qp, int source) {
    if (source == -1) return qp.conflict().u;
    if (source != qp.conflict().u && source != qp.conflict().x)
        throw std::domain_error("link source must be a conflict endpoint");
    return source;
}

std::vector<int> link_free_targets(const Graph& g, const Graph& h,
                                   const Quasipacking& qp, int source) {
    const int u = resolve_source(qp, source);
    std::vector<bool> hit(g.size(), false);
    for (const Link& l : links_from(g, h, qp.mapping(), u)) hit[l.endpoint] = true;
    std::vector<int> out;
    for (int y = 0; y < g.size(); ++y)
        if (!hit[y] && y != qp.conflict().u && y != qp.conflict().x) out.push_back(y);
    return out;
}

LinkCountBound link_count_bound(const Graph& g, const Graph& h, const Mapping& m, int u) {
    LinkCountBound lb;
    lb.observed = static_cast<long long>(links_from(g, h, m, u).size());
    g.neighbors(u).for_each([&](int y) { lb.bound += h.degree(m.image(y)); });
    h.neighbors(m.image(u)).for_each([&](int z) { lb.bound += g.degree(m.preimage(z)); });
    return lb;
}

LinkCountBound link_count_bound(const Graph& g, const Graph& h,
                                const Quasipacking& qp, int source) {
    return link_count_bound(g, h, qp.mapping(), resolve_source(qp, source));
}

}  // namespace gpk
