#pragma once

#include "graphpack/graph.hpp"

#include <compare>
#include <vector>

namespace gpk {

// Bijection V(G) -> V(H) with the inverse kept in sync.
class Mapping {
public:
    Mapping() = default;
    explicit Mapping(std::vector<int> forward);  // must be a permutation
    static Mapping identity(int n);

    int size() const { return static_cast<int>(fwd_.size()); }
    int image(int v) const { return fwd_[v]; }
    int preimage(int w) const { return inv_[w]; }
    const std::vector<int>& forward() const { return fwd_; }

    // Exchanges the images of u and y, all other images unchanged. u != y.
    Mapping swapped(int u, int y) const;
    void swap_images(int u, int y);

    bool operator==(const Mapping&) const = default;

private:
    std::vector<int> fwd_, inv_;
};

// A pair carrying both a G-edge and an H-edge under the current mapping:
// ux in E(G) and f(u)f(x) in E(H). Stored with u < x.
struct Conflict {
    int u = -1;
    int x = -1;
    auto operator<=>(const Conflict&) const = default;
};

// All conflicting pairs, sorted. g and h must have equal vertex counts.
std::vector<Conflict> conflicts(const Graph& g, const Graph& h, const Mapping& m);

// True iff m maps every G-edge onto a non-edge of H.
bool is_packing(const Graph& g, const Graph& h, const Mapping& m);

enum class LinkKind { GH, HG };

// A two-edge alternating walk from source to endpoint through mid:
//   GH: source-mid in E(G) and f(mid)f(endpoint) in E(H)
//   HG: f(source)f(mid) in E(H) and mid-endpoint in E(G)
// endpoint == source is allowed (a self-link through a doubled pair).
struct Link {
    int source = -1;
    int endpoint = -1;
    int mid = -1;
    LinkKind kind = LinkKind::GH;
    auto operator<=>(const Link&) const = default;
};

// Every link from u, with multiplicity: distinct (kind, mid, endpoint)
// triples are distinct links. GH links first, mids ascending.
std::vector<Link> links_from(const Graph& g, const Graph& h, const Mapping& m, int u);

// A mapping whose G/H edge overlay is simple except for exactly one doubled
// pair. Construction scans all pairs and rejects anything else.
class Quasipacking {
public:
    Quasipacking(const Graph& g, const Graph& h, Mapping m);
    Quasipacking(const Graph& g, const Graph& h, Mapping m, Conflict c);

    const Mapping& mapping() const { return m_; }
    const Conflict& conflict() const { return c_; }

private:
    Mapping m_;
    Conflict c_;
};

// Vertices y outside the conflict pair with no link from `source`, ascending.
// Swapping source with any of them yields a packing. source must be one of
// the conflict endpoints; -1 selects conflict().u.
std::vector<int> link_free_targets(const Graph& g, const Graph& h,
                                   const Quasipacking& qp, int source = -1);

struct LinkCountBound {
    long long observed = 0;  // |links_from(source)| with multiplicity
    long long bound = 0;     // sum_{y in N_G(u)} deg_H(f(y)) + sum_{z' in N_H(f(u))} deg_G(f^-1(z'))
};
LinkCountBound link_count_bound(const Graph& g, const Graph& h, const Mapping& m, int u);
LinkCountBound link_count_bound(const Graph& g, const Graph& h,
                                const Quasipacking& qp, int source = -1);

}  // namespace gpk
