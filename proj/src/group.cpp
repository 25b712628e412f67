#include "fanorm/group.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "fanorm/errors.hpp"
#include "fanorm/rng.hpp"

namespace fanorm {

namespace {

constexpr int kAssocExhaustiveCap = 512;
constexpr long kAssocSamples = 100000;
constexpr std::uint64_t kAssocSeed = 0x5eedf00d;

int checked_order(std::size_t table_size, const std::string& label) {
    if (table_size == 0) throw ValidationError(label + ": empty Cayley table");
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(table_size))));
    if (n * n != table_size)
        throw ValidationError(label + ": Cayley table is not square");
    if (n > FiniteGroup::kMaxOrder)
        throw ValidationError(label + ": order " + std::to_string(n) + " exceeds dense-table cap " +
                              std::to_string(FiniteGroup::kMaxOrder));
    return static_cast<int>(n);
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::int32_t> cayley, std::string label)
    : n_(checked_order(cayley.size(), label)),
      cayley_(std::move(cayley)),
      inv_(n_, -1),
      label_(std::move(label)),
      abelian_(true) {
    for (int x = 0; x < n_; ++x) {
        for (int y = 0; y < n_; ++y) {
            if (mul(x, y) == 0) {
                if (inv_[x] != -1 && inv_[x] != y)
                    throw ValidationError(label_ + ": element " + std::to_string(x) +
                                          " has two right inverses");
                inv_[x] = y;
            }
            if (abelian_ && mul(x, y) != mul(y, x)) abelian_ = false;
        }
    }
    validate();
}

void FiniteGroup::validate() const {
    // Latin square: every row and column is a permutation of 0..n-1.
    std::vector<char> seen(n_);
    for (int x = 0; x < n_; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int y = 0; y < n_; ++y) {
            const int v = mul(x, y);
            if (v < 0 || v >= n_ || seen[v])
                throw ValidationError(label_ + ": row " + std::to_string(x) +
                                      " is not a permutation");
            seen[v] = 1;
        }
    }
    for (int y = 0; y < n_; ++y) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int x = 0; x < n_; ++x) {
            const int v = mul(x, y);
            if (seen[v])
                throw ValidationError(label_ + ": column " + std::to_string(y) +
                                      " is not a permutation");
            seen[v] = 1;
        }
    }
    for (int x = 0; x < n_; ++x) {
        if (mul(0, x) != x || mul(x, 0) != x)
            throw ValidationError(label_ + ": index 0 is not a two-sided identity");
        if (inv_[x] < 0 || mul(x, inv_[x]) != 0 || mul(inv_[x], x) != 0)
            throw ValidationError(label_ + ": element " + std::to_string(x) +
                                  " lacks a two-sided inverse");
    }

    auto assoc_at = [this](int x, int y, int z) { return mul(mul(x, y), z) == mul(x, mul(y, z)); };
    if (n_ <= kAssocExhaustiveCap) {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                for (int z = 0; z < n_; ++z)
                    if (!assoc_at(x, y, z))
                        throw ValidationError(label_ + ": associativity fails at (" +
                                              std::to_string(x) + "," + std::to_string(y) + "," +
                                              std::to_string(z) + ")");
    } else {
        Rng rng(kAssocSeed);
        for (long i = 0; i < kAssocSamples; ++i) {
            const int x = static_cast<int>(rng.uniform_int(n_));
            const int y = static_cast<int>(rng.uniform_int(n_));
            const int z = static_cast<int>(rng.uniform_int(n_));
            if (!assoc_at(x, y, z))
                throw ValidationError(label_ + ": associativity fails at sampled (" +
                                      std::to_string(x) + "," + std::to_string(y) + "," +
                                      std::to_string(z) + ")");
        }
    }
}

int FiniteGroup::power(int x, long k) const {
    int acc = 0;
    for (long i = 0; i < k; ++i) acc = mul(acc, x);
    return acc;
}

int FiniteGroup::element_order(int x) const {
    int acc = x;
    int m = 1;
    while (acc != 0) {
        acc = mul(acc, x);
        ++m;
    }
    return m;
}

std::vector<int> FiniteGroup::order_profile() const {
    std::vector<int> prof(n_);
    for (int x = 0; x < n_; ++x) prof[x] = element_order(x);
    std::sort(prof.begin(), prof.end());
    return prof;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    if (&a == &b) return true;
    return a.order() == b.order() &&
           std::equal(a.cayley().begin(), a.cayley().end(), b.cayley().begin());
}

// ---------------------------------------------------------------------------
// constructions

GroupPtr build_cyclic(int n) {
    if (n < 1) throw ValidationError("build_cyclic: n must be >= 1");
    if (n > FiniteGroup::kMaxOrder)
        throw ValidationError("build_cyclic: order exceeds dense-table cap");
    std::vector<std::int32_t> c(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) c[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
    return std::make_shared<FiniteGroup>(std::move(c), "Z" + std::to_string(n));
}

int product_index(const std::vector<GroupPtr>& factors, const std::vector<int>& coords) {
    if (coords.size() != factors.size())
        throw ValidationError("product_index: coordinate count mismatch");
    long idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        idx = idx * factors[i]->order() + coords[i];
    }
    return static_cast<int>(idx);
}

GroupPtr build_product(const std::vector<GroupPtr>& factors) {
    if (factors.empty()) throw ValidationError("build_product: need at least one factor");
    long order = 1;
    std::string label;
    for (const auto& f : factors) {
        order *= f->order();
        if (order > FiniteGroup::kMaxOrder)
            throw ValidationError("build_product: order exceeds dense-table cap");
        if (!label.empty()) label += "x";
        label += f->label();
    }
    const int n = static_cast<int>(order);
    const int k = static_cast<int>(factors.size());

    auto decode = [&](int idx, std::vector<int>& out) {
        for (int i = k - 1; i >= 0; --i) {
            const int m = factors[i]->order();
            out[i] = idx % m;
            idx /= m;
        }
    };

    std::vector<std::int32_t> c(static_cast<std::size_t>(n) * n);
    std::vector<int> xs(k), ys(k), zs(k);
    for (int x = 0; x < n; ++x) {
        decode(x, xs);
        for (int y = 0; y < n; ++y) {
            decode(y, ys);
            for (int i = 0; i < k; ++i) zs[i] = factors[i]->mul(xs[i], ys[i]);
            c[static_cast<std::size_t>(x) * n + y] = product_index(factors, zs);
        }
    }
    return std::make_shared<FiniteGroup>(std::move(c), label);
}

GroupPtr build_dihedral(int n) {
    if (n < 1) throw ValidationError("build_dihedral: n must be >= 1");
    const int order = 2 * n;
    if (order > FiniteGroup::kMaxOrder)
        throw ValidationError("build_dihedral: order exceeds dense-table cap");
    // element (a, i) = s^a r^i at index a*n + i; s r^i s = r^{-i}
    std::vector<std::int32_t> c(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < n; ++i)
            for (int b = 0; b < 2; ++b)
                for (int j = 0; j < n; ++j) {
                    const int rot = (((b ? -i : i) + j) % n + n) % n;
                    c[static_cast<std::size_t>(a * n + i) * order + (b * n + j)] =
                        (a ^ b) * n + rot;
                }
    return std::make_shared<FiniteGroup>(std::move(c), "D" + std::to_string(n));
}

namespace {

GroupPtr group_from_permutation_list(std::vector<std::vector<int>> elems, std::string label) {
    const int n = static_cast<int>(elems.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[elems[i]] = i;

    const int npts = static_cast<int>(elems[0].size());
    std::vector<std::int32_t> c(static_cast<std::size_t>(n) * n);
    std::vector<int> comp(npts);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int t = 0; t < npts; ++t) comp[t] = elems[i][elems[j][t]];
            const auto it = index.find(comp);
            if (it == index.end())
                throw ValidationError(label + ": permutation set not closed under composition");
            c[static_cast<std::size_t>(i) * n + j] = it->second;
        }
    return std::make_shared<FiniteGroup>(std::move(c), std::move(label));
}

}  // namespace

GroupPtr build_symmetric(int n) {
    if (n < 1) throw ValidationError("build_symmetric: n must be >= 1");
    long order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    if (order > FiniteGroup::kMaxOrder)
        throw ValidationError("build_symmetric: S" + std::to_string(n) +
                              " exceeds dense-table cap");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> elems;  // lexicographic, identity first
    do {
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return group_from_permutation_list(std::move(elems), "S" + std::to_string(n));
}

GroupPtr build_from_permutations(const std::vector<std::vector<int>>& generators) {
    if (generators.empty()) throw ValidationError("build_from_permutations: no generators");
    const std::size_t npts = generators[0].size();
    for (const auto& g : generators) {
        if (g.size() != npts)
            throw ValidationError("build_from_permutations: generators act on different sets");
        std::vector<char> seen(npts, 0);
        for (int v : g) {
            if (v < 0 || static_cast<std::size_t>(v) >= npts || seen[v])
                throw ValidationError("build_from_permutations: not a permutation");
            seen[v] = 1;
        }
    }

    std::vector<int> ident(npts);
    std::iota(ident.begin(), ident.end(), 0);
    std::vector<std::vector<int>> elems{ident};
    std::set<std::vector<int>> seen{ident};
    std::vector<int> comp(npts);
    // breadth-first product closure
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : generators) {
            for (std::size_t t = 0; t < npts; ++t) comp[t] = elems[head][g[t]];
            if (seen.insert(comp).second) {
                if (elems.size() + 1 > static_cast<std::size_t>(FiniteGroup::kMaxOrder))
                    throw ValidationError(
                        "build_from_permutations: closure exceeds dense-table cap");
                elems.push_back(comp);
            }
        }
    }
    return group_from_permutation_list(std::move(elems),
                                       "perm" + std::to_string(elems.size()));
}

// ---------------------------------------------------------------------------
// subgroups

bool Subgroup::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

int Subgroup::rank(int x) const {
    const auto it = std::lower_bound(members.begin(), members.end(), x);
    if (it == members.end() || *it != x) return -1;
    return static_cast<int>(it - members.begin());
}

Subgroup make_subgroup(GroupPtr parent, std::vector<int> members) {
    if (!parent) throw ValidationError("make_subgroup: null parent");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members[0] != 0)
        throw ValidationError("make_subgroup: members must contain the identity");
    const int n = parent->order();
    Subgroup h{std::move(parent), std::move(members)};
    for (int x : h.members) {
        if (x < 0 || x >= n) throw ValidationError("make_subgroup: element out of range");
        if (!h.contains(h.parent->inv(x)))
            throw ValidationError("make_subgroup: not closed under inverses");
        for (int y : h.members)
            if (!h.contains(h.parent->mul(x, y)))
                throw ValidationError("make_subgroup: not closed under multiplication");
    }
    if (n % h.size() != 0)
        throw ValidationError("make_subgroup: size does not divide group order");  // unreachable
    return h;
}

SubgroupGroup subgroup_as_group(const Subgroup& h) {
    const int m = h.size();
    std::vector<std::int32_t> c(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const int r = h.rank(h.parent->mul(h.members[i], h.members[j]));
            c[static_cast<std::size_t>(i) * m + j] = r;
        }
    auto g = std::make_shared<FiniteGroup>(std::move(c),
                                           h.parent->label() + "|H" + std::to_string(m));
    return SubgroupGroup{std::move(g), h.members};
}

namespace {

std::vector<int> close_under_products(const FiniteGroup& g, std::vector<int> seed) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> elems;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            elems.push_back(x);
        }
    };
    add(0);
    for (int x : seed) add(x);
    for (std::size_t head = 0; head < elems.size(); ++head) {
        const int x = elems[head];
        add(g.inv(x));
        for (std::size_t j = 0; j <= head; ++j) {
            add(g.mul(x, elems[j]));
            add(g.mul(elems[j], x));
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

}  // namespace

Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& generators) {
    return make_subgroup(g, close_under_products(*g, generators));
}

std::optional<CosetWitness> is_coset(GroupPtr g, std::span<const int> elements) {
    if (elements.empty()) throw ValidationError("is_coset: empty set is not a coset");
    if (g->order() % static_cast<int>(elements.size()) != 0) return std::nullopt;  // Lagrange

    const int a = elements.front();
    auto try_side = [&](CosetSide side) -> std::optional<CosetWitness> {
        std::vector<int> h;
        h.reserve(elements.size());
        const int ainv = g->inv(a);
        for (int f : elements)
            h.push_back(side == CosetSide::left ? g->mul(ainv, f) : g->mul(f, ainv));
        std::sort(h.begin(), h.end());
        if (h.empty() || h[0] != 0) return std::nullopt;
        auto in = [&](int x) { return std::binary_search(h.begin(), h.end(), x); };
        for (int x : h) {
            if (!in(g->inv(x))) return std::nullopt;
            for (int y : h)
                if (!in(g->mul(x, y))) return std::nullopt;
        }
        return CosetWitness{make_subgroup(g, std::move(h)), side, a};
    };

    if (auto w = try_side(CosetSide::left)) return w;
    return try_side(CosetSide::right);
}

std::vector<Subgroup> enumerate_subgroups(GroupPtr g) {
    const int n = g->order();
    if (n > 64) throw ValidationError("enumerate_subgroups: order cap is 64");

    auto to_mask = [](const std::vector<int>& elems) {
        std::uint64_t m = 0;
        for (int x : elems) m |= std::uint64_t{1} << x;
        return m;
    };

    std::set<std::uint64_t> found;
    std::vector<std::vector<int>> worklist;
    auto add = [&](std::vector<int> elems) {
        if (found.insert(to_mask(elems)).second) worklist.push_back(std::move(elems));
    };

    add(close_under_products(*g, {}));
    for (int x = 1; x < n; ++x) add(close_under_products(*g, {x}));

    // pairwise joins until fixpoint
    for (std::size_t i = 0; i < worklist.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<int> seed = worklist[i];
            seed.insert(seed.end(), worklist[j].begin(), worklist[j].end());
            auto joined = close_under_products(*g, seed);
            if (!found.count(to_mask(joined))) add(std::move(joined));
        }
    }

    std::vector<Subgroup> out;
    out.reserve(worklist.size());
    for (auto& members : worklist) out.push_back(make_subgroup(g, std::move(members)));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members < b.members;
    });
    return out;
}

Quotient quotient(GroupPtr g, const Subgroup& kernel) {
    if (!same_group(*g, *kernel.parent))
        throw ValidationError("quotient: kernel belongs to a different group");
    const int n = g->order();
    for (int x = 0; x < n; ++x)
        for (int k : kernel.members)
            if (!kernel.contains(g->mul(g->mul(x, k), g->inv(x))))
                throw ValidationError("quotient: subgroup is not normal");

    std::vector<int> proj(n, -1);
    std::vector<int> reps;  // smallest element of each coset, discovery order
    for (int x = 0; x < n; ++x) {
        if (proj[x] != -1) continue;
        const int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int k : kernel.members) proj[g->mul(x, k)] = id;
    }

    const int m = static_cast<int>(reps.size());
    std::vector<std::int32_t> c(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            c[static_cast<std::size_t>(i) * m + j] = proj[g->mul(reps[i], reps[j])];

    auto qg = std::make_shared<FiniteGroup>(
        std::move(c), g->label() + "/N" + std::to_string(kernel.size()));

    // the projection must be a surjective homomorphism with the kernel as
    // identity fiber; cheap to confirm outright
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (proj[g->mul(x, y)] != qg->mul(proj[x], proj[y]))
                throw ValidationError("quotient: projection is not a homomorphism");
    for (int x = 0; x < n; ++x)
        if ((proj[x] == 0) != kernel.contains(x))
            throw ValidationError("quotient: kernel is not the identity fiber");

    return Quotient{std::move(g), kernel, std::move(qg), std::move(proj)};
}

std::vector<int> pullback_set(const Quotient& q, std::span<const int> f) {
    std::vector<char> pick(q.group->order(), 0);
    for (int x : f) {
        if (x < 0 || x >= q.group->order())
            throw ValidationError("pullback_set: element out of range");
        pick[x] = 1;
    }
    std::vector<int> out;
    for (int x = 0; x < q.source->order(); ++x)
        if (pick[q.projection[x]]) out.push_back(x);
    return out;
}

// ---------------------------------------------------------------------------
// homomorphisms

GroupHom GroupHom::checked(GroupPtr domain, GroupPtr codomain, std::vector<int> map) {
    if (static_cast<int>(map.size()) != domain->order())
        throw ValidationError("GroupHom: map length mismatch");
    for (int v : map)
        if (v < 0 || v >= codomain->order())
            throw ValidationError("GroupHom: image out of range");
    if (map[0] != 0) throw ValidationError("GroupHom: identity must map to identity");
    for (int x = 0; x < domain->order(); ++x)
        for (int y = 0; y < domain->order(); ++y)
            if (map[domain->mul(x, y)] != codomain->mul(map[x], map[y]))
                throw ValidationError("GroupHom: not multiplicative at (" + std::to_string(x) +
                                      "," + std::to_string(y) + ")");
    return GroupHom{std::move(domain), std::move(codomain), std::move(map)};
}

GroupHom GroupHom::unchecked(GroupPtr domain, GroupPtr codomain, std::vector<int> map) {
    return GroupHom{std::move(domain), std::move(codomain), std::move(map)};
}

namespace {

enum class Propagation { conflict, incomplete, complete };

// Closes a partial map (images fixed on some elements) under products.
// map[x] == -1 means unknown.
Propagation propagate_hom(const FiniteGroup& dom, const FiniteGroup& cod,
                          std::vector<int>& map) {
    std::vector<int> known;
    for (int x = 0; x < dom.order(); ++x)
        if (map[x] != -1) known.push_back(x);
    for (std::size_t head = 0; head < known.size(); ++head) {
        const int x = known[head];
        for (std::size_t j = 0; j <= head; ++j) {
            const int y = known[j];
            for (const auto [d, c] : {std::pair{dom.mul(x, y), cod.mul(map[x], map[y])},
                                      std::pair{dom.mul(y, x), cod.mul(map[y], map[x])}}) {
                if (map[d] == -1) {
                    map[d] = c;
                    known.push_back(d);
                } else if (map[d] != c) {
                    return Propagation::conflict;
                }
            }
        }
    }
    return known.size() == static_cast<std::size_t>(dom.order()) ? Propagation::complete
                                                                 : Propagation::incomplete;
}

void hom_search(const FiniteGroup& dom, const FiniteGroup& cod, const std::vector<int>& gens,
                std::size_t next, const std::vector<int>& partial, std::vector<GroupHom>& out,
                const GroupPtr& dom_ptr, const GroupPtr& cod_ptr) {
    if (next == gens.size()) {
        std::vector<int> map = partial;
        if (propagate_hom(dom, cod, map) == Propagation::complete)
            out.push_back(GroupHom::unchecked(dom_ptr, cod_ptr, std::move(map)));
        return;
    }
    const int g = gens[next];
    if (partial[g] != -1) {  // image already forced by propagation
        hom_search(dom, cod, gens, next + 1, partial, out, dom_ptr, cod_ptr);
        return;
    }
    const int go = dom.element_order(g);
    for (int img = 0; img < cod.order(); ++img) {
        if (go % cod.element_order(img) != 0) continue;
        std::vector<int> trial = partial;
        trial[g] = img;
        if (propagate_hom(dom, cod, trial) == Propagation::conflict) continue;
        hom_search(dom, cod, gens, next + 1, trial, out, dom_ptr, cod_ptr);
    }
}

}  // namespace

std::vector<GroupHom> enumerate_homs(GroupPtr domain, GroupPtr codomain) {
    // greedy generating set
    std::vector<int> gens;
    {
        std::vector<int> span = close_under_products(*domain, {});
        while (static_cast<int>(span.size()) < domain->order()) {
            int pick = -1;
            for (int x = 0; x < domain->order(); ++x)
                if (!std::binary_search(span.begin(), span.end(), x)) {
                    pick = x;
                    break;
                }
            gens.push_back(pick);
            std::vector<int> seed = span;
            seed.push_back(pick);
            span = close_under_products(*domain, seed);
        }
    }

    std::vector<GroupHom> out;
    std::vector<int> partial(domain->order(), -1);
    partial[0] = 0;
    if (gens.empty()) {
        out.push_back(GroupHom::unchecked(domain, codomain, std::vector<int>{0}));
        return out;
    }
    hom_search(*domain, *codomain, gens, 0, partial, out, domain, codomain);

    // drop duplicates and anything propagate accepted but is not multiplicative
    std::set<std::vector<int>> unique;
    std::vector<GroupHom> checked;
    for (auto& h : out) {
        if (!unique.insert(h.map).second) continue;
        bool ok = true;
        for (int x = 0; x < domain->order() && ok; ++x)
            for (int y = 0; y < domain->order() && ok; ++y)
                if (h.map[domain->mul(x, y)] != codomain->mul(h.map[x], h.map[y])) ok = false;
        if (ok) checked.push_back(std::move(h));
    }
    return checked;
}

// ---------------------------------------------------------------------------

std::vector<int> mask_to_elements(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        const int b = std::countr_zero(mask);
        out.push_back(b);
        mask &= mask - 1;
    }
    return out;
}

std::uint64_t elements_to_mask(std::span<const int> elements) {
    std::uint64_t m = 0;
    for (int x : elements) {
        if (x < 0 || x >= 64) throw ValidationError("elements_to_mask: element out of 0..63");
        m |= std::uint64_t{1} << x;
    }
    return m;
}

}  // namespace fanorm
