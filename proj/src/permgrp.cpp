#include "cubic27/permgrp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace cubic27::permgrp {

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img[i] != i) return false;
    return true;
}

Perm Perm::after(const Perm& b) const {
    if (degree() != b.degree()) throw DegreeMismatch();
    Perm r;
    r.img.resize(img.size());
    for (int i = 0; i < degree(); ++i) r.img[i] = img[b.img[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (int i = 0; i < degree(); ++i) r.img[img[i]] = static_cast<uint8_t>(i);
    return r;
}

int Perm::order() const {
    int64_t ord = 1;
    std::vector<bool> seen(img.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img[j];
            ++len;
        }
        ord = std::lcm<int64_t>(ord, len);
    }
    return static_cast<int>(ord);
}

Perm Perm::conjugated_by(const Perm& b) const {
    return b.inverse().after(*this).after(b);
}

bool Perm::commutes_with(const Perm& b) const {
    if (degree() != b.degree()) throw DegreeMismatch();
    for (int i = 0; i < degree(); ++i)
        if (img[b.img[i]] != b.img[img[i]]) return false;
    return true;
}

struct GroupHandle::Data {
    std::vector<Perm> gens;
    std::vector<Perm> elements; // sorted
    std::unordered_map<Perm, int, PermHash> index;
    int degree = 0;
};

namespace {

std::shared_ptr<const GroupHandle::Data> make_data(std::vector<Perm> gens,
                                                   std::vector<Perm> elements) {
    auto d = std::make_shared<GroupHandle::Data>();
    d->degree = elements.empty() ? 0 : elements.front().degree();
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    d->elements = std::move(elements);
    d->index.reserve(d->elements.size() * 2);
    for (size_t i = 0; i < d->elements.size(); ++i)
        d->index.emplace(d->elements[i], static_cast<int>(i));
    d->gens = std::move(gens);
    return d;
}

// Greedy small generating set for an explicitly given closed element set.
std::vector<Perm> small_generating_set(const std::vector<Perm>& elements) {
    if (elements.empty()) return {};
    const int n = elements.front().degree();
    std::vector<Perm> gens;
    std::unordered_set<Perm, PermHash> closed;
    closed.insert(Perm::identity(n));
    for (const Perm& e : elements) {
        if (closed.count(e)) continue;
        gens.push_back(e);
        // re-close
        std::deque<Perm> queue(closed.begin(), closed.end());
        while (!queue.empty()) {
            Perm x = queue.front();
            queue.pop_front();
            for (const Perm& g : gens) {
                Perm y = g.after(x);
                if (closed.insert(y).second) queue.push_back(y);
            }
        }
        if (closed.size() == elements.size()) break;
    }
    return gens;
}

} // namespace

GroupHandle GroupHandle::closure(std::vector<Perm> gens, uint64_t cap) {
    if (gens.empty()) throw DegreeMismatch();
    const int n = gens.front().degree();
    if (n > 64) throw DegreeMismatch();
    for (const Perm& g : gens)
        if (g.degree() != n) throw DegreeMismatch();

    std::unordered_set<Perm, PermHash> seen;
    std::deque<Perm> queue;
    seen.insert(Perm::identity(n));
    queue.push_back(Perm::identity(n));
    while (!queue.empty()) {
        Perm x = queue.front();
        queue.pop_front();
        for (const Perm& g : gens) {
            Perm y = g.after(x);
            if (seen.insert(y).second) {
                if (seen.size() > cap) throw Overflow(cap);
                queue.push_back(std::move(y));
            }
        }
    }
    GroupHandle h;
    h.d_ = make_data(std::move(gens), std::vector<Perm>(seen.begin(), seen.end()));
    return h;
}

GroupHandle GroupHandle::from_elements(std::vector<Perm> elems, bool verify) {
    if (elems.empty()) throw DegreeMismatch();
    auto gens = small_generating_set(elems);
    if (gens.empty()) gens.push_back(Perm::identity(elems.front().degree()));
    if (verify) {
        GroupHandle check = closure(gens);
        std::vector<Perm> sorted = elems;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (check.elements() != sorted) throw NotSubgroup();
    }
    GroupHandle h;
    h.d_ = make_data(std::move(gens), std::move(elems));
    return h;
}

uint64_t GroupHandle::order() const { return d_->elements.size(); }
int GroupHandle::degree() const { return d_->degree; }
const std::vector<Perm>& GroupHandle::elements() const { return d_->elements; }
const std::vector<Perm>& GroupHandle::generators() const { return d_->gens; }

bool GroupHandle::contains(const Perm& p) const { return d_->index.count(p) != 0; }

int GroupHandle::index_of(const Perm& p) const {
    auto it = d_->index.find(p);
    return it == d_->index.end() ? -1 : it->second;
}

std::vector<ConjClass> conjugacy_classes(const GroupHandle& g) {
    const auto& elems = g.elements();
    std::vector<bool> done(elems.size(), false);
    std::vector<ConjClass> classes;
    std::vector<Perm> gen_invs;
    for (const Perm& s : g.generators()) gen_invs.push_back(s.inverse());

    for (size_t i = 0; i < elems.size(); ++i) {
        if (done[i]) continue;
        // orbit of elems[i] under conjugation by generators
        std::vector<int> orbit{static_cast<int>(i)};
        done[i] = true;
        size_t head = 0;
        while (head < orbit.size()) {
            const Perm& x = elems[orbit[head++]];
            for (size_t s = 0; s < g.generators().size(); ++s) {
                Perm y = gen_invs[s].after(x).after(g.generators()[s]);
                const int idx = g.index_of(y);
                if (idx < 0) throw NotMember();
                if (!done[idx]) {
                    done[idx] = true;
                    orbit.push_back(idx);
                }
            }
        }
        const int rep_idx = *std::min_element(orbit.begin(), orbit.end());
        classes.push_back({elems[rep_idx], orbit.size()});
    }
    std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
        const int oa = a.rep.order(), ob = b.rep.order();
        if (oa != ob) return oa < ob;
        if (a.size != b.size) return a.size < b.size;
        return a.rep < b.rep;
    });
    return classes;
}

GroupHandle centralizer(const GroupHandle& g, const Perm& x) {
    if (!g.contains(x)) throw NotMember();
    std::vector<Perm> elems;
    for (const Perm& h : g.elements())
        if (h.commutes_with(x)) elems.push_back(h);
    return GroupHandle::from_elements(std::move(elems));
}

GroupHandle center(const GroupHandle& g) {
    std::vector<Perm> elems;
    for (const Perm& h : g.elements()) {
        bool central = true;
        for (const Perm& s : g.generators())
            if (!h.commutes_with(s)) {
                central = false;
                break;
            }
        if (central) elems.push_back(h);
    }
    return GroupHandle::from_elements(std::move(elems));
}

GroupHandle normal_closure(const GroupHandle& g, std::vector<Perm> seed) {
    if (seed.empty()) seed.push_back(Perm::identity(g.degree()));
    while (true) {
        GroupHandle h = GroupHandle::closure(seed, g.order());
        std::vector<Perm> fresh;
        for (const Perm& s : g.generators())
            for (const Perm& x : seed) {
                Perm c = x.conjugated_by(s);
                if (!h.contains(c)) fresh.push_back(std::move(c));
            }
        if (fresh.empty()) return h;
        seed = small_generating_set(h.elements());
        for (auto& c : fresh) seed.push_back(std::move(c));
    }
}

GroupHandle derived_subgroup(const GroupHandle& g) {
    std::vector<Perm> comms;
    for (const Perm& a : g.generators())
        for (const Perm& b : g.generators()) {
            Perm c = a.inverse().after(b.inverse()).after(a).after(b);
            if (!c.is_identity()) comms.push_back(std::move(c));
        }
    if (comms.empty()) comms.push_back(Perm::identity(g.degree()));
    return normal_closure(g, std::move(comms));
}

bool is_simple(const GroupHandle& g) {
    if (g.order() == 1) return false;
    for (const auto& cls : conjugacy_classes(g)) {
        if (cls.rep.is_identity()) continue;
        if (normal_closure(g, {cls.rep}).order() != g.order()) return false;
    }
    return true;
}

namespace {

std::vector<Perm> subgroup_generators(const GroupHandle& sub) {
    std::vector<Perm> gens = sub.generators();
    if (gens.empty()) gens.push_back(Perm::identity(sub.degree()));
    return gens;
}

} // namespace

bool all_conjugate(const GroupHandle& g, const std::vector<GroupHandle>& subgroups) {
    if (subgroups.size() <= 1) {
        for (const auto& s : subgroups)
            for (const Perm& x : s.elements())
                if (!g.contains(x)) throw NotSubgroup();
        return true;
    }
    for (const auto& s : subgroups)
        for (const Perm& x : s.elements())
            if (!g.contains(x)) throw NotSubgroup();

    const GroupHandle& first = subgroups.front();
    const auto first_gens = subgroup_generators(first);
    for (size_t i = 1; i < subgroups.size(); ++i) {
        const GroupHandle& other = subgroups[i];
        if (other.order() != first.order()) return false;
        bool found = false;
        for (const Perm& h : g.elements()) {
            bool ok = true;
            for (const Perm& x : first_gens) {
                if (!other.contains(x.conjugated_by(h))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// identification

namespace {

struct Fingerprint {
    uint64_t order = 0;
    uint64_t center_order = 0;
    std::vector<uint64_t> derived_orders; // G', G'', ... until stable
    std::map<int, uint64_t> element_orders;
    std::multiset<uint64_t> class_sizes;

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.order == b.order && a.center_order == b.center_order &&
               a.derived_orders == b.derived_orders && a.element_orders == b.element_orders &&
               a.class_sizes == b.class_sizes;
    }
};

Fingerprint fingerprint_of(const GroupHandle& g) {
    Fingerprint fp;
    fp.order = g.order();
    fp.center_order = center(g).order();
    GroupHandle d = g;
    while (true) {
        GroupHandle next = derived_subgroup(d);
        if (next.order() == d.order()) break;
        fp.derived_orders.push_back(next.order());
        d = next;
        if (next.order() == 1) break;
    }
    for (const Perm& x : g.elements()) ++fp.element_orders[x.order()];
    for (const auto& cls : conjugacy_classes(g)) fp.class_sizes.insert(cls.size);
    return fp;
}

Perm cycle(int n, std::initializer_list<int> pts) {
    Perm p = Perm::identity(n);
    auto it = pts.begin();
    int prev = *it++;
    const int first = prev;
    for (; it != pts.end(); ++it) {
        p.img[prev] = static_cast<uint8_t>(*it);
        prev = *it;
    }
    p.img[prev] = static_cast<uint8_t>(first);
    return p;
}

// Reference constructions, each a permutation group built from first
// principles on points.
std::vector<std::pair<std::string, GroupHandle>> reference_groups() {
    std::vector<std::pair<std::string, GroupHandle>> out;

    out.emplace_back("Z/2", GroupHandle::closure({cycle(2, {0, 1})}));
    out.emplace_back("Z/5", GroupHandle::closure({cycle(5, {0, 1, 2, 3, 4})}));
    out.emplace_back("Z/10",
                     GroupHandle::closure({cycle(7, {0, 1, 2, 3, 4}).after(cycle(7, {5, 6}))}));
    // direct product of a central swap with the symmetric group on 4 points
    out.emplace_back("Z/2xS4", GroupHandle::closure({cycle(6, {0, 1}), cycle(6, {2, 3}),
                                                     cycle(6, {2, 3, 4, 5})}));
    out.emplace_back("S6", GroupHandle::closure({cycle(6, {0, 1}), cycle(6, {0, 1, 2, 3, 4, 5})}));
    out.emplace_back("A6", GroupHandle::closure({cycle(6, {0, 1, 2}), cycle(6, {1, 2, 3, 4, 5})}));

    // (Z/2)^4 : A5 in its affine action on the 16 even-weight vectors of
    // GF(2)^5, with A5 permuting the five coordinates.
    {
        std::vector<int> vecs;
        std::vector<int> pos(32, -1);
        for (int v = 0; v < 32; ++v)
            if (__builtin_popcount(static_cast<unsigned>(v)) % 2 == 0) {
                pos[v] = static_cast<int>(vecs.size());
                vecs.push_back(v);
            }
        auto translation = [&](int t) {
            Perm p = Perm::identity(16);
            for (int i = 0; i < 16; ++i) p.img[i] = static_cast<uint8_t>(pos[vecs[i] ^ t]);
            return p;
        };
        auto coord_perm = [&](const std::vector<int>& sigma) {
            Perm p = Perm::identity(16);
            for (int i = 0; i < 16; ++i) {
                int v = vecs[i], w = 0;
                for (int b = 0; b < 5; ++b)
                    if (v & (1 << b)) w |= 1 << sigma[b];
                p.img[i] = static_cast<uint8_t>(pos[w]);
            }
            return p;
        };
        std::vector<Perm> gens{translation(0b00011), translation(0b00110), translation(0b01100),
                               translation(0b11000), coord_perm({1, 2, 0, 3, 4}),
                               coord_perm({1, 2, 3, 4, 0})};
        out.emplace_back("(Z/2)^4:A5", GroupHandle::closure(std::move(gens)));
    }
    return out;
}

const std::vector<std::pair<std::string, Fingerprint>>& reference_fingerprints() {
    static const std::vector<std::pair<std::string, Fingerprint>> table = [] {
        std::vector<std::pair<std::string, Fingerprint>> t;
        for (const auto& [name, grp] : reference_groups()) t.emplace_back(name, fingerprint_of(grp));
        return t;
    }();
    return table;
}

} // namespace

std::string identify_group(const GroupHandle& g) {
    if (g.order() == 1) return "trivial";

    const Fingerprint fp = fingerprint_of(g);
    for (const auto& [name, ref] : reference_fingerprints())
        if (fp == ref) return name;

    // The two large groups are pinned by order and simplicity data rather
    // than by a reference construction.
    if (fp.order == 25920 && fp.center_order == 1 && is_simple(g)) return "PSU4(F2)";
    if (fp.order == 51840 && fp.center_order == 1 && !fp.derived_orders.empty() &&
        fp.derived_orders.front() == 25920) {
        GroupHandle d = derived_subgroup(g);
        if (is_simple(d)) return "W(E6)";
    }
    return "other(" + std::to_string(g.order()) + ")";
}

} // namespace cubic27::permgrp
