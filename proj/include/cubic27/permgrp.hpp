#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubic27/errors.hpp"

namespace cubic27::permgrp {

struct Overflow : Error {
    explicit Overflow(uint64_t cap) : Error("group closure exceeds cap " + std::to_string(cap)) {}
};
struct NotMember : Error {
    NotMember() : Error("element is not a member of the group") {}
};
struct NotSubgroup : Error {
    NotSubgroup() : Error("given set is not a subgroup of the ambient group") {}
};
struct DegreeMismatch : Error {
    DegreeMismatch() : Error("permutations have different degrees") {}
};

// Permutation of {0..n-1}, n <= 64.
struct Perm {
    std::vector<uint8_t> img;

    static Perm identity(int n);
    int degree() const { return static_cast<int>(img.size()); }
    uint8_t operator()(int i) const { return img[i]; }
    bool is_identity() const;
    // (a.after(b))(x) = a(b(x))
    Perm after(const Perm& b) const;
    Perm inverse() const;
    int order() const;
    // b^-1 * a * b
    Perm conjugated_by(const Perm& b) const;
    bool commutes_with(const Perm& b) const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

struct PermHash {
    size_t operator()(const Perm& p) const {
        size_t h = 1469598103934665603ull;
        for (uint8_t x : p.img) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// A finite permutation group with its full element set materialized
// (supported up to 10^6 elements).  Cheap to copy.
class GroupHandle {
public:
    static constexpr uint64_t kDefaultCap = 1'000'000;

    // BFS closure of the generators; throws Overflow past the cap.
    static GroupHandle closure(std::vector<Perm> gens, uint64_t cap = kDefaultCap);
    // Wraps an explicitly closed element set (verified when verify=true).
    static GroupHandle from_elements(std::vector<Perm> elems, bool verify = false);

    uint64_t order() const;
    int degree() const;
    const std::vector<Perm>& elements() const;
    const std::vector<Perm>& generators() const;
    bool contains(const Perm& p) const;
    int index_of(const Perm& p) const; // -1 if absent

    struct Data;

private:
    std::shared_ptr<const Data> d_;
};

struct ConjClass {
    Perm rep;      // smallest member
    uint64_t size;
};

// Full partition into conjugacy classes, ordered by (element order, class
// size, smallest member).
std::vector<ConjClass> conjugacy_classes(const GroupHandle& g);

GroupHandle centralizer(const GroupHandle& g, const Perm& x); // throws NotMember
GroupHandle derived_subgroup(const GroupHandle& g);
GroupHandle normal_closure(const GroupHandle& g, std::vector<Perm> seed);
GroupHandle center(const GroupHandle& g);
bool is_simple(const GroupHandle& g);

// True when all listed subgroups are pairwise conjugate inside g, by explicit
// search for conjugating elements.
bool all_conjugate(const GroupHandle& g, const std::vector<GroupHandle>& subgroups);

// Structure label from a fingerprint (order, center order, derived series,
// class-size and element-order statistics) matched against reference
// constructions; "other(n)" when nothing matches.
std::string identify_group(const GroupHandle& g);

} // namespace cubic27::permgrp
