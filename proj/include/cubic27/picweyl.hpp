#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cubic27/permgrp.hpp"

namespace cubic27::picweyl {

struct NotInvolution : Error {
    NotInvolution() : Error("element does not have order 2") {}
};
struct NotPairingPreserving : Error {
    NotPairingPreserving() : Error("permutation does not preserve the intersection pairing") {}
};

// Divisor class in the rank-7 lattice with basis H, E1..E6 and intersection
// form diag(+1,-1,...,-1).
using Pic = std::array<int, 7>;

int64_t pairing(const Pic& a, const Pic& b);
Pic canonical_class(); // (-3,1,1,1,1,1,1)

// The 27 line classes in the fixed order E1..E6, L12,L13,...,L56, Q1..Q6.
const std::array<Pic, 27>& standard_classes();
const std::array<std::string, 27>& class_names();
int class_index(const Pic& c); // -1 when not a line class

// All 72 lattice vectors orthogonal to the canonical class with self-pairing
// -2, found by bounded enumeration.
const std::vector<Pic>& roots();

// The reflection group generated by the 6 simple-root reflections
// s(x) = x + (x.a) a, realized as permutations of the 27 classes; order 51840.
const permgrp::GroupHandle& weyl_group();

using LatMat = std::array<std::array<int64_t, 7>, 7>;

// The unique lattice map sending class_i -> class_{p(i)} and fixing the
// canonical class; validates pairing preservation and det = +-1.
LatMat perm_to_lattice(const permgrp::Perm& p);

enum class ClassLabel { Identity, A1, A1x2, A1x3, A1x4, A4, A4xA1, Other };

struct Classification {
    ClassLabel label = ClassLabel::Other;
    int elt_order = 0;
    std::string name() const;
};

// Conjugacy-class label from the element order together with the
// characteristic polynomial of the lattice action on the orthogonal
// complement of the canonical class.  Orders outside {1,2,5,10} report Other.
Classification classify(const permgrp::Perm& p);

struct CensusRow {
    std::string label;
    int elt_order;
    uint64_t size;
    uint64_t centralizer_order;
};

// Census of the conjugacy classes of element order 2, 5 and 10, with label
// constancy re-verified element by element.
std::vector<CensusRow> class_census();

struct InvolutionProfile {
    int fixed;
    int skew_pairs;     // 2-cycles whose two classes have pairing 0
    int meeting_pairs;  // 2-cycles whose two classes have pairing 1
};

InvolutionProfile fixed_line_profile(const permgrp::Perm& p);

} // namespace cubic27::picweyl
