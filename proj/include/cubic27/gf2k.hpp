#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cubic27/errors.hpp"

namespace cubic27::gf2k {

struct MismatchedSpecs : Error {
    MismatchedSpecs() : Error("elements belong to different field specs") {}
};
struct ZeroInverse : Error {
    ZeroInverse() : Error("inverse of zero") {}
};
struct NonDividingDegree : Error {
    NonDividingDegree() : Error("subfield degree does not divide extension degree") {}
};
struct NoFifthRoot : Error {
    NoFifthRoot() : Error("field contains no non-trivial fifth root of unity") {}
};
struct BadFieldSpec : Error {
    explicit BadFieldSpec(const std::string& m) : Error(m) {}
};
struct BadLiteral : Error {
    explicit BadLiteral(const std::string& m) : Error(m) {}
};

class Field;

// One element of GF(2^k), stored as a k-bit coefficient vector in the
// polynomial basis.  Elements compare and sort by bitmask.
struct FieldElem {
    uint32_t bits = 0;
    const Field* field = nullptr;

    bool is_zero() const { return bits == 0; }
    bool is_one() const { return bits == 1; }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.field == b.field && a.bits == b.bits;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
    friend bool operator<(const FieldElem& a, const FieldElem& b) { return a.bits < b.bits; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const { return *this + o; }
};

// GF(2^k) for 1 <= k <= 12, with the lexicographically smallest irreducible
// modulus of degree k.  Instances are canonical singletons: spec equality is
// pointer equality.
class Field {
public:
    static constexpr int kMaxDegree = 12;

    // Canonical field of degree k over GF(2).
    static const Field& get(int k);
    // Parses a spec string of the form "GF(2^k)".
    static const Field& parse_spec(const std::string& text);

    int degree() const { return k_; }
    uint32_t modulus() const { return mod_; }
    uint32_t size() const { return 1u << k_; }
    std::string spec_string() const;

    FieldElem zero() const { return {0u, this}; }
    FieldElem one() const { return {1u, this}; }
    FieldElem elem(uint32_t bits) const;

    // Smallest-bitmask primitive element (equal to 1 in GF(2)).
    FieldElem generator() const { return {gen_, this}; }
    // Discrete log base generator(); requires a != 0.
    int log(const FieldElem& a) const;
    FieldElem gen_pow(int64_t j) const;

    // Canonical element literal: "0", "1" or "g^j".
    std::string literal(const FieldElem& a) const;
    FieldElem parse_literal(const std::string& text) const;

    uint32_t mul_bits(uint32_t a, uint32_t b) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    explicit Field(int k);

    int k_;
    uint32_t mod_;
    uint32_t gen_;
    std::vector<uint32_t> pow_; // pow_[j] = generator^j, j < 2^k - 1
    std::vector<int> log_;      // log_[bits], defined for bits != 0
    std::vector<uint32_t> mul_table_; // direct product table for k <= 6
};

FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem mul(const FieldElem& a, const FieldElem& b);
FieldElem inv(const FieldElem& a);
// a^e with e reduced modulo the multiplicative order; pow(0, e) = 0 for e > 0.
FieldElem pow(const FieldElem& a, int64_t e);
// a^(2^j)
FieldElem frobenius(const FieldElem& a, int j);

// All x != 1 with x^5 = 1, sorted by bitmask; empty unless 4 | k.
std::vector<FieldElem> fifth_roots(const Field& f);

// Canonical embedding GF(2^a) -> GF(2^b) for a | b: the generator image is the
// smallest-bitmask root of the sub modulus in the extension.
FieldElem embed(const Field& sub, const Field& super, const FieldElem& a);
bool in_subfield_image(const Field& sub, const Field& super, const FieldElem& a);
// Inverse of embed on its image; throws BadLiteral if a is not in the image.
FieldElem unembed(const Field& sub, const Field& super, const FieldElem& a);
// Cached table of the canonical embedding: entry b is embed(sub.elem(b)).bits.
const std::vector<uint32_t>& embedding_table(const Field& sub, const Field& super);

// For a field containing a non-trivial fifth root of unity x (the
// smallest-bitmask one), returns (x + x^4, x^2 + x^3).  The two components
// are the roots of T^2 + T + 1 and lie in the image of the index-2 subfield.
std::pair<FieldElem, FieldElem> quadratic_pair(const Field& f);

} // namespace cubic27::gf2k
