#include "cubic27/gf2k.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>

namespace cubic27::gf2k {

namespace {

int poly_degree(uint32_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

// Carry-less product of two GF(2)[x] polynomials.
uint32_t clmul(uint32_t a, uint32_t b) {
    uint32_t r = 0;
    while (b) {
        if (b & 1u) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

uint32_t poly_mod(uint32_t a, uint32_t m) {
    const int dm = poly_degree(m);
    int da = poly_degree(a);
    while (da >= dm) {
        a ^= m << (da - dm);
        da = poly_degree(a);
    }
    return a;
}

bool is_irreducible(uint32_t p) {
    const int d = poly_degree(p);
    if (d < 1) return false;
    if (d == 1) return true;
    if ((p & 1u) == 0) return false; // divisible by x
    for (int e = 1; 2 * e <= d; ++e) {
        for (uint32_t q = 1u << e; q < (2u << e); ++q) {
            if (poly_mod(p, q) == 0 && q != p) return false;
        }
    }
    return true;
}

uint32_t smallest_irreducible(int k) {
    for (uint32_t p = 1u << k; p < (2u << k); ++p) {
        if (is_irreducible(p)) return p;
    }
    throw BadFieldSpec("no irreducible polynomial found");
}

uint32_t reduce_mul(uint32_t a, uint32_t b, uint32_t mod) {
    return poly_mod(clmul(a, b), mod);
}

int multiplicative_order(uint32_t a, uint32_t mod, int group_order) {
    uint32_t x = a;
    for (int n = 1; n <= group_order; ++n) {
        if (x == 1u) return n;
        x = reduce_mul(x, a, mod);
    }
    return 0;
}

} // namespace

Field::Field(int k) : k_(k) {
    if (k < 1 || k > kMaxDegree) throw BadFieldSpec("degree out of range [1,12]");
    mod_ = smallest_irreducible(k);
    if (!is_irreducible(mod_)) throw BadFieldSpec("modulus not irreducible");

    const int group = (1 << k_) - 1;
    gen_ = 1;
    for (uint32_t c = 1; c < size(); ++c) {
        if (multiplicative_order(c, mod_, group) == group) {
            gen_ = c;
            break;
        }
    }
    pow_.resize(group);
    log_.assign(size(), -1);
    uint32_t x = 1;
    for (int j = 0; j < group; ++j) {
        pow_[j] = x;
        log_[x] = j;
        x = reduce_mul(x, gen_, mod_);
    }
    if (k_ <= 6) {
        mul_table_.resize(size() * size());
        for (uint32_t a = 0; a < size(); ++a)
            for (uint32_t b = 0; b < size(); ++b)
                mul_table_[(a << k_) | b] = reduce_mul(a, b, mod_);
    }
}

uint32_t Field::mul_bits(uint32_t a, uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[(a << k_) | b];
    return reduce_mul(a, b, mod_);
}

const Field& Field::get(int k) {
    static std::array<std::unique_ptr<Field>, kMaxDegree + 1> cache;
    static std::mutex mu;
    if (k < 1 || k > kMaxDegree) throw BadFieldSpec("degree out of range [1,12]");
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[k]) cache[k].reset(new Field(k));
    return *cache[k];
}

const Field& Field::parse_spec(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.rfind("GF(2^", 0) != 0 || s.back() != ')')
        throw BadFieldSpec("expected \"GF(2^k)\": " + text);
    const std::string num = s.substr(5, s.size() - 6);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw BadFieldSpec("bad exponent in field spec: " + text);
    const long k = std::stol(num);
    if (k < 1 || k > kMaxDegree) throw BadFieldSpec("degree out of range [1,12]: " + text);
    return get(static_cast<int>(k));
}

std::string Field::spec_string() const {
    return "GF(2^" + std::to_string(k_) + ")";
}

FieldElem Field::elem(uint32_t bits) const {
    if (bits >= size()) throw BadLiteral("element bits out of range");
    return {bits, this};
}

int Field::log(const FieldElem& a) const {
    if (a.field != this) throw MismatchedSpecs();
    if (a.bits == 0) throw ZeroInverse();
    return log_[a.bits];
}

FieldElem Field::gen_pow(int64_t j) const {
    const int group = (1 << k_) - 1;
    int64_t r = j % group;
    if (r < 0) r += group;
    return {pow_[static_cast<size_t>(r)], this};
}

std::string Field::literal(const FieldElem& a) const {
    if (a.field != this) throw MismatchedSpecs();
    if (a.bits == 0) return "0";
    if (a.bits == 1) return "1";
    return "g^" + std::to_string(log_[a.bits]);
}

FieldElem Field::parse_literal(const std::string& text) const {
    if (text == "0") return zero();
    if (text == "1") return one();
    if (text == "g") return generator();
    if (text.rfind("g^", 0) == 0) {
        const std::string num = text.substr(2);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw BadLiteral("bad exponent in literal: " + text);
        return gen_pow(std::stol(num));
    }
    throw BadLiteral("bad element literal: " + text);
}

FieldElem add(const FieldElem& a, const FieldElem& b) {
    if (a.field != b.field || a.field == nullptr) throw MismatchedSpecs();
    return {a.bits ^ b.bits, a.field};
}

FieldElem mul(const FieldElem& a, const FieldElem& b) {
    if (a.field != b.field || a.field == nullptr) throw MismatchedSpecs();
    return {a.field->mul_bits(a.bits, b.bits), a.field};
}

FieldElem FieldElem::operator+(const FieldElem& o) const { return add(*this, o); }
FieldElem FieldElem::operator*(const FieldElem& o) const { return mul(*this, o); }

FieldElem inv(const FieldElem& a) {
    if (a.field == nullptr) throw MismatchedSpecs();
    if (a.bits == 0) throw ZeroInverse();
    const int group = (1 << a.field->degree()) - 1;
    return a.field->gen_pow(group - a.field->log(a));
}

FieldElem pow(const FieldElem& a, int64_t e) {
    if (a.field == nullptr) throw MismatchedSpecs();
    if (a.bits == 0) {
        if (e <= 0) throw ZeroInverse();
        return a;
    }
    return a.field->gen_pow(static_cast<int64_t>(a.field->log(a)) * e);
}

FieldElem frobenius(const FieldElem& a, int j) {
    if (a.field == nullptr) throw MismatchedSpecs();
    int r = j % a.field->degree();
    if (r < 0) r += a.field->degree();
    FieldElem x = a;
    for (int i = 0; i < r; ++i) x = x * x;
    return x;
}

std::vector<FieldElem> fifth_roots(const Field& f) {
    std::vector<FieldElem> out;
    for (uint32_t b = 2; b < f.size(); ++b) {
        FieldElem x = f.elem(b);
        if (pow(x, 5).is_one()) out.push_back(x);
    }
    return out;
}

namespace {

// Smallest-bitmask root of `poly` (a GF(2)[x] bitmask) in `f`, or 0-sized
// result encoded by found=false.
bool find_root(const Field& f, uint32_t poly, uint32_t* root) {
    for (uint32_t b = 0; b < f.size(); ++b) {
        FieldElem acc = f.zero();
        FieldElem x = f.elem(b);
        FieldElem xp = f.one();
        for (uint32_t p = poly; p; p >>= 1) {
            if (p & 1u) acc = acc + xp;
            xp = xp * x;
        }
        if (acc.is_zero()) {
            *root = b;
            return true;
        }
    }
    return false;
}

FieldElem embed_via_root(const Field& super, uint32_t root_bits, uint32_t a_bits) {
    FieldElem acc = super.zero();
    FieldElem r = super.elem(root_bits);
    FieldElem rp = super.one();
    for (uint32_t p = a_bits; p; p >>= 1) {
        if (p & 1u) acc = acc + rp;
        rp = rp * r;
    }
    return acc;
}

} // namespace

const std::vector<uint32_t>& embedding_table(const Field& sub, const Field& super) {
    if (super.degree() % sub.degree() != 0) throw NonDividingDegree();
    static std::map<std::pair<int, int>, std::vector<uint32_t>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(sub.degree(), super.degree());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    uint32_t root = 0;
    const bool ok = find_root(super, sub.modulus(), &root);
    assert(ok);
    (void)ok;
    std::vector<uint32_t> table(sub.size());
    for (uint32_t b = 0; b < sub.size(); ++b)
        table[b] = embed_via_root(super, root, b).bits;
    return cache.emplace(key, std::move(table)).first->second;
}

FieldElem embed(const Field& sub, const Field& super, const FieldElem& a) {
    if (a.field != &sub) throw MismatchedSpecs();
    return {embedding_table(sub, super)[a.bits], &super};
}

bool in_subfield_image(const Field& sub, const Field& super, const FieldElem& a) {
    if (a.field != &super) throw MismatchedSpecs();
    if (super.degree() % sub.degree() != 0) throw NonDividingDegree();
    // The image of GF(2^a) in GF(2^b) is the fixed set of x -> x^(2^a).
    return frobenius(a, sub.degree()) == a;
}

FieldElem unembed(const Field& sub, const Field& super, const FieldElem& a) {
    if (a.field != &super) throw MismatchedSpecs();
    const auto& table = embedding_table(sub, super);
    for (uint32_t b = 0; b < table.size(); ++b)
        if (table[b] == a.bits) return sub.elem(b);
    throw BadLiteral("element is not in the subfield image");
}

std::pair<FieldElem, FieldElem> quadratic_pair(const Field& f) {
    const std::vector<FieldElem> roots = fifth_roots(f);
    if (roots.empty()) throw NoFifthRoot();
    const FieldElem xi = roots.front(); // smallest bitmask
    const FieldElem first = pow(xi, 1) + pow(xi, 4);
    const FieldElem second = pow(xi, 2) + pow(xi, 3);
    assert((first + second).is_one());
    assert((first * second).is_one());
    return {first, second};
}

} // namespace cubic27::gf2k
