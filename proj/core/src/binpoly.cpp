#include "cg2/binpoly.hpp"

#include <algorithm>
#include <set>

#include "cg2/errors.hpp"

namespace cg2 {

BinPoly BinPoly::from_bits(std::vector<std::uint64_t> words) {
    BinPoly p;
    p.words_ = std::move(words);
    p.normalize();
    return p;
}

BinPoly BinPoly::monomial(std::uint32_t d) {
    BinPoly p;
    p.words_.assign(d / 64 + 1, 0);
    p.words_[d / 64] = std::uint64_t(1) << (d % 64);
    return p;
}

BinPoly BinPoly::xn_plus_1(std::uint32_t n) {
    BinPoly p = monomial(n);
    p.words_[0] ^= 1;
    return p;
}

void BinPoly::normalize() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::uint32_t BinPoly::degree() const {
    if (is_zero()) throw ValidationError("degree of the zero polynomial");
    const std::uint64_t top = words_.back();
    return static_cast<std::uint32_t>((words_.size() - 1) * 64 + (63 - __builtin_clzll(top)));
}

int BinPoly::coeff(std::uint32_t i) const {
    const std::size_t w = i / 64;
    if (w >= words_.size()) return 0;
    return static_cast<int>((words_[w] >> (i % 64)) & 1);
}

void BinPoly::set_coeff(std::uint32_t i, int bit) {
    const std::size_t w = i / 64;
    if (w >= words_.size()) {
        if (!bit) return;
        words_.resize(w + 1, 0);
    }
    if (bit)
        words_[w] |= std::uint64_t(1) << (i % 64);
    else
        words_[w] &= ~(std::uint64_t(1) << (i % 64));
    normalize();
}

std::uint32_t BinPoly::weight() const {
    std::uint32_t w = 0;
    for (std::uint64_t v : words_) w += static_cast<std::uint32_t>(__builtin_popcountll(v));
    return w;
}

FieldElem BinPoly::eval(const Field& F, FieldElem at) const {
    if (is_zero()) return F.zero();
    FieldElem acc = F.zero();
    for (std::uint32_t d = degree() + 1; d-- > 0;) {
        acc = F.mul(acc, at);
        if (coeff(d)) acc = F.add(acc, F.one());
    }
    return acc;
}

BinPoly BinPoly::reciprocal() const {
    if (is_zero()) throw ValidationError("reciprocal of the zero polynomial");
    const std::uint32_t d = degree();
    BinPoly r;
    for (std::uint32_t i = 0; i <= d; ++i)
        if (coeff(i)) r.set_coeff(d - i, 1);
    return r;
}

std::string BinPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::uint32_t d = degree() + 1; d-- > 0;) {
        if (!coeff(d)) continue;
        if (!s.empty()) s += " + ";
        if (d == 0)
            s += "1";
        else if (d == 1)
            s += "x";
        else
            s += "x^" + std::to_string(d);
    }
    return s;
}

BinPoly poly_add(const BinPoly& p, const BinPoly& q) {
    std::vector<std::uint64_t> w(std::max(p.words().size(), q.words().size()), 0);
    for (std::size_t i = 0; i < p.words().size(); ++i) w[i] ^= p.words()[i];
    for (std::size_t i = 0; i < q.words().size(); ++i) w[i] ^= q.words()[i];
    return BinPoly::from_bits(std::move(w));
}

BinPoly poly_mul(const BinPoly& p, const BinPoly& q) {
    if (p.is_zero() || q.is_zero()) return BinPoly::zero();
    std::vector<std::uint64_t> out(p.words().size() + q.words().size(), 0);
    const std::uint32_t dq = q.degree();
    for (std::uint32_t j = 0; j <= dq; ++j) {
        if (!q.coeff(j)) continue;
        // out ^= p << j
        const std::uint32_t ws = j / 64, bs = j % 64;
        for (std::size_t i = 0; i < p.words().size(); ++i) {
            out[i + ws] ^= p.words()[i] << bs;
            if (bs) out[i + ws + 1] ^= p.words()[i] >> (64 - bs);
        }
    }
    return BinPoly::from_bits(std::move(out));
}

std::pair<BinPoly, BinPoly> poly_divmod(const BinPoly& p, const BinPoly& q) {
    if (q.is_zero()) throw ValidationError("poly_divmod: division by zero polynomial");
    BinPoly rem = p, quot;
    const std::uint32_t dq = q.degree();
    while (!rem.is_zero() && rem.degree() >= dq) {
        const std::uint32_t sh = rem.degree() - dq;
        quot.set_coeff(sh, 1);
        rem = poly_add(rem, poly_mul(q, BinPoly::monomial(sh)));
    }
    return {quot, rem};
}

CosetSet cyclotomic_coset(std::int64_t i, int m) {
    const std::int64_t n = (std::int64_t(1) << m) - 1;
    std::int64_t r = i % n;
    if (r < 0) r += n;
    std::set<std::uint32_t> seen;
    std::uint32_t cur = static_cast<std::uint32_t>(r);
    while (!seen.count(cur)) {
        seen.insert(cur);
        cur = static_cast<std::uint32_t>((std::uint64_t(cur) * 2) % n);
    }
    CosetSet cs;
    cs.members.assign(seen.begin(), seen.end());
    cs.representative = cs.members.front();
    return cs;
}

BinPoly minimal_poly(std::int64_t i, const Field& F) {
    const CosetSet cs = cyclotomic_coset(i, F.m());
    // expand prod (x + alpha^j) with coefficients in GF(2^m), high degree first
    std::vector<FieldElem> coeffs{F.one()};
    for (std::uint32_t j : cs.members) {
        const FieldElem root = F.alpha_pow(j);
        std::vector<FieldElem> next(coeffs.size() + 1, F.zero());
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            next[d] = F.add(next[d], coeffs[d]);                  // * x
            next[d + 1] = F.add(next[d + 1], F.mul(coeffs[d], root));
        }
        coeffs = std::move(next);
    }
    BinPoly p;
    const std::uint32_t deg = static_cast<std::uint32_t>(coeffs.size() - 1);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        const std::uint32_t b = coeffs[d].bits;
        if (b > 1)
            throw ValidationError("minimal_poly: expanded coefficient not in F2 (field bug)");
        if (b) p.set_coeff(deg - static_cast<std::uint32_t>(d), 1);
    }
    return p;
}

const char* code_name(CodeId id) {
    switch (id) {
        case CodeId::Hamming: return "Hamming";
        case CodeId::B: return "B";
        case CodeId::M: return "M";
        case CodeId::C: return "C";
    }
    return "?";
}

std::vector<std::int64_t> code_zero_exponents(CodeId id) {
    switch (id) {
        case CodeId::Hamming: return {1};
        case CodeId::B: return {1, 3};
        case CodeId::M: return {1, -1};
        case CodeId::C: return {1, -1, 3};
    }
    return {};
}

BinPoly generator_poly(CodeId id, const Field& F) {
    if (F.m() <= 2) throw ConfigError("generator_poly: m must exceed 2");
    std::set<BinPoly> factors;
    for (std::int64_t i : code_zero_exponents(id)) factors.insert(minimal_poly(i, F));
    BinPoly g = BinPoly::one();
    for (const BinPoly& f : factors) g = poly_mul(g, f);
    return g;
}

}  // namespace cg2
