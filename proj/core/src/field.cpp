#include "cg2/field.hpp"

#include <cstdio>

#include "cg2/errors.hpp"

namespace cg2 {

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint64_t clmod(std::uint64_t a, std::uint64_t mod) {
    if (mod == 0) throw ConfigError("clmod: zero modulus");
    const int dm = 63 - __builtin_clzll(mod);
    while (a >> dm) {
        const int da = 63 - __builtin_clzll(a);
        a ^= mod << (da - dm);
    }
    return a;
}

namespace {

std::uint64_t clpow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1;
    base = clmod(base, mod);
    while (e) {
        if (e & 1) r = clmod(clmul(r, base), mod);
        base = clmod(clmul(base, base), mod);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool is_primitive_modulus(std::uint32_t mod, int m) {
    if (m < 1 || mod >> m != 1u) return false;  // degree must be exactly m
    if ((mod & 1u) == 0) return false;          // x | mod means x is a zero divisor
    const std::uint64_t n = (std::uint64_t(1) << m) - 1;
    if (clpow_mod(2, n, mod) != 1) return false;
    for (std::uint64_t p : prime_factors(n)) {
        if (clpow_mod(2, n / p, mod) == 1) return false;
    }
    return true;
}

std::uint32_t nth_least_primitive(int m, int k) {
    if (m < 2 || m > 20) throw ConfigError("nth_least_primitive: m out of range");
    int seen = 0;
    for (std::uint64_t c = (std::uint64_t(1) << m) + 1;; c += 2) {
        if (c >> (m + 1)) throw ConfigError("nth_least_primitive: exhausted");  // cannot happen for m <= 20
        if (is_primitive_modulus(static_cast<std::uint32_t>(c), m)) {
            if (seen == k) return static_cast<std::uint32_t>(c);
            ++seen;
        }
    }
}

Field::Field(int m, std::uint32_t modulus) {
    if (m < 3 || m > 20) throw ConfigError("Field: m must be in 3..20");
    if (modulus == 0) modulus = nth_least_primitive(m);
    if (!is_primitive_modulus(modulus, m)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "Field: modulus 0x%x is not primitive of degree %d", modulus, m);
        throw ConfigError(buf);
    }
    spec_ = {m, modulus, std::uint32_t(1) << m};
    const std::uint32_t n = spec_.q - 1;

    log_.assign(spec_.q, 0);
    antilog_.assign(2 * n, 0);
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        antilog_[i] = v;
        antilog_[i + n] = v;
        log_[v] = i;
        v = static_cast<std::uint32_t>(clmod(std::uint64_t(v) << 1, modulus));
    }
    if (v != 1) throw ValidationError("Field: generator failed to close the cycle");

    // trace mask from the definitional sum of conjugates of each basis vector
    trmask_ = 0;
    for (int j = 0; j < m; ++j) {
        std::uint32_t t = std::uint32_t(1) << j;
        std::uint32_t acc = t;
        for (int s = 1; s < m; ++s) {
            t = static_cast<std::uint32_t>(clmod(clmul(t, t), modulus));
            acc ^= t;
        }
        if (acc > 1) throw ValidationError("Field: trace of basis vector not in F2");
        if (acc) trmask_ |= std::uint32_t(1) << j;
    }
    if (trmask_ == 0) throw ValidationError("Field: trace identically zero");

    // z^2 + z = k root table: the map u -> u^2+u is 2-to-1 onto the Tr=0 half
    as_root_.assign(spec_.q, 0);
    as_has_.assign(spec_.q, 0);
    for (std::uint32_t u = 0; u < spec_.q; ++u) {
        const std::uint32_t k = raw_sqr(u) ^ u;
        if (!as_has_[k]) {
            as_has_[k] = 1;
            as_root_[k] = u;
        }
    }

    trbit_.resize(spec_.q);
    for (std::uint32_t v = 0; v < spec_.q; ++v)
        trbit_[v] = static_cast<std::uint8_t>(__builtin_popcount(v & trmask_) & 1);
}

void Field::check(FieldElem a) const {
    if (a.modulus != spec_.modulus)
        throw ConfigError("field element belongs to a different field");
    if (a.bits >= spec_.q) throw ConfigError("field element out of range");
}

FieldElem Field::elem(std::uint32_t bits) const {
    if (bits >= spec_.q) throw ConfigError("Field::elem: value out of range");
    return FieldElem{bits, spec_.modulus};
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    return FieldElem{a.bits ^ b.bits, spec_.modulus};
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    return FieldElem{raw_mul(a.bits, b.bits), spec_.modulus};
}

FieldElem Field::inv(FieldElem a) const {
    check(a);
    if (a.bits == 0) throw ConfigError("division by zero in field");
    return FieldElem{raw_inv(a.bits), spec_.modulus};
}

FieldElem Field::alpha_pow(std::int64_t i) const {
    const std::int64_t n = spec_.q - 1;
    std::int64_t r = i % n;
    if (r < 0) r += n;
    return FieldElem{antilog_[static_cast<std::uint32_t>(r)], spec_.modulus};
}

int Field::trace(FieldElem a) const {
    check(a);
    return raw_trace(a.bits);
}

int Field::trace_by_squaring(FieldElem a) const {
    check(a);
    std::uint32_t t = a.bits;
    std::uint32_t acc = t;
    for (int s = 1; s < spec_.m; ++s) {
        t = raw_sqr(t);
        acc ^= t;
    }
    if (acc > 1) throw ValidationError("trace_by_squaring: result not in F2");
    return static_cast<int>(acc);
}

std::uint32_t Field::log(FieldElem a) const {
    check(a);
    if (a.bits == 0) throw ConfigError("log of zero");
    return log_[a.bits];
}

std::vector<FieldElem> Field::solve_artin_schreier(FieldElem p, FieldElem r) const {
    check(p);
    check(r);
    std::vector<FieldElem> roots;
    if (p.bits == 0) {
        // z^2 = r has the unique root r^{2^{m-1}}
        std::uint32_t z = r.bits;
        for (int s = 1; s < spec_.m; ++s) z = raw_sqr(z);
        roots.push_back(FieldElem{z, spec_.modulus});
        return roots;
    }
    // substitute z = p*u: u^2 + u = r / p^2
    const std::uint32_t p2 = raw_sqr(p.bits);
    const std::uint32_t k = r.bits ? raw_mul(r.bits, raw_inv(p2)) : 0;
    if (!as_has_[k]) return roots;  // Tr(k) = 1
    const std::uint32_t u = as_root_[k];
    const std::uint32_t z1 = raw_mul(p.bits, u);
    roots.push_back(FieldElem{z1, spec_.modulus});
    roots.push_back(FieldElem{z1 ^ p.bits, spec_.modulus});
    return roots;
}

std::string Field::modulus_hex() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", spec_.modulus);
    return buf;
}

FieldElem fe_add(const Field& F, FieldElem a, FieldElem b) { return F.add(a, b); }
FieldElem fe_mul(const Field& F, FieldElem a, FieldElem b) { return F.mul(a, b); }
FieldElem fe_inv(const Field& F, FieldElem a) { return F.inv(a); }
FieldElem alpha_pow(std::int64_t i, const Field& F) { return F.alpha_pow(i); }
int fe_trace(const Field& F, FieldElem a) { return F.trace(a); }

}  // namespace cg2
