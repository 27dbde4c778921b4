#include "cg2/multipoly.hpp"

#include <algorithm>

#include "cg2/errors.hpp"

namespace cg2 {

TriPoly::TriPoly(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

void TriPoly::normalize() {
    std::sort(terms_.begin(), terms_.end());
    // XOR-merge: pairs of equal terms cancel
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
        if ((j - i) % 2) out.push_back(terms_[i]);
        i = j;
    }
    terms_ = std::move(out);
}

TriPoly TriPoly::var(int which) {
    Term t{0, 0, 0};
    t[which] = 1;
    return TriPoly({t});
}

std::uint16_t TriPoly::degree_in(int which) const {
    std::uint16_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t[which]);
    return d;
}

TriPoly TriPoly::coeff_of(int which, std::uint16_t k) const {
    std::vector<Term> out;
    for (Term t : terms_) {
        if (t[which] != k) continue;
        t[which] = 0;
        out.push_back(t);
    }
    return TriPoly(std::move(out));
}

TriPoly TriPoly::derivative(int which) const {
    std::vector<Term> out;
    for (Term t : terms_) {
        if (t[which] % 2 == 0) continue;  // even exponent: 2k * x^{2k-1} = 0
        t[which] -= 1;
        out.push_back(t);
    }
    return TriPoly(std::move(out));
}

TriPoly TriPoly::frobenius() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term t : terms_) out.push_back({std::uint16_t(t[0] * 2), std::uint16_t(t[1] * 2), std::uint16_t(t[2] * 2)});
    return TriPoly(std::move(out));
}

FieldElem TriPoly::eval(const Field& F, FieldElem x, FieldElem y, FieldElem z) const {
    const FieldElem vars[3] = {x, y, z};
    FieldElem acc = F.zero();
    for (const Term& t : terms_) {
        FieldElem prod = F.one();
        for (int v = 0; v < 3; ++v) {
            if (t[v] == 0) continue;
            const FieldElem base = vars[v];
            if (base.bits == 0) {
                prod = F.zero();
                break;
            }
            // base^e via the log table
            const std::uint64_t e = (std::uint64_t(F.log(base)) * t[v]) % F.n();
            prod = F.mul(prod, F.alpha_pow(static_cast<std::int64_t>(e)));
        }
        acc = F.add(acc, prod);
    }
    return acc;
}

TriPoly TriPoly::permuted(const std::array<int, 3>& perm) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Term s{0, 0, 0};
        for (int v = 0; v < 3; ++v) s[perm[v]] = t[v];
        out.push_back(s);
    }
    return TriPoly(std::move(out));
}

std::string TriPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    const char* names = "xyz";
    for (const Term& t : terms_) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (int v = 0; v < 3; ++v) {
            if (t[v] == 0) continue;
            mono += names[v];
            if (t[v] > 1) mono += "^" + std::to_string(t[v]);
        }
        s += mono.empty() ? "1" : mono;
    }
    return s;
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
    std::vector<TriPoly::Term> all = a.terms();
    all.insert(all.end(), b.terms().begin(), b.terms().end());
    return TriPoly(std::move(all));
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    std::vector<TriPoly::Term> out;
    out.reserve(a.terms().size() * b.terms().size());
    for (const auto& s : a.terms())
        for (const auto& t : b.terms())
            out.push_back({std::uint16_t(s[0] + t[0]), std::uint16_t(s[1] + t[1]), std::uint16_t(s[2] + t[2])});
    return TriPoly(std::move(out));
}

}  // namespace cg2
