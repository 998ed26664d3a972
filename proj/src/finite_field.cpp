#include "hecke/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "hecke/errors.hpp"

namespace hecke {

bool is_supported_field_size(int q) {
    return std::find(kSupportedFieldSizes.begin(), kSupportedFieldSizes.end(), q) != kSupportedFieldSizes.end();
}

const FiniteField& FiniteField::get(int q) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<FiniteField>> fields;
    if (!is_supported_field_size(q)) throw InvalidInput("unsupported field size q=" + std::to_string(q));
    std::lock_guard lock(mutex);
    auto& slot = fields[q];
    if (!slot) slot.reset(new FiniteField(q));
    return *slot;
}

FiniteField::FiniteField(int q) : q_(q) {
    switch (q) {
        case 4: p_ = 2, degree_ = 2, modulus_ = {1, 1, 1}; break;
        case 8: p_ = 2, degree_ = 3, modulus_ = {1, 1, 0, 1}; break;
        case 9: p_ = 3, degree_ = 2, modulus_ = {1, 0, 1}; break;
        default: p_ = q, degree_ = 1; break;
    }
    const auto qs = static_cast<std::size_t>(q);
    add_.resize(qs * qs);
    mul_.resize(qs * qs);
    neg_.resize(qs);
    inv_.assign(qs, 0);

    auto digits = [&](int a) {
        std::vector<int> d(static_cast<std::size_t>(degree_));
        for (auto& x : d) x = a % p_, a /= p_;
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        int a = 0;
        for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
        return a;
    };
    // Product of residue polynomials, reduced modulo the (monic) modulus.
    auto poly_mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
        if (degree_ > 1)
            for (std::size_t k = c.size(); k-- > static_cast<std::size_t>(degree_);) {
                const int lead = c[k];
                if (!lead) continue;
                for (std::size_t i = 0; i <= static_cast<std::size_t>(degree_); ++i) {
                    const std::size_t at = k - static_cast<std::size_t>(degree_) + i;
                    c[at] = ((c[at] - lead * modulus_[i]) % p_ + p_) % p_;
                }
            }
        c.resize(static_cast<std::size_t>(degree_));
        return c;
    };

    for (int a = 0; a < q; ++a) {
        const auto da = digits(a);
        for (int b = 0; b < q; ++b) {
            const auto db = digits(b);
            std::vector<int> s(da.size());
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = (da[i] + db[i]) % p_;
            add_[static_cast<std::size_t>(a * q + b)] = static_cast<Element>(encode(s));
            mul_[static_cast<std::size_t>(a * q + b)] = static_cast<Element>(encode(poly_mul(da, db)));
        }
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (add(static_cast<Element>(a), static_cast<Element>(b)) == 0) neg_[static_cast<std::size_t>(a)] = static_cast<Element>(b);
            if (mul(static_cast<Element>(a), static_cast<Element>(b)) == 1) inv_[static_cast<std::size_t>(a)] = static_cast<Element>(b);
        }
    verify_axioms();
}

void FiniteField::verify_axioms() const {
    auto fail = [&](const char* what) {
        throw ConsistencyError("F_" + std::to_string(q_) + " tables violate " + what);
    };
    for (int a = 0; a < q_; ++a) {
        const auto ea = static_cast<Element>(a);
        if (add(ea, 0) != ea || mul(ea, 1) != ea) fail("identities");
        if (add(ea, neg(ea)) != 0) fail("additive inverses");
        if (a != 0 && mul(ea, inv(ea)) != 1) fail("multiplicative inverses");
        for (int b = 0; b < q_; ++b) {
            const auto eb = static_cast<Element>(b);
            if (add(ea, eb) != add(eb, ea) || mul(ea, eb) != mul(eb, ea)) fail("commutativity");
            for (int c = 0; c < q_; ++c) {
                const auto ec = static_cast<Element>(c);
                if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) fail("additive associativity");
                if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) fail("multiplicative associativity");
                if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) fail("distributivity");
            }
        }
    }
}

}  // namespace hecke
