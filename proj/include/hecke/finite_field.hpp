#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace hecke {

/// Field sizes with precomputed arithmetic. Non-prime sizes are built as
/// F_p[x]/(m(x)) with m = x^2+x+1 (q=4), x^3+x+1 (q=8), x^2+1 over F_3 (q=9).
inline constexpr std::array<int, 9> kSupportedFieldSizes{2, 3, 4, 5, 7, 8, 9, 11, 13};

bool is_supported_field_size(int q);

/// F_q with elements encoded as 0..q-1 (base-p digits of the residue polynomial;
/// 0 and 1 are the additive and multiplicative identities). Arithmetic is by
/// table lookup; the tables are checked against the field axioms on construction.
class FiniteField {
   public:
    using Element = std::uint8_t;

    /// Shared instance for a supported q; InvalidInput otherwise.
    static const FiniteField& get(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    /// Coefficients of the defining modulus (ascending), empty for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }

    Element add(Element a, Element b) const { return add_[a * q_ + b]; }
    Element sub(Element a, Element b) const { return add_[a * q_ + neg_[b]]; }
    Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
    Element neg(Element a) const { return neg_[a]; }
    /// Requires a != 0.
    Element inv(Element a) const { return inv_[a]; }

   private:
    explicit FiniteField(int q);
    void verify_axioms() const;

    int q_;
    int p_;
    int degree_;
    std::vector<int> modulus_;
    std::vector<Element> add_, mul_, neg_, inv_;
};

}  // namespace hecke
