#include "arthurlab/kottwitz.hpp"

#include <stdexcept>
#include <utility>

namespace arthurlab::kottwitz {

SignCharacter alpha_real(int p, int q) {
    if (p < 0 || q < 0 || (p + q) % 2 == 0)
        throw std::invalid_argument("alpha_real requires p, q >= 0 with p + q odd");
    if (p < q) std::swap(p, q);
    int d = (p - q) % 8;
    return SignCharacter(d == 1 || d == 7 ? 1 : -1);
}

SignCharacter alpha_padic(bool is_split) { return SignCharacter(is_split ? 1 : -1); }

bool product_formula(const std::vector<SignCharacter>& signs) {
    SignCharacter prod(1);
    for (SignCharacter s : signs) prod = prod * s;
    return prod.value == 1;
}

int q_invariant_real(int p, int q) {
    // dim SO(p,q) - dim(SO(p) x SO(q)) = p*q, always even when p + q is odd.
    return p * q / 2;
}

SignCharacter kottwitz_sign(const LocalFormDescriptor& form) {
    switch (form.place_kind) {
        case PlaceKind::Complex:
            return SignCharacter(1);
        case PlaceKind::Padic:
            // The non-quasi-split form has Witt index n - 1, a derived-rank
            // defect of one, hence sign -1.
            return SignCharacter(form.is_split ? 1 : -1);
        case PlaceKind::Real: {
            int p = form.p, q = form.q;
            if (p < 0 || q < 0 || (p + q) % 2 == 0)
                throw std::invalid_argument("kottwitz_sign: invalid real form");
            int n = (p + q - 1) / 2;
            int q_star = q_invariant_real(n + 1, n);
            int q_g = q_invariant_real(p, q);
            return SignCharacter((q_star - q_g) % 2 == 0 ? 1 : -1);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace arthurlab::kottwitz
