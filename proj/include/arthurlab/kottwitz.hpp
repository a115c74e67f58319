#pragma once

#include <vector>

namespace arthurlab::kottwitz {

// A character value in {+1, -1}; composition is multiplication.
struct SignCharacter {
    int value = 1;

    SignCharacter() = default;
    explicit SignCharacter(int v) : value(v >= 0 ? 1 : -1) {}

    friend SignCharacter operator*(SignCharacter a, SignCharacter b) {
        return SignCharacter(a.value * b.value);
    }
    friend bool operator==(SignCharacter a, SignCharacter b) { return a.value == b.value; }
};

enum class PlaceKind { Real, Padic, Complex };

struct LocalFormDescriptor {
    PlaceKind place_kind = PlaceKind::Padic;
    int p = 0;             // real places only, p + q = 2n + 1
    int q = 0;
    bool is_split = true;  // p-adic places only

    static LocalFormDescriptor real(int p, int q) {
        return LocalFormDescriptor{PlaceKind::Real, p, q, false};
    }
    static LocalFormDescriptor padic(bool split) {
        return LocalFormDescriptor{PlaceKind::Padic, 0, 0, split};
    }
    static LocalFormDescriptor complex_place() {
        return LocalFormDescriptor{PlaceKind::Complex, 0, 0, true};
    }
};

// alpha(SO(p,q)) = +1 iff p - q = 1 or 7 mod 8, on the representative with p > q.
SignCharacter alpha_real(int p, int q);

SignCharacter alpha_padic(bool is_split);

// True iff the product of local signs is trivial, i.e. the family arises
// from a global inner form.
bool product_formula(const std::vector<SignCharacter>& signs);

// Half the dimension of the symmetric space of SO(p,q).
int q_invariant_real(int p, int q);

SignCharacter kottwitz_sign(const LocalFormDescriptor& form);

}  // namespace arthurlab::kottwitz
