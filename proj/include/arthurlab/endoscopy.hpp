#pragma once

#include <string>
#include <vector>

#include "arthurlab/parameters.hpp"

namespace arthurlab::endoscopy {

// e_{n1,n2}: the factor group SO_{2n1+1} x SO_{2n2+1} together with the
// diagonal sign element s_{n1,n2} (symplectically doubled).
struct EllipticTriple {
    int n1 = 0;
    int n2 = 0;

    // +1 on the first n1 coordinates, -1 on the next n2, repeated on the
    // dual coordinate block.
    std::vector<int> s_signs() const;

    friend bool operator==(const EllipticTriple& a, const EllipticTriple& b) {
        return a.n1 == b.n1 && a.n2 == b.n2;
    }
};

// strict = false: representatives of isomorphism classes, n1 >= n2;
// strict = true: representatives of strict isomorphism classes, all (n1, n2).
std::vector<EllipticTriple> elliptic_triples(int n, bool strict);

// +-1 eigenvalue data of a semisimple class in S_psi, one signature per
// component (aligned with the parameter's component order).
struct ComponentSignature {
    std::string label;
    int plus = 0;   // p_i
    int minus = 0;  // q_i
};

using SemisimpleSignature = std::vector<ComponentSignature>;

// Full normal-form data of a semisimple class in the ambient Sp(2n):
// eigenvalue blocks a_k of size m_k (a_k distinct, not 0 or +-1) plus the
// +-1 eigenspace ranks n1, n2.
struct SemisimpleNormalForm {
    struct EigBlock {
        std::string a;
        int m = 1;
    };
    std::vector<EigBlock> blocks;
    int n1 = 0;
    int n2 = 0;
};

struct EndoscopicDescriptor {
    std::vector<int> gl_sizes;  // m_1, ..., m_r
    int so1 = 0;                // SO_{2 so1 + 1}
    int so2 = 0;                // SO_{2 so2 + 1}
    std::string str() const;
};

// Centralizer of a normal-form class, as the dual descriptor
// GL_{m1} x ... x GL_{mr} x SO_{2n1+1} x SO_{2n2+1}.
EndoscopicDescriptor centralizer_of_s(const SemisimpleNormalForm& s, int ambient_n);

struct Correspondence {
    EllipticTriple triple;
    params::LocalParameter factor1;  // dimension 2 n1
    params::LocalParameter factor2;  // dimension 2 n2
};

// The constructive direction (psi, s) -> (e, psi^e) on +-1 sign data.
Correspondence correspond(const params::LocalParameter& psi, const SemisimpleSignature& s);

// Recombine eta . psi^e for the round-trip check.
params::LocalParameter recombine(const Correspondence& c);

struct ECRTerm {
    std::string pi_label;
    int coefficient;  // +-1
};

// Bookkeeping right-hand side e(G) * sum_pi <s_psi s, pi> pi of the
// character relation; char_table supplies <., pi> as F2 vectors on the
// component-group basis.
std::vector<ECRTerm> ecr_summand(
    const params::LocalParameter& psi, const SemisimpleSignature& s,
    const std::vector<std::pair<std::string, params::ComponentGroupElement>>& char_table,
    kottwitz::SignCharacter e_g);

// Image of a +-1 signature class in the component group.
params::ComponentGroupElement signature_image(const params::LocalParameter& psi,
                                              const SemisimpleSignature& s);

}  // namespace arthurlab::endoscopy
