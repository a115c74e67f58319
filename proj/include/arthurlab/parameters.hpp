#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arthurlab/kottwitz.hpp"
#include "arthurlab/weil_real.hpp"

namespace arthurlab::params {

enum class SelfDualType { Symplectic, Orthogonal, None };

std::string to_string(SelfDualType t);
SelfDualType selfdual_from_string(const std::string& s);

// One irreducible constituent.  A non-self-dual component stands for the
// pair psi (+) psi^vee, stored once; its GL factor contributes nothing to
// the component group.
struct IrreducibleComponent {
    std::string label;
    int dim = 1;
    SelfDualType selfdual = SelfDualType::Symplectic;
    int su2_dim = 1;
    std::optional<weil::WeilRealRep> arch;
};

struct ComponentEntry {
    IrreducibleComponent comp;
    int mult = 1;  // ell_i
};

struct LocalParameter {
    std::vector<ComponentEntry> components;  // sorted by label after validate()

    int total_dim() const;  // counts dual pairs twice
    int rank() const { return total_dim() / 2; }
};

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Normalizes and checks the component data; throws ValidationError on
// duplicate labels, an orthogonal component of odd multiplicity, odd total
// dimension (or a mismatch with expected_rank), or an archimedean
// realization of the wrong dimension or self-duality type.
LocalParameter validate(std::vector<ComponentEntry> raw,
                        std::optional<int> expected_rank = std::nullopt);

enum class FactorKind { O, Sp, GL };

struct CentralizerFactor {
    FactorKind kind;
    int size;             // ell of O(ell) / Sp(ell) / GL(ell)
    std::string label;    // component it belongs to
};

struct CentralizerShape {
    std::vector<CentralizerFactor> factors;
    int component_group_order() const;
};

CentralizerShape centralizer(const LocalParameter& p);

// F2 vector indexed by the symplectic components in label order.
using ComponentGroupElement = std::vector<unsigned char>;

struct ComponentGroup {
    std::vector<std::string> basis_labels;  // symplectic components, sorted
    long order() const { return 1L << basis_labels.size(); }
};

ComponentGroup component_group(const LocalParameter& p);

enum class ParamClass { Discrete, Elliptic2, Exc1, Exc2, Other };

std::string to_string(ParamClass c);

ParamClass classify(const LocalParameter& p);

// Image of s_psi = psi(1,-1) in the component group: coefficient
// ell_i (su2_dim_i - 1) mod 2 on each symplectic component.
ComponentGroupElement s_psi_image(const LocalParameter& p);

// Image of -1 in Z(G^) : coefficient ell_i mod 2 on each symplectic component.
ComponentGroupElement center_image(const LocalParameter& p);

// All characters of the component group (as F2 vectors v, acting by
// (-1)^{<v,a>}) whose value on center_image equals chi.
std::vector<ComponentGroupElement> characters(const LocalParameter& p,
                                              kottwitz::SignCharacter chi);

int dot_f2(const ComponentGroupElement& a, const ComponentGroupElement& b);

// Abstract shape profiles (type, dim, mult) with total dimension at most
// max_total_dim, one representative per profile, labels generated
// canonically: the exhaustive scan domain of the acceptance checks.
std::vector<LocalParameter> enumerate_profiles(int max_total_dim);

}  // namespace arthurlab::params
