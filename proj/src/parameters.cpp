#include "arthurlab/parameters.hpp"

#include <algorithm>
#include <set>

namespace arthurlab::params {

std::string to_string(SelfDualType t) {
    switch (t) {
        case SelfDualType::Symplectic: return "symplectic";
        case SelfDualType::Orthogonal: return "orthogonal";
        case SelfDualType::None: return "none";
    }
    return "?";
}

SelfDualType selfdual_from_string(const std::string& s) {
    if (s == "symplectic") return SelfDualType::Symplectic;
    if (s == "orthogonal") return SelfDualType::Orthogonal;
    if (s == "none") return SelfDualType::None;
    throw ValidationError("unknown self-duality type: " + s);
}

int LocalParameter::total_dim() const {
    int total = 0;
    for (const auto& e : components)
        total += e.mult * e.comp.dim * (e.comp.selfdual == SelfDualType::None ? 2 : 1);
    return total;
}

namespace {

void check_arch(const IrreducibleComponent& c) {
    if (!c.arch) return;
    const weil::WeilRealRep& rep = *c.arch;
    if (rep.dim() != c.dim)
        throw ValidationError("component '" + c.label + "': archimedean realization has dimension " +
                              std::to_string(rep.dim()) + ", expected " + std::to_string(c.dim));
    if (rep.one.size() + rep.two.size() != 1)
        throw ValidationError("component '" + c.label + "': archimedean realization must be irreducible");
    weil::SelfDuality sd = rep.one.size() == 1 ? weil::one_dim_self_duality(rep.one[0])
                                               : weil::two_dim_self_duality(rep.two[0]);
    bool match = false;
    switch (c.selfdual) {
        case SelfDualType::Symplectic: match = sd == weil::SelfDuality::Symplectic; break;
        case SelfDualType::Orthogonal: match = sd == weil::SelfDuality::Orthogonal; break;
        case SelfDualType::None: match = sd == weil::SelfDuality::NotSelfDual; break;
    }
    if (!match)
        throw ValidationError("component '" + c.label + "': archimedean self-duality type mismatch");
}

}  // namespace

LocalParameter validate(std::vector<ComponentEntry> raw, std::optional<int> expected_rank) {
    std::set<std::string> labels;
    for (const auto& e : raw) {
        if (e.comp.label.empty()) throw ValidationError("component with empty label");
        if (!labels.insert(e.comp.label).second)
            throw ValidationError("duplicate component label: " + e.comp.label);
        if (e.comp.dim < 1) throw ValidationError("component dimension must be positive");
        if (e.mult < 1) throw ValidationError("component multiplicity must be positive");
        if (e.comp.su2_dim < 1) throw ValidationError("SU(2) degree must be positive");
        if (e.comp.selfdual == SelfDualType::Orthogonal && e.mult % 2 != 0)
            throw ValidationError("orthogonal component '" + e.comp.label +
                                  "' has odd multiplicity " + std::to_string(e.mult));
        if (e.comp.selfdual == SelfDualType::Symplectic && e.comp.dim % 2 != 0)
            throw ValidationError("symplectic component '" + e.comp.label +
                                  "' must have even dimension");
        check_arch(e.comp);
    }
    std::sort(raw.begin(), raw.end(), [](const ComponentEntry& a, const ComponentEntry& b) {
        return a.comp.label < b.comp.label;
    });
    LocalParameter p{std::move(raw)};
    if (p.total_dim() % 2 != 0)
        throw ValidationError("total dimension " + std::to_string(p.total_dim()) + " is odd");
    if (expected_rank && p.rank() != *expected_rank)
        throw ValidationError("total dimension " + std::to_string(p.total_dim()) +
                              " does not match the ambient rank " + std::to_string(*expected_rank));
    return p;
}

CentralizerShape centralizer(const LocalParameter& p) {
    CentralizerShape s;
    for (const auto& e : p.components) {
        FactorKind kind;
        switch (e.comp.selfdual) {
            case SelfDualType::Symplectic: kind = FactorKind::O; break;
            case SelfDualType::Orthogonal: kind = FactorKind::Sp; break;
            case SelfDualType::None: kind = FactorKind::GL; break;
        }
        s.factors.push_back(CentralizerFactor{kind, e.mult, e.comp.label});
    }
    return s;
}

int CentralizerShape::component_group_order() const {
    int k = 0;
    for (const auto& f : factors)
        if (f.kind == FactorKind::O) ++k;
    return 1 << k;
}

ComponentGroup component_group(const LocalParameter& p) {
    ComponentGroup g;
    for (const auto& e : p.components)
        if (e.comp.selfdual == SelfDualType::Symplectic) g.basis_labels.push_back(e.comp.label);
    return g;
}

std::string to_string(ParamClass c) {
    switch (c) {
        case ParamClass::Discrete: return "discrete";
        case ParamClass::Elliptic2: return "elliptic2";
        case ParamClass::Exc1: return "exc1";
        case ParamClass::Exc2: return "exc2";
        case ParamClass::Other: return "other";
    }
    return "?";
}

ParamClass classify(const LocalParameter& p) {
    int n_sympl = 0, n_orth = 0, n_pair = 0;
    int sympl_mult_ge2 = 0, sympl_mult3 = 0, sympl_mult2 = 0, sympl_big = 0;
    int orth_mult2 = 0;
    for (const auto& e : p.components) {
        switch (e.comp.selfdual) {
            case SelfDualType::Symplectic:
                ++n_sympl;
                if (e.mult >= 2) ++sympl_mult_ge2;
                if (e.mult == 2) ++sympl_mult2;
                if (e.mult == 3) ++sympl_mult3;
                if (e.mult > 3) ++sympl_big;
                break;
            case SelfDualType::Orthogonal:
                ++n_orth;
                if (e.mult == 2) ++orth_mult2;
                break;
            case SelfDualType::None:
                ++n_pair;
                break;
        }
    }
    bool only_sympl = n_orth == 0 && n_pair == 0 && n_sympl >= 1;
    if (only_sympl && sympl_mult_ge2 == 0) return ParamClass::Discrete;
    if (only_sympl && sympl_big == 0 && sympl_mult3 == 0 && sympl_mult2 >= 1)
        return ParamClass::Elliptic2;
    if (only_sympl && sympl_big == 0 && sympl_mult3 == 1 && sympl_mult2 == 0)
        return ParamClass::Exc2;
    // exc1: one orthogonal component of multiplicity 2, all others symplectic
    // and multiplicity free
    if (n_pair == 0 && n_orth == 1 && orth_mult2 == 1 && sympl_mult_ge2 == 0)
        return ParamClass::Exc1;
    return ParamClass::Other;
}

ComponentGroupElement s_psi_image(const LocalParameter& p) {
    ComponentGroupElement v;
    for (const auto& e : p.components)
        if (e.comp.selfdual == SelfDualType::Symplectic)
            v.push_back((unsigned char)((e.mult * (e.comp.su2_dim - 1)) % 2));
    return v;
}

ComponentGroupElement center_image(const LocalParameter& p) {
    ComponentGroupElement v;
    for (const auto& e : p.components)
        if (e.comp.selfdual == SelfDualType::Symplectic)
            v.push_back((unsigned char)(e.mult % 2));
    return v;
}

int dot_f2(const ComponentGroupElement& a, const ComponentGroupElement& b) {
    int d = 0;
    for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) d ^= (a[k] & b[k]);
    return d;
}

std::vector<ComponentGroupElement> characters(const LocalParameter& p,
                                              kottwitz::SignCharacter chi) {
    ComponentGroupElement center = center_image(p);
    std::size_t k = center.size();
    std::vector<ComponentGroupElement> out;
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        ComponentGroupElement v(k, 0);
        for (std::size_t b = 0; b < k; ++b) v[b] = (mask >> b) & 1;
        int value = dot_f2(v, center) == 0 ? 1 : -1;
        if (value == chi.value) out.push_back(std::move(v));
    }
    return out;
}

namespace {

// Enumerate all multisets of (type, dim, mult) with total dimension exactly
// `remaining`, in non-decreasing lexicographic order to avoid duplicates.
struct ProfileItem {
    SelfDualType type;
    int dim;
    int mult;

    bool operator<(const ProfileItem& o) const {
        if (type != o.type) return type < o.type;
        if (dim != o.dim) return dim < o.dim;
        return mult < o.mult;
    }
    bool operator==(const ProfileItem& o) const {
        return type == o.type && dim == o.dim && mult == o.mult;
    }
};

int item_weight(const ProfileItem& it) {
    return it.dim * it.mult * (it.type == SelfDualType::None ? 2 : 1);
}

void enumerate_rec(int remaining, const ProfileItem& min_item,
                   std::vector<ProfileItem>& current,
                   std::vector<std::vector<ProfileItem>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int type_idx = 0; type_idx < 3; ++type_idx) {
        SelfDualType type = type_idx == 0   ? SelfDualType::Symplectic
                            : type_idx == 1 ? SelfDualType::Orthogonal
                                            : SelfDualType::None;
        int dim_step = type == SelfDualType::Symplectic ? 2 : 1;
        for (int dim = dim_step; dim <= remaining; dim += dim_step) {
            for (int mult = 1;; ++mult) {
                if (type == SelfDualType::Orthogonal && mult % 2 != 0) continue;
                ProfileItem it{type, dim, mult};
                if (item_weight(it) > remaining) break;
                if (it < min_item) continue;
                current.push_back(it);
                enumerate_rec(remaining - item_weight(it), it, current, out);
                current.pop_back();
            }
        }
    }
}

}  // namespace

std::vector<LocalParameter> enumerate_profiles(int max_total_dim) {
    std::vector<LocalParameter> params;
    std::vector<std::vector<ProfileItem>> profiles;
    for (int total = 2; total <= max_total_dim; total += 2) {
        std::vector<ProfileItem> current;
        enumerate_rec(total, ProfileItem{SelfDualType::Symplectic, 0, 0}, current, profiles);
    }
    for (const auto& profile : profiles) {
        std::vector<ComponentEntry> entries;
        int idx = 0;
        for (const auto& it : profile) {
            IrreducibleComponent c;
            c.label = "c" + std::to_string(idx++);
            c.dim = it.dim;
            c.selfdual = it.type;
            entries.push_back(ComponentEntry{c, it.mult});
        }
        params.push_back(validate(std::move(entries)));
    }
    return params;
}

}  // namespace arthurlab::params
