#include "arthurlab/endoscopy.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace arthurlab::endoscopy {

using params::ComponentEntry;
using params::LocalParameter;
using params::SelfDualType;
using params::ValidationError;

std::vector<int> EllipticTriple::s_signs() const {
    std::vector<int> v;
    v.reserve(2 * (n1 + n2));
    for (int rep = 0; rep < 2; ++rep) {
        for (int k = 0; k < n1; ++k) v.push_back(1);
        for (int k = 0; k < n2; ++k) v.push_back(-1);
    }
    return v;
}

std::vector<EllipticTriple> elliptic_triples(int n, bool strict) {
    if (n < 0) throw std::invalid_argument("elliptic_triples: n must be non-negative");
    std::vector<EllipticTriple> out;
    for (int n1 = n; n1 >= 0; --n1) {
        int n2 = n - n1;
        if (!strict && n1 < n2) break;
        out.push_back(EllipticTriple{n1, n2});
    }
    return out;
}

std::string EndoscopicDescriptor::str() const {
    std::string s;
    for (int m : gl_sizes) s += "GL" + std::to_string(m) + " x ";
    s += "SO" + std::to_string(2 * so1 + 1) + " x SO" + std::to_string(2 * so2 + 1);
    return s;
}

EndoscopicDescriptor centralizer_of_s(const SemisimpleNormalForm& s, int ambient_n) {
    std::set<std::string> seen;
    int total = s.n1 + s.n2;
    for (const auto& b : s.blocks) {
        if (b.m < 1) throw std::invalid_argument("eigenvalue block size must be positive");
        if (b.a == "0" || b.a == "1" || b.a == "-1")
            throw std::invalid_argument("eigenvalue must differ from 0 and +-1");
        if (!seen.insert(b.a).second)
            throw std::invalid_argument("repeated eigenvalue in normal form: " + b.a);
        total += b.m;
    }
    if (s.n1 < 0 || s.n2 < 0 || total != ambient_n)
        throw std::invalid_argument("normal form does not fill Sp(2n): sizes sum to " +
                                    std::to_string(total) + ", expected " +
                                    std::to_string(ambient_n));
    EndoscopicDescriptor d;
    for (const auto& b : s.blocks) d.gl_sizes.push_back(b.m);
    d.so1 = s.n1;
    d.so2 = s.n2;
    return d;
}

namespace {

std::map<std::string, const ComponentEntry*> index_components(const LocalParameter& psi) {
    std::map<std::string, const ComponentEntry*> idx;
    for (const auto& e : psi.components) idx[e.comp.label] = &e;
    return idx;
}

void check_signature(const LocalParameter& psi, const SemisimpleSignature& s) {
    auto idx = index_components(psi);
    std::set<std::string> seen;
    for (const auto& sig : s) {
        auto it = idx.find(sig.label);
        if (it == idx.end())
            throw ValidationError("signature names unknown component '" + sig.label + "'");
        if (!seen.insert(sig.label).second)
            throw ValidationError("signature repeats component '" + sig.label + "'");
        const ComponentEntry& e = *it->second;
        if (sig.plus < 0 || sig.minus < 0 || sig.plus + sig.minus != e.mult)
            throw ValidationError("signature of '" + sig.label + "' does not split multiplicity " +
                                  std::to_string(e.mult));
        if (e.comp.selfdual == SelfDualType::Orthogonal &&
            (sig.plus % 2 != 0 || sig.minus % 2 != 0))
            throw ValidationError("signature of orthogonal component '" + sig.label +
                                  "' must have even parts (Sp factor)");
    }
    if (seen.size() != psi.components.size())
        throw ValidationError("signature must cover every component");
}

}  // namespace

params::ComponentGroupElement signature_image(const LocalParameter& psi,
                                              const SemisimpleSignature& s) {
    check_signature(psi, s);
    std::map<std::string, int> minus;
    for (const auto& sig : s) minus[sig.label] = sig.minus;
    params::ComponentGroupElement v;
    for (const auto& e : psi.components)
        if (e.comp.selfdual == SelfDualType::Symplectic)
            v.push_back((unsigned char)(minus[e.comp.label] % 2));
    return v;
}

Correspondence correspond(const LocalParameter& psi, const SemisimpleSignature& s) {
    check_signature(psi, s);
    auto idx = index_components(psi);
    std::vector<ComponentEntry> plus_entries, minus_entries;
    for (const auto& sig : s) {
        const ComponentEntry& e = *idx.at(sig.label);
        if (sig.plus > 0) plus_entries.push_back(ComponentEntry{e.comp, sig.plus});
        if (sig.minus > 0) minus_entries.push_back(ComponentEntry{e.comp, sig.minus});
    }
    Correspondence c;
    c.factor1 = params::validate(std::move(plus_entries));
    c.factor2 = params::validate(std::move(minus_entries));
    c.triple = EllipticTriple{c.factor1.rank(), c.factor2.rank()};
    return c;
}

params::LocalParameter recombine(const Correspondence& c) {
    std::map<std::string, ComponentEntry> merged;
    for (const auto& e : c.factor1.components) merged[e.comp.label] = e;
    for (const auto& e : c.factor2.components) {
        auto it = merged.find(e.comp.label);
        if (it == merged.end())
            merged[e.comp.label] = e;
        else
            it->second.mult += e.mult;
    }
    std::vector<ComponentEntry> entries;
    for (auto& [label, e] : merged) entries.push_back(e);
    return params::validate(std::move(entries));
}

std::vector<ECRTerm> ecr_summand(
    const LocalParameter& psi, const SemisimpleSignature& s,
    const std::vector<std::pair<std::string, params::ComponentGroupElement>>& char_table,
    kottwitz::SignCharacter e_g) {
    params::ComponentGroupElement arg = signature_image(psi, s);
    params::ComponentGroupElement s_psi = params::s_psi_image(psi);
    for (std::size_t k = 0; k < arg.size(); ++k) arg[k] ^= s_psi[k];
    std::size_t basis_size = params::component_group(psi).basis_labels.size();
    std::vector<ECRTerm> terms;
    for (const auto& [pi, chi] : char_table) {
        if (chi.size() != basis_size)
            throw ValidationError("character for '" + pi + "' has wrong basis size");
        int value = params::dot_f2(chi, arg) == 0 ? 1 : -1;
        terms.push_back(ECRTerm{pi, e_g.value * value});
    }
    return terms;
}

}  // namespace arthurlab::endoscopy
