#pragma once

#include <random>
#include <string>
#include <vector>

#include "arthurlab/parameters.hpp"

namespace arthurlab::levi {

// An element of the hyperoctahedral group Z/2 wr S_m:
// e_h -> (-1)^{flip[h]} e_{perm[h]}, 0-based.
struct SignedPerm {
    std::vector<int> perm;
    std::vector<unsigned char> flip;

    static SignedPerm identity(int m);
    int size() const { return int(perm.size()); }

    SignedPerm compose(const SignedPerm& other) const;  // this after other
    int flip_parity() const;

    // Finite fixed locus on (C^x)^m: every cycle carries an odd number of
    // sign flips (no eigenvalue 1 on the cocharacter lattice).
    bool has_finite_fixed_locus() const;

    std::string key() const;
    friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
        return a.perm == b.perm && a.flip == b.flip;
    }
};

std::vector<SignedPerm> hyperoctahedral_elements(int m);  // 2^m m!
std::vector<SignedPerm> symmetric_elements(int m);        // m!

// Generators of W(e, e_dual) inside Z/2 wr S_{e + e_dual}: the two block
// symmetric groups and the paired swaps with two sign flips.
std::vector<SignedPerm> w_group_generators(int e, int e_dual);
std::vector<SignedPerm> w_group(int e, int e_dual);  // BFS closure; rejects e or e_dual = 0
long w_group_order(int e, int e_dual);

// ----------------------------------------------------------------------
// Levi shapes

struct AlphabetEntry {
    std::string label;
    int dim = 1;
    params::SelfDualType type = params::SelfDualType::Symplectic;
};

struct BlockEntry {
    std::string label;
    int mult = 0;       // copies of the component (ell_i^t / ell_j^t / ell_i^0)
    int dual_mult = 0;  // copies of the formal dual, GL blocks of pair labels only
};

struct GLBlock {
    std::vector<BlockEntry> entries;
    int e = 1;
};

struct SOBlock {
    std::vector<BlockEntry> entries;
};

enum class WeylBlockKind { Hyper, Sym, PairW };

struct WeylBlock {
    WeylBlockKind kind;
    int t = -1;        // gl_blocks index
    int partner = -1;  // T4 partner for PairW
    int m = 0;         // size of the signed-permutation coordinate block
};

struct LeviShape {
    std::vector<AlphabetEntry> alphabet;
    std::vector<GLBlock> gl_blocks;  // distinct descriptors, multiplicity e
    SOBlock so_block;

    // derived
    int n = 0;
    int n0 = 0;
    std::vector<int> t1, t2, t4;
    std::vector<std::pair<int, int>> t3_pairs;        // (t in T3, partner in T4)
    std::vector<WeylBlock> weyl_blocks;
    std::vector<std::string> sympl_labels;            // I_psi^+ of psi_G
    std::vector<std::string> so_sympl_labels;         // I_0^+

    const AlphabetEntry& entry(const std::string& label) const;
    int gl_mult(int t, const std::string& label) const;       // ell^t of the label
    int gl_dual_mult(int t, const std::string& label) const;
    int so_mult(const std::string& label) const;
    params::LocalParameter ambient_parameter() const;         // psi_G
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

LeviShape make_shape(std::vector<AlphabetEntry> alphabet, std::vector<GLBlock> gl_blocks,
                     SOBlock so_block);

// psi_M given factor by factor; equal GL factors are grouped into (psi_t, e_t).
std::pair<params::LocalParameter, LeviShape> embed(
    std::vector<AlphabetEntry> alphabet, const std::vector<std::vector<BlockEntry>>& gl_factors,
    SOBlock so_block, std::optional<int> expected_n = std::nullopt);

// ----------------------------------------------------------------------
// The normalizer quotient and the x homomorphism

struct NormalizerElement {
    std::vector<unsigned char> s_part;  // over so_sympl_labels
    std::vector<SignedPerm> w_part;     // aligned with shape.weyl_blocks

    static NormalizerElement identity(const LeviShape& shape);
};

NormalizerElement compose(const LeviShape& shape, const NormalizerElement& a,
                          const NormalizerElement& b);

// x_psi : N -> S_psi(G), F2 vector over shape.sympl_labels.
params::ComponentGroupElement x_map(const LeviShape& shape, const NormalizerElement& u);

struct DiagramReport {
    long order_s_m = 1;   // |S_psi(M)|
    long order_w = 1;     // |W_psi|
    long order_w0 = 1;    // |W_psi^o| = |ker x_psi|
    long order_n = 1;     // |N_psi|
    long order_s_mg = 1;  // |S_psi(M,G)| = |im x_psi|
    long order_r = 1;     // |R_psi|
    bool exact_rows = false;
    bool exact_columns = false;
    bool x_surjective = false;
};

DiagramReport diagram_report(const LeviShape& shape);

struct WeylGroupInfo {
    std::vector<WeylBlock> blocks;
    std::vector<long> block_orders;
    long order = 1;
    std::vector<NormalizerElement> generators;  // of the full normalizer quotient
};

WeylGroupInfo weyl_groups(const LeviShape& shape);

// All of W_psi as tuples of block elements; throws if the order exceeds cap.
std::vector<std::vector<SignedPerm>> enumerate_weyl(const LeviShape& shape, long cap = 200000);

std::vector<NormalizerElement> enumerate_normalizer(const LeviShape& shape, long cap = 200000);

// Elements of W_psi with finitely many fixed points on T_psi.
std::vector<std::vector<SignedPerm>> regular_elements(const LeviShape& shape, long cap = 200000);

// ----------------------------------------------------------------------
// Randomized shape generation for the property checks

struct ShapeGenOptions {
    int max_gl_blocks = 3;
    int max_e = 3;
    long max_group_order = 100000;
    bool discrete_for_m = false;  // K_t singletons, all multiplicities 1
};

LeviShape random_shape(std::mt19937_64& rng, const ShapeGenOptions& opts = {});

}  // namespace arthurlab::levi
