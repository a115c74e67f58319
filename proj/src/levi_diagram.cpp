#include "arthurlab/levi_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace arthurlab::levi {

using params::SelfDualType;

// ----------------------------------------------------------------------
// Signed permutations

SignedPerm SignedPerm::identity(int m) {
    SignedPerm s;
    s.perm.resize(m);
    std::iota(s.perm.begin(), s.perm.end(), 0);
    s.flip.assign(m, 0);
    return s;
}

SignedPerm SignedPerm::compose(const SignedPerm& other) const {
    SignedPerm r;
    int m = size();
    r.perm.resize(m);
    r.flip.resize(m);
    for (int h = 0; h < m; ++h) {
        r.perm[h] = perm[other.perm[h]];
        r.flip[h] = (unsigned char)(other.flip[h] ^ flip[other.perm[h]]);
    }
    return r;
}

int SignedPerm::flip_parity() const {
    int p = 0;
    for (unsigned char f : flip) p ^= f;
    return p;
}

bool SignedPerm::has_finite_fixed_locus() const {
    int m = size();
    std::vector<bool> seen(m, false);
    for (int start = 0; start < m; ++start) {
        if (seen[start]) continue;
        int h = start, flips = 0;
        do {
            seen[h] = true;
            flips ^= flip[h];
            h = perm[h];
        } while (h != start);
        if (flips == 0) return false;
    }
    return true;
}

std::string SignedPerm::key() const {
    std::string k;
    k.reserve(perm.size() * 2);
    for (std::size_t h = 0; h < perm.size(); ++h) {
        k.push_back(char('0' + perm[h]));
        k.push_back(char('0' + flip[h]));
    }
    return k;
}

std::vector<SignedPerm> symmetric_elements(int m) {
    std::vector<SignedPerm> out;
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
        SignedPerm s;
        s.perm = p;
        s.flip.assign(m, 0);
        out.push_back(std::move(s));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<SignedPerm> hyperoctahedral_elements(int m) {
    std::vector<SignedPerm> out;
    for (SignedPerm& base : symmetric_elements(m)) {
        for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
            SignedPerm s = base;
            for (int h = 0; h < m; ++h) s.flip[h] = (mask >> h) & 1;
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<SignedPerm> w_group_generators(int e, int e_dual) {
    if (e < 1 || e_dual < 1)
        throw std::invalid_argument("w_group requires e >= 1 and e_dual >= 1");
    int m = e + e_dual;
    std::vector<SignedPerm> gens;
    auto transposition = [m](int a, int b) {
        SignedPerm s = SignedPerm::identity(m);
        std::swap(s.perm[a], s.perm[b]);
        return s;
    };
    for (int h = 0; h + 1 < e; ++h) gens.push_back(transposition(h, h + 1));
    for (int h = e; h + 1 < m; ++h) gens.push_back(transposition(h, h + 1));
    for (int h = 0; h < e; ++h)
        for (int hd = e; hd < m; ++hd) {
            SignedPerm s = transposition(h, hd);
            s.flip[h] = 1;
            s.flip[hd] = 1;
            gens.push_back(std::move(s));
        }
    return gens;
}

std::vector<SignedPerm> w_group(int e, int e_dual) {
    if (e + e_dual > 8)
        throw std::invalid_argument("w_group closure is capped at e + e_dual <= 8");
    std::vector<SignedPerm> gens = w_group_generators(e, e_dual);
    std::vector<SignedPerm> elements{SignedPerm::identity(e + e_dual)};
    std::unordered_set<std::string> seen{elements[0].key()};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        SignedPerm current = elements[head];
        for (const SignedPerm& g : gens) {
            SignedPerm next = g.compose(current);
            if (seen.insert(next.key()).second) elements.push_back(std::move(next));
        }
    }
    return elements;
}

long w_group_order(int e, int e_dual) { return long(w_group(e, e_dual).size()); }

// ----------------------------------------------------------------------
// Shapes

namespace {

std::vector<BlockEntry> canonical_entries(std::vector<BlockEntry> entries) {
    entries.erase(std::remove_if(entries.begin(), entries.end(),
                                 [](const BlockEntry& b) { return b.mult == 0 && b.dual_mult == 0; }),
                  entries.end());
    std::sort(entries.begin(), entries.end(),
              [](const BlockEntry& a, const BlockEntry& b) { return a.label < b.label; });
    return entries;
}

std::string descriptor_key(const std::vector<BlockEntry>& canonical) {
    std::string k;
    for (const auto& b : canonical)
        k += b.label + ":" + std::to_string(b.mult) + ":" + std::to_string(b.dual_mult) + ";";
    return k;
}

long checked_mul(long a, long b, long cap) {
    long r = a * b;
    if (r > cap) throw ShapeError("group order exceeds the enumeration cap");
    return r;
}

long factorial(int m) {
    long f = 1;
    for (int k = 2; k <= m; ++k) f *= k;
    return f;
}

}  // namespace

const AlphabetEntry& LeviShape::entry(const std::string& label) const {
    for (const auto& a : alphabet)
        if (a.label == label) return a;
    throw ShapeError("unknown component label: " + label);
}

int LeviShape::gl_mult(int t, const std::string& label) const {
    for (const auto& b : gl_blocks[t].entries)
        if (b.label == label) return b.mult;
    return 0;
}

int LeviShape::gl_dual_mult(int t, const std::string& label) const {
    for (const auto& b : gl_blocks[t].entries)
        if (b.label == label) return b.dual_mult;
    return 0;
}

int LeviShape::so_mult(const std::string& label) const {
    for (const auto& b : so_block.entries)
        if (b.label == label) return b.mult;
    return 0;
}

params::LocalParameter LeviShape::ambient_parameter() const {
    std::map<std::string, int> mult;
    for (const auto& gl : gl_blocks)
        for (const auto& b : gl.entries) {
            const AlphabetEntry& a = entry(b.label);
            if (a.type == SelfDualType::None)
                mult[b.label] += gl.e * (b.mult + b.dual_mult);
            else
                mult[b.label] += 2 * gl.e * b.mult;
        }
    for (const auto& b : so_block.entries) mult[b.label] += b.mult;
    std::vector<params::ComponentEntry> entries;
    for (const auto& [label, l] : mult) {
        const AlphabetEntry& a = entry(label);
        params::IrreducibleComponent c;
        c.label = label;
        c.dim = a.dim;
        c.selfdual = a.type;
        entries.push_back(params::ComponentEntry{c, l});
    }
    return params::validate(std::move(entries));
}

LeviShape make_shape(std::vector<AlphabetEntry> alphabet, std::vector<GLBlock> gl_blocks,
                     SOBlock so_block) {
    LeviShape shape;
    shape.alphabet = std::move(alphabet);
    {
        std::set<std::string> labels;
        for (const auto& a : shape.alphabet) {
            if (a.dim < 1) throw ShapeError("alphabet dimension must be positive");
            if (!labels.insert(a.label).second) throw ShapeError("duplicate alphabet label");
        }
    }

    for (auto& gl : gl_blocks) {
        gl.entries = canonical_entries(std::move(gl.entries));
        if (gl.e < 1) throw ShapeError("block multiplicity e must be positive");
        if (gl.entries.empty()) throw ShapeError("empty GL block");
        for (const auto& b : gl.entries) {
            const AlphabetEntry& a = shape.entry(b.label);
            if (b.mult < 0 || b.dual_mult < 0) throw ShapeError("negative multiplicity");
            if (a.type != SelfDualType::None && b.dual_mult != 0)
                throw ShapeError("dual multiplicity on a self-dual component");
        }
    }
    so_block.entries = canonical_entries(std::move(so_block.entries));
    for (const auto& b : so_block.entries) {
        const AlphabetEntry& a = shape.entry(b.label);
        if (b.mult < 1 || b.dual_mult != 0)
            throw ShapeError("SO block entries carry a single positive multiplicity");
        if (a.type == SelfDualType::Orthogonal && b.mult % 2 != 0)
            throw ShapeError("orthogonal component with odd multiplicity in the SO block");
    }
    shape.gl_blocks = std::move(gl_blocks);
    shape.so_block = std::move(so_block);

    // descriptor distinctness
    std::set<std::string> keys;
    for (const auto& gl : shape.gl_blocks)
        if (!keys.insert(descriptor_key(gl.entries)).second)
            throw ShapeError("GL block descriptors must be mutually distinct");

    // rank bookkeeping
    int so_dim = 0;
    for (const auto& b : shape.so_block.entries) {
        const AlphabetEntry& a = shape.entry(b.label);
        so_dim += b.mult * a.dim * (a.type == SelfDualType::None ? 2 : 1);
    }
    if (so_dim % 2 != 0) throw ShapeError("SO block has odd dimension");
    shape.n0 = so_dim / 2;
    shape.n = shape.n0;
    for (const auto& gl : shape.gl_blocks) {
        int k = 0;
        for (const auto& b : gl.entries) k += (b.mult + b.dual_mult) * shape.entry(b.label).dim;
        if (k < 1) throw ShapeError("GL block of dimension zero");
        shape.n += gl.e * k;
    }

    // T-partition: compare each descriptor against the duals of all others
    int r = int(shape.gl_blocks.size());
    std::vector<std::string> key_of(r), dual_key_of(r);
    for (int t = 0; t < r; ++t) {
        key_of[t] = descriptor_key(shape.gl_blocks[t].entries);
        std::vector<BlockEntry> dualized = shape.gl_blocks[t].entries;
        for (auto& b : dualized)
            if (shape.entry(b.label).type == SelfDualType::None) std::swap(b.mult, b.dual_mult);
        dual_key_of[t] = descriptor_key(canonical_entries(std::move(dualized)));
    }
    std::vector<int> partner(r, -1);
    for (int t = 0; t < r; ++t)
        for (int s = 0; s < r; ++s)
            if (key_of[s] == dual_key_of[t]) partner[t] = s;
    for (int t = 0; t < r; ++t) {
        if (partner[t] == t)
            shape.t1.push_back(t);
        else if (partner[t] < 0)
            shape.t2.push_back(t);
        else if (partner[t] > t)
            shape.t3_pairs.push_back({t, partner[t]});
        else
            shape.t4.push_back(t);
    }

    for (int t : shape.t1)
        shape.weyl_blocks.push_back(WeylBlock{WeylBlockKind::Hyper, t, -1, shape.gl_blocks[t].e});
    for (int t : shape.t2)
        shape.weyl_blocks.push_back(WeylBlock{WeylBlockKind::Sym, t, -1, shape.gl_blocks[t].e});
    for (auto [t, t4] : shape.t3_pairs)
        shape.weyl_blocks.push_back(
            WeylBlock{WeylBlockKind::PairW, t, t4, shape.gl_blocks[t].e + shape.gl_blocks[t4].e});

    // symplectic index sets of psi_G and of psi_0
    std::set<std::string> sympl;
    for (const auto& gl : shape.gl_blocks)
        for (const auto& b : gl.entries)
            if (shape.entry(b.label).type == SelfDualType::Symplectic) sympl.insert(b.label);
    std::set<std::string> so_sympl;
    for (const auto& b : shape.so_block.entries)
        if (shape.entry(b.label).type == SelfDualType::Symplectic) {
            sympl.insert(b.label);
            so_sympl.insert(b.label);
        }
    shape.sympl_labels.assign(sympl.begin(), sympl.end());
    shape.so_sympl_labels.assign(so_sympl.begin(), so_sympl.end());
    return shape;
}

std::pair<params::LocalParameter, LeviShape> embed(
    std::vector<AlphabetEntry> alphabet, const std::vector<std::vector<BlockEntry>>& gl_factors,
    SOBlock so_block, std::optional<int> expected_n) {
    std::vector<GLBlock> grouped;
    std::map<std::string, int> index_of;
    for (const auto& factor : gl_factors) {
        std::vector<BlockEntry> canon = canonical_entries(factor);
        std::string k = descriptor_key(canon);
        auto it = index_of.find(k);
        if (it == index_of.end()) {
            index_of[k] = int(grouped.size());
            grouped.push_back(GLBlock{std::move(canon), 1});
        } else {
            grouped[it->second].e += 1;
        }
    }
    LeviShape shape = make_shape(std::move(alphabet), std::move(grouped), std::move(so_block));
    if (expected_n && shape.n != *expected_n)
        throw ShapeError("embedded parameter has rank " + std::to_string(shape.n) +
                         ", expected " + std::to_string(*expected_n));
    return {shape.ambient_parameter(), shape};
}

// ----------------------------------------------------------------------
// Normalizer elements & x

NormalizerElement NormalizerElement::identity(const LeviShape& shape) {
    NormalizerElement u;
    u.s_part.assign(shape.so_sympl_labels.size(), 0);
    for (const auto& wb : shape.weyl_blocks) u.w_part.push_back(SignedPerm::identity(wb.m));
    return u;
}

NormalizerElement compose(const LeviShape& shape, const NormalizerElement& a,
                          const NormalizerElement& b) {
    (void)shape;
    NormalizerElement r;
    r.s_part.resize(a.s_part.size());
    for (std::size_t k = 0; k < a.s_part.size(); ++k)
        r.s_part[k] = (unsigned char)(a.s_part[k] ^ b.s_part[k]);
    for (std::size_t k = 0; k < a.w_part.size(); ++k)
        r.w_part.push_back(a.w_part[k].compose(b.w_part[k]));
    return r;
}

params::ComponentGroupElement x_map(const LeviShape& shape, const NormalizerElement& u) {
    params::ComponentGroupElement x(shape.sympl_labels.size(), 0);
    for (std::size_t i = 0; i < shape.sympl_labels.size(); ++i) {
        const std::string& label = shape.sympl_labels[i];
        int xi = 0;
        for (std::size_t k = 0; k < shape.so_sympl_labels.size(); ++k)
            if (shape.so_sympl_labels[k] == label) xi ^= u.s_part[k];
        for (std::size_t wk = 0; wk < shape.weyl_blocks.size(); ++wk) {
            const WeylBlock& wb = shape.weyl_blocks[wk];
            if (wb.kind == WeylBlockKind::Sym) continue;
            int l = shape.gl_mult(wb.t, label);
            xi ^= (l % 2) & u.w_part[wk].flip_parity();
        }
        x[i] = (unsigned char)xi;
    }
    return x;
}

// ----------------------------------------------------------------------
// Orders, generators, reports

namespace {

std::vector<SignedPerm> block_generators(const WeylBlock& wb) {
    std::vector<SignedPerm> gens;
    int m = wb.m;
    auto transposition = [m](int a, int b) {
        SignedPerm s = SignedPerm::identity(m);
        std::swap(s.perm[a], s.perm[b]);
        return s;
    };
    switch (wb.kind) {
        case WeylBlockKind::Hyper: {
            for (int h = 0; h + 1 < m; ++h) gens.push_back(transposition(h, h + 1));
            SignedPerm f = SignedPerm::identity(m);
            f.flip[0] = 1;
            gens.push_back(std::move(f));
            break;
        }
        case WeylBlockKind::Sym:
            for (int h = 0; h + 1 < m; ++h) gens.push_back(transposition(h, h + 1));
            break;
        case WeylBlockKind::PairW:
            return gens;  // filled by the caller, which knows (e, e_dual)
    }
    return gens;
}

long block_order(const LeviShape& shape, const WeylBlock& wb) {
    switch (wb.kind) {
        case WeylBlockKind::Hyper: return (1L << wb.m) * factorial(wb.m);
        case WeylBlockKind::Sym: return factorial(wb.m);
        case WeylBlockKind::PairW:
            return w_group_order(shape.gl_blocks[wb.t].e, shape.gl_blocks[wb.partner].e);
    }
    return 1;
}

std::vector<SignedPerm> block_elements(const LeviShape& shape, const WeylBlock& wb) {
    switch (wb.kind) {
        case WeylBlockKind::Hyper: return hyperoctahedral_elements(wb.m);
        case WeylBlockKind::Sym: return symmetric_elements(wb.m);
        case WeylBlockKind::PairW:
            return w_group(shape.gl_blocks[wb.t].e, shape.gl_blocks[wb.partner].e);
    }
    return {};
}

int f2_rank(std::vector<params::ComponentGroupElement> vectors) {
    int rank = 0;
    std::size_t width = vectors.empty() ? 0 : vectors[0].size();
    for (std::size_t col = 0; col < width; ++col) {
        std::size_t pivot = rank;
        while (pivot < vectors.size() && vectors[pivot][col] == 0) ++pivot;
        if (pivot == vectors.size()) continue;
        std::swap(vectors[rank], vectors[pivot]);
        for (std::size_t r = 0; r < vectors.size(); ++r)
            if (r != std::size_t(rank) && vectors[r][col])
                for (std::size_t c = 0; c < width; ++c) vectors[r][c] ^= vectors[rank][c];
        ++rank;
    }
    return rank;
}

}  // namespace

WeylGroupInfo weyl_groups(const LeviShape& shape) {
    WeylGroupInfo info;
    info.blocks = shape.weyl_blocks;
    for (const auto& wb : shape.weyl_blocks) {
        info.block_orders.push_back(block_order(shape, wb));
        info.order *= info.block_orders.back();
    }
    // generators of the normalizer quotient: the S_psi(M) basis plus each
    // block's generators embedded at the identity elsewhere
    NormalizerElement id = NormalizerElement::identity(shape);
    for (std::size_t k = 0; k < shape.so_sympl_labels.size(); ++k) {
        NormalizerElement g = id;
        g.s_part[k] = 1;
        info.generators.push_back(std::move(g));
    }
    for (std::size_t wk = 0; wk < shape.weyl_blocks.size(); ++wk) {
        const WeylBlock& wb = shape.weyl_blocks[wk];
        std::vector<SignedPerm> gens =
            wb.kind == WeylBlockKind::PairW
                ? w_group_generators(shape.gl_blocks[wb.t].e, shape.gl_blocks[wb.partner].e)
                : block_generators(wb);
        for (const SignedPerm& g : gens) {
            NormalizerElement u = id;
            u.w_part[wk] = g;
            info.generators.push_back(std::move(u));
        }
    }
    return info;
}

DiagramReport diagram_report(const LeviShape& shape) {
    DiagramReport rep;
    WeylGroupInfo info = weyl_groups(shape);
    rep.order_s_m = 1L << shape.so_sympl_labels.size();
    rep.order_w = info.order;
    rep.order_n = rep.order_s_m * rep.order_w;

    std::vector<params::ComponentGroupElement> images;
    for (const auto& g : info.generators) images.push_back(x_map(shape, g));
    int rank = f2_rank(std::move(images));
    rep.order_s_mg = 1L << rank;
    rep.order_w0 = rep.order_n / rep.order_s_mg;
    rep.order_r = rep.order_w / rep.order_w0;

    rep.exact_rows = rep.order_n == rep.order_s_m * rep.order_w;
    rep.exact_columns = rep.order_n == rep.order_w0 * rep.order_s_mg &&
                        rep.order_s_mg == rep.order_s_m * rep.order_r &&
                        rep.order_w == rep.order_w0 * rep.order_r;
    rep.x_surjective = rank == int(shape.sympl_labels.size());
    return rep;
}

std::vector<std::vector<SignedPerm>> enumerate_weyl(const LeviShape& shape, long cap) {
    long order = 1;
    for (const auto& wb : shape.weyl_blocks)
        order = checked_mul(order, block_order(shape, wb), cap);
    std::vector<std::vector<SignedPerm>> per_block;
    for (const auto& wb : shape.weyl_blocks) per_block.push_back(block_elements(shape, wb));
    std::vector<std::vector<SignedPerm>> out;
    out.reserve(order);
    std::vector<std::size_t> idx(per_block.size(), 0);
    while (true) {
        std::vector<SignedPerm> tuple;
        tuple.reserve(per_block.size());
        for (std::size_t k = 0; k < per_block.size(); ++k) tuple.push_back(per_block[k][idx[k]]);
        out.push_back(std::move(tuple));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == per_block[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return out;
}

std::vector<NormalizerElement> enumerate_normalizer(const LeviShape& shape, long cap) {
    std::vector<std::vector<SignedPerm>> weyl = enumerate_weyl(shape, cap);
    std::size_t k = shape.so_sympl_labels.size();
    if (long((1UL << k) * weyl.size()) > cap)
        throw ShapeError("group order exceeds the enumeration cap");
    std::vector<NormalizerElement> out;
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        NormalizerElement base;
        base.s_part.assign(k, 0);
        for (std::size_t b = 0; b < k; ++b) base.s_part[b] = (mask >> b) & 1;
        for (const auto& tuple : weyl) {
            NormalizerElement u = base;
            u.w_part = tuple;
            out.push_back(std::move(u));
        }
    }
    return out;
}

std::vector<std::vector<SignedPerm>> regular_elements(const LeviShape& shape, long cap) {
    std::vector<std::vector<SignedPerm>> out;
    for (auto& tuple : enumerate_weyl(shape, cap)) {
        bool regular = true;
        for (const SignedPerm& w : tuple)
            if (!w.has_finite_fixed_locus()) {
                regular = false;
                break;
            }
        if (regular) out.push_back(std::move(tuple));
    }
    return out;
}

// ----------------------------------------------------------------------
// Random shapes

LeviShape random_shape(std::mt19937_64& rng, const ShapeGenOptions& opts) {
    auto pick = [&rng](int lo, int hi) {
        return lo + int(rng() % (unsigned long)(hi - lo + 1));
    };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<AlphabetEntry> alphabet;
        int n_sympl = pick(1, 3);
        for (int k = 0; k < n_sympl; ++k)
            alphabet.push_back(AlphabetEntry{"s" + std::to_string(k), 2 * pick(1, 2),
                                             SelfDualType::Symplectic});
        int n_orth = pick(0, 1);
        for (int k = 0; k < n_orth; ++k)
            alphabet.push_back(AlphabetEntry{"o" + std::to_string(k), pick(1, 2),
                                             SelfDualType::Orthogonal});
        int n_pair = pick(0, 2);
        for (int k = 0; k < n_pair; ++k)
            alphabet.push_back(AlphabetEntry{"p" + std::to_string(k), pick(1, 2),
                                             SelfDualType::None});

        int n_blocks = pick(opts.discrete_for_m ? 1 : 0, opts.max_gl_blocks);
        std::vector<GLBlock> blocks;
        for (int t = 0; t < n_blocks; ++t) {
            GLBlock gl;
            gl.e = pick(1, opts.max_e);
            if (opts.discrete_for_m) {
                const AlphabetEntry& a = alphabet[std::size_t(pick(0, int(alphabet.size()) - 1))];
                BlockEntry b{a.label, 1, 0};
                if (a.type == SelfDualType::None && pick(0, 1) == 1) std::swap(b.mult, b.dual_mult);
                gl.entries.push_back(b);
            } else {
                for (const auto& a : alphabet) {
                    BlockEntry b{a.label, pick(0, 2), 0};
                    if (a.type == SelfDualType::None) b.dual_mult = pick(0, 2);
                    if (b.mult || b.dual_mult) gl.entries.push_back(b);
                }
                if (gl.entries.empty()) gl.entries.push_back(BlockEntry{alphabet[0].label, 1, 0});
            }
            blocks.push_back(std::move(gl));
        }
        SOBlock so;
        for (const auto& a : alphabet) {
            int mult = 0;
            if (a.type == SelfDualType::Symplectic)
                mult = opts.discrete_for_m ? pick(0, 1) : pick(0, 2);
            else if (!opts.discrete_for_m)
                mult = a.type == SelfDualType::Orthogonal ? 2 * pick(0, 1) : pick(0, 1);
            if (mult) so.entries.push_back(BlockEntry{a.label, mult, 0});
        }
        try {
            LeviShape shape = make_shape(std::move(alphabet), std::move(blocks), std::move(so));
            WeylGroupInfo info = weyl_groups(shape);
            long order = info.order << shape.so_sympl_labels.size();
            if (order > opts.max_group_order || order < 1) continue;
            return shape;
        } catch (const ShapeError&) {
            continue;
        }
    }
    throw ShapeError("random_shape: could not generate a shape within the cap");
}

}  // namespace arthurlab::levi
