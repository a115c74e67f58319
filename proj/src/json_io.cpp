#include "arthurlab/json_io.hpp"

namespace arthurlab::json_io {

json rational_to_json(const Rational& r) { return r.str(); }

json gaussian_to_json(const GaussianRational& z) {
    return json::array({z.re().str(), z.im().str()});
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(gaussian_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

params::LocalParameter parameter_from_json(const json& j) {
    if (!j.contains("components") || !j["components"].is_array())
        throw params::ValidationError("parameter JSON needs a 'components' array");
    std::vector<params::ComponentEntry> entries;
    for (const auto& c : j["components"]) {
        params::IrreducibleComponent comp;
        comp.label = c.at("label").get<std::string>();
        comp.dim = c.at("dim").get<int>();
        comp.selfdual = params::selfdual_from_string(c.at("selfdual").get<std::string>());
        comp.su2_dim = c.value("su2", 1);
        entries.push_back(params::ComponentEntry{comp, c.value("mult", 1)});
    }
    return params::validate(std::move(entries));
}

json parameter_to_json(const params::LocalParameter& p) {
    json comps = json::array();
    for (const auto& e : p.components) {
        comps.push_back({{"label", e.comp.label},
                         {"dim", e.comp.dim},
                         {"selfdual", params::to_string(e.comp.selfdual)},
                         {"mult", e.mult},
                         {"su2", e.comp.su2_dim}});
    }
    return json{{"components", std::move(comps)}};
}

json centralizer_to_json(const params::CentralizerShape& s) {
    json factors = json::array();
    for (const auto& f : s.factors) {
        const char* kind = f.kind == params::FactorKind::O    ? "O"
                           : f.kind == params::FactorKind::Sp ? "Sp"
                                                              : "GL";
        factors.push_back({{"kind", kind}, {"size", f.size}, {"label", f.label}});
    }
    return factors;
}

json group_element_to_json(const params::ComponentGroupElement& v) {
    json a = json::array();
    for (unsigned char b : v) a.push_back(int(b));
    return a;
}

levi::LeviShape shape_from_json(const json& j) {
    std::vector<levi::AlphabetEntry> alphabet;
    for (const auto& a : j.at("alphabet")) {
        alphabet.push_back(levi::AlphabetEntry{
            a.at("label").get<std::string>(), a.at("dim").get<int>(),
            params::selfdual_from_string(a.at("selfdual").get<std::string>())});
    }
    auto entries_from = [](const json& arr) {
        std::vector<levi::BlockEntry> entries;
        for (const auto& b : arr)
            entries.push_back(levi::BlockEntry{b.at("label").get<std::string>(),
                                               b.value("mult", 0), b.value("dual_mult", 0)});
        return entries;
    };
    std::vector<levi::GLBlock> blocks;
    for (const auto& g : j.value("gl_blocks", json::array()))
        blocks.push_back(levi::GLBlock{entries_from(g.at("entries")), g.value("e", 1)});
    levi::SOBlock so;
    if (j.contains("so_block")) so.entries = entries_from(j["so_block"].value("entries", json::array()));
    return levi::make_shape(std::move(alphabet), std::move(blocks), std::move(so));
}

json diagram_report_to_json(const levi::DiagramReport& r) {
    return json{{"order_s_m", r.order_s_m},     {"order_w", r.order_w},
                {"order_w0", r.order_w0},       {"order_n", r.order_n},
                {"order_s_mg", r.order_s_mg},   {"order_r", r.order_r},
                {"exact_rows", r.exact_rows},   {"exact_columns", r.exact_columns},
                {"x_surjective", r.x_surjective}};
}

weil::WeilRealRep rep_from_json(const json& j) {
    weil::WeilRealRep r;
    for (const auto& o : j.value("one", json::array()))
        r.one.push_back(weil::OneDim{o.value("eps", 0) & 1,
                                     weil::LambdaAffine(o.value("t", 0.0))});
    for (const auto& t : j.value("two", json::array())) {
        int l = t.value("l", 1);
        if (l < 1) throw std::invalid_argument("two-dimensional summand needs l >= 1");
        r.two.push_back(weil::TwoDim{l, weil::LambdaAffine(t.value("t", 0.0))});
    }
    r.normalize();
    return r;
}

json rep_to_json(const weil::WeilRealRep& r) {
    json one = json::array(), two = json::array();
    auto t_json = [](const weil::LambdaAffine& t) -> json {
        if (t.is_constant() && t.c0.imag() == 0.0) return t.c0.real();
        return json{{"re", t.c0.real()}, {"im", t.c0.imag()}, {"lambda", t.c1}};
    };
    for (const auto& o : r.one) one.push_back({{"eps", o.eps}, {"t", t_json(o.t)}});
    for (const auto& t : r.two) two.push_back({{"l", t.l}, {"t", t_json(t.t)}});
    return json{{"one", std::move(one)}, {"two", std::move(two)}};
}

endoscopy::SemisimpleSignature signature_from_json(const json& j) {
    endoscopy::SemisimpleSignature s;
    for (const auto& c : j)
        s.push_back(endoscopy::ComponentSignature{c.at("label").get<std::string>(),
                                                  c.value("plus", 0), c.value("minus", 0)});
    return s;
}

json identity_report_to_json(const intertwining::IdentityReport& r) {
    return json{{"lambda", r.lambda},
                {"lhs", {r.lhs.real(), r.lhs.imag()}},
                {"rhs", {r.rhs.real(), r.rhs.imag()}},
                {"abs_diff", r.abs_diff},
                {"tol", r.tol},
                {"pass", r.pass},
                {"evaluations", r.evaluations}};
}

}  // namespace arthurlab::json_io
