/*
   Copyright 2026 The gammalg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gammalg/serialize.hpp"

namespace gammalg {

namespace {

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(c.str());
    return out;
}

Vec vec_from_json(const Json& j, const FieldSpec& f, std::size_t dim, const char* what) {
    if (!j.is_array() || j.size() != dim)
        throw ParseError(std::string(what) + ": expected an array of " + std::to_string(dim) +
                         " coefficients");
    Vec out;
    out.reserve(dim);
    for (const auto& c : j) {
        if (!c.is_string()) throw ParseError(std::string(what) + ": coefficients are strings");
        out.push_back(Scalar::from_string(c.get<std::string>(), f));
    }
    return out;
}

}  // namespace

Json polynomial_to_json(const Polynomial& p) {
    Json j;
    j["variables"] = p.vars()->names();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exps"] = e;
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial polynomial_from_json(const Json& j, const FieldSpec& f) {
    if (!j.contains("variables") || !j.contains("terms"))
        throw ParseError("polynomial: need 'variables' and 'terms'");
    std::vector<std::string> names = j["variables"].get<std::vector<std::string>>();
    VarsPtr vars = make_variables(std::move(names));
    Polynomial p(f, vars);
    for (const auto& t : j["terms"]) {
        Exponents e = t.at("exps").get<Exponents>();
        if (e.size() != vars->size()) throw ParseError("polynomial: exponent vector length");
        p.add_term(e, Scalar::from_string(t.at("coeff").get<std::string>(), f));
    }
    return p;
}

Json algebra_to_json(const StructureAlgebra& a) {
    Json j;
    j["field"] = a.field().str();
    Json basis = Json::array();
    for (const auto& b : a.basis_vectors()) {
        Json e;
        e["label"] = b.label;
        e["parity"] = b.parity;
        basis.push_back(std::move(e));
    }
    j["basis"] = std::move(basis);
    j["unit"] = a.has_unit() ? vec_to_json(*a.unit_coords()) : Json(nullptr);
    Json table = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(vec_to_json(a.table(i, k)));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
}

StructureAlgebra algebra_from_json(const Json& j) {
    for (const char* key : {"field", "basis", "table"})
        if (!j.contains(key))
            throw ParseError(std::string("structure file: missing '") + key + "'");
    const FieldSpec f = FieldSpec::parse(j["field"].get<std::string>());
    std::vector<BasisVector> basis;
    for (const auto& b : j["basis"]) {
        BasisVector bv;
        bv.label = b.at("label").get<std::string>();
        bv.parity = b.at("parity").get<int>();
        if (bv.parity != 0 && bv.parity != 1)
            throw ParseError("structure file: parity must be 0 or 1 (basis '" + bv.label + "')");
        basis.push_back(std::move(bv));
    }
    const std::size_t dim = basis.size();
    if (!j["table"].is_array() || j["table"].size() != dim)
        throw ParseError("structure file: table must have dim rows");
    std::vector<std::vector<Vec>> table;
    for (std::size_t i = 0; i < dim; ++i) {
        const auto& row = j["table"][i];
        if (!row.is_array() || row.size() != dim)
            throw ParseError("structure file: table row " + std::to_string(i) +
                             " must have dim entries");
        std::vector<Vec> out_row;
        for (std::size_t k = 0; k < dim; ++k)
            out_row.push_back(vec_from_json(row[k], f, dim,
                                            ("table[" + std::to_string(i) + "][" +
                                             std::to_string(k) + "]")
                                                .c_str()));
        table.push_back(std::move(out_row));
    }
    std::optional<Vec> unit;
    if (j.contains("unit") && !j["unit"].is_null()) unit = vec_from_json(j["unit"], f, dim, "unit");
    StructureAlgebra alg(f, std::move(basis), std::move(table), std::move(unit));
    std::string why = alg.validate();
    if (!why.empty()) throw ParseError("structure file: " + why);
    return alg;
}

Json element_to_json(const AlgebraElement& e) {
    Json j;
    j["coords"] = vec_to_json(e.coords());
    return j;
}

Vec element_coords_from_json(const Json& j, const FieldSpec& f, std::size_t dim) {
    if (!j.contains("coords")) throw ParseError("element: missing 'coords'");
    return vec_from_json(j["coords"], f, dim, "coords");
}

Json bracket_module_to_json(const BracketModule& m) {
    Json j;
    j["D"] = algebra_to_json(m.D());
    Json v;
    v["dim"] = m.vdim();
    Json labels = Json::array();
    for (std::size_t i = 0; i < m.vdim(); ++i) labels.push_back(m.vlabel(i));
    v["labels"] = std::move(labels);
    Json action = Json::array();
    for (std::size_t i = 0; i < m.D().dim(); ++i) {
        Json mat = Json::array();
        Vec d(m.D().dim(), Scalar::zero(m.field()));
        d[i] = Scalar::one(m.field());
        for (std::size_t r = 0; r < m.vdim(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < m.vdim(); ++c) {
                Vec vc(m.vdim(), Scalar::zero(m.field()));
                vc[c] = Scalar::one(m.field());
                row.push_back(m.act(d, vc)[r].str());
            }
            mat.push_back(std::move(row));
        }
        action.push_back(std::move(mat));
    }
    v["action"] = std::move(action);
    j["V"] = std::move(v);
    Json bracket = Json::array();
    for (std::size_t u = 0; u < m.vdim(); ++u) {
        Json row = Json::array();
        for (std::size_t w = 0; w < m.vdim(); ++w) {
            Vec vu(m.vdim(), Scalar::zero(m.field()));
            Vec vw(m.vdim(), Scalar::zero(m.field()));
            vu[u] = Scalar::one(m.field());
            vw[w] = Scalar::one(m.field());
            row.push_back(vec_to_json(m.bracket(vu, vw)));
        }
        bracket.push_back(std::move(row));
    }
    j["bracket"] = std::move(bracket);
    return j;
}

BracketModule bracket_module_from_json(const Json& j) {
    for (const char* key : {"D", "V", "bracket"})
        if (!j.contains(key)) throw ParseError(std::string("bracket module: missing '") + key + "'");
    StructureAlgebra D = algebra_from_json(j["D"]);
    const FieldSpec f = D.field();
    const auto& v = j["V"];
    const std::size_t vdim = v.at("dim").get<std::size_t>();
    std::vector<std::string> labels;
    if (v.contains("labels"))
        labels = v["labels"].get<std::vector<std::string>>();
    else
        for (std::size_t i = 1; i <= vdim; ++i) labels.push_back("v" + std::to_string(i));
    if (labels.size() != vdim) throw ParseError("bracket module: V labels length");
    std::vector<Mat> action;
    const auto& action_json = v.at("action");
    if (!action_json.is_array() || action_json.size() != D.dim())
        throw ParseError("bracket module: need one action matrix per D basis vector");
    for (const auto& mat : action_json) {
        Mat rows;
        if (!mat.is_array() || mat.size() != vdim)
            throw ParseError("bracket module: action matrix shape");
        for (const auto& row : mat) rows.push_back(vec_from_json(row, f, vdim, "action row"));
        action.push_back(std::move(rows));
    }
    std::vector<std::vector<Vec>> bracket;
    const auto& bj = j["bracket"];
    if (!bj.is_array() || bj.size() != vdim) throw ParseError("bracket module: bracket shape");
    for (const auto& row : bj) {
        if (!row.is_array() || row.size() != vdim) throw ParseError("bracket module: bracket shape");
        std::vector<Vec> out_row;
        for (const auto& entry : row)
            out_row.push_back(vec_from_json(entry, f, D.dim(), "bracket entry"));
        bracket.push_back(std::move(out_row));
    }
    return BracketModule(std::move(D), std::move(labels), std::move(action), std::move(bracket));
}

Json selement_to_json(const SElement& s) {
    Json terms = Json::array();
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        Json t;
        Json pairs = Json::array();
        for (const auto& p : it->first.pairs()) pairs.push_back({p.i, p.j});
        t["pairs"] = std::move(pairs);
        t["coeff"] = it->second.str();
        terms.push_back(std::move(t));
    }
    Json j;
    j["n"] = s.n();
    j["terms"] = std::move(terms);
    return j;
}

SElement selement_from_json(const Json& j, const FieldSpec& f, int n) {
    if (j.contains("n")) n = j["n"].get<int>();
    SElement out(f, n);
    for (const auto& t : j.at("terms")) {
        std::vector<IndexPair> pairs;
        for (const auto& p : t.at("pairs")) {
            if (!p.is_array() || p.size() != 2) throw ParseError("terms: pairs are [i, j]");
            pairs.push_back({p[0].get<int>(), p[1].get<int>()});
        }
        out += straighten(f, n, pairs, Scalar::from_string(t.at("coeff").get<std::string>(), f));
    }
    return out;
}

Json monomial_list_to_json(const std::vector<StandardMonomial>& list) {
    Json out = Json::array();
    for (const auto& m : list) {
        Json pairs = Json::array();
        for (const auto& p : m.pairs()) pairs.push_back({p.i, p.j});
        out.push_back(std::move(pairs));
    }
    return out;
}

Json free_element_to_json(const FreeGammaElement& e) {
    Json j;
    j["m"] = e.signature().m;
    j["n"] = e.signature().n;
    Json nc = Json::array();
    for (const auto& [w, c] : e.nc_part().terms()) {
        Json t;
        Json word = Json::array();
        for (auto g : w) word.push_back(g + 1);
        t["word"] = std::move(word);
        t["coeff"] = c.str();
        nc.push_back(std::move(t));
    }
    j["nc"] = std::move(nc);
    Json even = Json::array();
    for (const auto& [k, c] : e.even_ideal_part()) {
        Json t;
        t["t_exps"] = k.first;
        Json pairs = Json::array();
        for (const auto& p : k.second.pairs()) pairs.push_back({p.i, p.j});
        t["pairs"] = std::move(pairs);
        t["coeff"] = c.str();
        even.push_back(std::move(t));
    }
    j["even"] = std::move(even);
    Json odd = Json::array();
    for (const auto& [k, c] : e.odd_part()) {
        Json t;
        t["t_exps"] = std::get<0>(k);
        Json pairs = Json::array();
        for (const auto& p : std::get<1>(k).pairs()) pairs.push_back({p.i, p.j});
        t["pairs"] = std::move(pairs);
        t["gen"] = std::get<2>(k);
        t["coeff"] = c.str();
        odd.push_back(std::move(t));
    }
    j["odd"] = std::move(odd);
    return j;
}

FreeGammaElement free_element_from_json(const Json& j, const FieldSpec& f) {
    FgSignature sig{j.at("m").get<int>(), j.at("n").get<int>(), f};
    FreeGammaElement out(sig);
    auto read_pairs = [](const Json& pj) {
        std::vector<IndexPair> pairs;
        for (const auto& p : pj) pairs.push_back({p[0].get<int>(), p[1].get<int>()});
        return pairs;
    };
    for (const auto& t : j.at("nc")) {
        Word w;
        for (const auto& g : t.at("word")) {
            const int idx = g.get<int>();
            if (idx < 1 || idx > sig.m) throw ParseError("normal form: word letter out of range");
            w.push_back(static_cast<std::uint32_t>(idx - 1));
        }
        out.add_nc(w, Scalar::from_string(t.at("coeff").get<std::string>(), f));
    }
    for (const auto& t : j.at("even"))
        out.add_even(t.at("t_exps").get<TExps>(), StandardMonomial(read_pairs(t.at("pairs"))),
                     Scalar::from_string(t.at("coeff").get<std::string>(), f));
    for (const auto& t : j.at("odd"))
        out.add_odd(t.at("t_exps").get<TExps>(), StandardMonomial(read_pairs(t.at("pairs"))),
                    t.at("gen").get<int>(), Scalar::from_string(t.at("coeff").get<std::string>(), f));
    return out;
}

Json report_to_json(const IdentityReport& r) {
    Json out = Json::array();
    for (const auto& c : r.checks) {
        Json j;
        j["condition"] = c.name;
        j["pass"] = c.pass;
        if (!c.pass) {
            j["witness"] = c.witness;
            if (c.value) j["value"] = element_to_json(*c.value);
            if (!c.note.empty()) j["note"] = c.note;
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::string selement_text(const SElement& s) { return s.str(); }

std::vector<IndexPair> parse_monomial_text(std::string_view text) {
    std::vector<IndexPair> pairs;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '*'))
            ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw ParseError("monomial: expected an index");
        int v = 0;
        for (std::size_t k = start; k < pos; ++k) v = v * 10 + (text[k] - '0');
        return v;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '1' && pos + 1 == text.size()) return pairs;
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != 'a') throw ParseError("monomial: expected 'a(i,j)'");
        ++pos;
        skip_ws();
        if (pos >= text.size() || text[pos] != '(') throw ParseError("monomial: expected '('");
        ++pos;
        const int i = read_int();
        skip_ws();
        if (pos >= text.size() || text[pos] != ',') throw ParseError("monomial: expected ','");
        ++pos;
        const int j = read_int();
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') throw ParseError("monomial: expected ')'");
        ++pos;
        pairs.push_back({i, j});
        skip_ws();
    }
    return pairs;
}

}  // namespace gammalg
