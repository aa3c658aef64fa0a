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

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gammalg/builtins.hpp"
#include "gammalg/serialize.hpp"

namespace {

using namespace gammalg;

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string field = "q";
    std::string format = "json";
    FieldSpec parsed_field() const { return FieldSpec::parse(field); }
    bool text() const { return format == "text"; }
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

Json parse_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return load_json_file(arg.substr(1));
    try {
        return Json::parse(arg);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad inline JSON: ") + e.what());
    }
}

StructureAlgebra load_algebra(const std::string& input, const std::string& builtin,
                              const FieldSpec& f, const std::string& v2) {
    if (!input.empty() && !builtin.empty())
        throw ParseError("give either --input or --builtin, not both");
    if (!builtin.empty()) {
        std::optional<Scalar> vsq;
        if (!v2.empty()) vsq = Scalar::from_string(v2, f);
        return make_builtin(builtin, f, vsq);
    }
    if (input.empty()) throw ParseError("need --input <file> or --builtin <name>");
    return algebra_from_json(load_json_file(input));
}

void render_report(const IdentityReport& report, const Options& opt) {
    if (opt.text()) {
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "pass  " : "FAIL  ") << c.name;
            if (!c.pass) {
                std::cout << "  witness (";
                for (std::size_t i = 0; i < c.witness.size(); ++i)
                    std::cout << (i ? ", " : "") << c.witness[i];
                std::cout << ")";
                if (c.value) std::cout << " -> " << c.value->str();
                if (!c.note.empty()) std::cout << "  [" << c.note << "]";
            }
            std::cout << "\n";
        }
    } else {
        emit(report_to_json(report));
    }
}

int cmd_mul(const Options& opt, const std::string& input, const std::string& builtin,
            const std::string& v2, const std::string& lhs, const std::string& rhs) {
    const FieldSpec f = opt.parsed_field();
    StructureAlgebra alg = load_algebra(input, builtin, f, v2);
    AlgebraElement a = alg.element(element_coords_from_json(parse_json_arg(lhs), f, alg.dim()));
    AlgebraElement b = alg.element(element_coords_from_json(parse_json_arg(rhs), f, alg.dim()));
    AlgebraElement c = a * b;
    if (opt.text())
        std::cout << c.str() << "\n";
    else
        emit(element_to_json(c));
    return kExitOk;
}

int cmd_check(const Options& opt, const std::string& input, const std::string& builtin,
              const std::string& v2, const std::string& identity) {
    const FieldSpec f = opt.parsed_field();
    StructureAlgebra alg = load_algebra(input, builtin, f, v2);
    IdentityReport report = check_identity(alg, parse_identity_kind(identity));
    render_report(report, opt);
    return report.pass() ? kExitOk : kExitMathFail;
}

int cmd_basis(const Options& opt, int n, int degree, int filter_m) {
    std::vector<StandardMonomial> monos = filter_m > 0
                                              ? enumerate_basis_filtered(n, filter_m, degree)
                                              : enumerate_basis(n, degree);
    if (opt.text()) {
        for (const auto& m : monos) std::cout << m.str() << "\n";
        std::cout << "count " << monos.size() << "\n";
        return kExitOk;
    }
    Json j;
    j["n"] = n;
    j["degree"] = degree;
    if (filter_m > 0) j["filter_m"] = filter_m;
    j["count"] = monos.size();
    j["monomials"] = monomial_list_to_json(monos);
    emit(j);
    return kExitOk;
}

int cmd_straighten(const Options& opt, const std::string& monomial, int n) {
    const FieldSpec f = opt.parsed_field();
    std::vector<IndexPair> pairs = parse_monomial_text(monomial);
    if (n == 0)
        for (const auto& p : pairs) n = std::max({n, p.i, p.j});
    if (n < 2) n = 2;
    SElement s = straighten(f, n, pairs);
    if (opt.text())
        std::cout << selement_text(s) << "\n";
    else
        emit(selement_to_json(s));
    return kExitOk;
}

int cmd_envelope(const Options& opt, const std::string& input, const std::string& builtin,
                 const std::string& v2, const std::string& kind, int grassmann_k) {
    const FieldSpec f = opt.parsed_field();
    StructureAlgebra alg = load_algebra(input, builtin, f, v2);
    if (kind == "b42") {
        GammaAlgebra g = GammaAlgebra::analyze(std::move(alg));
        if (!g.passes()) {
            render_report(g.report(), opt);
            return kExitMathFail;
        }
        B42Envelope env = envelope_b42(g);
        emit(algebra_to_json(*env.alg));
        return kExitOk;
    }
    if (kind == "grassmann") {
        StructureAlgebra G = make_grassmann(f, static_cast<unsigned>(grassmann_k));
        emit(algebra_to_json(grassmann_envelope(G, alg)));
        return kExitOk;
    }
    throw ParseError("envelope kind must be 'b42' or 'grassmann'");
}

int cmd_iso_check(const Options& opt, const std::string& input, const std::string& builtin,
                  const std::string& v2) {
    const FieldSpec f = opt.parsed_field();
    GammaAlgebra g = GammaAlgebra::analyze(load_algebra(input, builtin, f, v2));
    Json out;
    out["field"] = f.str();
    out["conditions"] = report_to_json(g.report());
    if (!g.passes()) {
        out["pass"] = false;
        if (opt.text())
            render_report(g.report(), opt);
        else
            emit(out);
        return kExitMathFail;
    }
    CoordinatizedM2 coord = gamma_to_m2(g);
    B42Envelope env = envelope_b42(g);
    out["gamma0_dim"] = g.even().size();
    out["gamma1_dim"] = g.odd().size();
    out["m2d_dim"] = coord.alg->dim();
    out["envelope_dim"] = env.alg->dim();
    out["bracket_module"] = bracket_module_to_json(coord.module);
    IdentityReport left = check_identity(*coord.alg, IdentityKind::LeftAlternative);
    IdentityReport right = check_identity(*coord.alg, IdentityKind::RightAlternative);
    out["m2d_left_alternative"] = left.pass();
    out["m2d_right_alternative"] = right.pass();
    AlgebraMorphism phi = phi_iso(g, coord, env);
    out["phi_multiplicative"] = true;
    out["phi_bijective"] = true;
    Json matrix = Json::array();
    for (const auto& row : phi.matrix) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(c.str());
        matrix.push_back(std::move(r));
    }
    out["phi_matrix"] = std::move(matrix);
    const bool pass = left.pass() && right.pass();
    out["pass"] = pass;
    if (opt.text()) {
        std::cout << "gamma conditions: pass\n";
        std::cout << "M2(D)+V^2 dim " << coord.alg->dim() << ", envelope dim " << env.alg->dim()
                  << "\n";
        std::cout << "alternativity: " << (pass ? "pass" : "FAIL") << "\n";
        std::cout << "phi: multiplicative, bijective\n";
    } else {
        emit(out);
    }
    return pass ? kExitOk : kExitMathFail;
}

int cmd_eval(const Options& opt, const std::string& expr_text, const std::string& target_path,
             const std::string& target_builtin, const std::string& v2, const std::string& assign,
             int m_override, int n_override) {
    const FieldSpec f = opt.parsed_field();
    int m = 0, n = 0;
    ExprPtr expr = parse_expression(expr_text, m, n);
    if (m_override > 0) m = std::max(m, m_override);
    if (n_override > 0) n = std::max(n, n_override);
    FgSignature sig{m, n, f};
    FreeGammaElement nf = fg_normal_form(expr, sig);
    if (target_path.empty() && target_builtin.empty()) {
        if (opt.text())
            std::cout << nf.str() << "\n";
        else
            emit(free_element_to_json(nf));
        return kExitOk;
    }
    GammaAlgebra g = GammaAlgebra::analyze(load_algebra(target_path, target_builtin, f, v2));
    g.require_verified();
    // --assign "v1=x,v2=y,t1=0": target basis label or 0 per generator.
    std::vector<AlgebraElement> even_images(static_cast<std::size_t>(m), g.carrier().zero());
    std::vector<AlgebraElement> odd_images(static_cast<std::size_t>(n), g.carrier().zero());
    std::string token;
    std::stringstream ss(assign);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw ParseError("bad assignment '" + token + "'");
        const std::string gen = token.substr(0, eq);
        const std::string img = token.substr(eq + 1);
        AlgebraElement value = g.carrier().zero();
        if (img != "0") {
            auto idx = g.carrier().index_of(img);
            if (!idx) throw ParseError("no basis element labeled '" + img + "' in the target");
            value = g.carrier().basis_element(*idx);
        }
        if (gen.size() < 2 || (gen[0] != 't' && gen[0] != 'v'))
            throw ParseError("assignments name generators t<k> or v<k>");
        const int idx = std::stoi(gen.substr(1));
        if (gen[0] == 't') {
            if (idx < 1 || idx > m) throw ParseError("assignment to unknown generator " + gen);
            even_images[static_cast<std::size_t>(idx - 1)] = value;
        } else {
            if (idx < 1 || idx > n) throw ParseError("assignment to unknown generator " + gen);
            odd_images[static_cast<std::size_t>(idx - 1)] = value;
        }
    }
    AlgebraElement result = fg_evaluate(nf, g, even_images, odd_images);
    if (opt.text())
        std::cout << result.str() << "\n";
    else
        emit(element_to_json(result));
    return kExitOk;
}

int cmd_decompose(const Options& opt, const std::string& input, const std::string& builtin,
                  const std::string& v2, const std::string& embedding) {
    const FieldSpec f = opt.parsed_field();
    StructureAlgebra alg = load_algebra(input, builtin, f, v2);
    std::array<Vec, 4> units;
    if (!embedding.empty()) {
        Json j = parse_json_arg(embedding);
        const char* keys[4] = {"e11", "e12", "e21", "e22"};
        for (int k = 0; k < 4; ++k)
            units[static_cast<std::size_t>(k)] =
                element_coords_from_json(Json{{"coords", j.at(keys[k])}}, f, alg.dim());
    } else {
        const char* labels[4] = {"e11", "e12", "e21", "e22"};
        for (int k = 0; k < 4; ++k) {
            auto idx = alg.index_of(labels[k]);
            if (!idx)
                throw ParseError("no basis labeled e11..e22; give --embedding with coordinates");
            Vec v(alg.dim(), Scalar::zero(f));
            v[*idx] = Scalar::one(f);
            units[static_cast<std::size_t>(k)] = std::move(v);
        }
    }
    M2Decomposition dec = decompose_m2_bimodule(alg, units);
    Json out;
    out["va_dim"] = dec.va_basis.size();
    out["vc_dim"] = dec.vc_basis.size();
    out["complementary"] = dec.complementary;
    Json va = Json::array(), vc = Json::array();
    for (const auto& v : dec.va_basis) {
        Json row = Json::array();
        for (const auto& c : v) row.push_back(c.str());
        va.push_back(std::move(row));
    }
    for (const auto& v : dec.vc_basis) {
        Json row = Json::array();
        for (const auto& c : v) row.push_back(c.str());
        vc.push_back(std::move(row));
    }
    out["va_basis"] = std::move(va);
    out["vc_basis"] = std::move(vc);
    if (opt.text()) {
        std::cout << "V_a dim " << dec.va_basis.size() << ", V_c dim " << dec.vc_basis.size()
                  << (dec.complementary ? " (complementary)" : " (NOT complementary)") << "\n";
    } else {
        emit(out);
    }
    return dec.complementary ? kExitOk : kExitMathFail;
}

int cmd_dims(const Options& opt, int m, int n, int weight, int envelope_cap) {
    Json out;
    out["m"] = m;
    out["n"] = n;
    if (envelope_cap >= 0) {
        Corollary1Envelope env = corollary1_envelope(opt.parsed_field(), m, n, envelope_cap);
        out["weight_cap"] = envelope_cap;
        Json dims = Json::array();
        for (const auto& [w, d] : env.graded_dims) dims.push_back({w, d});
        out["envelope_graded_dims"] = std::move(dims);
        out["envelope_dim"] = env.alg->dim();
        if (opt.text()) {
            for (const auto& [w, d] : env.graded_dims)
                std::cout << "weight " << w << ": " << d << "\n";
            std::cout << "total " << env.alg->dim() << "\n";
        } else {
            emit(out);
        }
        return kExitOk;
    }
    out["weight"] = weight;
    out["dimension"] = fg_dimensions(m, n, weight);
    if (opt.text())
        std::cout << fg_dimensions(m, n, weight) << "\n";
    else
        emit(out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for alternative M2-algebras, Gamma-algebras, and "
                 "Grassmannian normal forms"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--field", opt.field, "ground field: q or fp:<p>")->capture_default_str();
    app.add_option("--format", opt.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string input, builtin, v2, lhs, rhs, identity, monomial, expr, assign, target,
        target_builtin, embedding, kind = "b42";
    int n = 0, degree = 0, filter_m = 0, m_opt = 0, weight = 0, grassmann_k = 0,
        envelope_cap = -1, n_override = 0;

    auto add_algebra_opts = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "structure-constant JSON file");
        cmd->add_option("--builtin", builtin,
                        "builtin algebra: M2, B42, B12, Cay-split-null, octonion-split, "
                        "grassmann(k)");
        cmd->add_option("--v2", v2, "v^2 parameter for octonion-split (default 1)");
    };

    CLI::App* mul = app.add_subcommand("mul", "multiply two elements of an algebra");
    add_algebra_opts(mul);
    mul->add_option("--lhs", lhs, "element JSON (inline or @file)")->required();
    mul->add_option("--rhs", rhs, "element JSON (inline or @file)")->required();

    CLI::App* check = app.add_subcommand("check-identities", "exhaustive identity verification");
    add_algebra_opts(check);
    check->add_option("--identity", identity, "identity kind")->required();

    CLI::App* basis = app.add_subcommand("basis", "standard monomial bases of S_n");
    basis->add_option("--n", n, "ambient size")->required();
    basis->add_option("--degree", degree, "monomial degree")->required();
    basis->add_option("--filter-m", filter_m, "restrict to B_{n,m} (j1 >= m)");

    CLI::App* str_cmd = app.add_subcommand("straighten", "normal form of an a-monomial");
    str_cmd->add_option("monomial", monomial, "e.g. \"a(1,4)a(2,3)\"")->required();
    str_cmd->add_option("--n", n_override, "ambient size (default: max index)");

    CLI::App* env_cmd = app.add_subcommand("envelope", "Gamma-envelope or Grassmann envelope");
    add_algebra_opts(env_cmd);
    env_cmd->add_option("--kind", kind, "b42 (default) or grassmann");
    env_cmd->add_option("--grassmann-k", grassmann_k, "generators of G for --kind grassmann");

    CLI::App* iso = app.add_subcommand("iso-check", "verify a Gamma file and the coordinatization");
    add_algebra_opts(iso);

    CLI::App* eval = app.add_subcommand("eval", "evaluate a free-algebra expression");
    eval->add_option("expr", expr, "expression over t<k>, v<k>")->required();
    eval->add_option("--target", target, "Gamma structure file");
    eval->add_option("--target-builtin", target_builtin, "builtin Gamma target");
    eval->add_option("--v2", v2, "v^2 parameter when the target is octonion-split");
    eval->add_option("--assign", assign, "generator images, e.g. \"v1=x,v2=y\"");
    eval->add_option("--m", m_opt, "number of even generators (default: inferred)");
    eval->add_option("--n", n, "number of odd generators (default: inferred)");

    CLI::App* dec = app.add_subcommand("decompose", "A = V_a + V_c against an embedded M2");
    add_algebra_opts(dec);
    dec->add_option("--embedding", embedding,
                    "JSON {e11: [...], e12: [...], e21: [...], e22: [...]} (inline or @file)");

    CLI::App* dims = app.add_subcommand("dims", "graded dimensions of free objects");
    dims->add_option("--m", m_opt, "even generators")->required();
    dims->add_option("--n", n, "odd generators")->required();
    dims->add_option("--weight", weight, "weight of the component");
    dims->add_option("--envelope-cap", envelope_cap, "emit envelope graded dims up to this cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*mul) return cmd_mul(opt, input, builtin, v2, lhs, rhs);
        if (*check) return cmd_check(opt, input, builtin, v2, identity);
        if (*basis) return cmd_basis(opt, n, degree, filter_m);
        if (*str_cmd) return cmd_straighten(opt, monomial, n_override);
        if (*env_cmd) return cmd_envelope(opt, input, builtin, v2, kind, grassmann_k);
        if (*iso) return cmd_iso_check(opt, input, builtin, v2);
        if (*eval) return cmd_eval(opt, expr, target, target_builtin, v2, assign, m_opt, n);
        if (*dec) return cmd_decompose(opt, input, builtin, v2, embedding);
        if (*dims) return cmd_dims(opt, m_opt, n, weight, envelope_cap);
    } catch (const CheckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
