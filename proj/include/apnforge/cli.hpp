/*
   Copyright 2026 The apnforge Authors

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

// Command-line front end. run() parses a token list, dispatches to the
// library and writes one JSON document (JSON lines for sweep) to the output
// stream or --out. Exit status: 0 computed result, 1 internal error,
// 2 usage or domain error, 3 classification stopped by the search budget.

#ifndef APNFORGE_CLI_HPP
#define APNFORGE_CLI_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "apnforge/apncore.hpp"
#include "apnforge/bipoly.hpp"
#include "apnforge/error.hpp"
#include "apnforge/gf2m.hpp"
#include "apnforge/polyalg.hpp"
#include "apnforge/verify.hpp"

namespace apnforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

using nlohmann::json;

/// "3", "1..4", "1,2,5" or a mix ("1..3,7"). A descending a..b is empty.
inline std::vector<int> parse_range(const std::string& spec) {
    std::vector<int> out;
    auto num = [&](std::string_view s) {
        int v = 0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError("bad range token '" + std::string(s) + "'");
        return v;
    };
    std::string_view rest = spec;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view part = detail::trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (part.empty()) continue;
        const auto dots = part.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(num(part));
        } else {
            const int a = num(part.substr(0, dots)), b = num(part.substr(dots + 2));
            for (int v = a; v <= b; ++v) out.push_back(v);
        }
    }
    return out;
}

namespace detail {

struct Common {
    std::string field = "10";
    int i = -1, s = -1, t = -1;
    std::string delta;
    std::string binomial;
    std::string poly;
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t trials = 4096;
    int max_compositum = 64;
    std::vector<std::string> hints;
    int ext = 1;
    unsigned threads = 0;
};

inline void add_field(CLI::App* c, Common& o) {
    c->add_option("--field", o.field, "field as m or m:0xMODULUS")->capture_default_str();
}

inline void add_binomial(CLI::App* c, Common& o) {
    add_field(c, o);
    c->add_option("--i", o.i, "exponent parameter i");
    c->add_option("--s", o.s, "exponent parameter s");
    c->add_option("--t", o.t, "exponent parameter t");
    c->add_option("--delta", o.delta, "coefficient delta (hex or a^k)");
}

inline void add_out(CLI::App* c, Common& o) { c->add_option("--out", o.out, "write the report to a file"); }

inline void add_budget(CLI::App* c, Common& o) {
    c->add_option("--seed", o.seed, "factorization seed")->capture_default_str();
    c->add_option("--trials", o.trials, "specializations to try")->capture_default_str();
    c->add_option("--max-compositum", o.max_compositum, "largest compositum degree")->capture_default_str();
    c->add_option("--hint", o.hints, "beta values for x^2 + beta x + 1, tried first");
    c->add_option("--threads", o.threads, "worker threads, 0 for APNFORGE_THREADS or all cores")->capture_default_str();
}

inline QuadBinomial binomial_from(const Common& o, const FieldCtx& k) {
    if (o.i < 0 || o.s < 0 || o.t < 0 || o.delta.empty()) {
        throw InvalidArgument("need --i, --s, --t and --delta");
    }
    return QuadBinomial(o.i, o.s, o.t, parse_element(k, o.delta));
}

inline Budget budget_from(const Common& o) {
    Budget b;
    b.trials = o.trials;
    b.max_compositum = o.max_compositum;
    b.seed = o.seed;
    b.hints = o.hints;
    b.threads = apnforge::detail::resolve_threads(o.threads);
    return b;
}

inline void emit(const json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw InvalidArgument("cannot open '" + path + "' for writing");
    f << j.dump(2) << "\n";
}

inline Field extension_of(const FieldCtx& k, int ext) {
    if (ext < 1) throw InvalidArgument("--ext must be positive");
    return make_field(k.degree() * ext);
}

inline std::map<std::string, long long> parse_int_params(const std::vector<std::string>& kv) {
    std::map<std::string, long long> out;
    for (const auto& item : kv) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected name=value, got '" + item + "'");
        long long v = 0;
        const std::string val = item.substr(eq + 1);
        const auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc{} || p != val.data() + val.size()) throw ParseError("bad integer in '" + item + "'");
        out[item.substr(0, eq)] = v;
    }
    return out;
}

inline std::map<std::string, std::string> parse_elem_params(const std::vector<std::string>& kv) {
    std::map<std::string, std::string> out;
    for (const auto& item : kv) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected name=value, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

inline json catalog_json(const CatalogInstance& c) {
    const CatalogFamily& fam = catalog_family(c.family);
    json params = json::object();
    for (const auto& [k, v] : c.params.ints) params[k] = v;
    for (const auto& [k, v] : c.params.elems) params[k] = v.to_hex();
    json cons = json::array();
    for (const auto& con : fam.constraints) cons.push_back(con.printed);
    json errata = json::array();
    for (const auto& e : fam.errata) errata.push_back({{"printed", e.printed}, {"reading", e.reading}});
    return {{"family", c.family},   {"formula", fam.formula}, {"params", params},
            {"field", c.params.field->spec()}, {"poly", format_polyspec(c.poly)}, {"constraints", cons},
            {"errata", errata}};
}

inline json du_json(const DUResult& r) {
    json hist = json::object();
    for (const auto& [k, v] : r.image_sizes) hist[std::to_string(k)] = v;
    return {{"m", r.field_degree}, {"du", r.du}, {"apn", r.is_apn()}, {"image_sizes", hist},
            {"elapsed_ms", r.elapsed_ms}};
}

inline json factor_json(const Factorization& f) {
    json fs = json::array();
    for (const auto& fac : f.factors) {
        fs.push_back({{"poly", format_poly(fac.poly)}, {"degree", fac.poly.degree()}, {"multiplicity", fac.multiplicity}});
    }
    return {{"unit", f.unit.to_hex()}, {"factors", fs}, {"degree_profile", f.degree_profile()}};
}

inline ProjPoint parse_point(const FieldCtx& f, std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("point must look like [x:y:z]");
    const std::string body = s.substr(1, s.size() - 2);
    const auto c1 = body.find(':');
    const auto c2 = c1 == std::string::npos ? c1 : body.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ParseError("point must look like [x:y:z]");
    return ProjPoint(parse_element(f, body.substr(0, c1)), parse_element(f, body.substr(c1 + 1, c2 - c1 - 1)),
                     parse_element(f, body.substr(c2 + 1)));
}

/// Reproduces the worked example for x^3 + a^374 x^36 on GF(2^10).
inline json example2_report(const Common& o) {
    const Field K = make_field(10, Gf2Poly::from_hex("0x409"));
    const QuadBinomial f(1, 2, 3, K->gen_power(374));
    const CurveH H = construct_H(f);
    json j;
    j["schema"] = "apnforge.example2/1";
    j["field"] = K->spec();
    j["f"] = "x^3 + a^374*x^36";
    j["params"] = {{"i", f.i}, {"s", f.s}, {"t", f.t}, {"delta", "a^374"}};
    j["h_degree"] = H.h.total_degree();
    j["h_terms"] = H.h.size();
    const auto m_inf = multiplicity_at(H.h, ProjPoint(K->one(), K->zero(), K->zero()));
    j["multiplicity_1_0"] = m_inf;
    j["multiplicity_0_1"] = multiplicity_at(H.h, ProjPoint(K->zero(), K->one(), K->zero()));
    json table = json::array();
    for (const auto& row : infinity_multiplicity_table(f)) {
        table.push_back({{"class", row.point_class}, {"point", row.point}, {"r", row.r},
                         {"computed", row.computed}, {"predicted", row.predicted}});
    }
    j["infinity_table"] = table;

    const UniPoly g17 = parse_poly(*K, "x^2 + a^17*x + 1");
    const auto s17 = substitute_y(H.h, g17);
    j["k_witness"] = {{"beta", "a^17"}, {"g", format_poly(g17)}, {"degree", s17.value.degree()},
                      {"irreducible", is_irreducible(s17.value)}};
    const UniPoly g5 = parse_poly(*K, "x^2 + a^5*x + 1");
    const auto s5 = substitute_y(H.h, g5);
    const auto prof = factor_univariate(s5.value, o.seed).degree_profile();
    j["specialized_degree"] = s5.value.degree();
    j["obstruction"] = {{"beta", "a^5"}, {"g", format_poly(g5)}, {"degree", s5.value.degree()}, {"profile", prof},
                        {"factor_degree", prof.empty() ? 0 : prof.back()}};
    j["obstruction_factor_degree"] = prof.empty() ? 0 : prof.back();

    Budget b = budget_from(o);
    b.hints = {"a^17", "a^5"};
    const AIVerdict v = decide_absolute_irreducibility(f, b);
    json pats = json::array();
    for (const auto& p : v.patterns) {
        pats.push_back({{"n", p.n}, {"factor_degree", p.factor_degree}, {"extension", "GF(2^" + std::to_string(10 * p.n) + ")"},
                        {"eliminated_by", p.method}, {"reason", p.reason}});
    }
    j["patterns"] = pats;
    j["ai_verdict"] = to_string(v.kind);
    j["replay"] = replay(H.h, v, &f, o.seed);
    const ClassificationReport rep = classify(f, b);
    j["verdict"] = to_string(rep.verdict);
    j["criterion"] = rep.criterion;
    j["du_on_K"] = differential_uniformity(to_polyspec(f), *K).du;
    return j;
}

struct SweepTuple {
    Field field;
    int i, s, t;
    FieldElem delta;
};

inline json sweep_line(const SweepTuple& tp, const Budget& b) {
    json base = {{"field", tp.field->spec()}, {"i", tp.i}, {"s", tp.s}, {"t", tp.t}, {"delta", tp.delta.to_hex()}};
    try {
        const QuadBinomial f(tp.i, tp.s, tp.t, tp.delta);
        const auto r = classify(f, b);
        return {{"params", base},
                {"verdict", to_string(r.verdict)},
                {"criterion", r.criterion},
                {"survivors", r.survivors},
                {"budget_used", r.budget_used},
                {"budget_exhausted", r.budget_exhausted}};
    } catch (const std::exception& e) {
        return {{"params", base}, {"error", e.what()}};
    }
}

}  // namespace detail

/// Parses and runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"apnforge: APN binomials and absolute irreducibility of their curves"};
    app.require_subcommand(1);
    detail::Common o;

    auto* classify_c = app.add_subcommand("classify", "classify a quadratic binomial over its field");
    detail::add_binomial(classify_c, o);
    classify_c->add_option("--binomial", o.binomial, "raw binomial 'c*x^e1 + d*x^e2', normalized first");
    detail::add_budget(classify_c, o);
    detail::add_out(classify_c, o);

    auto* du_c = app.add_subcommand("du", "differential uniformity by brute force");
    detail::add_binomial(du_c, o);
    du_c->add_option("--poly", o.poly, "polynomial function 'c*x^e + ...'");
    du_c->add_option("--ext", o.ext, "evaluate on GF(2^(m*ext))")->capture_default_str();
    detail::add_out(du_c, o);

    bool swap = false;
    auto* cp_c = app.add_subcommand("count-points", "off-diagonal zeros of Delta on an extension");
    detail::add_binomial(cp_c, o);
    cp_c->add_option("--poly", o.poly, "quadratic polynomial function");
    cp_c->add_option("--ext", o.ext, "count on GF(2^(m*ext))")->capture_default_str();
    cp_c->add_flag("--swap", swap, "slice along x instead of y");
    detail::add_out(cp_c, o);

    std::string what = "all";
    auto* con_c = app.add_subcommand("construct", "build Delta, F, U and H for a binomial");
    detail::add_binomial(con_c, o);
    con_c->add_option("--what", what, "delta, F, U, H or all")
        ->check(CLI::IsMember({"delta", "F", "U", "H", "all"}))
        ->capture_default_str();
    detail::add_out(con_c, o);

    auto* irr_c = app.add_subcommand("irreducible", "irreducibility of a univariate polynomial");
    detail::add_field(irr_c, o);
    irr_c->add_option("--poly", o.poly, "polynomial 'c*x^k + ...'")->required();
    detail::add_out(irr_c, o);

    auto* fac_c = app.add_subcommand("factor", "factor a univariate polynomial");
    detail::add_field(fac_c, o);
    fac_c->add_option("--poly", o.poly, "polynomial 'c*x^k + ...'")->required();
    fac_c->add_option("--seed", o.seed, "splitting seed")->capture_default_str();
    detail::add_out(fac_c, o);

    std::string curve, point, point_field;
    bool table = false;
    auto* mul_c = app.add_subcommand("multiplicity", "multiplicity of a projective point on a curve");
    detail::add_binomial(mul_c, o);
    mul_c->add_option("--curve", curve, "curve polynomial in x, y (default: H of the binomial)");
    mul_c->add_option("--point", point, "point [x:y:z]");
    mul_c->add_option("--point-field", point_field, "field of the point coordinates (an extension)");
    mul_c->add_flag("--table", table, "multiplicities at all points at infinity, with predictions");
    detail::add_out(mul_c, o);

    std::string family;
    std::vector<std::string> params, elems;
    std::string cat_field;
    bool list = false, with_du = false;
    auto* cat_c = app.add_subcommand("catalog", "instantiate a known APN family");
    cat_c->add_option("--family", family, "family id");
    cat_c->add_option("--param", params, "integer parameter name=value");
    cat_c->add_option("--elem", elems, "element parameter name=literal");
    cat_c->add_option("--field", cat_field, "field m:0xMODULUS (default modulus otherwise)");
    cat_c->add_flag("--list", list, "list families and constraints");
    cat_c->add_flag("--du", with_du, "also compute the differential uniformity");
    detail::add_out(cat_c, o);

    int hk = 0, hi = 0;
    auto* hex_c = app.add_subcommand("hexratio", "fraction of c making the hexanomial's p irreducible");
    hex_c->add_option("--k", hk, "k (field GF(2^(2k)))")->required();
    hex_c->add_option("--i", hi, "i with gcd(i, k) = 1")->required();
    detail::add_out(hex_c, o);

    std::string nrange = "1..8";
    auto* weil_c = app.add_subcommand("weil-probe", "off-diagonal zero counts along an extension tower");
    detail::add_binomial(weil_c, o);
    weil_c->add_option("--n", nrange, "extension degrees, e.g. 2..12")->capture_default_str();
    detail::add_out(weil_c, o);

    auto* ex2_c = app.add_subcommand("example2", "worked example: x^3 + a^374 x^36 on GF(2^10)");
    ex2_c->add_option("--seed", o.seed, "factorization seed")->capture_default_str();
    detail::add_out(ex2_c, o);

    std::string fields = "6", irange = "1..4", srange = "1..3", trange = "1..4", format = "json";
    int deltas = 1;
    auto* sw_c = app.add_subcommand("sweep", "classify every tuple of a parameter grid");
    sw_c->add_option("--fields", fields, "comma-separated field specs")->capture_default_str();
    sw_c->add_option("--i", irange, "range for i")->capture_default_str();
    sw_c->add_option("--s", srange, "range for s")->capture_default_str();
    sw_c->add_option("--t", trange, "range for t")->capture_default_str();
    sw_c->add_option("--deltas", deltas, "random delta values per tuple")->capture_default_str();
    sw_c->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    detail::add_budget(sw_c, o);
    detail::add_out(sw_c, o);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::Success&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (classify_c->parsed()) {
            const Field K = parse_field_spec(o.field);
            std::optional<Normalized> norm;
            if (!o.binomial.empty()) {
                const auto terms = apnforge::detail::parse_terms(*K, o.binomial);
                if (terms.size() != 2) throw InvalidArgument("--binomial needs exactly two terms");
                norm = normalize_binomial(terms[0].first, terms[0].second, terms[1].first, terms[1].second);
            }
            const QuadBinomial f = norm ? norm->f : detail::binomial_from(o, *K);
            ClassificationReport r = classify(f, detail::budget_from(o));
            if (norm) {
                r.normalization = json{{"input", o.binomial},
                                       {"shift", norm->trace.shift},
                                       {"swapped", norm->trace.swapped},
                                       {"scale", norm->trace.scale.to_hex()}};
            }
            detail::emit(r.to_json(), o.out, out);
            return r.verdict == Verdict::Undetermined && r.budget_exhausted ? kExitBudget : kExitOk;
        }
        if (du_c->parsed()) {
            const Field K = parse_field_spec(o.field);
            const Field L = detail::extension_of(*K, o.ext);
            const PolySpec p = o.poly.empty() ? to_polyspec(detail::binomial_from(o, *K))
                                              : make_polyspec(*K, apnforge::detail::parse_terms(*K, o.poly));
            json j = detail::du_json(differential_uniformity(p, *L));
            j["family"] = "custom";
            j["params"] = {{"poly", format_polyspec(p)}, {"field", K->spec()}, {"ext", o.ext}};
            detail::emit(j, o.out, out);
            return kExitOk;
        }
        if (cp_c->parsed()) {
            const Field K = parse_field_spec(o.field);
            const Field L = detail::extension_of(*K, o.ext);
            const PointCount pc = o.poly.empty()
                                      ? count_points_off_diagonal(detail::binomial_from(o, *K), *L, swap)
                                      : count_points_off_diagonal(
                                            make_polyspec(*K, apnforge::detail::parse_terms(*K, o.poly)), *L, swap);
            detail::emit({{"schema", "apnforge.points/1"}, {"field", L->spec()}, {"n", pc.extension_degree},
                          {"count", pc.count}, {"swap", swap}},
                         o.out, out);
            return kExitOk;
        }
        if (con_c->parsed()) {
            const Field K = parse_field_spec(o.field);
            const QuadBinomial f = detail::binomial_from(o, *K);
            json j = {{"field", K->spec()}, {"i", f.i}, {"s", f.s}, {"t", f.t}, {"delta", f.delta.to_hex()}};
            auto put = [&](const char* name, const BiPoly& p) {
                j[name] = {{"degree", p.total_degree()}, {"terms", p.size()}, {"text", format_bipoly(p)},
                           {"coeffs", to_json(p)}};
            };
            if (what == "delta" || what == "all") put("delta_poly", delta_poly(f));
            if (what == "F" || what == "all") put("F", construct_F(f));
            if (what == "U" || what == "all") put("U", construct_U(f));
            if (what == "H" || what == "all") {
                const CurveH H = construct_H(f);
                put("H", H.h);
                json comps = json::object();
                for (const auto& [d, c] : H.components) comps[std::to_string(d)] = c.size();
                j["components"] = comps;
                const auto [lo, hi2] = predicted_component_degrees(f);
                j["predicted_component_degrees"] = {lo, hi2};
            }
            detail::emit(j, o.out, out);
            return kExitOk;
        }
        if (irr_c->parsed()) {
            const Field K = parse_field_spec(o.field);
            const UniPoly p = parse_poly(*K, o.poly);
            detail::emit({{"poly", format_poly(p)}, {"degree", p.degree()}, {"irreducible", is_irreducible(p)}}, o.out,
                         out);
            return kExitOk;
        }
        if (fac_c->parsed()) {
            const Field K = parse_field_spec(o.field);
            const UniPoly p = parse_poly(*K, o.poly);
            json j = detail::factor_json(factor_univariate(p, o.seed));
            j["poly"] = format_poly(p);
            detail::emit(j, o.out, out);
            return kExitOk;
        }
        if (mul_c->parsed()) {
            const Field K = parse_field_spec(o.field);
            if (table) {
                const QuadBinomial f = detail::binomial_from(o, *K);
                json rows = json::array();
                for (const auto& row : infinity_multiplicity_table(f)) {
                    rows.push_back({{"class", row.point_class}, {"point", row.point}, {"point_field", row.point_field},
                                    {"b_degree", row.b_degree}, {"r", row.r}, {"computed", row.computed},
                                    {"predicted", row.predicted}});
                }
                detail::emit({{"table", rows}}, o.out, out);
                return kExitOk;
            }
            if (point.empty()) throw InvalidArgument("need --point or --table");
            const BiPoly h = curve.empty() ? construct_H(detail::binomial_from(o, *K)).h : parse_bipoly(*K, curve);
            const Field P = point_field.empty() ? nullptr : parse_field_spec(point_field);
            const ProjPoint pt = detail::parse_point(P ? *P : *K, point);
            detail::emit({{"point", pt.to_string()}, {"point_field", pt.field().spec()}, {"multiplicity", multiplicity_at(h, pt)}},
                         o.out, out);
            return kExitOk;
        }
        if (cat_c->parsed()) {
            if (list) {
                json fams = json::array();
                for (const auto& fam : catalog()) {
                    json cons = json::array();
                    for (const auto& c : fam.constraints) cons.push_back(c.printed);
                    fams.push_back({{"family", fam.id}, {"formula", fam.formula}, {"int_params", fam.int_params},
                                    {"elem_params", fam.elem_params}, {"constraints", cons}});
                }
                detail::emit(fams, o.out, out);
                return kExitOk;
            }
            if (family.empty()) throw InvalidArgument("need --family or --list");
            CatalogParams cp;
            cp.ints = detail::parse_int_params(params);
            cp.elems = detail::parse_elem_params(elems);
            if (!cat_field.empty()) cp.field = cat_field;
            const CatalogInstance inst = catalog_instantiate(family, cp);
            json j = detail::catalog_json(inst);
            if (with_du) {
                const DUResult r = differential_uniformity(inst.poly);
                j["m"] = r.field_degree;
                j["du"] = r.du;
                j["apn"] = r.is_apn();
                j["elapsed_ms"] = r.elapsed_ms;
            }
            detail::emit(j, o.out, out);
            return kExitOk;
        }
        if (hex_c->parsed()) {
            const HexRatio r = hexanomial_ratio(hk, hi);
            detail::emit({{"k", r.k}, {"i", r.i}, {"m", 2 * r.k}, {"irreducible", r.irreducible}, {"rootless", r.rootless},
                          {"total", r.total}, {"ratio", r.ratio()}},
                         o.out, out);
            return kExitOk;
        }
        if (weil_c->parsed()) {
            const Field K = parse_field_spec(o.field);
            const QuadBinomial f = detail::binomial_from(o, *K);
            const WeilProbe w = weil_growth_probe(f, *K, parse_range(nrange));
            json counts = json::array();
            for (const auto& c : w.counts) counts.push_back({{"n", c.extension_degree}, {"count", c.count}});
            json j = {{"field", K->spec()}, {"counts", counts}, {"violations", w.violations}};
            j["first_nonzero"] = w.first_nonzero ? json(*w.first_nonzero) : json(nullptr);
            j["persistent_from"] = w.persistent_from ? json(*w.persistent_from) : json(nullptr);
            detail::emit(j, o.out, out);
            return kExitOk;
        }
        if (ex2_c->parsed()) {
            detail::emit(detail::example2_report(o), o.out, out);
            return kExitOk;
        }
        if (sw_c->parsed()) {
            std::vector<detail::SweepTuple> tuples;
            const auto is = parse_range(irange), ss = parse_range(srange), ts = parse_range(trange);
            std::vector<Field> keep;
            std::string_view rest = fields;
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                const auto part = apnforge::detail::trim(rest.substr(0, comma));
                rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
                if (part.empty()) continue;
                const Field K = parse_field_spec(part);
                keep.push_back(K);
                std::mt19937_64 rng(o.seed + static_cast<std::uint64_t>(K->degree()));
                std::vector<FieldElem> ds;
                for (int d = 0; d < deltas; ++d) ds.push_back(K->random_nonzero(rng));
                for (int i : is) {
                    for (int s : ss) {
                        for (int t : ts) {
                            for (const auto& d : ds) tuples.push_back({K, i, s, t, d});
                        }
                    }
                }
            }
            Budget b = detail::budget_from(o);
            b.threads = 1;
            std::ofstream file;
            if (!o.out.empty()) {
                file.open(o.out);
                if (!file) throw InvalidArgument("cannot open '" + o.out + "' for writing");
            }
            std::ostream& dst = o.out.empty() ? out : file;
            if (tuples.empty()) return kExitOk;
            if (format == "csv") dst << "field,i,s,t,delta,verdict,criterion,budget_used,error\n";
            std::map<std::string, std::map<std::string, std::uint64_t>> tally;
            const std::size_t window = apnforge::detail::resolve_threads(o.threads);
            for (std::size_t lo = 0; lo < tuples.size(); lo += window) {
                const std::size_t hi2 = std::min(tuples.size(), lo + window);
                std::vector<std::future<json>> fut;
                for (std::size_t k = lo; k < hi2; ++k) {
                    fut.push_back(std::async(std::launch::async, detail::sweep_line, std::cref(tuples[k]), std::cref(b)));
                }
                for (auto& fu : fut) {
                    const json line = fu.get();
                    if (line.contains("error")) {
                        ++tally["error"]["error"];
                    } else {
                        ++tally[line["verdict"].get<std::string>()][line["criterion"].get<std::string>()];
                    }
                    if (format == "csv") {
                        const auto& p = line["params"];
                        dst << p["field"].get<std::string>() << ',' << p["i"] << ',' << p["s"] << ',' << p["t"] << ','
                            << p["delta"].get<std::string>() << ',' << line.value("verdict", "") << ','
                            << line.value("criterion", "") << ',' << line.value("budget_used", std::uint64_t{0}) << ','
                            << '"' << line.value("error", "") << '"' << "\n";
                    } else {
                        dst << line.dump() << "\n";
                    }
                }
            }
            if (format == "json") dst << json{{"summary", tally}, {"tuples", tuples.size()}}.dump() << "\n";
            return kExitOk;
        }
    } catch (const BudgetExhausted& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FieldMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Inapplicable& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DivisionByZero& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return run(args, out, err);
}

}  // namespace apnforge::cli

#endif  // APNFORGE_CLI_HPP
