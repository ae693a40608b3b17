// Copyright 2026 The as90 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "as90/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "as90/artin_schreier.hpp"
#include "as90/bigpoly.hpp"
#include "as90/error.hpp"
#include "as90/field.hpp"
#include "as90/hilbert90.hpp"
#include "as90/periodicity.hpp"
#include "json.hpp"

namespace as90::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace as = artin_schreier;

/// Root sets up to this size are listed in full; larger ones print x only.
constexpr u64 kListedRoots = 64;

struct FieldOptions {
    u64 p = 0;
    unsigned n = 0;
    unsigned f = 1;
    std::string modulus;
    std::string elem_format = "poly";

    FieldCtx make() const {
        std::optional<PrimePoly> m;
        if (!modulus.empty()) m = elem_format == "coeffs" ? parse_coeff_poly(modulus) : parse_poly(modulus, p);
        return FieldCtx::make(p, n, m, f);
    }

    FieldElem element(const FieldCtx& ctx, const std::string& text) const {
        return elem_format == "coeffs" ? ctx.parse_coeffs(text) : ctx.parse(text);
    }
};

void add_field_options(CLI::App* cmd, FieldOptions& fo) {
    cmd->add_option("--p", fo.p, "characteristic")->required();
    cmd->add_option("--n", fo.n, "degree of E over F_p")->required();
    cmd->add_option("--f", fo.f, "degree of the base field F = GF(p^f)");
    cmd->add_option("--modulus", fo.modulus, "defining polynomial of E");
    cmd->add_option("--elem-format", fo.elem_format, "element text format")->check(CLI::IsMember({"poly", "coeffs"}));
}

void emit(std::ostream& out, bool json, const Json& doc, const std::vector<std::pair<std::string, std::string>>& text) {
    if (json) {
        out << doc.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : text) out << key << ": " << value << '\n';
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- root

struct RootOptions {
    FieldOptions field;
    std::string y;
    std::string method = "auto";
    u64 r = 0;
    std::string witness = "deterministic";
    u64 seed = 0;
    bool json = false;
};

void verify_or_throw(const FieldElem& r, const FieldElem& y) {
    if (!(pow(r, y.ctx().q()) - r == y)) throw std::logic_error("root " + to_string(r) + " failed re-verification");
}

int cmd_root(const RootOptions& o, std::ostream& out) {
    const FieldCtx ctx = o.field.make();
    const FieldElem y = o.field.element(ctx, o.y);
    const as::Instance inst(ctx, y);
    const u64 q = ctx.q();
    const std::string polynomial = "t^" + std::to_string(q) + "-t-y";

    std::optional<as::RootSet> rs;
    std::vector<FieldElem> brute;
    std::string outcome;
    std::string report;
    std::string method;
    std::string note;
    bool random_witness = false;

    if (o.method == "auto") {
        auto fac = as::factor_artin_schreier(inst);
        outcome = fac.outcome == as::Outcome::split ? "split"
                  : fac.outcome == as::Outcome::irreducible ? "irreducible"
                                                            : "undetermined";
        report = fac.report;
        rs = std::move(fac.roots);
    } else if (o.method == "brute") {
        brute = as::brute_force_roots(inst);
        method = "brute";
        outcome = brute.empty() ? (q == ctx.p() ? "irreducible" : "undetermined") : "split";
        report = brute.empty() ? (q == ctx.p() ? "irreducible: no root and q = p" : "no root; irreducibility undetermined")
                               : "split: " + std::to_string(brute.size()) + " roots";
    } else {
        static const std::map<std::string, std::function<as::RootSet(const RootOptions&, const as::Instance&)>> paths{
            {"coprime", [](const RootOptions&, const as::Instance& i) { return as::root_coprime(i); }},
            {"table", [](const RootOptions&, const as::Instance& i) { return as::root_char2_table(i); }},
            {"p2mod3", [](const RootOptions&, const as::Instance& i) { return as::root_p2mod3(i); }},
            {"np-p", [](const RootOptions&, const as::Instance& i) { return as::root_np_p(i); }},
            {"prime-r",
             [](const RootOptions& opt, const as::Instance& i) {
                 if (opt.r == 0) throw Error(ErrorCode::InvalidArgument, "--method prime-r needs --r");
                 return as::root_via_prime_r(i, opt.r);
             }},
            {"general",
             [](const RootOptions& opt, const as::Instance& i) {
                 if (opt.witness == "random") {
                     return as::root_general(
                         i, hilbert90::find_trace_one(i.ctx, std::nullopt, hilbert90::WitnessMethod::random, opt.seed));
                 }
                 return as::root_general(i);
             }},
        };
        random_witness = o.method == "general" && o.witness == "random";
        rs = paths.at(o.method)(o, inst);
        outcome = "split";
        report = "split: " + std::to_string(q) + " roots x+u, u in GF(" + std::to_string(q) + ")";
    }

    std::vector<FieldElem> listed;
    bool complete = true;
    if (rs) {
        method = std::string(as::to_string(rs->method));
        note = rs->note;
        verify_or_throw(rs->base_root, y);
        if (q <= kListedRoots) {
            listed = rs->roots();
        } else {
            listed = {rs->base_root};
            complete = false;
        }
    } else {
        listed = brute;
    }
    for (const auto& r : listed) verify_or_throw(r, y);

    std::vector<std::string> root_text;
    for (const auto& r : listed) root_text.push_back(to_string(r));
    const u64 root_count = outcome == "split" ? q : 0;

    Json doc;
    doc["status"] = "ok";
    doc["polynomial"] = polynomial;
    doc["field"] = ctx.describe();
    doc["y"] = to_string(y);
    doc["roots"] = root_text;
    doc["method"] = method.empty() ? Json(nullptr) : Json(method);
    doc["verified"] = true;
    doc["outcome"] = outcome;
    doc["report"] = report;
    doc["root_count"] = root_count;
    doc["roots_complete"] = complete;
    if (rs) {
        doc["note"] = note;
        doc["coefficient_period"] = rs->coefficient_period;
    }
    if (random_witness) doc["seed"] = o.seed;

    std::vector<std::pair<std::string, std::string>> text{
        {"polynomial", polynomial}, {"field", ctx.describe()}, {"y", to_string(y)}, {"result", report}};
    if (!method.empty()) text.emplace_back("method", method);
    if (rs) {
        text.emplace_back("note", note);
        text.emplace_back("coefficient_period", std::to_string(rs->coefficient_period));
    }
    if (random_witness) text.emplace_back("seed", std::to_string(o.seed));
    if (!listed.empty()) {
        text.emplace_back(complete ? "roots" : "root", join(root_text, ", "));
        if (!complete) text.emplace_back("other roots", "root + u for u in GF(" + std::to_string(q) + ")");
        text.emplace_back("verified", "true");
    }
    emit(out, o.json, doc, text);
    return kExitOk;
}

// ---------------------------------------------------------------- period

struct PeriodOptions {
    FieldOptions field;
    std::string z;
    i64 k = 1;
    bool json = false;
};

int cmd_period(const PeriodOptions& o, std::ostream& out) {
    const FieldCtx ctx = o.field.make();
    const FieldElem z = o.field.element(ctx, o.z);
    const auto rep = periodicity::verify_period_theorem(z, o.k);
    if (o.json) {
        out << periodicity::to_json(rep) << '\n';
    } else {
        emit(out, false, {},
             {{"field", ctx.describe()},
              {"z", to_string(z)},
              {"e", std::to_string(rep.e)},
              {"n_p", std::to_string(rep.n_p)},
              {"period", std::to_string(rep.period)},
              {"expected", std::to_string(rep.expected)},
              {"pass", yes_no(rep.pass)}});
    }
    return rep.pass ? kExitOk : kExitInternal;
}

// ---------------------------------------------------------------- h90

struct H90Options {
    FieldOptions field;
    std::string y;
    std::string z;
    i64 k = 1;
    std::string witness = "deterministic";
    u64 seed = 0;
    bool json = false;
};

int cmd_h90(const H90Options& o, std::ostream& out) {
    const FieldCtx ctx = o.field.make();
    const FieldElem y = o.field.element(ctx, o.y);
    std::string provenance = "given";
    FieldElem z = ctx.zero();
    if (!o.z.empty()) {
        z = o.field.element(ctx, o.z);
    } else {
        const auto method =
            o.witness == "random" ? hilbert90::WitnessMethod::random : hilbert90::WitnessMethod::deterministic;
        auto w = hilbert90::find_trace_one(ctx, std::nullopt, method, o.seed);
        z = w.z;
        provenance = w.provenance;
    }
    const auto cert = hilbert90::r_form(y, z, o.k);
    if (!cert.checked) throw std::logic_error("certificate failed re-verification");
    const bool logged_seed = o.z.empty() && o.witness == "random";
    Json doc;
    doc["status"] = "ok";
    doc["field"] = ctx.describe();
    doc["y"] = to_string(y);
    doc["z"] = to_string(z);
    doc["witness"] = provenance;
    if (logged_seed) doc["seed"] = o.seed;
    doc["k"] = o.k;
    doc["x"] = to_string(cert.x);
    doc["verified"] = true;
    doc["certificate"] = hilbert90::serialize(cert);
    std::vector<std::pair<std::string, std::string>> text{
        {"field", ctx.describe()}, {"y", to_string(y)}, {"z", to_string(z)}, {"witness", provenance}};
    if (logged_seed) text.emplace_back("seed", std::to_string(o.seed));
    text.emplace_back("x", to_string(cert.x));
    text.emplace_back("certificate", hilbert90::serialize(cert));
    emit(out, o.json, doc, text);
    return kExitOk;
}

// ---------------------------------------------------------------- table

struct TableOptions {
    bool verify = false;
    bool regen = false;
    bool as_printed = false;
    u64 budget = u64{1} << 20;
    bool json = false;
};

int cmd_table(const TableOptions& o, std::ostream& out) {
    if (o.regen) {
        const auto rows = bigpoly::regenerate_table(o.budget);
        if (o.json) {
            Json doc = Json::array();
            for (const auto& r : rows) doc.push_back({{"n2", r.n2}, {"symbol", r.symbol}, {"polynomial", to_string(r.poly)}});
            out << doc.dump(2) << '\n';
        } else {
            out << bigpoly::format_table(rows);
        }
        return kExitOk;
    }
    const auto& rows = o.as_printed ? bigpoly::printed_table_rows() : bigpoly::table_rows();
    if (!o.verify) {
        out << bigpoly::format_table(rows);
        return kExitOk;
    }
    Json doc;
    doc["rows"] = Json::array();
    std::size_t passed = 0;
    for (const auto& row : rows) {
        const auto rep = bigpoly::verify_table_entry(row.n2, row.poly);
        passed += rep.pass();
        Json checks;
        std::vector<std::string> parts;
        for (const auto& c : rep.checks) {
            checks[c.name] = c.pass;
            parts.push_back(c.name + "=" + (c.pass ? "pass" : "FAIL"));
        }
        doc["rows"].push_back(
            {{"n2", row.n2}, {"symbol", row.symbol}, {"polynomial", to_string(row.poly)}, {"checks", checks}, {"pass", rep.pass()}});
        if (!o.json) {
            out << "n_2=" << row.n2 << ' ' << row.symbol << ' ' << to_string(row.poly) << ' ' << join(parts, " ") << ' '
                << (rep.pass() ? "PASS" : "FAIL") << '\n';
        }
    }
    doc["pass"] = passed == rows.size();
    if (o.json) {
        out << doc.dump(2) << '\n';
    } else {
        out << passed << '/' << rows.size() << " rows pass\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- cyclotomic, tensor, bigsearch

int cmd_cyclotomic(u64 r, u64 p, bool json, std::ostream& out) {
    const unsigned ord = bigpoly::ord_mod(r, p);
    const auto factors = bigpoly::factor_cyclotomic(r, p);
    Json doc;
    doc["status"] = "ok";
    doc["r"] = r;
    doc["p"] = p;
    doc["order"] = ord;
    doc["factors"] = Json::array();
    std::size_t big = 0;
    for (const auto& g : factors) {
        const bool b = bigpoly::is_big(g);
        big += b;
        doc["factors"].push_back({{"polynomial", to_string(g)}, {"degree", g.degree()}, {"big", b}});
    }
    doc["big_count"] = big;
    if (json) {
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    out << "Phi_" << r << " over F_" << p << ": " << factors.size() << " factors of degree " << ord << ", " << big
        << " big\n";
    for (const auto& g : factors) out << "  " << to_string(g) << (bigpoly::is_big(g) ? "  big" : "  small") << '\n';
    return kExitOk;
}

int cmd_tensor(const std::string& a_text, const std::string& b_text, u64 p, bool json, std::ostream& out) {
    const PrimePoly a = parse_poly(a_text, p);
    const PrimePoly b = parse_poly(b_text, p);
    const PrimePoly c = bigpoly::tensor_product(a, b);
    Json doc;
    doc["status"] = "ok";
    doc["a"] = to_string(a);
    doc["b"] = to_string(b);
    doc["product"] = to_string(c);
    doc["degree"] = c.degree();
    doc["big"] = bigpoly::is_big(c);
    emit(out, json, doc,
         {{"product", to_string(c)}, {"degree", std::to_string(c.degree())}, {"big", yes_no(bigpoly::is_big(c))}});
    return kExitOk;
}

int cmd_bigsearch(unsigned e, u64 p, u64 budget, bool json, std::ostream& out) {
    const PrimePoly g = bigpoly::find_big_primitive(e, p, budget);
    Json doc;
    doc["status"] = "ok";
    doc["e"] = e;
    doc["p"] = p;
    doc["polynomial"] = to_string(g);
    emit(out, json, doc, {{"polynomial", to_string(g)}});
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Artin-Schreier roots and additive Hilbert 90 over finite fields", "as90"};
    app.require_subcommand(1);
    std::function<int()> action;

    RootOptions ro;
    auto* root = app.add_subcommand("root", "roots of t^q - t - y");
    add_field_options(root, ro.field);
    root->add_option("--y", ro.y, "right-hand side y")->required();
    root->add_option("--method", ro.method, "formula to use")
        ->check(CLI::IsMember({"auto", "coprime", "table", "prime-r", "p2mod3", "np-p", "general", "brute"}));
    root->add_option("--r", ro.r, "prime r for --method prime-r");
    root->add_option("--witness", ro.witness, "trace-one search for --method general")
        ->check(CLI::IsMember({"deterministic", "random"}));
    root->add_option("--seed", ro.seed, "seed for --witness random");
    root->add_flag("--json", ro.json);
    root->callback([&] { action = [&] { return cmd_root(ro, out); }; });

    PeriodOptions po;
    auto* period = app.add_subcommand("period", "period of the partial trace sequence of z");
    add_field_options(period, po.field);
    period->add_option("--z", po.z, "element with trace 1")->required();
    period->add_option("--k", po.k, "use sigma^k");
    period->add_flag("--json", po.json);
    period->callback([&] { action = [&] { return cmd_period(po, out); }; });

    H90Options ho;
    auto* h90 = app.add_subcommand("h90", "x with sigma(x) - x = y");
    add_field_options(h90, ho.field);
    h90->add_option("--y", ho.y, "trace-zero element")->required();
    h90->add_option("--z", ho.z, "trace-one witness; searched for when absent");
    h90->add_option("--k", ho.k, "use sigma^k");
    h90->add_option("--witness", ho.witness)->check(CLI::IsMember({"deterministic", "random"}));
    h90->add_option("--seed", ho.seed);
    h90->add_flag("--json", ho.json);
    h90->callback([&] { action = [&] { return cmd_h90(ho, out); }; });

    TableOptions to;
    auto* table = app.add_subcommand("table", "the characteristic 2 witness table");
    auto* verify_flag = table->add_flag("--verify", to.verify, "run all checks on each row");
    table->add_flag("--regen", to.regen, "recompute the table by search")->excludes(verify_flag);
    table->add_flag("--as-printed", to.as_printed, "use the n_2 = 16 row as originally printed");
    table->add_option("--budget", to.budget, "candidates per degree for --regen");
    table->add_flag("--json", to.json);
    table->callback([&] { action = [&] { return cmd_table(to, out); }; });

    u64 cr = 0;
    u64 cp = 0;
    bool cjson = false;
    auto* cyclo = app.add_subcommand("cyclotomic", "factor Phi_r over F_p");
    cyclo->add_option("--r", cr)->required();
    cyclo->add_option("--p", cp)->required();
    cyclo->add_flag("--json", cjson);
    cyclo->callback([&] { action = [&] { return cmd_cyclotomic(cr, cp, cjson, out); }; });

    std::string ta;
    std::string tb;
    u64 tp = 0;
    bool tjson = false;
    auto* tensor = app.add_subcommand("tensor", "polynomial whose roots are the products of roots");
    tensor->add_option("--a", ta)->required();
    tensor->add_option("--b", tb)->required();
    tensor->add_option("--p", tp)->required();
    tensor->add_flag("--json", tjson);
    tensor->callback([&] { action = [&] { return cmd_tensor(ta, tb, tp, tjson, out); }; });

    unsigned be = 0;
    u64 bp = 2;
    u64 bbudget = u64{1} << 20;
    bool bjson = false;
    auto* bigsearch = app.add_subcommand("bigsearch", "first big primitive polynomial of degree e");
    bigsearch->add_option("--e", be)->required();
    bigsearch->add_option("--p", bp);
    bigsearch->add_option("--budget", bbudget);
    bigsearch->add_flag("--json", bjson);
    bigsearch->callback([&] { action = [&] { return cmd_bigsearch(be, bp, bbudget, bjson, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }

    try {
        return action();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace as90::cli
