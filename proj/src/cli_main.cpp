#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclotome/code.hpp"
#include "cyclotome/cosets.hpp"
#include "cyclotome/families.hpp"
#include "cyclotome/gf.hpp"
#include "cyclotome/poly.hpp"

using json = nlohmann::ordered_json;
using namespace cyclotome;

namespace {

struct FieldArgs {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::optional<std::vector<std::uint32_t>> modulus;
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        fail(errc::parse_error, "cannot parse " + what + " from \"" + text + "\"");
    }
}

std::vector<std::uint32_t> parse_coeff_list(const std::string& text, char sep) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(static_cast<std::uint32_t>(parse_u64(item, "coefficient")));
    return out;
}

// --field accepts either the inline form p,m,c0:c1:...:cm or a path to a
// field description file (line 1: "p m", line 2: ascending coefficients).
FieldArgs parse_field_spec(const std::string& spec) {
    FieldArgs fa;
    if (spec.find(',') != std::string::npos) {
        std::stringstream ss(spec);
        std::string part;
        std::vector<std::string> parts;
        while (std::getline(ss, part, ',')) parts.push_back(part);
        if (parts.size() != 3)
            fail(errc::parse_error, "inline field spec must be p,m,c0:c1:...:cm");
        fa.p = static_cast<std::uint32_t>(parse_u64(parts[0], "p"));
        fa.m = static_cast<std::uint32_t>(parse_u64(parts[1], "m"));
        fa.modulus = parse_coeff_list(parts[2], ':');
        return fa;
    }
    std::ifstream in(spec);
    if (!in) fail(errc::parse_error, "cannot open field file: " + spec);
    std::string line1, line2;
    if (!std::getline(in, line1) || !std::getline(in, line2))
        fail(errc::parse_error, "field file needs two lines: \"p m\" and the coefficients");
    {
        std::stringstream ss(line1);
        std::string a, b;
        if (!(ss >> a >> b)) fail(errc::parse_error, "field file line 1 must be \"p m\"");
        fa.p = static_cast<std::uint32_t>(parse_u64(a, "p"));
        fa.m = static_cast<std::uint32_t>(parse_u64(b, "m"));
    }
    {
        std::stringstream ss(line2);
        std::string tok;
        std::vector<std::uint32_t> coeffs;
        while (ss >> tok) coeffs.push_back(static_cast<std::uint32_t>(parse_u64(tok, "coefficient")));
        fa.modulus = coeffs;
    }
    return fa;
}

Field make_field(const FieldArgs& fa, std::uint64_t budget) {
    if (fa.modulus) return Field(fa.p, fa.m, *fa.modulus, budget);
    return Field(fa.p, fa.m, budget);
}

json field_json(const Field& F) {
    json j;
    j["p"] = F.p();
    j["m"] = F.m();
    j["modulus"] = F.modulus();
    j["modulus_poly"] = format_poly(PolyFp{F.p(), F.modulus()});
    j["q"] = F.q();
    j["n"] = F.n();
    return j;
}

json witness_json(const Witness& w) {
    json j;
    j["supports"] = w.supports;
    j["coeffs"] = w.coeffs;
    return j;
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

const char* reason_name(SizeReason r) {
    switch (r) {
        case SizeReason::cond1: return "cond1";
        case SizeReason::cond2: return "cond2";
        case SizeReason::direct: return "direct";
    }
    return "?";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field engine for the p-ary cyclic codes C_p(0, s, t)"};
    app.require_subcommand(1);

    std::string field_spec;
    std::uint32_t opt_p = 0, opt_m = 0;
    std::string opt_modulus;
    std::uint32_t workers = 0;
    std::uint64_t table_budget = Field::table_budget_from_env();
    std::uint32_t oracle_limit = 300;
    bool as_json = true;
    bool text_mode = false;
    app.add_flag("--json", as_json, "emit JSON (default)");
    app.add_flag("--text", text_mode, "emit terse text instead of JSON");
    app.add_option("--workers", workers, "worker threads for searches (0 = auto)");
    app.add_option("--table-budget", table_budget, "max q for log tables");
    app.add_option("--oracle-limit", oracle_limit, "max n for the naive oracle");

    auto add_field_opts = [&](CLI::App* cmd) {
        cmd->add_option("--field", field_spec, "p,m,c0:c1:...:cm or a field file path");
        cmd->add_option("--p", opt_p, "characteristic (with --m; default modulus search)");
        cmd->add_option("--m", opt_m, "extension degree");
        cmd->add_option("--modulus", opt_modulus, "c0:c1:...:cm (with --p/--m)");
    };

    CLI::App* cmd_field = app.add_subcommand("field", "build a field and print its description");
    add_field_opts(cmd_field);

    CLI::App* cmd_coset = app.add_subcommand("coset", "p-cyclotomic coset of u mod p^m-1");
    std::uint64_t coset_u = 0;
    cmd_coset->add_option("--p", opt_p, "characteristic")->required();
    cmd_coset->add_option("--m", opt_m, "extension degree")->required();
    cmd_coset->add_option("--u", coset_u, "coset element")->required();

    CLI::App* cmd_minpoly = app.add_subcommand("minpoly", "minimal polynomial of beta^j");
    std::uint64_t minpoly_j = 0;
    add_field_opts(cmd_minpoly);
    cmd_minpoly->add_option("--j", minpoly_j, "exponent j")->required();

    CLI::App* cmd_code = app.add_subcommand("code", "cyclic code from zero exponents");
    std::string zeros_text;
    bool check_distance = false, use_oracle = false;
    add_field_opts(cmd_code);
    cmd_code->add_option("--zeros", zeros_text, "comma-separated exponents, e.g. 0,313,619")
        ->required();
    cmd_code->add_flag("--check-distance", check_distance, "run the weight <= 4 search");
    cmd_code->add_flag("--oracle", use_oracle, "use the naive oracle instead of the fast search");

    CLI::App* cmd_family = app.add_subcommand("family", "the named code families (T34 .. T49)");
    std::string family_id_text;
    std::int64_t family_r = -1;
    bool family_verify = false, family_list = false;
    cmd_family->add_option("--id", family_id_text, "T34|T37|T311|T43|T45|T47|T49");
    cmd_family->add_option("--p", opt_p, "characteristic (5 implied for T4x)");
    cmd_family->add_option("--m", opt_m, "extension degree");
    cmd_family->add_option("--r", family_r, "family parameter r");
    cmd_family->add_flag("--verify", family_verify, "run the full verification pipeline");
    cmd_family->add_flag("--list", family_list, "list families and hypotheses");

    CLI::App* cmd_factcheck = app.add_subcommand("factcheck", "verify stated factorizations");
    std::string fixtures_sel = "all";
    std::string fixtures_file = "tests/fixtures/factorizations.txt";
    std::uint32_t fixtures_p = 5;
    cmd_factcheck->add_option("--fixtures", fixtures_sel, "all or a block name");
    cmd_factcheck->add_option("--file", fixtures_file, "fixture file path");
    cmd_factcheck->add_option("--p", fixtures_p, "prime field of the fixtures");

    for (CLI::App* sub : {cmd_field, cmd_coset, cmd_minpoly, cmd_code, cmd_family, cmd_factcheck})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }
    if (text_mode) as_json = false;

    SearchConfig cfg;
    cfg.workers = workers;
    cfg.oracle_limit = oracle_limit;

    auto resolve_field = [&]() -> Field {
        if (!field_spec.empty()) return make_field(parse_field_spec(field_spec), table_budget);
        if (opt_p == 0 || opt_m == 0)
            fail(errc::parse_error, "need --field or both --p and --m");
        FieldArgs fa{opt_p, opt_m, std::nullopt};
        if (!opt_modulus.empty()) fa.modulus = parse_coeff_list(opt_modulus, ':');
        return make_field(fa, table_budget);
    };

    try {
        if (app.got_subcommand(cmd_field)) {
            Field F = resolve_field();
            json j;
            j["schema"] = 1;
            j["field"] = field_json(F);
            j["omega_order"] = F.n();
            emit(j, as_json,
                 "GF(" + std::to_string(F.p()) + "^" + std::to_string(F.m()) + "), modulus " +
                     format_poly(PolyFp{F.p(), F.modulus()}) + ", omega order " +
                     std::to_string(F.n()) + "\n");
            return 0;
        }

        if (app.got_subcommand(cmd_coset)) {
            Field F(opt_p, opt_m, table_budget);
            const std::uint64_t n = F.n();
            const CosetView view = coset(coset_u, opt_p, n);
            std::string lemma22 = "direct";
            if (coset_u % n >= 1) lemma22 = reason_name(coset_size_is_m(coset_u % n, F).reason);
            json j;
            j["schema"] = 1;
            j["p"] = opt_p;
            j["m"] = opt_m;
            j["n"] = n;
            j["u"] = coset_u;
            j["rep"] = view.rep;
            j["size"] = view.size();
            j["members"] = view.members;
            j["lemma22"] = lemma22;
            std::string text = "C_" + std::to_string(coset_u) + ": size " +
                               std::to_string(view.size()) + ", rep " + std::to_string(view.rep) +
                               "\n";
            emit(j, as_json, text);
            return 0;
        }

        if (app.got_subcommand(cmd_minpoly)) {
            Field F = resolve_field();
            const PolyFp mp = minimal_polynomial(minpoly_j, F);
            const CosetView view = coset(minpoly_j, F.p(), F.n());
            json j;
            j["schema"] = 1;
            j["field"] = field_json(F);
            j["j"] = minpoly_j;
            j["coset_rep"] = view.rep;
            j["coset_size"] = view.size();
            j["minpoly"] = format_poly(mp);
            emit(j, as_json, format_poly(mp) + "\n");
            return 0;
        }

        if (app.got_subcommand(cmd_code)) {
            Field F = resolve_field();
            std::vector<std::uint64_t> zeros;
            std::stringstream ss(zeros_text);
            std::string item;
            while (std::getline(ss, item, ',')) zeros.push_back(parse_u64(item, "zero exponent"));
            const CyclicCode code = build_code(F, zeros);
            json j;
            j["schema"] = 1;
            j["field"] = field_json(F);
            j["zeros"] = code.zeros;
            j["collapsed"] = code.gen.collapsed;
            j["n"] = code.n;
            j["k"] = code.k;
            j["g"] = format_poly(code.gen.g);
            std::string text = "[" + std::to_string(code.n) + ", " + std::to_string(code.k) +
                               "] g = " + format_poly(code.gen.g) + "\n";
            if (check_distance) {
                const DistanceReport rep =
                    use_oracle ? oracle_distance(code, 4, cfg) : min_distance_upto4(code, cfg);
                j["d"] = rep.verdict();
                j["method"] = rep.method;
                if (rep.witness) j["witness"] = witness_json(*rep.witness);
                j["hamming_bound_d"] = sphere_packing_max_d(code.n, code.k, F.p());
                text.pop_back();
                text += ", d = " + rep.verdict() + "\n";
            }
            emit(j, as_json, text);
            return 0;
        }

        if (app.got_subcommand(cmd_family)) {
            if (family_list) {
                json j;
                j["schema"] = 1;
                json arr = json::array();
                std::string text;
                for (const FamilyInfo& info : list_families()) {
                    json e;
                    e["id"] = info.name;
                    e["hypotheses"] = info.hypotheses;
                    e["t_formula"] = info.t_formula;
                    arr.push_back(e);
                    text += info.name + ": " + info.t_formula + "  [" + info.hypotheses + "]\n";
                }
                j["families"] = arr;
                emit(j, as_json, text);
                return 0;
            }
            const auto id = family_id_from_name(family_id_text);
            if (!id) fail(errc::parse_error, "unknown family id: \"" + family_id_text + "\"");
            if (opt_m == 0) fail(errc::parse_error, "family needs --m");
            std::optional<std::uint32_t> r;
            if (family_r >= 0) r = static_cast<std::uint32_t>(family_r);
            const FamilySpec spec = make_family(*id, opt_p, opt_m, r);
            json j;
            j["schema"] = 1;
            json fam;
            fam["id"] = family_id_name(spec.id);
            fam["p"] = spec.p;
            fam["m"] = spec.m;
            if (spec.r) fam["r"] = *spec.r;
            fam["s"] = spec.s;
            fam["t"] = spec.t;
            j["family"] = fam;
            if (!family_verify) {
                emit(j, as_json,
                     family_id_name(spec.id) + ": s = " + std::to_string(spec.s) +
                         ", t = " + std::to_string(spec.t) + "\n");
                return 0;
            }
            Field F(spec.p, spec.m, table_budget);
            const FamilyVerification v = verify_family(spec, F, cfg);
            j["field"] = field_json(F);
            json steps = json::array();
            std::string text = family_id_name(spec.id) + " at (p, m) = (" +
                               std::to_string(spec.p) + ", " + std::to_string(spec.m) + ")\n";
            for (const VerifyStep& s : v.steps) {
                json e;
                e["name"] = s.name;
                e["pass"] = s.pass;
                e["detail"] = s.detail;
                steps.push_back(e);
                text += std::string(s.pass ? "  pass  " : "  FAIL  ") + s.name + ": " + s.detail +
                        "\n";
            }
            j["steps"] = steps;
            j["n"] = v.n;
            j["k"] = v.k;
            j["g"] = v.generator;
            j["d"] = v.distance.verdict();
            if (v.distance.witness) j["witness"] = witness_json(*v.distance.witness);
            j["hamming_bound_d"] = v.hamming_bound_d;
            j["optimal_claim"] = v.optimal_claim;
            j["all_pass"] = v.all_pass;
            emit(j, as_json, text);
            return v.all_pass ? 0 : 1;
        }

        if (app.got_subcommand(cmd_factcheck)) {
            const std::vector<FixtureBlock> blocks = parse_fixture_file(fixtures_file, fixtures_p);
            json results = json::array();
            bool all_ok = true;
            bool any = false;
            std::string text;
            for (const FixtureBlock& blk : blocks) {
                if (fixtures_sel != "all" && fixtures_sel != blk.name) continue;
                any = true;
                const FactorizationCheck chk =
                    verify_factorization(blk.scalar, blk.factors, blk.target);
                bool ok;
                if (blk.divides_only)
                    ok = std::all_of(chk.factor_divides_target.begin(),
                                     chk.factor_divides_target.end(), [](bool b) { return b; });
                else
                    ok = chk.product_matches;
                all_ok = all_ok && ok;
                json e;
                e["name"] = blk.name;
                e["mode"] = blk.divides_only ? "divides" : "product";
                e["ok"] = ok;
                e["factors_irreducible"] = chk.factor_irreducible;
                results.push_back(e);
                text += blk.name + ": " + (ok ? "ok" : "FAIL") + " (" +
                        (blk.divides_only ? "divides" : "product") + ")\n";
            }
            if (!any) fail(errc::parse_error, "no fixture named \"" + fixtures_sel + "\"");
            json j;
            j["schema"] = 1;
            j["file"] = fixtures_file;
            j["p"] = fixtures_p;
            j["results"] = results;
            j["all_ok"] = all_ok;
            emit(j, as_json, text);
            return all_ok ? 0 : 1;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
