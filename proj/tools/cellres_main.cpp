// cellres -- resolutions of monomial ideals with regular linear quotients,
// the cell complexes supporting them, and an independent homological oracle.
//
// Exit codes: 0 ok, 1 bad input, 2 no (regular) admissible order,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cellres/families.hpp"
#include "cellres/homology.hpp"
#include "cellres/io.hpp"
#include "cellres/verify.hpp"

using namespace cellres;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitNoOrder = 2;
constexpr int kExitVerify = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Inline text by default; "@path" loads a file (.json uses the ideal JSON
// schema, anything else the text grammar).
MonomialIdeal load_ideal(const std::string& arg, int nvars) {
    if (!arg.empty() && arg[0] == '@') {
        std::string path = arg.substr(1);
        std::string body = read_file(path);
        if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
            return ideal_from_json(Json::parse(body));
        return parse_ideal(body, nvars);
    }
    return parse_ideal(arg, nvars);
}

void write_json(const std::string& path, const Json& payload) {
    if (path == "-") {
        std::cout << payload.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << payload.dump(2) << '\n';
}

std::vector<int> parse_order_flag(const std::string& csv, int m) {
    std::vector<int> perm;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            perm.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::runtime_error("--order: cannot parse '" + tok + "'");
        }
    }
    if (static_cast<int>(perm.size()) != m)
        throw std::runtime_error("--order: expected " + std::to_string(m) + " indices");
    return perm;
}

void print_ideal(const MonomialIdeal& ideal) {
    std::cout << "ideal: n=" << ideal.vars() << ", " << ideal.size() << " generators\n";
    for (int i = 0; i < ideal.size(); ++i)
        std::cout << "  [" << i << "] " << to_string(ideal.gen(i)) << '\n';
}

void print_order(const AdmissibleOrder& order) {
    std::cout << "admissible order:";
    for (int idx : order.perm()) std::cout << ' ' << idx;
    std::cout << '\n';
    for (int j = 0; j < order.size(); ++j)
        std::cout << "  u_" << j + 1 << " = " << to_string(order.u(j)) << "   q = "
                  << varset_to_string(order.q(j)) << '\n';
}

struct OrderRequest {
    std::string order_csv;
    unsigned seed = 0;
    bool seeded = false;
    bool require_regular = false;
};

// Resolves the order for a command: explicit --order is validated,
// otherwise the backtracking search runs.  Returns nullopt (after printing
// the reason) when no suitable order exists.
std::optional<AdmissibleOrder> obtain_order(const MonomialIdeal& ideal,
                                            const OrderRequest& req) {
    if (ideal.is_zero()) {
        std::cout << "zero ideal: nothing to order\n";
        return std::nullopt;
    }
    if (!req.order_csv.empty()) {
        AdmissibleCheck check = is_admissible(ideal, parse_order_flag(req.order_csv, ideal.size()));
        if (check.status == AdmissibleStatus::NotLinear) {
            std::cout << "not an admissible order: colon at step " << check.step
                      << " has non-variable minimal generator "
                      << to_string(*check.witness) << '\n';
            return std::nullopt;
        }
        if (check.status == AdmissibleStatus::NotDegreeIncreasing) {
            std::cout << "not an admissible order: degree drops at step " << check.step
                      << '\n';
            return std::nullopt;
        }
        if (req.require_regular) {
            RegularityResult reg = is_regular(*check.order);
            if (!reg.regular) {
                std::cout << "order is not regular: step " << reg.witness->step
                          << ", y=x" << reg.witness->var_y << ", offending x"
                          << reg.witness->var_z << '\n';
                return std::nullopt;
            }
        }
        return check.order;
    }
    OrderSearchOptions opts;
    opts.require_regular = req.require_regular;
    if (req.seeded) opts.shuffle_seed = req.seed;
    auto found = find_admissible_order(ideal, opts);
    if (!found)
        std::cout << "no " << (req.require_regular ? "regular " : "")
                  << "admissible order\n";
    return found;
}

int cmd_order(const MonomialIdeal& ideal, const OrderRequest& req, bool want_regular,
              const std::string& json_path) {
    auto order = obtain_order(ideal, req);
    if (!order) return kExitNoOrder;
    print_ideal(ideal);
    print_order(*order);
    RegularityResult reg = is_regular(*order);
    if (reg.regular) {
        std::cout << "regular: yes\n";
    } else {
        std::cout << "regular: no (step " << reg.witness->step << ", y=x"
                  << reg.witness->var_y << ", offending x" << reg.witness->var_z << ")\n";
    }
    if (!json_path.empty()) {
        Json j;
        j["ideal"] = ideal_to_json(ideal);
        j["admissible"] = order_to_json(*order);
        j["regular"] = reg.regular;
        write_json(json_path, j);
    }
    if (want_regular && !reg.regular) return kExitNoOrder;
    return kExitOk;
}

int cmd_resolve(const MonomialIdeal& ideal, const OrderRequest& req,
                const std::string& json_path) {
    auto order = obtain_order(ideal, req);
    if (!order) return kExitNoOrder;
    Resolution res = build_resolution(*order);
    std::cout << "ranks:";
    for (int r : res.complex.ranks()) std::cout << ' ' << r;
    std::cout << '\n' << render_betti_table(betti_table(res.complex));
    ComplexCheck check = verify_complex(res.complex);
    bool minimal = verify_minimal(res.complex);
    std::cout << "d o d = 0 and homogeneous: " << (check.ok ? "yes" : "NO") << '\n';
    std::cout << "minimal: " << (minimal ? "yes" : "NO") << '\n';
    if (!json_path.empty()) {
        Json j;
        j["ideal"] = ideal_to_json(ideal);
        j["admissible"] = order_to_json(*order);
        j["complex"] = complex_to_json(res.complex);
        j["betti"] = betti_to_json(betti_table(res.complex));
        write_json(json_path, j);
    }
    return check.ok && minimal ? kExitOk : kExitVerify;
}

int cmd_complex(const MonomialIdeal& ideal, const OrderRequest& req,
                const std::string& json_path, bool dump_poset) {
    auto order = obtain_order(ideal, req);
    if (!order) return kExitNoOrder;
    CellComplex X = build_X(*order);
    SimplicialComplex lambda = build_lambda(*order);
    auto print_f = [](const char* name, const std::vector<int>& f, long chi) {
        std::cout << name << ": f = (";
        for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? ", " : "") << f[i];
        std::cout << "), chi = " << chi << '\n';
    };
    print_f("X", X.f_vector(), X.euler_characteristic());
    print_f("Lambda", lambda.f_vector(), lambda.euler_characteristic());
    if (dump_poset) std::cout << face_poset_text(X);
    if (!json_path.empty()) {
        Json j;
        j["ideal"] = ideal_to_json(ideal);
        j["admissible"] = order_to_json(*order);
        j["X"] = cell_complex_to_json(X);
        j["lambda"] = simplicial_to_json(lambda);
        write_json(json_path, j);
    }
    return kExitOk;
}

int cmd_verify(const MonomialIdeal& ideal, const OrderRequest& req,
               const VerifyOptions& vopts, const std::string& json_path) {
    auto order = obtain_order(ideal, req);
    if (!order) return kExitNoOrder;
    VerifyReport report = run_full_verify(*order, vopts);
    for (const auto& [name, outcome] : report.checks) {
        std::cout << (outcome.ok ? "[ok]   " : "[FAIL] ") << name;
        if (!outcome.detail.empty()) std::cout << " -- " << outcome.detail;
        std::cout << '\n';
    }
    std::cout << (report.all_ok ? "all checks passed\n" : "verification FAILED\n");
    if (!json_path.empty()) {
        Json j;
        j["ideal"] = ideal_to_json(ideal);
        j["all_ok"] = report.all_ok;
        j["checks"] = Json::array();
        for (const auto& [name, outcome] : report.checks) {
            Json c;
            c["name"] = name;
            c["ok"] = outcome.ok;
            c["detail"] = outcome.detail;
            j["checks"].push_back(std::move(c));
        }
        write_json(json_path, j);
    }
    return report.all_ok ? kExitOk : kExitVerify;
}

int cmd_oracle(const MonomialIdeal& ideal, int bound, const std::string& json_path) {
    BettiTable table = taylor_betti(ideal, bound);
    std::cout << "total:";
    for (long long b : table.totals()) std::cout << ' ' << b;
    std::cout << '\n' << render_betti_table(table);
    if (!json_path.empty()) {
        Json j;
        j["ideal"] = ideal_to_json(ideal);
        j["betti"] = betti_to_json(table);
        write_json(json_path, j);
    }
    return kExitOk;
}

std::vector<std::pair<int, int>> parse_edges(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos)
            throw std::runtime_error("edge '" + tok + "' is not of the form a-b");
        edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    }
    return edges;
}

int emit_generated(const MonomialIdeal& ideal, const std::string& json_path) {
    print_ideal(ideal);
    if (!json_path.empty()) write_json(json_path, ideal_to_json(ideal));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cellres: minimal resolutions of ideals with regular linear quotients"};
    app.require_subcommand(1);

    std::string ideal_arg, order_csv, json_path, gen_kind, gen_arg;
    int nvars = 0;
    std::optional<unsigned> seed;
    bool want_regular = false, dump_poset = false;
    int shelling_bound = 12, taylor_bound = 14, cap = 64, flip_sign = -1;
    int uniform_k = 0, uniform_n = 0;

    auto add_ideal_opts = [&](CLI::App* cmd, bool need_order_opts = true) {
        cmd->add_option("ideal", ideal_arg, "inline monomials or @file (.json or text)")
            ->required();
        cmd->add_option("-n,--nvars", nvars, "number of variables for text input");
        if (need_order_opts) {
            cmd->add_option("--order", order_csv, "comma-separated generator indices");
            cmd->add_option("--seed", seed, "shuffle seed for the order search");
        }
        cmd->add_option("--json", json_path, "write a JSON payload here ('-' = stdout)");
    };

    CLI::App* order_cmd = app.add_subcommand("order", "find or check an admissible order");
    add_ideal_opts(order_cmd);
    order_cmd->add_flag("--regular", want_regular, "require a regular order");

    CLI::App* resolve_cmd = app.add_subcommand("resolve", "build the resolution");
    add_ideal_opts(resolve_cmd);

    CLI::App* complex_cmd = app.add_subcommand("complex", "build X and Lambda");
    add_ideal_opts(complex_cmd);
    complex_cmd->add_flag("--poset", dump_poset, "dump the face poset");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the full check battery");
    add_ideal_opts(verify_cmd);
    verify_cmd->add_option("--bound", shelling_bound, "shelling facet bound");
    verify_cmd->add_option("--taylor-bound", taylor_bound, "oracle generator bound");
    verify_cmd->add_option("--flip-sign", flip_sign, "fault injection: flip incidence k");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "Taylor-strand Betti numbers");
    add_ideal_opts(oracle_cmd, false);
    oracle_cmd->add_option("--bound", taylor_bound, "oracle generator bound");

    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a named family");
    gen_cmd->add_option("kind", gen_kind, "stable | sqfree | uniform | graphic")->required();
    gen_cmd->add_option("arg", gen_arg, "seeds, 'k n', or edge list");
    gen_cmd->add_option("-n,--nvars", nvars, "number of variables for seeds");
    gen_cmd->add_option("-k", uniform_k, "uniform matroid rank");
    gen_cmd->add_option("--ground", uniform_n, "uniform matroid ground size");
    gen_cmd->add_option("--cap", cap, "generator cap");
    gen_cmd->add_option("--json", json_path, "write the ideal as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        OrderRequest req{order_csv, seed.value_or(0), seed.has_value(), false};
        if (order_cmd->parsed()) {
            req.require_regular = want_regular;
            return cmd_order(load_ideal(ideal_arg, nvars), req, want_regular, json_path);
        }
        if (resolve_cmd->parsed()) {
            req.require_regular = true;
            return cmd_resolve(load_ideal(ideal_arg, nvars), req, json_path);
        }
        if (complex_cmd->parsed()) {
            req.require_regular = true;
            return cmd_complex(load_ideal(ideal_arg, nvars), req, json_path, dump_poset);
        }
        if (verify_cmd->parsed()) {
            req.require_regular = true;
            VerifyOptions vopts;
            vopts.flip_sign = flip_sign;
            vopts.shelling_bound = shelling_bound;
            vopts.taylor_bound = taylor_bound;
            return cmd_verify(load_ideal(ideal_arg, nvars), req, vopts, json_path);
        }
        if (oracle_cmd->parsed())
            return cmd_oracle(load_ideal(ideal_arg, nvars), taylor_bound, json_path);
        if (gen_cmd->parsed()) {
            if (gen_kind == "stable" || gen_kind == "sqfree") {
                MonomialIdeal seeds = parse_ideal(gen_arg, nvars);
                return emit_generated(
                    gen_stable(seeds.gens(), nvars, gen_kind == "sqfree", cap), json_path);
            }
            if (gen_kind == "uniform") {
                int k = uniform_k, n = uniform_n;
                if (!gen_arg.empty()) {
                    std::stringstream ss(gen_arg);
                    ss >> k >> n;
                    if (!ss) throw std::runtime_error("gen uniform: expected 'k n'");
                }
                return emit_generated(gen_uniform(k, n, cap), json_path);
            }
            if (gen_kind == "graphic")
                return emit_generated(gen_graphic(parse_edges(gen_arg), cap), json_path);
            throw std::runtime_error("unknown family '" + gen_kind + "'");
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const NotRegularError& e) {
        std::cout << e.what() << '\n';
        return kExitNoOrder;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}
