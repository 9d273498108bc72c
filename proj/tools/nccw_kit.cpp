#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nccw/acceptance.hpp"
#include "nccw/json_io.hpp"

using namespace nccw;

namespace {

// Malformed input of any kind; mapped to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

NccwComplex read_complex(const std::string& path) {
    NccwComplex a = complex_from_json(read_json(path));
    ValidationReport rep = validate(a);
    if (!rep.ok) throw InputError(path + ": " + rep.message);
    return a;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int emit_bool(const char* key, bool value) {
    emit(Json{{key, value}});
    return value ? 0 : 1;
}

NccwComplex gallery_item(const std::string& name, const std::vector<std::string>& params) {
    std::vector<unsigned> nums;
    auto need = [&](std::size_t count) {
        if (params.size() != count) throw InputError("gallery " + name + " takes " + std::to_string(count) + " parameter(s)");
        for (const auto& p : params) {
            try {
                std::size_t used = 0;
                const unsigned long v = std::stoul(p, &used);
                if (used != p.size()) throw std::invalid_argument(p);
                nums.push_back(static_cast<unsigned>(v));
            } catch (const std::logic_error&) {
                throw InputError("gallery " + name + ": not a nonnegative integer: " + p);
            }
        }
    };
    if (name == "interval") return need(0), interval();
    if (name == "circle") return need(0), circle();
    if (name == "pointed-interval") return need(0), pointed_interval();
    if (name == "q-c") return need(0), q_c();
    if (name == "razak") return need(1), razak(nums[0]);
    if (name == "dimension-drop") return need(2), dimension_drop(nums[0], nums[1]);
    if (name == "a-pq") return need(2), a_pq(nums[0], nums[1]);
    if (name == "crossed") return need(2), crossed_nccw(nums[0], nums[1]);
    if (name == "tree") {
        // tree N U-V U-V ...
        if (params.empty()) throw InputError("gallery tree takes a vertex count and edges like 1-2");
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::size_t vertices = 0;
        try {
            vertices = std::stoul(params[0]);
            for (std::size_t t = 1; t < params.size(); ++t) {
                const auto dash = params[t].find('-');
                if (dash == std::string::npos) throw std::invalid_argument(params[t]);
                edges.emplace_back(std::stoul(params[t].substr(0, dash)), std::stoul(params[t].substr(dash + 1)));
            }
        } catch (const std::logic_error&) {
            throw InputError("gallery tree: bad vertex count or edge");
        }
        return tree(vertices, edges);
    }
    throw InputError("unknown gallery item '" + name + "' (interval, circle, pointed-interval, q-c, razak, dimension-drop, a-pq, crossed, tree)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for 1-dimensional NCCW complexes"};
    app.require_subcommand(1);
    int code = 0;

    std::string file, trace_out, ambient_file;
    std::vector<std::string> files, params;
    unsigned p = 0, q = 0;
    std::vector<unsigned> oracle;
    std::uint64_t seed = acceptance::kDefaultSeed, d = 0;
    bool json_out = false;
    int criterion = 0;

    auto* validate_cmd = app.add_subcommand("validate", "check a complex file");
    validate_cmd->add_option("file", file)->required();
    validate_cmd->callback([&] {
        NccwComplex a = complex_from_json(read_json(file));
        ValidationReport rep = validate(a);
        Json out{{"valid", rep.ok}};
        if (rep.ok) out["unital"] = is_unital(a);
        if (!rep.ok) out["message"] = rep.message;
        if (rep.row) out["row"] = *rep.row;
        emit(out);
        code = rep.ok ? 0 : 1;
    });

    auto* k_cmd = app.add_subcommand("k", "K0 and K1 of a complex");
    k_cmd->add_option("file", file)->required();
    k_cmd->callback([&] {
        KTheory kt = k_theory(read_complex(file));
        emit(Json{{"K0", kt.k0.to_string()}, {"K1", kt.k1.to_string()}});
    });

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce to pure multiplicities");
    reduce_cmd->add_option("file", file)->required();
    reduce_cmd->add_option("--trace", trace_out, "write the move trace here");
    reduce_cmd->callback([&] {
        const NccwComplex a = read_complex(file);
        try {
            Reduction red = reduce_to_pure_multiplicities(a);
            Json out{{"route", route_name(red.route)}, {"result", to_json(red.result)}, {"moves", red.trace.steps.size()}};
            if (red.finding) out["row_purity_violation"] = red.finding->to_string();
            if (!trace_out.empty()) {
                std::ofstream t(trace_out);
                if (!t) throw InputError("cannot write " + trace_out);
                t << to_json(red.trace).dump(2) << '\n';
            }
            emit(out);
        } catch (const PureFormUnreachable& e) {
            emit(Json{{"pure_form_reachable", false}, {"reason", e.what()}});
            code = 1;
        }
    });

    auto* tree_cmd = app.add_subcommand("tree-cert", "forest certificate for a K1-trivial complex");
    tree_cmd->add_option("file", file)->required();
    tree_cmd->callback([&] {
        auto cert = tree_certificate(read_complex(file));
        if (auto* c = std::get_if<TreeCertificate>(&cert)) {
            emit(Json{{"graph", to_json(c->graph)}, {"route", route_name(c->route)}, {"trace", to_json(c->trace)}});
        } else {
            emit(Json{{"k1", std::get<NotK1Trivial>(cert).cokernel.to_string()}});
            code = 1;
        }
    });

    auto* verify_cmd = app.add_subcommand("verify-trace", "replay a move trace");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->callback([&] {
        TraceCheck chk = verify_trace(trace_from_json(read_json(file)));
        Json out{{"ok", chk.ok}};
        if (chk.failing_step) out["failing_step"] = *chk.failing_step;
        if (!chk.ok) out["cause"] = chk.cause;
        emit(out);
        code = chk.ok ? 0 : 1;
    });

    auto* cu_cmd = app.add_subcommand("cu", "Cuntz semigroup model operations");
    cu_cmd->require_subcommand(1);
    auto cu_elements = [&](std::size_t lo, std::size_t hi) {
        if (files.size() < lo || files.size() > hi) throw InputError("wrong number of element files");
        const AmbientPtr amb = CuAmbient::of(read_complex(ambient_file));
        std::vector<CuElement> xs;
        for (const auto& f : files) xs.push_back(cu_element_from_json(read_json(f), amb));
        return xs;
    };
    auto add_cu = [&](const char* name, const char* help, const char* operands) {
        auto* c = cu_cmd->add_subcommand(name, help);
        c->add_option("--ambient", ambient_file, "complex file")->required();
        c->add_option("elements", files, operands)->required();
        return c;
    };
    add_cu("leq", "x <= y", "X Y")->callback([&] {
        auto xs = cu_elements(2, 2);
        code = emit_bool("leq", leq(xs[0], xs[1]));
    });
    add_cu("add", "x + y + ...", "X Y ...")->callback([&] {
        auto xs = cu_elements(1, SIZE_MAX);
        CuElement s = xs[0];
        for (std::size_t t = 1; t < xs.size(); ++t) s = add(s, xs[t]);
        emit(to_json(s));
    });
    add_cu("sup", "supremum of an increasing list", "X1 X2 ...")->callback([&] {
        auto xs = cu_elements(1, SIZE_MAX);
        try {
            emit(to_json(sup_increasing(xs)));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    });
    auto* ll = add_cu("ll", "x << y (candidate, or the witness oracle)", "X Y");
    ll->add_option("--oracle", oracle, "grid denominator D and value cap N")->expected(2);
    ll->callback([&] {
        auto xs = cu_elements(2, 2);
        if (oracle.empty()) {
            code = emit_bool("ll", compactly_contained(xs[0], xs[1]));
        } else {
            if (oracle[0] < 1) throw InputError("--oracle D must be at least 1");
            code = emit_bool("ll", compactly_contained_oracle(xs[0], xs[1], oracle[0], oracle[1]));
        }
    });
    add_cu("compact", "is X compact; with E X, the r with E + r = X", "[E] X")->callback([&] {
        auto xs = cu_elements(1, 2);
        if (xs.size() == 1) {
            code = emit_bool("compact", is_compact(xs[0]));
            return;
        }
        if (!is_compact(xs[0])) throw InputError("first element is not compact");
        auto dec = compact_decomposition(xs[0], xs[1]);
        if (auto* r = std::get_if<CuElement>(&dec)) {
            emit(Json{{"dominated", true}, {"r", to_json(*r)}});
        } else {
            code = emit_bool("dominated", false);
        }
    });
    auto* fd = add_cu("floordiv", "floor(x / d) with the divisibility report", "X");
    fd->add_option("-d,--divisor", d, "divisor")->required()->check(CLI::PositiveNumber);
    fd->callback([&] {
        auto xs = cu_elements(1, 1);
        DivisibilityReport rep = divisibility_check(xs[0], d);
        Json out{{"floor", to_json(floor_div(xs[0], d))}, {"lower_ok", rep.lower_ok}, {"upper_ok", rep.upper_ok}};
        out["min_rank"] = rep.min_rank ? Json(*rep.min_rank) : Json("inf");
        emit(out);
        code = rep.lower_ok && rep.upper_ok ? 0 : 1;
    });

    auto* ct_cmd = app.add_subcommand("cutilde", "formal differences [a] - n[1]");
    ct_cmd->require_subcommand(1);
    auto ct_elements = [&](std::size_t count) {
        if (files.size() != count) throw InputError("wrong number of element files");
        const CuTildeAmbient amb = CuTildeAmbient::of(read_complex(ambient_file));
        std::vector<CuTildeElement> us;
        for (const auto& f : files) us.push_back(cu_tilde_from_json(read_json(f), amb));
        return us;
    };
    auto add_ct = [&](const char* name, const char* help, const char* operands) {
        auto* c = ct_cmd->add_subcommand(name, help);
        c->add_option("--ambient", ambient_file, "complex file (the original, not its unitization)")->required();
        c->add_option("elements", files, operands)->required();
        return c;
    };
    add_ct("leq", "u <= v", "U V")->callback([&] {
        auto us = ct_elements(2);
        code = emit_bool("leq", leq(us[0], us[1]));
    });
    add_ct("add", "u + v", "U V")->callback([&] {
        auto us = ct_elements(2);
        emit(to_json(add(us[0], us[1])));
    });
    add_ct("pos", "positivity and the Cu representative", "U")->callback([&] {
        auto us = ct_elements(1);
        auto rep = positive_representative(us[0]);
        if (auto* x = std::get_if<CuElement>(&rep)) {
            emit(Json{{"positive", true}, {"representative", to_json(*x)}});
        } else {
            code = emit_bool("positive", false);
        }
    });

    auto* gallery_cmd = app.add_subcommand("gallery", "named complexes");
    std::string name;
    gallery_cmd->add_option("name", name)->required();
    gallery_cmd->add_option("params", params);
    gallery_cmd->callback([&] { emit(to_json(gallery_item(name, params))); });

    auto* chain_cmd = app.add_subcommand("chain", "Euclidean chain from A_{p,q} down to A_{1,d}");
    chain_cmd->add_option("p", p)->required();
    chain_cmd->add_option("q", q)->required();
    chain_cmd->callback([&] {
        EuclideanChain ch = euclidean_chain(p, q);
        Json pairs = Json::array();
        for (auto [a, b] : ch.pairs) pairs.push_back(Json::array({a, b}));
        emit(Json{{"pairs", pairs}, {"trace", to_json(ch.trace)}});
    });

    auto* crossed_cmd = app.add_subcommand("crossed", "mapping-torus block for coprime p < q");
    crossed_cmd->add_option("p", p)->required();
    crossed_cmd->add_option("q", q)->required();
    crossed_cmd->callback([&] {
        CrossedBlockReport rep = crossed_block(p, q);
        emit(to_json(rep));
        code = rep.k1_trivial ? 0 : 1;
    });

    auto* suite_cmd = app.add_subcommand("suite", "run the acceptance suites");
    suite_cmd->add_option("--seed", seed, "random seed");
    suite_cmd->add_option("--criterion", criterion, "only this criterion")->check(CLI::Range(1, 9));
    suite_cmd->add_flag("--json", json_out, "JSON summary without timings");
    suite_cmd->callback([&] {
        std::vector<acceptance::CriterionResult> results;
        if (criterion)
            results.push_back(acceptance::run_criterion(criterion, seed));
        else
            results = acceptance::run_all(seed);
        bool all = true;
        Json rows = Json::array();
        for (const auto& r : results) {
            all = all && r.passed;
            rows.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
            if (!json_out) std::cout << acceptance::format_line(r) << '\n';
        }
        if (json_out) emit(Json{{"seed", seed}, {"criteria", rows}, {"all_passed", all}});
        code = all ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        // Precondition failures and element constraint violations from user-supplied data.
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return code;
}
