#include "rig/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using rig::Json;

constexpr const char* kVersion = "0.1.0";

struct Options {
    std::string input;
    std::string catalog;
    std::size_t n = 0;
    std::size_t p = 0;
    std::string point = "base";
    std::uint64_t seed = 1;
    bool emit_witness = false;
    std::string output;
};

Json load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
    return j;
}

rig::GramPair grams_or_identity(const Json& j, std::size_t n, std::size_t r) {
    if (j.is_object() && j.contains("grams")) return rig::grams_from_json(j.at("grams"), "grams");
    return rig::GramPair::identity(n, r);
}

std::vector<rig::GaussianRational> resolve_point(const rig::PolyMap& f, const Options& opt) {
    if (opt.point == "base") return rig::base_point(f);
    if (opt.point == "random") return rig::random_point(f, opt.seed);
    throw std::invalid_argument("--point must be 'base' or 'random'");
}

Json run_check_bochner(const Options& opt) {
    Json in = load_input(opt.input);
    rig::VectorForm h = rig::vector_form_from_json(in.at("H"), "H");
    rig::GramPair grams = grams_or_identity(in, h.n, h.r);
    auto verdict = rig::bochner_rigid(h, grams);
    return rig::to_json(verdict, opt.emit_witness);
}

Json run_check_weyl(const Options& opt) {
    Json in = load_input(opt.input);
    rig::SymForm h = rig::sym_form_from_json(in.at("H"), "H");
    auto verdict = rig::weyl_rigid(h);
    return rig::to_json(verdict, opt.emit_witness);
}

Json run_lemma1(const Options& opt) {
    Json in = load_input(opt.input);
    rig::VectorForm h = rig::vector_form_from_json(in.at("H"), "H");
    rig::GramPair grams = grams_or_identity(in, h.n, h.r);
    auto basis = rig::lemma1_solve(h, grams);
    Json out{{"dimension", basis.size()}};
    if (opt.emit_witness) {
        Json arr = Json::array();
        for (const auto& b : basis) arr.push_back(rig::to_json(b));
        out["basis"] = std::move(arr);
    }
    return out;
}

Json run_bochner_flat(const Options& opt) {
    Json in = load_input(opt.input);
    rig::VectorForm h = rig::vector_form_from_json(in.at("H"), "H");
    rig::GramPair grams = grams_or_identity(in, h.n, h.r);
    return Json{{"bochner_flat", rig::bochner_flat(h, grams)}};
}

Json run_iwatani(const Options& opt) {
    Json in = load_input(opt.input);
    rig::VectorForm h = rig::vector_form_from_json(in.at("H"), "H");
    rig::Matrix<rig::GaussianRational> G = rig::Matrix<rig::GaussianRational>::identity(h.r);
    if (in.contains("G")) G = rig::cmatrix_from_json(in.at("G"), "G");
    auto res = rig::iwatani_check(h, G);
    return Json{{"ok", res.ok}, {"r_squared", rig::to_json(res.r_squared)}};
}

rig::PolyMap catalog_from_options(const Options& opt) {
    if (opt.catalog.empty()) throw std::invalid_argument("--catalog is required for this command");
    std::vector<std::size_t> params;
    if (opt.catalog == "plucker")
        params = {opt.n, opt.p};
    else
        params = {opt.n};
    return rig::catalog(opt.catalog, params);
}

Json run_fundamental_forms(const Options& opt) {
    rig::PolyMap f = catalog_from_options(opt);
    auto point = resolve_point(f, opt);
    auto tower = rig::fundamental_forms(f, point);
    auto ct = rig::constant_type_check(f, opt.seed);
    bool generic = ct.constant_type && rig::type_profile(tower.flag) == ct.profile;
    Json levels = Json::array();
    for (const auto& lvl : tower.levels) {
        Json l{{"l", lvl.l}, {"r", lvl.form.r}};
        if (opt.emit_witness) {
            l["form"] = rig::to_json(lvl.form);
            l["grams"] = rig::to_json(lvl.grams);
        }
        levels.push_back(std::move(l));
    }
    return Json{{"status", generic ? "OK" : "NON_GENERIC"},
                {"type_numbers", tower.flag.type_numbers},
                {"height", tower.flag.height},
                {"immersion", tower.flag.immersion},
                {"constant_type", ct.constant_type},
                {"levels", std::move(levels)}};
}

Json run_check_grassmannian(const Options& opt) {
    if (opt.n == 0 || opt.p < 2) throw std::invalid_argument("check-grassmannian needs --n and --p");
    rig::PolyMap f = rig::plucker(opt.n, opt.p);
    auto tower = rig::fundamental_forms(f, rig::base_point(f));
    Json levels = Json::array();
    bool all_rigid = true;
    for (const auto& lvl : tower.levels) {
        auto verdict = rig::bochner_rigid(lvl.form, lvl.grams);
        all_rigid = all_rigid && verdict.status == rig::Status::Rigid;
        Json l{{"l", lvl.l},
               {"r", lvl.form.r},
               {"verdict", rig::to_json(verdict, opt.emit_witness)}};
        if (lvl.l == 2 && (opt.p == 2 || opt.p == 3)) {
            auto ref = rig::plucker_reference_quadrics(opt.n, opt.p);
            l["matches_reference_span"] =
                rig::span_equal({lvl.form}, {ref});
        }
        if (lvl.l == 3 && opt.p == 3) {
            auto ref = rig::plucker_reference_cubics(opt.n);
            l["matches_reference_span"] = rig::span_equal({lvl.form}, {ref});
        }
        levels.push_back(std::move(l));
    }
    return Json{{"height", tower.flag.height},
                {"type_numbers", tower.flag.type_numbers},
                {"all_rigid", all_rigid},
                {"levels", std::move(levels)}};
}

Json run_check_whitney(const Options& opt) {
    if (opt.n == 0) throw std::invalid_argument("check-whitney needs --n");
    auto res = rig::whitney_pullback_check(opt.n);
    return Json{{"ok", res.ok}, {"factor", rig::to_json(res.factor)}};
}

void summarize(const Json& report, std::ostream& os) {
    const Json& res = report.at("result");
    os << report.at("request").at("command").get<std::string>() << ": ";
    if (res.contains("status"))
        os << res.at("status").get<std::string>();
    else if (res.contains("ok"))
        os << (res.at("ok").get<bool>() ? "ok" : "FAILED");
    else if (res.contains("bochner_flat"))
        os << (res.at("bochner_flat").get<bool>() ? "flat" : "not flat");
    else if (res.contains("dimension"))
        os << "solution dimension " << res.at("dimension");
    if (res.contains("solution_dim"))
        os << " (solution dim " << res.at("solution_dim") << ", kernel dim "
           << res.at("kernel_dim") << ")";
    if (res.contains("all_rigid"))
        os << (res.at("all_rigid").get<bool>() ? "all levels RIGID" : "NOT all levels rigid");
    if (res.contains("height")) os << ", height " << res.at("height");
    os << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rigidity checker for polynomial forms and embeddings"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::string> commands = {"check-bochner", "check-weyl",
                                               "fundamental-forms", "check-grassmannian",
                                               "check-whitney", "lemma1",
                                               "bochner-flat", "iwatani"};
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", opt.input, "inline JSON input file");
        sub->add_option("--catalog", opt.catalog, "catalog embedding name");
        sub->add_option("--n", opt.n, "primary size parameter");
        sub->add_option("--p", opt.p, "secondary size parameter");
        sub->add_option("--point", opt.point, "base|random");
        sub->add_option("--seed", opt.seed, "RNG seed for random points");
        sub->add_flag("--emit-witness", opt.emit_witness, "include witness/basis forms");
        sub->add_option("--output", opt.output, "report file (default stdout)");
    }

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    Json request{{"command", command}, {"seed", opt.seed}};
    if (!opt.input.empty()) request["input"] = opt.input;
    if (!opt.catalog.empty()) request["catalog"] = opt.catalog;
    if (opt.n) request["n"] = opt.n;
    if (opt.p) request["p"] = opt.p;
    request["point"] = opt.point;
    request["emit_witness"] = opt.emit_witness;

    Json result;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (command == "check-bochner")
            result = run_check_bochner(opt);
        else if (command == "check-weyl")
            result = run_check_weyl(opt);
        else if (command == "fundamental-forms")
            result = run_fundamental_forms(opt);
        else if (command == "check-grassmannian")
            result = run_check_grassmannian(opt);
        else if (command == "check-whitney")
            result = run_check_whitney(opt);
        else if (command == "lemma1")
            result = run_lemma1(opt);
        else if (command == "bochner-flat")
            result = run_bochner_flat(opt);
        else if (command == "iwatani")
            result = run_iwatani(opt);
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    Json report{{"tool", "rigcheck"},
                {"version", kVersion},
                {"request", std::move(request)},
                {"result", std::move(result)},
                {"timings", Json{{"total_ms", ms}}}};

    if (opt.output.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(opt.output);
        if (!out) {
            std::cerr << "input error: cannot write " << opt.output << "\n";
            return 1;
        }
        out << report.dump(2) << "\n";
    }
    summarize(report, std::cerr);
    return 0;
}
