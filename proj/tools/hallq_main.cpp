// Batch front end: one subcommand per verification family, reports to
// stdout or --out, exit 0 iff every executed check passed.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hallq/cache.hpp"
#include "hallq/functor_shadow.hpp"
#include "hallq/green.hpp"
#include "hallq/hall.hpp"

using namespace hallq;

namespace {

struct CommonOpts {
    std::string quiver_name;
    std::string quiver_file;
    long long q = 2;
    long long budget = 10'000'000;
    std::string cache_dir;
    std::string out;
    std::string format = "tsv";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_q = true) {
    cmd->add_option("--quiver", opts.quiver_name, "preset quiver name (a2|a3|kronecker|jordan|d4)");
    cmd->add_option("--quiver-file", opts.quiver_file, "quiver JSON file");
    if (needs_q) cmd->add_option("--q", opts.q, "field size, a prime power");
    cmd->add_option("--budget", opts.budget, "enumeration budget in points");
    cmd->add_option("--cache-dir", opts.cache_dir, "iso-table cache directory");
    cmd->add_option("--out", opts.out, "output path (default stdout)");
    cmd->add_option("--format", opts.format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}));
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

QuiverPtr resolve_quiver(const CommonOpts& opts) {
    if (!opts.quiver_file.empty()) {
        std::ifstream in(opts.quiver_file);
        if (!in) throw std::runtime_error("cannot read quiver file " + opts.quiver_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        return Quiver::from_json(buf.str());
    }
    if (!opts.quiver_name.empty()) return preset_quiver(opts.quiver_name);
    throw UsageError("--quiver or --quiver-file is required");
}

std::unique_ptr<HallContext> make_context(const CommonOpts& opts) {
    auto ctx = std::make_unique<HallContext>(resolve_quiver(opts), opts.q, opts.budget);
    std::string dir = opts.cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv("HALL_CACHE_DIR")) dir = env;
    if (!dir.empty()) ctx->set_cache_dir(dir);
    return ctx;
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + opts.out);
    out << text;
}

ClassKey parse_class_key(const std::string& s) {
    auto colon = s.rfind(':');
    if (colon == std::string::npos)
        throw std::runtime_error("class key must look like dim:id, e.g. 1,0:0");
    return {DimVector::parse(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

nlohmann::ordered_json scalar_json(const SqrtQ& c) {
    return {{"a", c.a().str()}, {"b", c.b().str()}};
}

nlohmann::ordered_json hall_element_json(const HallElement& e) {
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [k, c] : e.terms()) {
        nlohmann::ordered_json t{{"dim", k.dim.counts()}, {"class", k.id}};
        t.update(scalar_json(c));
        terms.push_back(t);
    }
    return terms;
}

nlohmann::ordered_json tensor_element_json(const TensorElement& e) {
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [k, c] : e.terms()) {
        nlohmann::ordered_json t{{"dim1", k.first.dim.counts()},
                                 {"class1", k.first.id},
                                 {"dim2", k.second.dim.counts()},
                                 {"class2", k.second.id}};
        t.update(scalar_json(c));
        terms.push_back(t);
    }
    return terms;
}

int run_enumerate(const CommonOpts& opts, const std::string& dim_str) {
    auto ctx_ptr = make_context(opts);
    HallContext& ctx = *ctx_ptr;
    auto table = ctx.table(DimVector::parse(dim_str));
    emit(opts, table->to_json() + "\n");
    return 0;
}

int run_hall(const CommonOpts& opts, const std::vector<std::string>& product,
             const std::string& coproduct) {
    if (product.empty() && coproduct.empty())
        throw UsageError("hall needs --product or --coproduct");
    auto ctx_ptr = make_context(opts);
    HallContext& ctx = *ctx_ptr;
    nlohmann::ordered_json j;
    j["q"] = ctx.q();
    if (!product.empty()) {
        auto x = hall_basis(ctx, parse_class_key(product.at(0)));
        auto y = hall_basis(ctx, parse_class_key(product.at(1)));
        j["product"] = hall_element_json(hall_multiply(ctx, x, y));
    }
    if (!coproduct.empty()) {
        auto x = hall_basis(ctx, parse_class_key(coproduct));
        j["coproduct"] = tensor_element_json(hall_comultiply(ctx, x));
    }
    emit(opts, j.dump(2) + "\n");
    return 0;
}

int run_green(const CommonOpts& opts, int max_dim) {
    auto ctx_ptr = make_context(opts);
    HallContext& ctx = *ctx_ptr;
    GreenReport report = sweep_green(ctx, max_dim);
    report.quiver_name = opts.quiver_name.empty() ? opts.quiver_file : opts.quiver_name;
    auto ts = determine_twist_sign(ctx, std::min(max_dim, 2));
    std::string sign;
    for (size_t i = 0; i < ts.surviving_signs.size(); ++i)
        sign += std::string(i ? "," : "") + (ts.surviving_signs[i] > 0 ? "+1" : "-1");
    if (sign.empty()) sign = "none";
    if (opts.format == "json") {
        auto j = nlohmann::ordered_json::parse(report.to_json());
        j["twist_sign"] = sign;
        emit(opts, j.dump(2) + "\n");
    } else {
        emit(opts, "# twist_sign=" + sign + "\n" + report.to_tsv());
    }
    return report.all_equal ? 0 : 1;
}

int run_serre(const CommonOpts& opts) {
    auto ctx_ptr = make_context(opts);
    HallContext& ctx = *ctx_ptr;
    const Quiver& quiver = *ctx.quiver();
    std::ostringstream os;
    bool all_zero = true;
    bool any = false;
    os << "i\tj\tzero\n";
    for (size_t i = 0; i < quiver.num_vertices(); ++i)
        for (size_t j = 0; j < quiver.num_vertices(); ++j) {
            if (i == j || quiver.has_loop_at(int(i)) || quiver.has_loop_at(int(j))) continue;
            any = true;
            bool zero = serre_defect(ctx, int(i), int(j)).is_zero();
            if (!zero) all_zero = false;
            os << quiver.vertex_names()[i] << '\t' << quiver.vertex_names()[j] << '\t'
               << (zero ? "1" : "0") << '\n';
        }
    if (!any) throw std::runtime_error("no loop-free vertex pair to check");
    if (opts.format == "json") {
        nlohmann::ordered_json j{{"q", ctx.q()}, {"all_zero", all_zero}};
        emit(opts, j.dump(2) + "\n");
    } else {
        emit(opts, os.str());
    }
    return all_zero ? 0 : 1;
}

VUnit parse_v_unit(const std::string& s) {
    for (VUnit u : all_v_units())
        if (s == v_unit_name(u)) return u;
    throw UsageError("--v-unit must be one of +sqrt(q), -sqrt(q), +1/sqrt(q), -1/sqrt(q)");
}

int run_theorem(const CommonOpts& opts, const std::string& alpha, const std::string& beta,
                const std::string& alphap, const std::string& betap, int max_dim,
                const std::string& forced_unit) {
    auto ctx_ptr = make_context(opts);
    HallContext& ctx = *ctx_ptr;

    std::vector<DecompositionInstance> instances;
    if (!alpha.empty()) {
        DimVector da = DimVector::parse(alpha), db = DimVector::parse(beta);
        DimVector dap = DimVector::parse(alphap), dbp = DimVector::parse(betap);
        auto ta = ctx.table(da);
        auto tb = ctx.table(db);
        for (size_t ia = 0; ia < ta->num_classes(); ++ia)
            for (size_t ib = 0; ib < tb->num_classes(); ++ib)
                instances.push_back({{da, int(ia)}, {db, int(ib)}, dap, dbp});
    } else {
        instances = decomposition_instances(ctx, max_dim);
    }

    // determine the unit on a bounded sweep (or honor the forced one),
    // then verify every requested instance at that choice
    VUnitSweep sweep;
    if (!forced_unit.empty()) {
        sweep.canonical = parse_v_unit(forced_unit);
        sweep.survivors = {*sweep.canonical};
    } else {
        sweep = determine_v_unit(ctx, std::min(max_dim, 2));
    }
    std::ostringstream tsv;
    bool all_equal = true;
    tsv << "A\tB\talphap\tbetap\tequal\n";
    std::vector<char> equal(instances.size(), 0);
    if (sweep.canonical) {
        SqrtQ u = realize_v_unit(*sweep.canonical, ctx.q());
        std::atomic<bool> failed{false};
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < (long long)instances.size(); ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                const auto& inst = instances[i];
                equal[i] = verify_res_ind_decomposition(ctx, inst.A, inst.B, inst.alphap,
                                                        inst.betap, u)
                                   .equal
                               ? 1
                               : 0;
            } catch (...) {
#pragma omp critical(theorem_error)
                {
                    if (!failed.exchange(true)) error = std::current_exception();
                }
            }
        }
        if (failed.load()) std::rethrow_exception(error);
    }
    for (size_t i = 0; i < instances.size(); ++i) {
        const auto& inst = instances[i];
        if (!equal[i]) all_equal = false;
        tsv << inst.A.str() << '\t' << inst.B.str() << '\t' << inst.alphap.str() << '\t'
            << inst.betap.str() << '\t' << (equal[i] ? "1" : "0") << '\n';
    }
    bool ok = all_equal && sweep.canonical.has_value();

    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["q"] = ctx.q();
        j["v_unit"] = sweep.canonical ? v_unit_name(*sweep.canonical) : "undetermined";
        auto survivors = nlohmann::ordered_json::array();
        for (auto s : sweep.survivors) survivors.push_back(v_unit_name(s));
        j["v_unit_survivors"] = survivors;
        j["instances"] = (long long)instances.size();
        j["all_equal"] = all_equal;
        emit(opts, j.dump(2) + "\n");
    } else {
        std::string head = "# v_unit=";
        head += sweep.canonical ? v_unit_name(*sweep.canonical) : "undetermined";
        head += "\n";
        emit(opts, head + tsv.str());
    }
    return ok ? 0 : 1;
}

int run_shifts(const CommonOpts& opts, int samples, uint64_t seed) {
    std::vector<std::string> names;
    if (!opts.quiver_name.empty() || !opts.quiver_file.empty())
        names.push_back(opts.quiver_name.empty() ? opts.quiver_file : opts.quiver_name);
    else
        names = {"a2", "kronecker", "jordan", "d4"};

    std::ostringstream os;
    os << "quiver\tsamples\tquadruples\tok\n";
    bool all_ok = true;
    for (const auto& name : names) {
        CommonOpts sub = opts;
        if (opts.quiver_file.empty()) sub.quiver_name = name;
        auto quiver = resolve_quiver(sub);
        auto r = shift_identity_fuzz(*quiver, samples, seed, 20);
        if (!r.all_ok) all_ok = false;
        os << name << '\t' << r.instances << '\t' << r.quadruples << '\t'
           << (r.all_ok ? "1" : "0") << '\n';
    }
    if (opts.format == "json") {
        nlohmann::ordered_json j{{"samples", samples}, {"seed", seed}, {"all_ok", all_ok}};
        emit(opts, j.dump(2) + "\n");
    } else {
        emit(opts, os.str());
    }
    return all_ok ? 0 : 1;
}

int run_bialgebra(const CommonOpts& opts, int max_dim) {
    // without an explicit quiver, sweep the loop-free/loop family together;
    // the loop quiver alone cannot separate the two signs
    std::vector<std::string> names;
    if (!opts.quiver_name.empty() || !opts.quiver_file.empty())
        names.push_back("");
    else
        names = {"a2", "kronecker", "jordan"};

    long long pairs = 0;
    bool plus_ok = true, minus_ok = true;
    for (const auto& name : names) {
        CommonOpts sub = opts;
        if (!name.empty()) sub.quiver_name = name;
        auto ctx_ptr = make_context(sub);
        auto ts = determine_twist_sign(*ctx_ptr, max_dim);
        pairs += ts.pairs_checked;
        bool p = false, m = false;
        for (int s : ts.surviving_signs) (s > 0 ? p : m) = true;
        plus_ok = plus_ok && p;
        minus_ok = minus_ok && m;
    }
    bool ok = plus_ok || minus_ok;
    bool unique = plus_ok != minus_ok;
    std::string signs = plus_ok && minus_ok ? "+1,-1"
                        : plus_ok           ? "+1"
                        : minus_ok          ? "-1"
                                            : "";
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["q"] = opts.q;
        j["pairs"] = pairs;
        j["twist_signs"] = signs;
        j["unique"] = unique;
        emit(opts, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "pairs\t" << pairs << "\nsigns\t" << signs << "\nunique\t" << (unique ? "1" : "0")
           << "\n";
        emit(opts, os.str());
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hall-algebra verification engine over finite fields"};
    app.require_subcommand(1);

    CommonOpts enum_opts, hall_opts, green_opts, serre_opts, theorem_opts, shifts_opts,
        bialgebra_opts;
    std::string enum_dim;
    std::vector<std::string> hall_product;
    std::string hall_coproduct;
    int green_max = 3, theorem_max = 2, bialgebra_max = 3, shift_samples = 1000;
    uint64_t shift_seed = 42;
    std::string th_alpha, th_beta, th_alphap, th_betap, th_unit;

    auto* c_enum = app.add_subcommand("enumerate", "build one iso-class table and emit it as JSON");
    add_common(c_enum, enum_opts);
    c_enum->add_option("--dim", enum_dim, "dimension vector, e.g. 1,1")->required();

    auto* c_hall = app.add_subcommand("hall", "product / coproduct of basis classes");
    add_common(c_hall, hall_opts);
    c_hall->add_option("--product", hall_product, "two class keys dim:id dim:id")->expected(2);
    c_hall->add_option("--coproduct", hall_coproduct, "one class key dim:id");

    auto* c_green = app.add_subcommand("green", "exact two-sided counting-identity sweep");
    add_common(c_green, green_opts);
    c_green->add_option("--max-dim", green_max, "total dimension bound");

    auto* c_serre = app.add_subcommand("serre", "quantum Serre relation check");
    add_common(c_serre, serre_opts);

    auto* c_theorem =
        app.add_subcommand("theorem", "restriction-of-induction decomposition check");
    add_common(c_theorem, theorem_opts);
    c_theorem->add_option("--alpha", th_alpha, "dim of the first input grade");
    c_theorem->add_option("--beta", th_beta, "dim of the second input grade");
    c_theorem->add_option("--alphap", th_alphap, "dim of the first output grade");
    c_theorem->add_option("--betap", th_betap, "dim of the second output grade");
    c_theorem->add_option("--max-dim", theorem_max, "total dimension bound for the sweep");
    c_theorem->add_option("--v-unit", th_unit, "force a unit instead of sweeping");

    auto* c_shifts = app.add_subcommand("shifts", "integer shift-identity fuzz");
    add_common(c_shifts, shifts_opts, false);
    c_shifts->add_option("--samples", shift_samples, "random frames per quiver");
    c_shifts->add_option("--seed", shift_seed, "random seed");

    auto* c_bialgebra = app.add_subcommand("bialgebra", "twisted-bialgebra sign sweep");
    add_common(c_bialgebra, bialgebra_opts);
    c_bialgebra->add_option("--max-dim", bialgebra_max, "total dimension bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_enum->parsed()) return run_enumerate(enum_opts, enum_dim);
        if (c_hall->parsed()) return run_hall(hall_opts, hall_product, hall_coproduct);
        if (c_green->parsed()) return run_green(green_opts, green_max);
        if (c_serre->parsed()) return run_serre(serre_opts);
        if (c_theorem->parsed())
            return run_theorem(theorem_opts, th_alpha, th_beta, th_alphap, th_betap, theorem_max,
                               th_unit);
        if (c_shifts->parsed()) return run_shifts(shifts_opts, shift_samples, shift_seed);
        if (c_bialgebra->parsed()) return run_bialgebra(bialgebra_opts, bialgebra_max);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
