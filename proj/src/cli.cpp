#include "mbd/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"

#include "mbd/io.hpp"
#include "mbd/moments.hpp"
#include "mbd/oracle.hpp"
#include "mbd/pmf.hpp"
#include "mbd/selfcheck.hpp"
#include "mbd/shape.hpp"

namespace mbd::cli {

namespace {

struct Options {
    long n = 0;
    double a = 0.0;
    double b = 0.0;
    std::optional<double> nu_f;
    std::string nu;
    std::string cond;
    std::string format;
    std::string method = "forward";
    std::string out_file;
    int grid = 100;
    unsigned threads = 0;
    std::uint64_t reps = 100000;
    std::uint64_t seed = 1;
};

class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

NuSpec resolve_nu(const Options& o) {
    if (!o.nu.empty()) {
        if (o.nu_f) throw ArgumentError("give either --nu or --nu-f, not both");
        if (o.nu == "stationary") return NuSpec::stationary();
        try {
            return NuSpec::fixed(std::stod(o.nu));
        } catch (const std::exception&) {
            throw ArgumentError("--nu expects 'stationary' or a number, got '" + o.nu + "'");
        }
    }
    if (o.nu_f) return NuSpec::fixed(*o.nu_f);
    throw ArgumentError("an initial law is required: --nu-f X or --nu stationary");
}

ChainParams resolve_params(const Options& o) {
    const NuSpec nu = resolve_nu(o);
    try {
        return nu.is_stationary() ? make_stationary_params(o.a, o.b) : make_params(o.a, o.b, *nu.nu_F);
    } catch (const std::invalid_argument& e) {
        throw ArgumentError(e.what());
    }
}

bool wants_json(const Options& o, const char* default_format) {
    return (o.format.empty() ? std::string(default_format) : o.format) == "json";
}

std::optional<State> resolve_cond(const Options& o) {
    if (o.cond.empty()) return std::nullopt;
    if (o.cond == "F") return State::F;
    if (o.cond == "A") return State::A;
    throw ArgumentError("--cond expects F or A");
}

void add_chain_options(CLI::App* sub, Options& o) {
    sub->add_option("--n", o.n, "Number of steps")->required()->check(CLI::PositiveNumber);
    sub->add_option("--a", o.a, "Transition probability F -> A")->required();
    sub->add_option("--b", o.b, "Transition probability A -> F")->required();
    sub->add_option("--nu-f", o.nu_f, "Initial probability of state F");
    sub->add_option("--nu", o.nu, "'stationary' to start from the stationary law");
}

void add_output_options(CLI::App* sub, Options& o, const std::string& default_format) {
    sub->add_option("--format", o.format, "Output format (default " + default_format + ")")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out_file, "Write output to FILE instead of stdout");
}

int cmd_pmf(const Options& o, std::ostream& os) {
    const auto params = resolve_params(o);
    const auto cond = resolve_cond(o);
    Pmf f = [&] {
        if (cond) {
            if (o.method != "forward") throw ArgumentError("--cond is only available with --method forward");
            return conditional_pmf(params, o.n, *cond);
        }
        if (o.method == "recursion") return pmf_scalar_recursion(params, o.n);
        if (o.method == "closed") return pmf_closed(params, o.n);
        return pmf(params, o.n);
    }();
    if (wants_json(o, "csv")) {
        auto j = io::pmf_to_json(f);
        j["method"] = o.method;
        os << j.dump() << '\n';
    } else {
        io::write_pmf_csv(os, f, o.method);
    }
    return kOk;
}

int cmd_moments(const Options& o, std::ostream& os) {
    const auto params = resolve_params(o);
    const auto report = moment_report(params, o.n);
    if (wants_json(o, "json")) {
        auto j = io::moments_to_json(report);
        j["a"] = params.a();
        j["b"] = params.b();
        j["nu_F"] = params.nu_F();
        os << j.dump() << '\n';
    } else {
        os << io::params_header(params, o.n) << '\n' << "quantity,value\n";
        const auto j = io::moments_to_json(report);
        for (const char* key : {"mean", "variance", "cond_mean_F", "cond_mean_A", "cond_var_F", "cond_var_A"}) {
            os << key << ',' << (j[key].is_null() ? std::string("nan") : io::format_double(j[key].get<double>()))
               << '\n';
        }
    }
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& os) {
    const auto params = resolve_params(o);
    const auto cond = resolve_cond(o);
    const PmfKind kind = !cond ? PmfKind::Full : *cond == State::F ? PmfKind::CondF : PmfKind::CondA;
    const auto shape = classify(params, o.n, kind);
    if (wants_json(o, "json")) {
        auto j = io::params_to_json(params, o.n);
        j["kind"] = std::string(to_string(kind));
        j.update(io::shape_to_json(shape));
        os << j.dump() << '\n';
    } else {
        os << io::params_header(params, o.n) << " kind=" << to_string(kind) << '\n';
        os << "class,margin,f0,f1,f2,f_n_minus_2,f_n_minus_1,f_n\n";
        os << to_string(shape.kind) << ',' << io::format_double(shape.margin);
        for (double v : shape.boundary_values) os << ',' << io::format_double(v);
        os << '\n';
    }
    return kOk;
}

int cmd_region(const Options& o, std::ostream& os) {
    const NuSpec nu = resolve_nu(o);
    if (o.grid < 2) throw ArgumentError("--grid must be at least 2");
    RegionGrid g;
    try {
        g = classify_region(o.n, nu, o.grid, o.threads);
    } catch (const std::invalid_argument& e) {
        throw ArgumentError(e.what());
    }
    if (wants_json(o, "csv")) {
        os << io::region_to_json(g).dump() << '\n';
    } else {
        io::write_region_csv(os, g);
    }
    return kOk;
}

int cmd_sample(const Options& o, std::ostream& os) {
    const auto params = resolve_params(o);
    if (o.reps < 1) throw ArgumentError("--reps must be at least 1");
    const auto s = sample(params, o.n, o.reps, o.seed);
    if (wants_json(o, "json")) {
        os << io::sample_to_json(s, params).dump() << '\n';
    } else {
        os << io::params_header(params, o.n) << " reps=" << s.reps << " seed=" << s.seed
           << " generator=" << s.generator << '\n';
        os << "j,count\n";
        for (std::size_t j = 0; j < s.histogram.size(); ++j) os << j << ',' << s.histogram[j] << '\n';
    }
    return kOk;
}

int cmd_selfcheck(const Options& o, std::ostream& os) {
    const auto results = run_selfcheck(o.seed);
    bool all = true;
    for (const auto& r : results) {
        os << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.detail << ")\n";
        all = all && r.passed;
    }
    os << (all ? "selfcheck passed" : "selfcheck FAILED") << '\n';
    return all ? kOk : kComputationError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Markov binomial distribution: PMFs, moments and shape classification"};
    app.name(args.empty() ? "mbd" : args.front());
    app.require_subcommand(1);

    Options o;
    auto* pmf_cmd = app.add_subcommand("pmf", "Full or conditional probability mass function");
    add_chain_options(pmf_cmd, o);
    add_output_options(pmf_cmd, o, "csv");
    pmf_cmd->add_option("--cond", o.cond, "Condition on the final state (F or A)");
    pmf_cmd->add_option("--method", o.method, "Evaluator")->check(CLI::IsMember({"forward", "recursion", "closed"}));

    auto* moments_cmd = app.add_subcommand("moments", "Mean, variance and conditional moments");
    add_chain_options(moments_cmd, o);
    add_output_options(moments_cmd, o, "json");

    auto* classify_cmd = app.add_subcommand("classify", "Shape of the PMF");
    add_chain_options(classify_cmd, o);
    add_output_options(classify_cmd, o, "json");
    classify_cmd->add_option("--cond", o.cond, "Classify the conditional PMF given Y_n (F or A)");

    auto* region_cmd = app.add_subcommand("region", "Shape classes over a grid of (a, b)");
    region_cmd->add_option("--n", o.n, "Number of steps")->required()->check(CLI::PositiveNumber);
    region_cmd->add_option("--nu-f", o.nu_f, "Initial probability of state F");
    region_cmd->add_option("--nu", o.nu, "'stationary' to start each cell from its stationary law");
    region_cmd->add_option("--grid", o.grid, "Cells per axis");
    region_cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
    add_output_options(region_cmd, o, "csv");

    auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo histogram of K_n");
    add_chain_options(sample_cmd, o);
    add_output_options(sample_cmd, o, "json");
    sample_cmd->add_option("--reps", o.reps, "Number of simulated chains");
    sample_cmd->add_option("--seed", o.seed, "Seed for mt19937_64");

    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Reduced-scale consistency checks");
    selfcheck_cmd->add_option("--seed", o.seed, "Seed for the random parameter draws");
    selfcheck_cmd->add_option("--out", o.out_file, "Write output to FILE instead of stdout");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kArgumentError;
    }

    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &out;
    if (!o.out_file.empty()) {
        file = std::make_unique<std::ofstream>(o.out_file);
        if (!*file) {
            err << "error: cannot open " << o.out_file << " for writing\n";
            return kArgumentError;
        }
        os = file.get();
    }

    try {
        if (*pmf_cmd) return cmd_pmf(o, *os);
        if (*moments_cmd) return cmd_moments(o, *os);
        if (*classify_cmd) return cmd_classify(o, *os);
        if (*region_cmd) return cmd_region(o, *os);
        if (*sample_cmd) return cmd_sample(o, *os);
        if (*selfcheck_cmd) return cmd_selfcheck(o, *os);
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kComputationError;
    }
    return kArgumentError;
}

}  // namespace mbd::cli
