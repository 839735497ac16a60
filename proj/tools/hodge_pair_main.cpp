// hodge-pair: command-line driver for the nested-complex analysis library.
//
// Commands
//   analyze     Hodge data of a mesh's full cochain complex
//   mesh        structural report of a mesh file (counts, boundary, reference ranks)
//   pair        build the big/small cochain pair of a mesh and verify statements
//   cone        cone over a mesh, with its reference cohomology
//   random      seeded random pairs run through the statement suite
//   perversity  metric-perversity table for given exponents and link dimensions
//   crosscheck  exact vs floating-point dimension comparison
//
// All verdicts (PASS/FAIL/NOT_APPLICABLE) exit 0; only operational errors
// (unreadable files, malformed JSON, invalid flags) exit nonzero. Reports are
// byte-identical for identical configurations regardless of the worker count.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hodgepair/crosscheck.hpp"
#include "hodgepair/error.hpp"
#include "hodgepair/json_io.hpp"
#include "hodgepair/perversity.hpp"
#include "hodgepair/random.hpp"
#include "hodgepair/simplicial.hpp"
#include "hodgepair/verifier.hpp"

namespace {

using hodgepair::Error;
using hodgepair::OrderedJson;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read input file " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open output file " + path);
    }
    out << content;
    if (!out) {
        throw Error("failed while writing output file " + path);
    }
}

void emit_json(const OrderedJson& doc, const std::string& output_path) {
    if (output_path.empty()) return;
    write_text_file(output_path, doc.dump(2) + "\n");
}

/// "dir/interval2.json" -> "interval2": a stable instance id that does not
/// depend on the invocation directory.
std::string instance_id_from_path(const std::string& path) {
    const auto slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    const auto dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return name.empty() ? path : name;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            if (!current.empty()) out.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current.push_back(c);
        }
    }
    if (!current.empty()) out.push_back(current);
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    for (const std::string& token : split_list(text)) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw Error(flag + " expects a comma-separated integer list; '" +
                        token + "' is not an integer");
        }
    }
    if (out.empty()) {
        throw Error(flag + " expects a nonempty comma-separated integer list");
    }
    return out;
}

hodgepair::KernelMode parse_mode_flag(const std::string& name) {
    const auto mode = hodgepair::parse_kernel_mode(name);
    if (!mode) {
        throw Error("--kernel-mode must be 'inclusive' or 'strict', got '" +
                    name + "'");
    }
    return *mode;
}

std::vector<hodgepair::StatementId> parse_check_flag(const std::string& spec) {
    if (spec == "all") return hodgepair::all_statements();
    std::vector<hodgepair::StatementId> out;
    for (const std::string& token : split_list(spec)) {
        const auto s = hodgepair::parse_statement(token);
        if (!s) {
            std::string known;
            for (hodgepair::StatementId id : hodgepair::all_statements()) {
                if (!known.empty()) known += ", ";
                known += hodgepair::to_string(id);
            }
            throw Error("--check: unknown statement '" + token +
                        "' (use 'all' or a comma list of: " + known + ")");
        }
        out.push_back(*s);
    }
    if (out.empty()) {
        throw Error("--check expects 'all' or a nonempty statement list");
    }
    return out;
}

/// HODGE_PAIR_THREADS caps the worker count; unset means one worker per
/// hardware thread.
int worker_threads() {
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (const char* cap_text = std::getenv("HODGE_PAIR_THREADS")) {
        try {
            std::size_t used = 0;
            const int cap = std::stoi(cap_text, &used);
            if (used != std::string(cap_text).size() || cap < 1) {
                throw std::invalid_argument(cap_text);
            }
            threads = cap;
        } catch (const std::exception&) {
            throw Error(std::string("HODGE_PAIR_THREADS must be a positive "
                                    "integer, got '") +
                        cap_text + "'");
        }
    }
    return threads;
}

struct SuiteFlags {
    std::string kernel_mode = "inclusive";
    bool guard_density = false;
    std::string check = "all";
    std::string ref_abs;
    std::string ref_rel;
    std::string backend = "exact";
    double tolerance = 1e-9;
    std::string output;
};

void add_suite_flags(CLI::App& cmd, SuiteFlags& flags) {
    cmd.add_option("--kernel-mode", flags.kernel_mode,
                   "Kernel notion: inclusive (default) or strict");
    cmd.add_flag("--guard-density", flags.guard_density,
                 "Report NOT_APPLICABLE instead of informative verdicts when "
                 "the density hypothesis fails");
    cmd.add_option("--check", flags.check,
                   "'all' or comma list of statement names");
    cmd.add_option("--ref-abs", flags.ref_abs,
                   "Reference absolute cohomology dims (comma list) for the "
                   "cdgm statements");
    cmd.add_option("--ref-rel", flags.ref_rel,
                   "Reference relative cohomology dims (comma list) for the "
                   "cdgm statements");
    cmd.add_option("--backend", flags.backend,
                   "exact (default) or float; float reruns all dimensions in "
                   "double precision as a cross-check (never decides verdicts)");
    cmd.add_option("--tolerance", flags.tolerance,
                   "Pivot tolerance for the float backend (default 1e-9)");
    cmd.add_option("-o,--output", flags.output, "Write the JSON report here");
}

hodgepair::VerifyOptions suite_options(const SuiteFlags& flags) {
    hodgepair::VerifyOptions options;
    options.mode = parse_mode_flag(flags.kernel_mode);
    options.guard_density = flags.guard_density;
    if (!flags.ref_abs.empty()) {
        options.reference_abs = parse_int_list(flags.ref_abs, "--ref-abs");
    }
    if (!flags.ref_rel.empty()) {
        options.reference_rel = parse_int_list(flags.ref_rel, "--ref-rel");
    }
    return options;
}

void validate_backend(const SuiteFlags& flags) {
    if (flags.backend != "exact" && flags.backend != "float") {
        throw Error("--backend must be 'exact' or 'float', got '" +
                    flags.backend + "'");
    }
    if (flags.backend == "float" && !(flags.tolerance > 0)) {
        throw Error("--tolerance must be positive when --backend float");
    }
}

OrderedJson statements_json(const std::vector<hodgepair::StatementId>& ids) {
    OrderedJson out = OrderedJson::array();
    for (hodgepair::StatementId id : ids) out.push_back(hodgepair::to_string(id));
    return out;
}

/// Runs the statement suite over named instances and emits table + JSON.
/// Shared by the `pair` and `random` commands. Full per-instance tables are
/// printed for small runs; larger runs print failing instances only.
int run_suite_command(const std::vector<hodgepair::NamedPair>& instances,
                      const SuiteFlags& flags, OrderedJson config) {
    validate_backend(flags);
    const auto statements = parse_check_flag(flags.check);
    const auto options = suite_options(flags);
    const hodgepair::Report report =
        hodgepair::run_suite(instances, statements, options, worker_threads());

    const bool full_tables = report.instances.size() <= 3;
    for (const hodgepair::InstanceReport& instance : report.instances) {
        bool failed = false;
        for (const auto& v : instance.verdicts) {
            failed = failed || v.verdict == hodgepair::Verdict::FAIL;
        }
        if (full_tables || failed) {
            std::cout << hodgepair::render_instance_table(instance) << "\n";
        }
    }
    std::cout << hodgepair::render_summary_line(report.summary);

    config["statements"] = statements_json(statements);
    OrderedJson doc;
    doc["config"] = std::move(config);
    OrderedJson body = hodgepair::report_json(report);
    doc["options"] = body["options"];
    doc["instances"] = body["instances"];
    doc["summary"] = body["summary"];

    if (flags.backend == "float") {
        // The float pass cross-checks dimensions; it never touches verdicts.
        // Full agreement leaves the report untouched (stderr note only) so
        // exact and float runs produce byte-identical artifacts.
        OrderedJson disagreements = OrderedJson::array();
        for (const hodgepair::NamedPair& instance : instances) {
            const hodgepair::AgreementRecord record = hodgepair::crosscheck_backend(
                instance.pair, flags.tolerance, options.mode);
            if (!record.agreed()) {
                OrderedJson row;
                row["instance_id"] = instance.instance_id;
                row["crosscheck"] = hodgepair::agreement_json(record);
                disagreements.push_back(std::move(row));
            }
        }
        if (disagreements.empty()) {
            std::cerr << "float crosscheck: full agreement at tolerance "
                      << flags.tolerance << "\n";
        } else {
            std::cerr << "float crosscheck: " << disagreements.size()
                      << " instance(s) disagree at tolerance " << flags.tolerance
                      << "\n";
            doc["crosscheck_disagreements"] = std::move(disagreements);
        }
    }

    emit_json(doc, flags.output);
    return 0;
}

hodgepair::BoundarySubcomplex resolve_boundary(const hodgepair::LoadedMesh& mesh,
                                               const std::string& policy) {
    if (policy == "file") return mesh.boundary;
    if (policy == "auto") return hodgepair::boundary_subcomplex(mesh.complex);
    if (policy == "none") return hodgepair::explicit_subcomplex(mesh.complex, {});
    throw Error("--boundary must be 'file', 'auto', or 'none', got '" + policy +
                "'");
}

std::string format_dim_vector(const std::vector<int>& dims) {
    std::string out = "(";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(dims[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------- analyze --

int cmd_analyze(const std::string& input, const std::string& kernel_mode,
                const std::string& output) {
    const hodgepair::KernelMode mode = parse_mode_flag(kernel_mode);
    const hodgepair::LoadedMesh mesh = hodgepair::load_mesh(read_text_file(input));
    const hodgepair::ComplexPair pair =
        hodgepair::cochain_pair(mesh.complex, mesh.boundary);
    const hodgepair::HilbertComplex& c = pair.big();

    OrderedJson degrees = OrderedJson::array();
    std::vector<int> cohomology;
    std::cout << "complex: " << instance_id_from_path(input) << "\n";
    std::cout << "  q  dim  H  kerDelta  harmonic  orthogonal  spans\n";
    for (int q = 0; q <= c.length(); ++q) {
        const int h = hodgepair::cohomology(c, q).dim;
        const int ker_delta =
            hodgepair::kernel_of(hodgepair::laplacian(c, q), mode).dim();
        const hodgepair::HodgeTriple triple = hodgepair::hodge_decompose(c, q);
        cohomology.push_back(h);

        std::cout << "  " << q << "  " << c.space(q).dim() << "    " << h
                  << "     " << ker_delta << "        " << triple.harmonic.dim()
                  << "         " << (triple.orthogonal ? "yes" : "no")
                  << "         " << (triple.spans ? "yes" : "no") << "\n";

        OrderedJson row;
        row["q"] = q;
        row["dim"] = c.space(q).dim();
        row["H"] = h;
        row["kerDelta"] = ker_delta;
        row["harmonic"] = triple.harmonic.dim();
        row["orthogonal"] = triple.orthogonal;
        row["spans"] = triple.spans;
        row["harmonic_is_laplace_kernel"] = triple.harmonic_is_laplace_kernel;
        row["images_are_laplace_image"] = triple.images_are_laplace_image;
        degrees.push_back(std::move(row));
    }
    const int euler = hodgepair::euler_characteristic(c);
    std::cout << "H = " << format_dim_vector(cohomology) << "  euler = " << euler
              << "\n";

    OrderedJson config;
    config["command"] = "analyze";
    config["input"] = input;
    config["kernel_mode"] = kernel_mode;
    OrderedJson doc;
    doc["config"] = std::move(config);
    doc["degrees"] = std::move(degrees);
    doc["cohomology"] = cohomology;
    doc["euler_characteristic"] = euler;
    emit_json(doc, output);
    return 0;
}

// ------------------------------------------------------------------- mesh --

int cmd_mesh(const std::string& input, const std::string& boundary_policy,
             const std::string& output) {
    const hodgepair::LoadedMesh mesh = hodgepair::load_mesh(read_text_file(input));
    const hodgepair::BoundarySubcomplex boundary =
        resolve_boundary(mesh, boundary_policy);
    const hodgepair::SimplicialComplex& k = mesh.complex;

    std::cout << "mesh: " << instance_id_from_path(input) << "\n";
    std::cout << "  vertices: " << k.vertex_count << "  top dimension: "
              << k.dim() << "\n";
    OrderedJson counts = OrderedJson::array();
    OrderedJson boundary_counts = OrderedJson::array();
    for (int q = 0; q <= k.dim(); ++q) {
        int on_boundary = 0;
        for (const auto& simplex : k.simplices[static_cast<std::size_t>(q)]) {
            if (boundary.contains(q, simplex)) ++on_boundary;
        }
        std::cout << "  dim " << q << ": " << k.count(q) << " simplices, "
                  << on_boundary << " on the boundary\n";
        counts.push_back(k.count(q));
        boundary_counts.push_back(on_boundary);
    }

    const std::vector<int> absolute = hodgepair::reference_cohomology(k);
    const std::vector<int> relative = hodgepair::reference_cohomology(k, boundary);
    std::cout << "  reference cohomology: absolute "
              << format_dim_vector(absolute) << ", relative "
              << format_dim_vector(relative) << "\n";

    OrderedJson config;
    config["command"] = "mesh";
    config["input"] = input;
    config["boundary"] = boundary_policy;
    OrderedJson doc;
    doc["config"] = std::move(config);
    doc["vertices"] = k.vertex_count;
    doc["top_dimension"] = k.dim();
    doc["counts"] = std::move(counts);
    doc["boundary_counts"] = std::move(boundary_counts);
    doc["reference_absolute"] = absolute;
    doc["reference_relative"] = relative;
    emit_json(doc, output);
    return 0;
}

// ------------------------------------------------------------------- pair --

int cmd_pair(const std::string& mesh_path, const std::string& boundary_policy,
             const SuiteFlags& flags) {
    const hodgepair::LoadedMesh mesh =
        hodgepair::load_mesh(read_text_file(mesh_path));
    const hodgepair::BoundarySubcomplex boundary =
        resolve_boundary(mesh, boundary_policy);
    std::vector<hodgepair::NamedPair> instances;
    instances.push_back({instance_id_from_path(mesh_path),
                         hodgepair::cochain_pair(mesh.complex, boundary)});

    OrderedJson config;
    config["command"] = "pair";
    config["mesh"] = mesh_path;
    config["boundary"] = boundary_policy;
    config["kernel_mode"] = flags.kernel_mode;
    // The backend is deliberately not echoed: an agreeing float cross-check
    // must leave the artifact byte-identical to an exact run.
    return run_suite_command(instances, flags, std::move(config));
}

// ------------------------------------------------------------------- cone --

int cmd_cone(const std::string& input, const std::string& emit_mesh,
             const std::string& output) {
    const hodgepair::LoadedMesh mesh = hodgepair::load_mesh(read_text_file(input));
    const hodgepair::SimplicialComplex coned = hodgepair::cone(mesh.complex);
    const std::vector<int> reference = hodgepair::reference_cohomology(coned);

    std::cout << "cone over " << instance_id_from_path(input) << ": apex vertex "
              << (coned.vertex_count - 1) << "\n";
    for (int q = 0; q <= coned.dim(); ++q) {
        std::cout << "  dim " << q << ": " << coned.count(q) << " simplices\n";
    }
    std::cout << "  reference cohomology: " << format_dim_vector(reference)
              << "\n";

    if (!emit_mesh.empty()) {
        OrderedJson doc;
        OrderedJson simplices = OrderedJson::array();
        for (int q = 0; q <= coned.dim(); ++q) {
            for (const auto& simplex :
                 coned.simplices[static_cast<std::size_t>(q)]) {
                simplices.push_back(simplex);
            }
        }
        doc["simplices"] = std::move(simplices);
        OrderedJson weights;
        for (int q = 0; q <= coned.dim(); ++q) {
            OrderedJson per_dim = OrderedJson::array();
            for (const hodgepair::Rational& w :
                 coned.weights[static_cast<std::size_t>(q)]) {
                per_dim.push_back(hodgepair::format_rational(w));
            }
            weights[std::to_string(q)] = std::move(per_dim);
        }
        doc["weights"] = std::move(weights);
        doc["boundary"] = "auto";
        write_text_file(emit_mesh, doc.dump(2) + "\n");
        std::cout << "  cone mesh written to " << emit_mesh << "\n";
    }

    OrderedJson config;
    config["command"] = "cone";
    config["input"] = input;
    OrderedJson doc;
    doc["config"] = std::move(config);
    doc["vertices"] = coned.vertex_count;
    doc["top_dimension"] = coned.dim();
    OrderedJson counts = OrderedJson::array();
    for (int q = 0; q <= coned.dim(); ++q) counts.push_back(coned.count(q));
    doc["counts"] = std::move(counts);
    doc["reference_cohomology"] = reference;
    emit_json(doc, output);
    return 0;
}

// ----------------------------------------------------------------- random --

struct RandomFlags {
    std::uint64_t seed = 0;
    int count = 1;
    std::string profile = "generic";
    std::string density;
    int max_degrees = 3;
    int max_dim = 5;
};

hodgepair::NamedPair make_random_instance(const RandomFlags& random_flags,
                                          std::uint64_t root_seed, int index) {
    // Each instance derives from an independent fork of the root stream, so
    // generation is order-independent and safe to parallelize or subset.
    hodgepair::SplitMix64 stream = hodgepair::SplitMix64(root_seed).fork(
        static_cast<std::uint64_t>(index));
    hodgepair::RandomPairProfile profile;
    if (random_flags.profile == "trivial" || random_flags.profile == "generic") {
        hodgepair::Rational density =
            random_flags.profile == "trivial" ? 1 : hodgepair::Rational(1, 2);
        if (!random_flags.density.empty()) {
            density = hodgepair::parse_rational(random_flags.density);
        }
        profile = hodgepair::random_profile(stream, random_flags.max_degrees,
                                            random_flags.max_dim, density);
    } else {
        profile = hodgepair::profile_from_json(
            nlohmann::json::parse(read_text_file(random_flags.profile)),
            random_flags.profile);
        if (!random_flags.density.empty()) {
            profile.density = hodgepair::parse_rational(random_flags.density);
            hodgepair::check_profile(profile);
        }
    }
    const std::uint64_t pair_seed = stream.next();
    return {"random-" + std::to_string(index),
            hodgepair::generate_random_pair(profile, pair_seed)};
}

int cmd_random(const RandomFlags& random_flags, const SuiteFlags& flags) {
    if (random_flags.count < 1) {
        throw Error("--count must be at least 1");
    }
    std::vector<hodgepair::NamedPair> instances;
    for (int i = 0; i < random_flags.count; ++i) {
        instances.push_back(
            make_random_instance(random_flags, random_flags.seed, i));
    }

    OrderedJson config;
    config["command"] = "random";
    config["seed"] = random_flags.seed;
    config["count"] = random_flags.count;
    config["profile"] = random_flags.profile;
    if (!random_flags.density.empty()) config["density"] = random_flags.density;
    config["max_degrees"] = random_flags.max_degrees;
    config["max_dim"] = random_flags.max_dim;
    config["kernel_mode"] = flags.kernel_mode;
    return run_suite_command(instances, flags, std::move(config));
}

// ------------------------------------------------------------- perversity --

int cmd_perversity(const std::string& c_list, const std::string& links_list,
                   const std::string& output) {
    std::vector<hodgepair::Rational> entries;
    for (const std::string& token : split_list(c_list)) {
        entries.push_back(hodgepair::parse_rational(token));
    }
    const hodgepair::CExponents exponents =
        hodgepair::make_exponents(std::move(entries));
    const std::vector<int> links = parse_int_list(links_list, "--links");

    std::cout << "metric perversity for exponents (" << c_list
              << "), dimension m = " << exponents.dimension() << "\n";
    std::cout << "  l  k  p_g  q_g\n";
    OrderedJson rows = OrderedJson::array();
    for (int l : links) {
        if (l < 0) throw Error("--links entries must be nonnegative, got " +
                               std::to_string(l));
        const int k = l + 1;
        OrderedJson row;
        row["l"] = l;
        row["k"] = k;
        // Codimension-k strata sit at depth k; where the exponent index m-k
        // leaves the stored range the formula is silent and the row records
        // the reason instead of a value.
        try {
            const long long p = hodgepair::metric_perversity(
                exponents, hodgepair::StratumDatum{l, k});
            const long long q = static_cast<long long>(k - 2) - p;
            std::cout << "  " << l << "  " << k << "   " << p << "    " << q
                      << "\n";
            row["p_g"] = p;
            row["q_g"] = q;
        } catch (const Error& e) {
            std::cout << "  " << l << "  " << k << "   undefined (" << e.what()
                      << ")\n";
            row["undefined"] = e.what();
        }
        rows.push_back(std::move(row));
    }

    OrderedJson config;
    config["command"] = "perversity";
    config["c"] = c_list;
    config["links"] = links_list;
    OrderedJson doc;
    doc["config"] = std::move(config);
    doc["dimension"] = exponents.dimension();
    doc["rows"] = std::move(rows);
    emit_json(doc, output);
    return 0;
}

// ------------------------------------------------------------- crosscheck --

int cmd_crosscheck(const std::string& mesh_path, const std::string& boundary_policy,
                   const RandomFlags& random_flags, bool use_random,
                   double tolerance, const std::string& kernel_mode,
                   const std::string& output) {
    if (mesh_path.empty() == !use_random) {
        throw Error("crosscheck needs exactly one instance source: --mesh or "
                    "--random");
    }
    const hodgepair::KernelMode mode = parse_mode_flag(kernel_mode);

    std::string id;
    std::vector<hodgepair::NamedPair> instances;
    if (!mesh_path.empty()) {
        const hodgepair::LoadedMesh mesh =
            hodgepair::load_mesh(read_text_file(mesh_path));
        const hodgepair::BoundarySubcomplex boundary =
            resolve_boundary(mesh, boundary_policy);
        instances.push_back({instance_id_from_path(mesh_path),
                             hodgepair::cochain_pair(mesh.complex, boundary)});
    } else {
        for (int i = 0; i < random_flags.count; ++i) {
            instances.push_back(
                make_random_instance(random_flags, random_flags.seed, i));
        }
    }

    OrderedJson results = OrderedJson::array();
    bool all_agreed = true;
    for (const hodgepair::NamedPair& instance : instances) {
        const hodgepair::AgreementRecord record =
            hodgepair::crosscheck_backend(instance.pair, tolerance, mode);
        all_agreed = all_agreed && record.agreed();
        std::cout << "crosscheck " << instance.instance_id << ": tolerance "
                  << tolerance << ", degrees " << record.degrees_checked
                  << ", agreed: " << (record.agreed() ? "yes" : "no") << "\n";
        for (const hodgepair::DimensionDisagreement& d : record.disagreements) {
            std::cout << "  q=" << d.q << " " << d.field << ": exact "
                      << d.exact_value << ", float " << d.float_value << "\n";
        }
        OrderedJson row;
        row["instance_id"] = instance.instance_id;
        row["crosscheck"] = hodgepair::agreement_json(record);
        results.push_back(std::move(row));
    }
    std::cout << (all_agreed ? "all dimensions agree\n"
                             : "disagreements were reported above\n");

    OrderedJson config;
    config["command"] = "crosscheck";
    if (!mesh_path.empty()) {
        config["mesh"] = mesh_path;
        config["boundary"] = boundary_policy;
    } else {
        config["seed"] = random_flags.seed;
        config["count"] = random_flags.count;
        config["profile"] = random_flags.profile;
    }
    config["tolerance"] = tolerance;
    config["kernel_mode"] = kernel_mode;
    OrderedJson doc;
    doc["config"] = std::move(config);
    doc["results"] = std::move(results);
    emit_json(doc, output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suite for nested cochain-complex pairs"};
    app.require_subcommand(1);

    // analyze
    std::string analyze_input;
    std::string analyze_mode = "inclusive";
    std::string analyze_output;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Hodge data of a mesh's full cochain complex");
    analyze->add_option("--input", analyze_input, "Mesh JSON file")->required();
    analyze->add_option("--kernel-mode", analyze_mode,
                        "inclusive (default) or strict");
    analyze->add_option("-o,--output", analyze_output, "Write JSON report here");

    // mesh
    std::string mesh_input;
    std::string mesh_boundary = "file";
    std::string mesh_output;
    CLI::App* mesh = app.add_subcommand(
        "mesh", "Structural report of a mesh file");
    mesh->add_option("--input", mesh_input, "Mesh JSON file")->required();
    mesh->add_option("--boundary", mesh_boundary,
                     "Boundary policy: file (default), auto, or none");
    mesh->add_option("-o,--output", mesh_output, "Write JSON report here");

    // pair
    std::string pair_mesh;
    std::string pair_boundary = "file";
    SuiteFlags pair_flags;
    CLI::App* pair = app.add_subcommand(
        "pair", "Verify the statement suite on a mesh's cochain pair");
    pair->add_option("--mesh", pair_mesh, "Mesh JSON file")->required();
    pair->add_option("--boundary", pair_boundary,
                     "Boundary policy: file (default), auto, or none");
    add_suite_flags(*pair, pair_flags);

    // cone
    std::string cone_input;
    std::string cone_emit;
    std::string cone_output;
    CLI::App* cone = app.add_subcommand("cone", "Cone over a mesh");
    cone->add_option("--input", cone_input, "Mesh JSON file")->required();
    cone->add_option("--emit-mesh", cone_emit, "Write the cone as a mesh JSON");
    cone->add_option("-o,--output", cone_output, "Write JSON report here");

    // random
    RandomFlags random_flags;
    SuiteFlags random_suite_flags;
    CLI::App* random = app.add_subcommand(
        "random", "Run the suite on seeded random pairs");
    random->add_option("--seed", random_flags.seed, "Root seed (default 0)");
    random->add_option("--count", random_flags.count,
                       "Number of instances (default 1)");
    random->add_option("--profile", random_flags.profile,
                       "trivial, generic (default), or a profile JSON file");
    random->add_option("--density", random_flags.density,
                       "Domain-restriction density as p/q (overrides profile)");
    random->add_option("--max-degrees", random_flags.max_degrees,
                       "Maximum complex length for drawn profiles (default 3)");
    random->add_option("--max-dim", random_flags.max_dim,
                       "Maximum per-degree dimension for drawn profiles "
                       "(default 5)");
    add_suite_flags(*random, random_suite_flags);

    // perversity
    std::string perversity_c;
    std::string perversity_links;
    std::string perversity_output;
    CLI::App* perversity = app.add_subcommand(
        "perversity", "Metric-perversity table for exponents and links");
    perversity->add_option("--c", perversity_c,
                           "Comma list of exponents c_2..c_m (rationals)")
        ->required();
    perversity->add_option("--links", perversity_links,
                           "Comma list of link dimensions l >= 0")
        ->required();
    perversity->add_option("-o,--output", perversity_output,
                           "Write JSON report here");

    // crosscheck
    std::string crosscheck_mesh;
    std::string crosscheck_boundary = "file";
    RandomFlags crosscheck_random;
    bool crosscheck_use_random = false;
    double crosscheck_tolerance = 1e-9;
    std::string crosscheck_mode = "inclusive";
    std::string crosscheck_output;
    CLI::App* crosscheck = app.add_subcommand(
        "crosscheck", "Exact vs floating-point dimension comparison");
    crosscheck->add_option("--mesh", crosscheck_mesh, "Mesh JSON file");
    crosscheck->add_option("--boundary", crosscheck_boundary,
                           "Boundary policy: file (default), auto, or none");
    crosscheck->add_flag("--random", crosscheck_use_random,
                         "Cross-check seeded random pairs instead of a mesh");
    crosscheck->add_option("--seed", crosscheck_random.seed,
                           "Root seed for --random (default 0)");
    crosscheck->add_option("--count", crosscheck_random.count,
                           "Instance count for --random (default 1)");
    crosscheck->add_option("--profile", crosscheck_random.profile,
                           "Profile for --random: trivial, generic, or a file");
    crosscheck->add_option("--density", crosscheck_random.density,
                           "Density for --random profiles");
    crosscheck->add_option("--max-degrees", crosscheck_random.max_degrees,
                           "Maximum length for drawn profiles");
    crosscheck->add_option("--max-dim", crosscheck_random.max_dim,
                           "Maximum per-degree dimension for drawn profiles");
    crosscheck->add_option("--tolerance", crosscheck_tolerance,
                           "Pivot tolerance (default 1e-9)");
    crosscheck->add_option("--kernel-mode", crosscheck_mode,
                           "inclusive (default) or strict");
    crosscheck->add_option("-o,--output", crosscheck_output,
                           "Write JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            return cmd_analyze(analyze_input, analyze_mode, analyze_output);
        }
        if (*mesh) {
            return cmd_mesh(mesh_input, mesh_boundary, mesh_output);
        }
        if (*pair) {
            return cmd_pair(pair_mesh, pair_boundary, pair_flags);
        }
        if (*cone) {
            return cmd_cone(cone_input, cone_emit, cone_output);
        }
        if (*random) {
            return cmd_random(random_flags, random_suite_flags);
        }
        if (*perversity) {
            return cmd_perversity(perversity_c, perversity_links,
                                  perversity_output);
        }
        if (*crosscheck) {
            return cmd_crosscheck(crosscheck_mesh, crosscheck_boundary,
                                  crosscheck_random, crosscheck_use_random,
                                  crosscheck_tolerance, crosscheck_mode,
                                  crosscheck_output);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
