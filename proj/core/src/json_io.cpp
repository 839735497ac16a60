#include "hodgepair/json_io.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <vector>

#include "hodgepair/error.hpp"

namespace hodgepair {

namespace {

OrderedJson int_array(const std::vector<int>& values) {
    OrderedJson out = OrderedJson::array();
    for (int v : values) out.push_back(v);
    return out;
}

std::string sum_expression(const std::vector<int>& parts) {
    if (parts.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << "+";
        out << parts[i];
    }
    return out.str();
}

int parse_small_int(const nlohmann::json& value, const std::string& where) {
    if (!value.is_number_integer()) {
        throw Error(where + " must be an integer");
    }
    return value.get<int>();
}

}  // namespace

std::string to_string(KernelMode mode) {
    return mode == KernelMode::inclusive ? "inclusive" : "strict";
}

std::optional<KernelMode> parse_kernel_mode(const std::string& name) {
    if (name == "inclusive") return KernelMode::inclusive;
    if (name == "strict") return KernelMode::strict;
    return std::nullopt;
}

OrderedJson degree_dims_json(const DegreeDims& row) {
    OrderedJson dims;
    dims["H_M"] = row.H_M;
    dims["H_m"] = row.H_m;
    dims["kerDelta_M"] = row.kerDelta_M;
    dims["kerDelta_m"] = row.kerDelta_m;
    dims["kerP"] = row.kerP;
    dims["hPrime"] = row.hPrime;
    dims["hDoublePrime"] = row.hDoublePrime;
    dims["curlyHm"] = row.curlyHm;
    dims["imageMap"] = row.imageMap;

    OrderedJson out;
    out["q"] = row.q;
    out["dims"] = std::move(dims);
    return out;
}

OrderedJson verdict_json(const VerificationResult& result) {
    OrderedJson out;
    out["statement"] = to_string(result.statement);
    out["q"] = result.q;
    out["hypotheses_met"] = result.hypotheses_met;
    out["lhs"] = int_array(result.lhs_dims);
    out["rhs"] = int_array(result.rhs_dims);
    out["verdict"] = to_string(result.verdict);
    if (!result.hypothesis_notes.empty()) {
        OrderedJson notes = OrderedJson::array();
        for (const auto& note : result.hypothesis_notes) notes.push_back(note);
        out["notes"] = std::move(notes);
    }
    return out;
}

OrderedJson instance_report_json(const InstanceReport& instance) {
    OrderedJson analysis;
    analysis["kernel_mode"] = to_string(instance.analysis.mode);
    analysis["minimal_domains_dense"] = instance.analysis.minimal_domains_dense;
    analysis["coarse"] = instance.analysis.coarse;
    {
        OrderedJson dense = OrderedJson::array();
        for (bool b : instance.analysis.dense_by_degree) dense.push_back(b);
        analysis["dense_by_degree"] = std::move(dense);
    }

    OrderedJson degrees = OrderedJson::array();
    for (const DegreeDims& row : instance.analysis.dims) {
        degrees.push_back(degree_dims_json(row));
    }

    OrderedJson verdicts = OrderedJson::array();
    for (const VerificationResult& v : instance.verdicts) {
        verdicts.push_back(verdict_json(v));
    }

    OrderedJson out;
    out["instance_id"] = instance.instance_id;
    out["analysis"] = std::move(analysis);
    out["degrees"] = std::move(degrees);
    out["verdicts"] = std::move(verdicts);
    return out;
}

OrderedJson report_json(const Report& report) {
    OrderedJson options;
    options["kernel_mode"] = to_string(report.options.mode);
    options["guard_density"] = report.options.guard_density;
    if (report.options.reference_abs) {
        options["reference_abs"] = int_array(*report.options.reference_abs);
    }
    if (report.options.reference_rel) {
        options["reference_rel"] = int_array(*report.options.reference_rel);
    }

    OrderedJson instances = OrderedJson::array();
    for (const InstanceReport& instance : report.instances) {
        instances.push_back(instance_report_json(instance));
    }

    OrderedJson summary;
    summary["pass"] = report.summary.pass;
    summary["fail"] = report.summary.fail;
    summary["not_applicable"] = report.summary.not_applicable;

    OrderedJson out;
    out["options"] = std::move(options);
    out["instances"] = std::move(instances);
    out["summary"] = std::move(summary);
    return out;
}

OrderedJson agreement_json(const AgreementRecord& record) {
    OrderedJson out;
    out["tolerance"] = record.tolerance;
    out["degrees_checked"] = record.degrees_checked;
    out["agreed"] = record.agreed();
    OrderedJson rows = OrderedJson::array();
    for (const DimensionDisagreement& d : record.disagreements) {
        OrderedJson row;
        row["q"] = d.q;
        row["field"] = d.field;
        row["exact"] = d.exact_value;
        row["float"] = d.float_value;
        rows.push_back(std::move(row));
    }
    out["disagreements"] = std::move(rows);
    return out;
}

RandomPairProfile profile_from_json(const nlohmann::json& j,
                                    const std::string& context) {
    if (!j.is_object()) {
        throw Error(context + ": profile must be an object with \"dims\", "
                              "\"cohomology\", and optional \"density\"");
    }
    RandomPairProfile profile;
    for (const char* key : {"dims", "cohomology"}) {
        if (!j.contains(key) || !j[key].is_array()) {
            throw Error(context + "/" + key + " must be an array of integers");
        }
        std::vector<int>& target =
            std::string(key) == "dims" ? profile.dims : profile.cohomology;
        for (std::size_t i = 0; i < j[key].size(); ++i) {
            target.push_back(parse_small_int(
                j[key][i], context + "/" + key + "/" + std::to_string(i)));
        }
    }
    if (j.contains("density")) {
        const auto& d = j["density"];
        const std::string where = context + "/density";
        if (d.is_number_integer()) {
            profile.density = Rational(d.get<long long>());
        } else if (d.is_string()) {
            try {
                profile.density = parse_rational(d.get<std::string>());
            } catch (const Error& e) {
                throw Error(std::string(e.what()) + " at " + where);
            }
        } else {
            throw Error(where +
                        " must be an integer or a rational string \"p/q\"");
        }
    }
    check_profile(profile);
    return profile;
}

std::string render_instance_table(const InstanceReport& instance) {
    std::ostringstream out;
    out << "instance: " << instance.instance_id << "\n";
    out << "kernel mode: " << to_string(instance.analysis.mode)
        << "  minimal domains dense: "
        << (instance.analysis.minimal_domains_dense ? "yes" : "no")
        << "  coarse: " << (instance.analysis.coarse ? "yes" : "no") << "\n";

    const char* headers[] = {"q",      "H_M",    "H_m",     "kerD_M",
                             "kerD_m", "kerP",   "hPrime",  "hDouble",
                             "curlyHm", "imageMap"};
    out << " ";
    for (const char* h : headers) out << " " << h;
    out << "\n";
    for (const DegreeDims& row : instance.analysis.dims) {
        const int values[] = {row.q,           row.H_M,     row.H_m,
                              row.kerDelta_M,  row.kerDelta_m, row.kerP,
                              row.hPrime,      row.hDoublePrime, row.curlyHm,
                              row.imageMap};
        out << " ";
        for (std::size_t i = 0; i < 10; ++i) {
            const std::size_t width = std::string(headers[i]).size();
            std::string cell = std::to_string(values[i]);
            out << " ";
            for (std::size_t pad = cell.size(); pad < width; ++pad) out << " ";
            out << cell;
        }
        out << "\n";
    }

    if (!instance.verdicts.empty()) {
        out << "verdicts:\n";
        std::size_t name_width = 0;
        for (const VerificationResult& v : instance.verdicts) {
            name_width = std::max(name_width, to_string(v.statement).size());
        }
        for (const VerificationResult& v : instance.verdicts) {
            std::string name = to_string(v.statement);
            name.resize(name_width, ' ');
            out << "  " << name << "  q=" << v.q << "  "
                << to_string(v.verdict)
                << (v.hypotheses_met ? "" : "  [hypotheses not met]") << "  lhs "
                << sum_expression(v.lhs_dims) << "  rhs "
                << sum_expression(v.rhs_dims);
            for (const auto& note : v.hypothesis_notes) {
                out << "  (" << note << ")";
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string render_summary_line(const SuiteSummary& summary) {
    std::ostringstream out;
    out << "summary: pass " << summary.pass << "  fail " << summary.fail
        << "  not_applicable " << summary.not_applicable << "\n";
    return out.str();
}

}  // namespace hodgepair
