#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ospchar/json_io.hpp"
#include "ospchar/schur.hpp"
#include "ospchar/verify.hpp"

namespace ospchar::cli {

namespace {

using nlohmann::json;

int parse_int(const std::string& text) {
    std::size_t pos = 0;
    int value = std::stoi(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return value;
}

// A grid axis: "3", "1,3", "0..4", or (for --r only) "all", which expands to
// 0..p once p is known.
struct RangeSpec {
    std::vector<int> values;
    bool all = false;
};

RangeSpec parse_range(const std::string& text, const std::string& flag, bool allow_all) {
    RangeSpec spec;
    if (text == "all") {
        if (!allow_all)
            throw std::invalid_argument("'all' is only supported for --r");
        spec.all = true;
        return spec;
    }
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            auto dots = token.find("..");
            if (dots == std::string::npos) {
                spec.values.push_back(parse_int(token));
            } else {
                int lo = parse_int(token.substr(0, dots));
                int hi = parse_int(token.substr(dots + 2));
                if (hi < lo) throw std::invalid_argument("descending range");
                for (int v = lo; v <= hi; ++v) spec.values.push_back(v);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse --" + flag + " value '" + text + "'");
        }
    }
    if (spec.values.empty())
        throw std::invalid_argument("empty value for --" + flag);
    return spec;
}

// Output redirection for --out.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw std::invalid_argument("cannot open output file '" + path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

struct FamilyArgs {
    std::string family;
    std::optional<int> m, n, k, p, r, degree;
};

CharacterSum build_family(const FamilyArgs& fa) {
    auto need = [&](const std::optional<int>& v, const char* flag) -> int {
        if (!v)
            throw std::invalid_argument("family " + fa.family + " requires --" + flag);
        return *v;
    };
    if (fa.family == "soOdd") return so_odd_character(need(fa.n, "n"), need(fa.p, "p"));
    if (fa.family == "soEven" || fa.family == "soEvenTheorem")
        return so_even_character(need(fa.k, "k"), need(fa.p, "p"), need(fa.r, "r"));
    if (fa.family == "osp1")
        return osp1_character(need(fa.n, "n"), need(fa.p, "p"), need(fa.degree, "degree"));
    if (fa.family == "ospB")
        return osp_odd_character(need(fa.m, "m"), need(fa.n, "n"), need(fa.p, "p"),
                                 need(fa.degree, "degree"));
    if (fa.family == "ospD")
        return osp_even_character(need(fa.m, "m"), need(fa.n, "n"), need(fa.p, "p"),
                                  need(fa.degree, "degree"));
    if (fa.family == "ospDConjecture")
        return osp_even_strip_character(need(fa.m, "m"), need(fa.n, "n"), need(fa.p, "p"),
                                        need(fa.r, "r"), need(fa.degree, "degree"));
    throw std::invalid_argument("unknown family '" + fa.family + "'");
}

struct EnumArgs {
    std::optional<std::string> rect, hook;
    std::optional<int> weight, max_part, strip;
};

int dispatch_enum(const EnumArgs& ea, std::ostream& out) {
    std::vector<Partition> result;
    if (ea.rect && ea.hook)
        throw std::invalid_argument("--rect and --hook are mutually exclusive");
    if (ea.rect) {
        auto x = ea.rect->find('x');
        if (x == std::string::npos)
            throw std::invalid_argument("--rect expects ROWSxCOLS, e.g. 2x3");
        RectBound bound;
        try {
            bound.rows = parse_int(ea.rect->substr(0, x));
            bound.cols = parse_int(ea.rect->substr(x + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse --rect value '" + *ea.rect + "'");
        }
        if (ea.weight || ea.max_part)
            throw std::invalid_argument("--weight and --max-part apply to --hook only");
        result = ea.strip ? doubled_plus_strip_in_rect(bound, *ea.strip)
                          : partitions_in_rect(bound);
    } else if (ea.hook) {
        auto comma = ea.hook->find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--hook expects M,N, e.g. 2,1");
        HookBound bound;
        try {
            bound.m = parse_int(ea.hook->substr(0, comma));
            bound.n = parse_int(ea.hook->substr(comma + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse --hook value '" + *ea.hook + "'");
        }
        if (!ea.weight)
            throw std::invalid_argument("--hook requires --weight");
        result = partitions_in_hook_of_weight(bound, ea.max_part, *ea.weight);
        if (ea.strip) {
            std::vector<Partition> filtered;
            for (const Partition& lam : result)
                if (is_doubled_plus_strip(lam, *ea.strip)) filtered.push_back(lam);
            result = std::move(filtered);
        }
    } else {
        throw std::invalid_argument("one of --rect or --hook is required");
    }
    json j = json::array();
    for (const Partition& lam : result) j.push_back(to_json(lam));
    out << j.dump() << "\n";
    return 0;
}

struct VerifyArgs {
    std::string identity;
    std::map<std::string, std::string> axes;        // raw range strings per flag
    std::optional<int> degree, max_weight;
    bool deterministic = false;
    std::string invocation;
};

VerificationReport run_instance(const std::string& identity,
                                const std::map<std::string, int>& a,
                                int degree, int max_weight) {
    if (identity == "theorem")
        return verify_so_even_character(a.at("k"), a.at("p"), a.at("r"));
    if (identity == "e28") return verify_so_branching(a.at("k"), a.at("p"));
    if (identity == "union") return verify_union_property(a.at("k"), a.at("p"));
    if (identity == "case1")
        return verify_superdim_case(SuperdimCase::BEqual, a.at("n"), 0, a.at("p"), degree);
    if (identity == "case2")
        return verify_superdim_case(SuperdimCase::BMoreX, a.at("n"), a.at("k"), a.at("p"), degree);
    if (identity == "case3")
        return verify_superdim_case(SuperdimCase::BMoreY, a.at("m"), a.at("k"), a.at("p"), degree);
    if (identity == "caseD")
        return verify_superdim_case(SuperdimCase::DCase, a.at("n"), a.at("k"), a.at("p"), degree);
    if (identity == "dimsdim")
        return verify_superdimension_law(a.at("m"), a.at("n"), max_weight);
    if (identity == "conjecture")
        return verify_conjecture_evidence(a.at("m"), a.at("n"), a.at("p"), degree);
    throw std::invalid_argument("unknown identity '" + identity + "'");
}

int dispatch_verify(const VerifyArgs& va, std::ostream& out) {
    static const std::map<std::string, std::vector<std::string>> axis_order = {
        {"theorem", {"k", "p", "r"}}, {"e28", {"k", "p"}},
        {"union", {"k", "p"}},        {"case1", {"n", "p"}},
        {"case2", {"n", "k", "p"}},   {"case3", {"m", "k", "p"}},
        {"caseD", {"n", "k", "p"}},   {"dimsdim", {"m", "n"}},
        {"conjecture", {"m", "n", "p"}},
    };
    auto order_it = axis_order.find(va.identity);
    if (order_it == axis_order.end())
        throw std::invalid_argument("unknown identity '" + va.identity + "'");
    const std::vector<std::string>& order = order_it->second;

    for (const auto& [flag, text] : va.axes)
        if (std::find(order.begin(), order.end(), flag) == order.end())
            throw std::invalid_argument("--" + flag + " does not apply to identity " + va.identity);

    bool needs_degree = va.identity == "case1" || va.identity == "case2" ||
                        va.identity == "case3" || va.identity == "caseD" ||
                        va.identity == "conjecture";
    bool needs_max_weight = va.identity == "dimsdim";
    if (needs_degree && !va.degree)
        throw std::invalid_argument("identity " + va.identity + " requires --degree");
    if (!needs_degree && va.degree)
        throw std::invalid_argument("--degree does not apply to identity " + va.identity);
    if (needs_max_weight && !va.max_weight)
        throw std::invalid_argument("identity " + va.identity + " requires --max-weight");
    if (!needs_max_weight && va.max_weight)
        throw std::invalid_argument("--max-weight does not apply to identity " + va.identity);

    std::vector<std::pair<std::string, RangeSpec>> axes;
    for (const std::string& flag : order) {
        auto it = va.axes.find(flag);
        if (it == va.axes.end())
            throw std::invalid_argument("identity " + va.identity + " requires --" + flag);
        axes.emplace_back(flag, parse_range(it->second, flag, flag == "r"));
    }

    std::vector<std::map<std::string, int>> instances;
    std::map<std::string, int> current;
    auto expand = [&](auto&& self, std::size_t i) -> void {
        if (i == axes.size()) {
            instances.push_back(current);
            return;
        }
        const auto& [flag, spec] = axes[i];
        std::vector<int> values = spec.values;
        if (spec.all) {
            int p = current.at("p");
            values.clear();
            for (int r = 0; r <= p; ++r) values.push_back(r);
        }
        for (int v : values) {
            current[flag] = v;
            self(self, i + 1);
        }
        current.erase(flag);
    };
    expand(expand, 0);

    int pass = 0, fail = 0, evidence = 0;
    for (const auto& instance : instances) {
        VerificationReport report = run_instance(va.identity, instance,
                                                 va.degree.value_or(0),
                                                 va.max_weight.value_or(0));
        switch (report.status) {
            case VerifyStatus::Pass: ++pass; break;
            case VerifyStatus::Fail: ++fail; break;
            case VerifyStatus::EvidencePass: ++evidence; break;
        }
        out << to_json(report, !va.deterministic).dump() << "\n";
    }
    if (instances.size() > 1) {
        json summary = {{"summary", {{"pass", pass}, {"fail", fail}, {"evidence", evidence}}},
                        {"invocation", va.invocation}};
        out << summary.dump() << "\n";
    }
    return fail > 0 ? 1 : 0;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string text;
    for (const std::string& a : args) {
        if (!text.empty()) text += ' ';
        text += a;
    }
    return text;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact characters and superdimension series for orthosymplectic families"};
    app.name("ospchar");
    app.require_subcommand(1);

    // enum-partitions
    auto* enum_cmd = app.add_subcommand("enum-partitions", "List partitions under a bound");
    std::string enum_rect, enum_hook, enum_out;
    int enum_weight = 0, enum_max_part = 0, enum_strip = 0;
    auto* enum_rect_opt = enum_cmd->add_option("--rect", enum_rect, "Rectangle bound ROWSxCOLS");
    auto* enum_hook_opt = enum_cmd->add_option("--hook", enum_hook, "Hook bound M,N");
    auto* enum_weight_opt = enum_cmd->add_option("--weight", enum_weight, "Weight (with --hook)");
    auto* enum_max_part_opt =
        enum_cmd->add_option("--max-part", enum_max_part, "First-part cap (with --hook)");
    auto* enum_strip_opt =
        enum_cmd->add_option("--strip", enum_strip, "Keep only doubled-plus-strip labels");
    enum_cmd->add_option("--out", enum_out, "Write to a file instead of stdout");

    // char
    auto* char_cmd = app.add_subcommand("char", "Emit one character sum as JSON");
    FamilyArgs char_fa;
    std::string char_family, char_out;
    int char_m = 0, char_n = 0, char_k = 0, char_p = 0, char_r = 0, char_degree = 0;
    char_cmd->add_option("--family", char_family, "Family name")->required();
    auto* char_m_opt = char_cmd->add_option("--m", char_m, "x-rank m");
    auto* char_n_opt = char_cmd->add_option("--n", char_n, "y-rank or rank n");
    auto* char_k_opt = char_cmd->add_option("--k", char_k, "rank k");
    auto* char_p_opt = char_cmd->add_option("--p", char_p, "last Dynkin label total p");
    auto* char_r_opt = char_cmd->add_option("--r", char_r, "next-to-last Dynkin label r");
    auto* char_degree_opt =
        char_cmd->add_option("--degree", char_degree, "Label cutoff for infinite families");
    char_cmd->add_option("--out", char_out, "Write to a file instead of stdout");

    // series
    auto* series_cmd = app.add_subcommand("series", "Emit a dimension or superdimension series");
    FamilyArgs series_fa;
    std::string series_family, series_mode, series_out;
    int series_m = 0, series_n = 0, series_k = 0, series_p = 0, series_r = 0, series_degree = 0;
    series_cmd->add_option("--family", series_family, "Family name")->required();
    series_cmd->add_option("--mode", series_mode, "dim or sdim")->required();
    auto* series_degree_opt =
        series_cmd->add_option("--degree", series_degree, "Series truncation degree")->required();
    auto* series_m_opt = series_cmd->add_option("--m", series_m, "x-rank m");
    auto* series_n_opt = series_cmd->add_option("--n", series_n, "y-rank or rank n");
    auto* series_k_opt = series_cmd->add_option("--k", series_k, "rank k");
    auto* series_p_opt = series_cmd->add_option("--p", series_p, "last Dynkin label total p");
    auto* series_r_opt = series_cmd->add_option("--r", series_r, "next-to-last Dynkin label r");
    series_cmd->add_option("--out", series_out, "Write to a file instead of stdout");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check identities, one JSON line each");
    std::string verify_identity, verify_out;
    std::string verify_k, verify_p, verify_r, verify_m, verify_n;
    int verify_degree = 0, verify_max_weight = 0;
    bool verify_deterministic = false;
    verify_cmd->add_option("--identity", verify_identity, "Identity name")->required();
    auto* verify_k_opt = verify_cmd->add_option("--k", verify_k, "Rank axis (range ok)");
    auto* verify_p_opt = verify_cmd->add_option("--p", verify_p, "Label axis (range ok)");
    auto* verify_r_opt = verify_cmd->add_option("--r", verify_r, "Class axis (range or 'all')");
    auto* verify_m_opt = verify_cmd->add_option("--m", verify_m, "x-rank axis (range ok)");
    auto* verify_n_opt = verify_cmd->add_option("--n", verify_n, "y-rank axis (range ok)");
    auto* verify_degree_opt =
        verify_cmd->add_option("--degree", verify_degree, "Series truncation degree");
    auto* verify_max_weight_opt =
        verify_cmd->add_option("--max-weight", verify_max_weight, "Largest partition weight");
    verify_cmd->add_flag("--deterministic", verify_deterministic, "Omit timing fields");
    verify_cmd->add_option("--out", verify_out, "Write to a file instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("ospchar");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (enum_cmd->parsed()) {
            EnumArgs ea;
            if (enum_rect_opt->count()) ea.rect = enum_rect;
            if (enum_hook_opt->count()) ea.hook = enum_hook;
            if (enum_weight_opt->count()) ea.weight = enum_weight;
            if (enum_max_part_opt->count()) ea.max_part = enum_max_part;
            if (enum_strip_opt->count()) ea.strip = enum_strip;
            OutputTarget target(enum_out, out);
            return dispatch_enum(ea, target.get());
        }
        if (char_cmd->parsed()) {
            char_fa.family = char_family;
            if (char_m_opt->count()) char_fa.m = char_m;
            if (char_n_opt->count()) char_fa.n = char_n;
            if (char_k_opt->count()) char_fa.k = char_k;
            if (char_p_opt->count()) char_fa.p = char_p;
            if (char_r_opt->count()) char_fa.r = char_r;
            if (char_degree_opt->count()) char_fa.degree = char_degree;
            OutputTarget target(char_out, out);
            target.get() << to_json(build_family(char_fa)).dump() << "\n";
            return 0;
        }
        if (series_cmd->parsed()) {
            series_fa.family = series_family;
            if (series_m_opt->count()) series_fa.m = series_m;
            if (series_n_opt->count()) series_fa.n = series_n;
            if (series_k_opt->count()) series_fa.k = series_k;
            if (series_p_opt->count()) series_fa.p = series_p;
            if (series_r_opt->count()) series_fa.r = series_r;
            if (series_degree_opt->count()) series_fa.degree = series_degree;
            SeriesMode mode;
            if (series_mode == "dim") mode = SeriesMode::Dim;
            else if (series_mode == "sdim") mode = SeriesMode::Sdim;
            else throw std::invalid_argument("unknown mode '" + series_mode + "'");
            CharacterSum cs = build_family(series_fa);
            OutputTarget target(series_out, out);
            target.get() << to_json(t_series(cs, mode, series_degree)).dump() << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) {
            VerifyArgs va;
            va.identity = verify_identity;
            if (verify_k_opt->count()) va.axes["k"] = verify_k;
            if (verify_p_opt->count()) va.axes["p"] = verify_p;
            if (verify_r_opt->count()) va.axes["r"] = verify_r;
            if (verify_m_opt->count()) va.axes["m"] = verify_m;
            if (verify_n_opt->count()) va.axes["n"] = verify_n;
            if (verify_degree_opt->count()) va.degree = verify_degree;
            if (verify_max_weight_opt->count()) va.max_weight = verify_max_weight;
            va.deterministic = verify_deterministic;
            va.invocation = join_args(args);
            OutputTarget target(verify_out, out);
            return dispatch_verify(va, target.get());
        }
        throw std::invalid_argument("no command given");
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DivisionError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace ospchar::cli
