#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seaweed/seaweed.hpp"

namespace {

using namespace seaweed;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct Output {
    bool json = false;
    bool rows = false;
};

unsigned jobs_from_env(unsigned flag) {
    if (flag > 0)
        return flag;
    if (const char* env = std::getenv("SEAWEED_JOBS")) {
        try {
            int v = std::stoi(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

void write_to(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text;
    if (!f)
        throw std::runtime_error("write to '" + path + "' failed");
}

int emit(const std::vector<CheckReport>& reports, const Output& out) {
    bool fail = false, error = false;
    if (out.json) {
        json arr = json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r));
        std::cout << arr.dump(2) << '\n';
    } else {
        for (const auto& r : reports)
            std::cout << to_text(r, out.rows);
    }
    for (const auto& r : reports) {
        fail = fail || r.status == CheckStatus::Fail;
        error = error || r.status == CheckStatus::Error;
    }
    if (error)
        return kExitError;
    return fail ? kExitFail : 0;
}

PartitionClass class_from_name(const std::string& name, std::uint32_t d) {
    if (name == "P")
        return PartitionClass::all();
    if (name == "D")
        return PartitionClass::distinct();
    if (name == "O")
        return PartitionClass::odd_parts();
    if (name == "Od")
        return PartitionClass::odd_mod_four_d(d);
    if (name == "NoOnes")
        return PartitionClass::no_ones();
    throw CLI::ValidationError("--class", "unknown class " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seaweed meander indices of partitions, index statistics and q-series identity checks"};
    app.require_subcommand(1);
    app.footer(std::string("Exit status: 0 all checks pass, 1 a check failed, 2 usage error, 3 runtime error.\n\n") +
               kProductGrammar);

    Output out;
    unsigned jobs_flag = 0;

    // check
    auto* check = app.add_subcommand("check", "Verify an identity coefficientwise (enumeration vs series)");
    std::string which;
    std::size_t max_n = 60, max_k = 15, max_q = 25;
    std::string cls_name = "P";
    std::uint32_t d = 1;
    check->add_option("which", which, "thm1 | conj1 | cor | thm-cnk | thm3")
        ->required()
        ->check(CLI::IsMember({"thm1", "conj1", "cor", "thm-cnk", "thm3"}));
    check->add_option("--max-n", max_n, "Largest weight n (thm1, conj1, cor)")->capture_default_str();
    check->add_option("--max-k", max_k, "Largest k (thm3)")->capture_default_str();
    check->add_option("--max-q", max_q, "Largest q-exponent (thm-cnk)")->capture_default_str();
    check->add_option("--class", cls_name, "Partition class for cor: P, D or Od")
        ->check(CLI::IsMember({"P", "D", "Od"}))
        ->capture_default_str();
    check->add_option("--d", d, "d for the Od class (parts = +-1 mod 4d)")->check(CLI::PositiveNumber)->capture_default_str();
    check->add_flag("--json", out.json, "Emit JSON reports");
    check->add_flag("--rows", out.rows, "Print per-n comparison rows");
    check->add_option("--jobs", jobs_flag, "Worker threads for census work (default $SEAWEED_JOBS or 1)");

    // scan
    auto* scan = app.add_subcommand("scan", "Scan conjectured coefficient properties of 1/(q,-q^(m-1);q^m)");
    std::string scan_kind;
    std::vector<std::size_t> moduli{4};
    std::size_t scan_max_n = 1000;
    scan->add_option("kind", scan_kind, "nonneg | monotone")->required()->check(CLI::IsMember({"nonneg", "monotone"}));
    scan->add_option("--m", moduli, "Modulus m >= 4 (repeatable)")->check(CLI::Range(4, 1 << 20));
    scan->add_option("--max-n", scan_max_n, "Largest exponent")->capture_default_str();
    scan->add_flag("--json", out.json, "Emit JSON reports");
    scan->add_flag("--rows", out.rows, "Print rows (negative coefficients / violations)");

    // meander
    auto* mean = app.add_subcommand("meander", "Index of the seaweed of type TOP/BOTTOM");
    std::string top, bottom, render_path, render_fmt;
    mean->add_option("--top", top, "Top composition, e.g. 3|2|1|1 or 3,2,1,1")->required();
    mean->add_option("--bottom", bottom, "Bottom composition")->required();
    mean->add_option("--render", render_path, "Write a drawing (.svg or .tex; '-' for stdout)");
    mean->add_option("--format", render_fmt, "svg | tikz (default from the file extension)");

    // table
    auto* table = app.add_subcommand("table", "Export statistics tables");
    std::string table_kind, format = "csv", out_path = "-";
    std::size_t table_max_n = 20, table_max_k = 5;
    std::string table_class = "P";
    std::uint32_t table_d = 1;
    table->add_option("what", table_kind, "eind | census | cnk")->required()->check(CLI::IsMember({"eind", "census", "cnk"}));
    table->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    table->add_option("--out", out_path, "Destination path, '-' for stdout")->capture_default_str();
    table->add_option("--max-n", table_max_n, "Largest n (eind, census)")->capture_default_str();
    table->add_option("--max-k", table_max_k, "Largest k (cnk)")->capture_default_str();
    table->add_option("--class", table_class, "Class for census: P, D, O, Od, NoOnes")
        ->check(CLI::IsMember({"P", "D", "O", "Od", "NoOnes"}))
        ->capture_default_str();
    table->add_option("--d", table_d, "d for the Od class")->check(CLI::PositiveNumber);
    table->add_option("--jobs", jobs_flag, "Worker threads");

    // expand
    auto* expand = app.add_subcommand("expand", "Expand a product to a given order (see product syntax below)");
    std::string product_text;
    std::size_t expand_order = 20;
    bool expand_json = false;
    expand->add_option("--product", product_text, "Product, e.g. '1/((q;q4)(-q3;q4))'")->required();
    expand->add_option("--max-n", expand_order, "Truncation order")->capture_default_str();
    expand->add_flag("--json", expand_json, "Emit {\"order\":N,\"coeffs\":[...]}");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const unsigned jobs = jobs_from_env(jobs_flag);
    try {
        if (*check) {
            std::vector<CheckReport> reports;
            if (which == "thm1")
                reports.push_back(check_thm1(max_n, jobs));
            else if (which == "conj1")
                reports.push_back(check_conj1(max_n, jobs));
            else if (which == "cor") {
                CorollaryClass c = cls_name == "P" ? CorollaryClass::P : cls_name == "D" ? CorollaryClass::D : CorollaryClass::Od;
                reports.push_back(check_corollaries(c, max_n, d, jobs));
            } else if (which == "thm-cnk")
                reports.push_back(check_thm_cnk(max_q));
            else
                reports.push_back(check_thm3(max_k));
            return emit(reports, out);
        }
        if (*scan) {
            std::vector<CheckReport> reports;
            for (std::size_t m : moduli) {
                if (scan_kind == "nonneg")
                    reports.push_back(scan_nonneg(m, scan_max_n));
                else {
                    if (scan_max_n < m) {
                        std::cerr << "error: --max-n must be at least m\n";
                        return kExitUsage;
                    }
                    reports.push_back(scan_monotone(m, scan_max_n));
                }
            }
            return emit(reports, out);
        }
        if (*mean) {
            Composition lambda, mu;
            try {
                lambda = parse_composition(top);
                mu = parse_composition(bottom);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitUsage;
            }
            if (lambda.weight() != mu.weight()) {
                std::cerr << "error: " << weight_mismatch(lambda.weight(), mu.weight()).what() << '\n';
                return kExitUsage;
            }
            Meander m = build_meander(lambda, mu);
            ComponentCount cc = count_components(m);
            std::cout << "type " << format_parts(lambda.parts(), '|') << " / " << format_parts(mu.parts(), '|') << '\n';
            std::cout << "vertices " << m.size() << '\n';
            std::cout << "top edges";
            for (auto [u, v] : m.top_edges())
                std::cout << ' ' << u + 1 << '-' << v + 1;
            std::cout << "\nbottom edges";
            for (auto [u, v] : m.bottom_edges())
                std::cout << ' ' << u + 1 << '-' << v + 1;
            std::cout << "\ncycles " << cc.cycles << "\npaths " << cc.paths << "\nindex " << seaweed_index(lambda, mu)
                      << '\n';
            if (!render_path.empty()) {
                RenderFormat fmt = RenderFormat::Svg;
                if (!render_fmt.empty())
                    fmt = parse_render_format(render_fmt);
                else if (render_path.size() >= 4 && render_path.substr(render_path.size() - 4) == ".tex")
                    fmt = RenderFormat::Tikz;
                write_to(render_path, render_meander(m, fmt));
            }
            return 0;
        }
        if (*table) {
            Table t;
            if (table_kind == "eind")
                t = eind_table(table_max_n, jobs);
            else if (table_kind == "census")
                t = census_table(class_from_name(table_class, table_d), table_max_n, jobs);
            else
                t = cnk_export_table(table_max_k);
            write_to(out_path, format == "csv" ? t.csv() : t.json_text());
            return 0;
        }
        if (*expand) {
            ProductSpec spec;
            try {
                spec = parse_product(product_text);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitUsage;
            }
            if (spec.is_univariate()) {
                IntSeries s = expand_product(spec, expand_order);
                if (expand_json)
                    std::cout << to_json(s).dump() << '\n';
                else
                    for (std::size_t n = 0; n <= s.order(); ++n)
                        std::cout << n << ' ' << s.coefficient(n) << '\n';
            } else {
                BivariateSeries s = expand_bivariate_product(spec, expand_order);
                if (expand_json)
                    std::cout << to_json(s).dump() << '\n';
                else
                    for (std::size_t n = 0; n <= s.order(); ++n) {
                        std::cout << n;
                        for (const auto& c : s.row(n))
                            std::cout << ' ' << c;
                        std::cout << '\n';
                    }
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return 0;
}
