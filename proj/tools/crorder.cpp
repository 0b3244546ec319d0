#include "crorder/admissible.hpp"
#include "crorder/analysis.hpp"
#include "crorder/errors.hpp"
#include "crorder/fixtures.hpp"
#include "crorder/instance.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace crorder;
using nlohmann::ordered_json;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_report(const AnalysisReport& r, const std::string& format) {
    std::cout << (format == "json" ? report_json(r) : report_text(r));
}

std::string qbeta_text(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    for (const auto& row : rows) os << row.describe() << '\n';
    return os.str();
}

ordered_json qbeta_json(const std::vector<TableRow>& rows) {
    ordered_json out = ordered_json::array();
    for (const auto& row : rows) {
        const RootSystem rs = RootSystem::build(row.type, row.rank);
        ordered_json seq = ordered_json::array();
        for (auto a : row.witness.sequence) seq.push_back(rs.root(a).simple_coeffs);
        out.push_back({{"type", std::string(1, to_char(row.type))},
                       {"rank", row.rank},
                       {"root_length", row.long_root ? "long" : "short"},
                       {"beta", rs.root(row.witness.beta).simple_coeffs},
                       {"q", row.witness.q},
                       {"expected", row.expected},
                       {"witness", seq},
                       {"ok", row.ok()}});
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Levi and contact orders of parabolic CR algebras"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze an instance document or fixture");
    std::string input_path;
    std::string fixture_name;
    auto* file_opt = analyze_cmd->add_option("file", input_path, "Instance document ('-' for stdin)");
    analyze_cmd->add_option("--fixture", fixture_name, "Named fixture")->excludes(file_opt);
    add_format(analyze_cmd);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Analyze every crossed set and signed-permutation involution");
    std::string type_name;
    int rank = 0;
    std::size_t bound = 0;
    enumerate_cmd->add_option("--type", type_name, "Cartan type")->required();
    enumerate_cmd->add_option("--rank", rank, "Rank")->required();
    auto* bound_opt = enumerate_cmd->add_option("--bound", bound, "Cap on the number of involutions");
    add_format(enumerate_cmd);

    auto* qbeta_cmd = app.add_subcommand("qbeta", "Maximal admissible sequence length per root length");
    qbeta_cmd->add_option("--type", type_name, "Cartan type")->required();
    qbeta_cmd->add_option("--rank", rank, "Rank")->required();
    add_format(qbeta_cmd);

    auto* lee_cmd = app.add_subcommand("lee", "Analyze the extension sl2 + V_k");
    int lee_k = 0;
    lee_cmd->add_option("--k", lee_k, "Highest weight")->required()->check(CLI::NonNegativeNumber);
    add_format(lee_cmd);

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Named fixtures");
    bool list = false;
    fixtures_cmd->add_flag("--list", list, "List fixture names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze_cmd) {
            InstanceSpec spec;
            if (!fixture_name.empty()) {
                spec = fixture(fixture_name);
            } else if (!input_path.empty()) {
                spec = parse_instance(read_input(input_path));
            } else {
                throw ParseError("analyze: an instance file or --fixture is required");
            }
            emit_report(analyze(spec), format);
        } else if (*enumerate_cmd) {
            const auto type = parse_cartan_type(type_name);
            const auto result = enumerate_instances(
                type, rank, bound_opt->count() ? std::optional<std::size_t>(bound) : std::nullopt);
            std::cout << (format == "json" ? to_json(result).dump(2) + "\n" : enumeration_text(result));
        } else if (*qbeta_cmd) {
            const auto rows = verify_table({{parse_cartan_type(type_name), rank}});
            std::cout << (format == "json" ? qbeta_json(rows).dump(2) + "\n" : qbeta_text(rows));
        } else if (*lee_cmd) {
            InstanceSpec spec;
            spec.lee_k = lee_k;
            emit_report(analyze(spec), format);
        } else if (*fixtures_cmd) {
            for (const auto& f : fixture_catalog()) {
                std::cout << f.name;
                if (!list) std::cout << "  " << f.description;
                std::cout << '\n';
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidRank& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NotInSystem& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvolutionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
