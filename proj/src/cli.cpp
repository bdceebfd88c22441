#include "kmh/cli.hpp"

#include "kmh/cartan.hpp"
#include "kmh/coefficients.hpp"
#include "kmh/errors.hpp"
#include "kmh/homotopy.hpp"
#include "kmh/json_io.hpp"
#include "kmh/poincare.hpp"
#include "kmh/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace kmh::cli {
namespace {

constexpr const char* kSchema = "kmh/1";

constexpr int kOk = 0;
constexpr int kParseExit = 2;
constexpr int kDomainExit = 3;
constexpr int kIdentityExit = 4;

void emit(const OrderedJson& doc, std::ostream& out) { out << doc.dump(2) << "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string result;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) result += sep;
        result += parts[i];
    }
    return result;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

// A matrix argument is inline JSON when it starts with '{'; otherwise it is a
// path to a JSON file.
CartanMatrix load_matrix(const std::string& source) {
    std::string text = source;
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty matrix argument");
    if (source[first] != '{') {
        std::ifstream in(source);
        if (!in) throw ParseError("cannot read matrix file '" + source + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    OrderedJson parsed;
    try {
        parsed = OrderedJson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
    return matrix_from_json(parsed);
}

struct SourceArgs {
    std::string matrix;
    int n = 0;
    int epsilon = 0;
    bool has_n = false;
    bool has_epsilon = false;
};

struct Resolved {
    int n = 0;
    std::optional<int> epsilon;
    std::optional<CartanMatrix> matrix;
};

// The raw data for an invariant comes either from a matrix (classified to
// extract n and epsilon) or from explicit --n/--epsilon values, never both.
Resolved resolve_source(const SourceArgs& src, bool need_epsilon) {
    Resolved resolved;
    const bool has_matrix = !src.matrix.empty();
    if (has_matrix && (src.has_n || src.has_epsilon))
        throw ParseError("give either a matrix or explicit --n/--epsilon, not both");
    if (!has_matrix && !src.has_n)
        throw ParseError("a matrix argument or --n is required");
    if (has_matrix) {
        resolved.matrix = load_matrix(src.matrix);
        resolved.n = resolved.matrix->rank();
        const ClassificationReport report = classify(*resolved.matrix);
        resolved.epsilon = report.epsilon;
        if (need_epsilon && !resolved.epsilon)
            throw std::invalid_argument(
                "epsilon is undefined for this matrix (non-generic or rank < 2)");
    } else {
        resolved.n = src.n;
        if (src.has_epsilon) resolved.epsilon = src.epsilon;
        if (need_epsilon && !src.has_epsilon)
            throw ParseError("--epsilon is required (or pass a matrix instead)");
    }
    return resolved;
}

OrderedJson epsilon_json(const std::optional<int>& epsilon) {
    if (epsilon) return OrderedJson(*epsilon);
    return OrderedJson(nullptr);
}

OrderedJson symmetrization_json(const Symmetrization& sym) {
    OrderedJson doc;
    OrderedJson d = OrderedJson::array();
    for (const Rational& value : sym.d) d.push_back(to_string(value));
    doc["d"] = d;
    OrderedJson b = OrderedJson::array();
    for (const auto& row : sym.b) {
        OrderedJson row_json = OrderedJson::array();
        for (const Rational& value : row) row_json.push_back(to_string(value));
        b.push_back(row_json);
    }
    doc["b"] = b;
    return doc;
}

OrderedJson witness_json(const NonSymmetrizableWitness& witness) {
    OrderedJson doc;
    doc["cycle"] = witness.cycle;
    doc["forward_product"] = integer_to_json(witness.forward_product);
    doc["reverse_product"] = integer_to_json(witness.reverse_product);
    return doc;
}

int run_classify(const std::string& matrix_arg, const std::string& format, std::ostream& out) {
    const CartanMatrix matrix = load_matrix(matrix_arg);
    const ClassificationReport report = classify(matrix);
    if (format == "json") {
        OrderedJson doc;
        doc["schema"] = kSchema;
        doc["command"] = "classify";
        doc["matrix"] = matrix_to_json(matrix);
        doc["generic"] = report.generic;
        doc["symmetrizable"] = report.symmetrizable;
        doc["indecomposable"] = report.indecomposable;
        doc["epsilon"] = epsilon_json(report.epsilon);
        doc["symmetrization"] =
            report.symmetrization ? symmetrization_json(*report.symmetrization) : OrderedJson(nullptr);
        doc["witness"] = report.witness ? witness_json(*report.witness) : OrderedJson(nullptr);
        emit(doc, out);
        return kOk;
    }
    out << "rank: " << matrix.rank() << "\n";
    out << "generic: " << bool_str(report.generic) << "\n";
    out << "symmetrizable: " << bool_str(report.symmetrizable) << "\n";
    out << "indecomposable: " << bool_str(report.indecomposable) << "\n";
    out << "epsilon: " << (report.epsilon ? std::to_string(*report.epsilon) : "undefined") << "\n";
    if (report.symmetrization) {
        std::vector<std::string> d_strings;
        for (const Rational& value : report.symmetrization->d) d_strings.push_back(to_string(value));
        out << "symmetrizer d: " << join(d_strings, ", ") << "\n";
        out << "symmetric part B:\n";
        for (const auto& row : report.symmetrization->b) {
            std::vector<std::string> row_strings;
            for (const Rational& value : row) row_strings.push_back(to_string(value));
            out << "  [" << join(row_strings, ", ") << "]\n";
        }
    }
    if (report.witness) {
        std::vector<std::string> cycle_strings;
        for (int v : report.witness->cycle) cycle_strings.push_back(std::to_string(v));
        out << "witness cycle: " << join(cycle_strings, " -> ") << " -> "
            << report.witness->cycle.front() << "\n";
        out << "cycle products: " << report.witness->forward_product.str() << " vs "
            << report.witness->reverse_product.str() << "\n";
    }
    return kOk;
}

TruncatedSeries compute_series(const std::string& name, int n, const std::optional<int>& epsilon,
                               int order) {
    if (name == "flag") return flag_series(n, order);
    const int eps = *epsilon;
    if (name == "chow") return chow_series(n, eps, order);
    if (name == "bg") return bg_series(n, eps, order);
    if (name == "bg-recursive") return bg_series_recursive(n, eps, order);
    return mv_coker_series(n, eps, order); // "mv-coker"
}

int run_series(const std::string& name, const SourceArgs& src, int order, const std::string& format,
               std::ostream& out) {
    const bool need_epsilon = name != "flag";
    const Resolved resolved = resolve_source(src, need_epsilon);
    const TruncatedSeries series = compute_series(name, resolved.n, resolved.epsilon, order);
    if (format == "json") {
        OrderedJson doc;
        doc["schema"] = kSchema;
        doc["command"] = "series";
        doc["name"] = name;
        doc["n"] = resolved.n;
        doc["epsilon"] = need_epsilon ? epsilon_json(resolved.epsilon) : OrderedJson(nullptr);
        doc["order"] = order;
        doc["coefficients"] = series_to_json(series);
        emit(doc, out);
        return kOk;
    }
    out << "series: " << name << "\n";
    out << "n: " << resolved.n << "\n";
    if (need_epsilon) out << "epsilon: " << *resolved.epsilon << "\n";
    out << "order: " << order << "\n";
    out << "coefficients: " << join(to_coefficient_strings(series), ", ") << "\n";
    out << "nonzero: " << to_pretty_string(series) << "\n";
    return kOk;
}

int run_coefficients(const SourceArgs& src, int max_i, int order, const std::string& format,
                     std::ostream& out) {
    const Resolved resolved = resolve_source(src, /*need_epsilon=*/true);
    const int n = resolved.n;
    const int eps = *resolved.epsilon;
    const CoefficientFamily closed_family =
        eps == 0 ? CoefficientFamily::a : CoefficientFamily::b;
    const CoefficientFamily bg_family =
        eps == 0 ? CoefficientFamily::alpha : CoefficientFamily::beta;

    std::map<int, Integer> closed_values;
    for (int i = 2; i <= max_i; ++i)
        closed_values[i] = eps == 0 ? a_closed(n, i) : b_closed(n, i);
    const CoefficientTable series_table =
        eps == 0 ? a_from_series(n, max_i, order) : b_from_series(n, max_i, order);
    const CoefficientTable bg_table =
        eps == 0 ? alpha_from_bg(n, max_i, order) : beta_from_bg(n, max_i, order);

    if (format == "json") {
        OrderedJson doc;
        doc["schema"] = kSchema;
        doc["command"] = "coefficients";
        doc["n"] = n;
        doc["epsilon"] = eps;
        doc["max_i"] = max_i;
        doc["order"] = order;
        doc["closed_form_family"] = family_name(closed_family);
        doc["bg_family"] = family_name(bg_family);
        OrderedJson rows = OrderedJson::array();
        for (int i = 2; i <= max_i; ++i) {
            OrderedJson row;
            row["i"] = i;
            row["closed_form"] = closed_values.at(i).str();
            row["series"] = series_table.values.at(i).str();
            row["bg_extraction"] = bg_table.values.at(i).str();
            rows.push_back(row);
        }
        doc["rows"] = rows;
        emit(doc, out);
        return kOk;
    }
    out << "family: " << family_name(closed_family) << " (with " << family_name(bg_family)
        << " from the classifying-space series)\n";
    out << "n: " << n << "\n";
    out << "epsilon: " << eps << "\n";
    std::size_t value_width = 5;
    for (int i = 2; i <= max_i; ++i) {
        value_width = std::max(value_width, closed_values.at(i).str().size());
        value_width = std::max(value_width, series_table.values.at(i).str().size());
        value_width = std::max(value_width, bg_table.values.at(i).str().size());
    }
    auto pad_left = [](const std::string& text, std::size_t width) {
        return text.size() >= width ? text : std::string(width - text.size(), ' ') + text;
    };
    out << pad_left("i", 6) << "  " << pad_left("value", value_width) << "  source\n";
    for (int i = 2; i <= max_i; ++i) {
        const std::string i_text = std::to_string(i);
        out << pad_left(i_text, 6) << "  " << pad_left(closed_values.at(i).str(), value_width)
            << "  closed-form\n";
        out << pad_left(i_text, 6) << "  " << pad_left(series_table.values.at(i).str(), value_width)
            << "  series\n";
        out << pad_left(i_text, 6) << "  " << pad_left(bg_table.values.at(i).str(), value_width)
            << "  bg-extraction\n";
    }
    return kOk;
}

std::string homotopy_display(const RationalHomotopyType& type) {
    std::vector<std::string> parts;
    for (const auto& [degree, count] : type.sphere_counts) {
        if (count == 1)
            parts.push_back("S^" + std::to_string(degree));
        else
            parts.push_back(count.str() + "*S^" + std::to_string(degree));
    }
    const std::string wedge = join(parts, " v ");
    if (type.has_bs3_factor) return wedge.empty() ? "BS^3" : "BS^3 x (" + wedge + ")";
    return wedge.empty() ? "(no spheres through the requested degree)" : wedge;
}

template <typename MapLike>
OrderedJson counts_json(const MapLike& values) {
    OrderedJson doc = OrderedJson::object();
    for (const auto& [key, value] : values) doc[std::to_string(key)] = value.str();
    return doc;
}

template <typename MapLike>
std::string counts_line(const MapLike& values) {
    std::vector<std::string> parts;
    for (const auto& [key, value] : values)
        parts.push_back(std::to_string(key) + ": " + value.str());
    return parts.empty() ? "(none)" : join(parts, ", ");
}

int run_homotopy(const SourceArgs& src, int max_degree, const std::string& format,
                 std::ostream& out) {
    const Resolved resolved = resolve_source(src, /*need_epsilon=*/true);
    const int n = resolved.n;
    const int eps = *resolved.epsilon;
    const RationalHomotopyType type = bg_homotopy_type(n, eps, max_degree);
    const HomotopyDimensionTable dims = homotopy_dimensions(n, eps, max_degree);
    const HopfAlgebraDescription hopf = hopf_description(n, eps, max_degree);
    const std::string hopf_kind =
        hopf.kind == HopfKind::tensor ? "tensor" : "product_with_sphere";
    if (format == "json") {
        OrderedJson doc;
        doc["schema"] = kSchema;
        doc["command"] = "homotopy";
        doc["n"] = n;
        doc["epsilon"] = eps;
        doc["max_degree"] = max_degree;
        OrderedJson type_json;
        type_json["display"] = homotopy_display(type);
        type_json["bs3_factor"] = type.has_bs3_factor;
        type_json["sphere_counts"] = counts_json(type.sphere_counts);
        doc["homotopy_type"] = type_json;
        doc["homotopy_dimensions"] = counts_json(dims.dims);
        OrderedJson hopf_json;
        hopf_json["kind"] = hopf_kind;
        hopf_json["odd_factor_degree"] = hopf.odd_factor_degree
                                             ? OrderedJson(*hopf.odd_factor_degree)
                                             : OrderedJson(nullptr);
        hopf_json["generator_counts"] = counts_json(hopf.generator_counts);
        doc["hopf_algebra"] = hopf_json;
        emit(doc, out);
        return kOk;
    }
    out << "n: " << n << "\n";
    out << "epsilon: " << eps << "\n";
    out << "max degree: " << max_degree << "\n";
    out << "homotopy type: " << homotopy_display(type) << "\n";
    out << "sphere counts: " << counts_line(type.sphere_counts) << "\n";
    out << "homotopy dimensions: " << counts_line(dims.dims) << "\n";
    if (hopf.kind == HopfKind::product_with_sphere && hopf.odd_factor_degree)
        out << "hopf algebra: exterior factor in degree " << *hopf.odd_factor_degree
            << " times a tensor algebra\n";
    else
        out << "hopf algebra: tensor algebra\n";
    out << "tensor generators: " << counts_line(hopf.generator_counts) << "\n";
    return kOk;
}

int run_compare(const std::string& first_arg, const std::string& second_arg,
                const std::string& format, std::ostream& out) {
    const CartanMatrix first = load_matrix(first_arg);
    const CartanMatrix second = load_matrix(second_arg);
    const bool equivalent = rationally_equivalent(first, second);
    const ClassificationReport first_report = classify(first);
    const ClassificationReport second_report = classify(second);
    if (format == "json") {
        OrderedJson doc;
        doc["schema"] = kSchema;
        doc["command"] = "compare";
        OrderedJson first_json;
        first_json["n"] = first.rank();
        first_json["epsilon"] = epsilon_json(first_report.epsilon);
        OrderedJson second_json;
        second_json["n"] = second.rank();
        second_json["epsilon"] = epsilon_json(second_report.epsilon);
        doc["first"] = first_json;
        doc["second"] = second_json;
        doc["rationally_equivalent"] = equivalent;
        emit(doc, out);
        return kOk;
    }
    out << "first: n = " << first.rank() << ", epsilon = " << *first_report.epsilon << "\n";
    out << "second: n = " << second.rank() << ", epsilon = " << *second_report.epsilon << "\n";
    out << "rationally equivalent: " << bool_str(equivalent) << "\n";
    return kOk;
}

int run_verify_all(int order, const std::string& format, std::ostream& out) {
    const std::vector<verify::CheckResult> results = verify::run_all(order);
    std::size_t passed = 0;
    for (const auto& result : results)
        if (result.passed) ++passed;
    const bool all_passed = passed == results.size();
    if (format == "json") {
        OrderedJson doc;
        doc["schema"] = kSchema;
        doc["command"] = "verify-all";
        doc["order"] = order;
        OrderedJson checks = OrderedJson::array();
        for (const auto& result : results) {
            OrderedJson check;
            check["name"] = result.name;
            check["passed"] = result.passed;
            check["detail"] = result.detail;
            checks.push_back(check);
        }
        doc["checks"] = checks;
        doc["passed"] = all_passed;
        emit(doc, out);
        return all_passed ? kOk : kIdentityExit;
    }
    for (const auto& result : results)
        out << (result.passed ? "PASS" : "FAIL") << " " << result.name << ": " << result.detail
            << "\n";
    out << passed << "/" << results.size() << " checks passed (order " << order << ")\n";
    return all_passed ? kOk : kIdentityExit;
}

void attach_source(CLI::App* sub, SourceArgs& src) {
    sub->add_option("matrix", src.matrix,
                    "Cartan matrix: inline JSON ({\"n\":...,\"entries\":[[...]]}) or a file path");
    sub->add_option("--n", src.n, "rank, as an alternative to a matrix");
    sub->add_option("--epsilon", src.epsilon, "epsilon invariant (0 or 1)");
}

void finish_source(CLI::App* sub, SourceArgs& src) {
    src.has_n = sub->count("--n") > 0;
    src.has_epsilon = sub->count("--epsilon") > 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rational invariants of generic Kac-Moody groups and their classifying "
                 "spaces"};
    app.name("kmh");
    app.require_subcommand(0, 1);

    std::string format_classify = "text";
    std::string format_series = "text";
    std::string format_coefficients = "text";
    std::string format_homotopy = "text";
    std::string format_compare = "text";
    std::string format_verify = "text";
    const auto format_check = CLI::IsMember({"text", "json"});

    std::string classify_matrix;
    CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a generalized Cartan matrix");
    classify_cmd->add_option("matrix", classify_matrix, "inline JSON or a file path")->required();
    classify_cmd->add_option("--format", format_classify, "text or json")->check(format_check);

    std::string series_name;
    SourceArgs series_src;
    int series_order = 40;
    CLI::App* series_cmd = app.add_subcommand("series", "Print a Poincare series");
    series_cmd
        ->add_option("name", series_name, "one of: flag, chow, bg, bg-recursive, mv-coker")
        ->required()
        ->check(CLI::IsMember({"flag", "chow", "bg", "bg-recursive", "mv-coker"}));
    attach_source(series_cmd, series_src);
    series_cmd->add_option("--order", series_order, "truncation order")->capture_default_str();
    series_cmd->add_option("--format", format_series, "text or json")->check(format_check);

    SourceArgs coefficients_src;
    int coefficients_max_i = 19;
    int coefficients_order = 40;
    CLI::App* coefficients_cmd =
        app.add_subcommand("coefficients", "Tabulate structure coefficients from every route");
    attach_source(coefficients_cmd, coefficients_src);
    coefficients_cmd->add_option("--max-i", coefficients_max_i, "largest index i")
        ->capture_default_str();
    coefficients_cmd->add_option("--order", coefficients_order, "truncation order")
        ->capture_default_str();
    coefficients_cmd->add_option("--format", format_coefficients, "text or json")
        ->check(format_check);

    SourceArgs homotopy_src;
    int homotopy_max_degree = 40;
    CLI::App* homotopy_cmd =
        app.add_subcommand("homotopy", "Rational homotopy type and homotopy dimensions");
    attach_source(homotopy_cmd, homotopy_src);
    homotopy_cmd->add_option("--max-degree", homotopy_max_degree, "largest degree reported")
        ->capture_default_str();
    homotopy_cmd->add_option("--format", format_homotopy, "text or json")->check(format_check);

    std::string compare_first;
    std::string compare_second;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Decide rational equivalence of two Cartan matrices");
    compare_cmd->add_option("first", compare_first, "inline JSON or a file path")->required();
    compare_cmd->add_option("second", compare_second, "inline JSON or a file path")->required();
    compare_cmd->add_option("--format", format_compare, "text or json")->check(format_check);

    int verify_order = 40;
    CLI::App* verify_cmd =
        app.add_subcommand("verify-all", "Run the full internal cross-check suite");
    verify_cmd->add_option("--order", verify_order, "truncation order for all identities")
        ->capture_default_str();
    verify_cmd->add_option("--format", format_verify, "text or json")->check(format_check);

    std::vector<const char*> argv;
    argv.push_back("kmh");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseExit;
    }

    try {
        if (app.got_subcommand(classify_cmd))
            return run_classify(classify_matrix, format_classify, out);
        if (app.got_subcommand(series_cmd)) {
            finish_source(series_cmd, series_src);
            return run_series(series_name, series_src, series_order, format_series, out);
        }
        if (app.got_subcommand(coefficients_cmd)) {
            finish_source(coefficients_cmd, coefficients_src);
            return run_coefficients(coefficients_src, coefficients_max_i, coefficients_order,
                                    format_coefficients, out);
        }
        if (app.got_subcommand(homotopy_cmd)) {
            finish_source(homotopy_cmd, homotopy_src);
            return run_homotopy(homotopy_src, homotopy_max_degree, format_homotopy, out);
        }
        if (app.got_subcommand(compare_cmd))
            return run_compare(compare_first, compare_second, format_compare, out);
        if (app.got_subcommand(verify_cmd))
            return run_verify_all(verify_order, format_verify, out);
        err << app.help();
        return kParseExit;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseExit;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kParseExit;
    } catch (const IdentityError& e) {
        err << "identity violation: " << e.what() << "\n";
        return kIdentityExit;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kDomainExit;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainExit;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kDomainExit;
    }
}

} // namespace kmh::cli
