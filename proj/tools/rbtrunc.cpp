// rbtrunc: exact checkers, classifiers, generators and exhaustive
// enumeration for Rota-Baxter operators on K[x_1..x_n]/m^2.
//
// Exit codes: 0 = Rota-Baxter / clean report, 1 = not Rota-Baxter or
// mismatch found, 2 = usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rb/generate.hpp"
#include "rb/io/json.hpp"

namespace {

using rb::io::json;

json read_input(const std::string& path) {
    if (path == "-")
        return rb::io::load_json(std::cin, "stdin");
    std::ifstream in(path);
    if (!in)
        throw rb::ParseError(path + ": cannot open file");
    return rb::io::load_json(in, path);
}

template <typename Field>
std::string format_element(const Field& f, const rb::TruncElement<typename Field::Scalar>& x) {
    using Scalar = typename Field::Scalar;
    std::vector<std::string> terms;
    if (x.scalar != Scalar(0))
        terms.push_back(f.to_string(x.scalar));
    for (Eigen::Index i = 0; i < x.n(); ++i) {
        if (x.vec(i) == Scalar(0))
            continue;
        const std::string coeff = f.to_string(x.vec(i));
        const std::string var = "x" + std::to_string(i + 1);
        terms.push_back(coeff == "1" ? var : coeff + "*" + var);
    }
    if (terms.empty())
        return "0";
    std::string out = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i)
        out += " + " + terms[i];
    return out;
}

template <typename Field>
std::string format_matrix(const Field& f, const rb::Matrix<typename Field::Scalar>& m,
                          const std::string& indent) {
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
    std::vector<std::size_t> widths(static_cast<std::size_t>(m.cols()), 0);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::string s = f.to_string(m(i, j));
            widths[static_cast<std::size_t>(j)] = std::max(widths[static_cast<std::size_t>(j)], s.size());
            cells[static_cast<std::size_t>(i)].push_back(std::move(s));
        }
    std::ostringstream os;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        os << indent << "[";
        for (std::size_t j = 0; j < cells[i].size(); ++j) {
            os << (j ? "  " : " ");
            os.width(static_cast<std::streamsize>(widths[j]));
            os << cells[i][j];
        }
        os << " ]\n";
    }
    return os.str();
}

void emit(const json& report, bool pretty, const std::string& pretty_text) {
    if (pretty)
        std::cout << pretty_text;
    else
        std::cout << report.dump(2) << "\n";
}

std::uint64_t enumeration_budget() {
    const char* env = std::getenv("RB_ENUM_BUDGET");
    if (env == nullptr)
        return rb::EnumerationOptions{}.budget;
    const std::string s(env);
    if (!rb::detail::is_decimal_integer(s, false))
        throw rb::ParseError("RB_ENUM_BUDGET: expected a decimal integer, got '" + s + "'");
    return std::stoull(s);
}

rb::FieldSpec parse_field_flag(const std::string& name) {
    if (name == "rational" || name == "q" || name == "Q")
        return rb::RationalField{};
    if (rb::detail::is_decimal_integer(name, false)) {
        try {
            return rb::PrimeField(std::stoull(name));
        } catch (const rb::InvalidDataError& e) {
            throw rb::ParseError(std::string("--field: ") + e.what());
        }
    }
    throw rb::ParseError("--field: expected \"rational\" or an odd prime, got '" + name + "'");
}

int cmd_check(const std::string& file, const std::string& weight_str, bool pretty) {
    const json input = read_input(file);
    const rb::io::AnyOperator op = rb::io::operator_from_json(input);
    return std::visit(
        [&](const auto& P) {
            const auto& f = P.spec.field;
            const auto w = f.parse(weight_str);
            const auto result = rb::rb_check(P, w);

            std::ostringstream os;
            os << "field:   " << rb::field_name(rb::FieldSpec(f)) << "\n"
               << "n:       " << P.spec.n << "\n"
               << "weight:  " << f.to_string(w) << "\n"
               << "verdict: " << (result.holds() ? "rb" : "not-rb") << "\n";
            if (!result.holds()) {
                const auto& wit = *result.witness;
                os << "witness: basis pair (" << wit.i << ", " << wit.j << ")\n"
                   << "  lhs: " << format_element(f, wit.lhs) << "\n"
                   << "  rhs: " << format_element(f, wit.rhs) << "\n";
            }
            emit(rb::io::check_report_json(f, w, result), pretty, os.str());
            return result.holds() ? 0 : 1;
        },
        op);
}

int cmd_classify(const std::string& file, const std::string& weight_str, bool pretty) {
    const json input = read_input(file);
    const rb::io::AnyOperator op = rb::io::operator_from_json(input);
    return std::visit(
        [&](const auto& P) {
            const auto& f = P.spec.field;
            using Scalar = std::decay_t<decltype(f)>::Scalar;
            const Scalar w = f.parse(weight_str);

            json report;
            bool is_rb = false;
            std::ostringstream os;
            os << "field:   " << rb::field_name(rb::FieldSpec(f)) << "\n"
               << "n:       " << P.spec.n << "\n"
               << "weight:  " << f.to_string(w) << "\n";
            if (w == Scalar(0)) {
                const auto r = rb::classify_weight0(P);
                report = rb::io::classification_report_json(f, w, r);
                is_rb = r.is_rb();
                os << "verdict: " << (is_rb ? "rb" : "not-rb") << "\n";
                if (is_rb) {
                    os << "v0:      [";
                    for (Eigen::Index i = 0; i < r.data->v0.size(); ++i)
                        os << (i ? ", " : "") << f.to_string(r.data->v0(i));
                    os << "]\n"
                       << "L:\n"
                       << format_matrix(f, r.data->L, "  ");
                } else {
                    os << "reason:  " << rb::reason_code(*r.reason) << "\n";
                }
            } else {
                const auto r = rb::classify_weight_lambda(P, w);
                report = rb::io::classification_report_json(f, w, r);
                is_rb = r.is_rb();
                os << "verdict: " << (is_rb ? "rb" : "not-rb") << "\n";
                if (is_rb) {
                    os << "alpha:   " << f.to_string(r.data->alpha) << "\n"
                       << "Q:\n"
                       << format_matrix(f, r.data->Q, "  ");
                } else {
                    os << "reason:  " << rb::reason_code(*r.reason) << "\n";
                }
            }
            emit(report, pretty, os.str());
            return is_rb ? 0 : 1;
        },
        op);
}

struct GenFlags {
    int weight = 0;
    long long n = 1;
    long long rank = 0;
    std::string field = "rational";
    long long alpha = -1;
    std::uint64_t seed = 0;
    long long entry_bound = 10;
    bool pretty = false;
};

int cmd_gen(const GenFlags& flags) {
    const rb::FieldSpec field = parse_field_flag(flags.field);
    return std::visit(
        [&](const auto& f) {
            using F = std::decay_t<decltype(f)>;
            const rb::AlgebraSpec<F> spec(f, static_cast<Eigen::Index>(flags.n));
            const rb::GenConfig cfg{flags.seed, static_cast<long>(flags.entry_bound)};

            json out;
            std::ostringstream os;
            if (flags.weight == 0) {
                const auto d = rb::random_weight0_data(f, spec.n, static_cast<Eigen::Index>(flags.rank), cfg);
                const auto P = rb::make_weight0_operator(d, spec);
                out = rb::io::operator_to_json(P);
                out["data"] = rb::io::data_to_json(f, d);
                os << "weight-0 operator over " << rb::field_name(field) << ", n = " << spec.n
                   << ", rank(L) = " << flags.rank << ", seed = " << flags.seed << "\n"
                   << format_matrix(f, P.matrix, "  ");
            } else {
                const auto d = rb::random_weight1_data(f, spec.n, static_cast<Eigen::Index>(flags.rank),
                                                       static_cast<long>(flags.alpha), cfg);
                const auto P = rb::make_weight1_operator(d, spec);
                out = rb::io::operator_to_json(P);
                out["data"] = rb::io::data_to_json(f, d);
                os << "weight-1 operator over " << rb::field_name(field) << ", n = " << spec.n
                   << ", rank(Q) = " << flags.rank << ", alpha = " << flags.alpha
                   << ", seed = " << flags.seed << "\n"
                   << format_matrix(f, P.matrix, "  ");
            }
            emit(out, flags.pretty, os.str());
            return 0;
        },
        field);
}

int cmd_enumerate(std::uint64_t prime, long long n, const std::string& weight_str, bool count_only,
                  unsigned workers, bool pretty) {
    rb::PrimeField field(prime);
    const rb::Fp w = field.parse(weight_str);

    rb::EnumerationOptions opts;
    opts.budget = enumeration_budget();
    opts.workers = workers;
    opts.record_mismatches = !count_only;

    const auto report = rb::enumerate_rb(field, static_cast<Eigen::Index>(n), w, opts);

    std::ostringstream os;
    os << "enumeration over F_" << field.modulus() << ", n = " << n << ", weight "
       << field.to_string(w) << "\n"
       << "  total maps:        " << report.total << "\n"
       << "  rb (identity):     " << report.rb_count << "\n"
       << "  rb (classified):   " << report.classified_count << "\n"
       << "  mismatches:        " << report.mismatch_count << "\n";
    emit(rb::io::enumeration_report_json(report, !count_only), pretty, os.str());
    return report.clean() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Rota-Baxter operator toolkit for truncated polynomial algebras K[x1..xn]/m^2"};
    app.require_subcommand(1);

    std::string file;
    std::string weight = "0";
    bool pretty = false;

    auto* check = app.add_subcommand("check", "Check the Rota-Baxter identity for an operator file");
    check->add_option("file", file, "operator JSON file, or - for stdin")->required();
    check->add_option("--weight", weight, "weight as an exact scalar (e.g. 0, 1, -3, 1/2)")->required();
    check->add_flag("--pretty", pretty, "human-readable output");

    auto* classify = app.add_subcommand("classify", "Classify an operator at the given weight");
    classify->add_option("file", file, "operator JSON file, or - for stdin")->required();
    classify->add_option("--weight", weight, "weight as an exact scalar")->required();
    classify->add_flag("--pretty", pretty, "human-readable output");

    GenFlags gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random certified Rota-Baxter operator");
    gen_cmd->add_option("--weight", gen.weight, "0 or 1")->required()->check(CLI::Range(0, 1));
    gen_cmd->add_option("--n", gen.n, "number of variables (>= 1)")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--rank", gen.rank, "rank of L (weight 0) or Q (weight 1)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--field", gen.field, "rational (default) or an odd prime");
    gen_cmd->add_option("--alpha", gen.alpha, "weight-1 scalar part: 0 or -1 (default -1)")
        ->check(CLI::IsMember({0, -1}));
    gen_cmd->add_option("--seed", gen.seed, "generation seed (default 0)");
    gen_cmd->add_option("--entry-bound", gen.entry_bound, "max |numerator|/denominator of rational entries")
        ->check(CLI::PositiveNumber);
    gen_cmd->add_flag("--pretty", gen.pretty, "human-readable output");

    std::uint64_t prime = 3;
    long long enum_n = 1;
    bool count_only = false;
    unsigned workers = 0;
    auto* enumerate = app.add_subcommand(
        "enumerate", "Exhaustively check all linear maps over a small prime field (oracle)");
    enumerate->add_option("--prime", prime, "odd prime p")->required();
    enumerate->add_option("--n", enum_n, "number of variables")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--weight", weight, "weight as an exact scalar")->required();
    enumerate->add_flag("--count-only", count_only, "omit mismatch matrices from the report");
    enumerate->add_option("--workers", workers, "worker threads (0 = hardware)");
    enumerate->add_flag("--pretty", pretty, "human-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(check))
            return cmd_check(file, weight, pretty);
        if (app.got_subcommand(classify))
            return cmd_classify(file, weight, pretty);
        if (app.got_subcommand(gen_cmd)) {
            gen.pretty |= pretty;
            return cmd_gen(gen);
        }
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(prime, enum_n, weight, count_only, workers, pretty);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
