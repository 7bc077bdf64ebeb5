// legdet: command-line front end for the Legendre-matrix determinant checks.
//
// Exit status: 0 on success (and no FAIL records), 1 if a verification
// sweep produced a FAIL, 2 on usage errors.

#include "legdet/arith.hpp"
#include "legdet/exact_linalg.hpp"
#include "legdet/matrices.hpp"
#include "legdet/quadfield.hpp"
#include "legdet/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

constexpr int kUsageError = 2;

const std::map<std::string, legdet::MatrixKind> kKinds{
    {"cp", legdet::MatrixKind::Cp}, {"ep", legdet::MatrixKind::Ep}, {"mp", legdet::MatrixKind::Mp}};

const std::map<std::string, legdet::ReportFormat> kFormats{
    {"text", legdet::ReportFormat::Text}, {"json", legdet::ReportFormat::Json}, {"csv", legdet::ReportFormat::Csv}};

void print_matrix(const legdet::IntMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const std::string cell = m(i, j).str();
            std::cout << (j ? " " : "") << std::string(cell.size() < 2 ? 2 - cell.size() : 0, ' ') << cell;
        }
        std::cout << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Determinants of Legendre-symbol matrices and their class-number identities", "legdet"};
    app.require_subcommand(1);

    std::int64_t symbol_a = 0;
    std::uint64_t prime = 0;
    auto* symbol = app.add_subcommand("symbol", "Legendre symbol (a/p)");
    symbol->add_option("a", symbol_a, "integer a")->required();
    symbol->add_option("p", prime, "odd prime p")->required();

    std::string kind = "mp";
    bool print = false;
    auto* matrix = app.add_subcommand("matrix", "Build C_p, E_p or M_p");
    matrix->add_option("--kind", kind, "cp | ep | mp")->required()->check(CLI::IsMember({"cp", "ep", "mp"}));
    matrix->add_option("--p", prime, "odd prime")->required();
    matrix->add_flag("--print", print, "print the entries");

    auto* det = app.add_subcommand("det", "Exact determinant of C_p, E_p or M_p");
    det->add_option("--kind", kind, "cp | ep | mp")->required()->check(CLI::IsMember({"cp", "ep", "mp"}));
    det->add_option("--p", prime, "odd prime")->required();

    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of C_p");
    charpoly->add_option("--p", prime, "odd prime")->required();

    std::string field = "real";
    auto* class_number = app.add_subcommand("class-number", "Class number h(p) or h(-p)");
    class_number->add_option("--field", field, "real | imag")->required()->check(CLI::IsMember({"real", "imag"}));
    class_number->add_option("--p", prime, "odd prime")->required();

    auto* unit = app.add_subcommand("fundamental-unit", "Fundamental unit of Q(sqrt p)");
    unit->add_option("--p", prime, "odd prime")->required();

    auto* chapman = app.add_subcommand("chapman", "a_p and b_p with eps_p^((2-(2/p))h) = a_p + b_p sqrt p");
    chapman->add_option("--p", prime, "odd prime, p = 1 mod 4")->required();

    std::string target_name;
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    legdet::SweepOptions sweep_options;
    std::string format = "text";
    std::string out_path;
    auto* verify = app.add_subcommand("verify", "Run a verification target over a prime range");
    std::vector<std::string> target_names;
    for (auto t : legdet::all_targets()) target_names.emplace_back(legdet::to_string(t));
    verify->add_option("--target", target_name, "verification target")->required()->check(CLI::IsMember(target_names));
    verify->add_option("--from", from, "lower end of the prime range")->required();
    verify->add_option("--to", to, "upper end of the prime range")->required();
    verify->add_option("--tolerance", sweep_options.tolerance, "relative tolerance for numeric targets")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("--jobs", sweep_options.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "text | json | csv")->capture_default_str()->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out", out_path, "write the report to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*symbol) {
            std::cout << legdet::legendre(symbol_a, legdet::OddPrime(prime)) << '\n';
        } else if (*matrix) {
            const legdet::OddPrime p(prime);
            const legdet::IntMatrix m = legdet::build_matrix(kKinds.at(kind), p);
            std::cout << kind << " for p = " << prime << ": " << m.rows() << "x" << m.cols() << '\n';
            if (print) print_matrix(m);
        } else if (*det) {
            const legdet::OddPrime p(prime);
            std::cout << legdet::determinant(legdet::build_matrix(kKinds.at(kind), p)) << '\n';
        } else if (*charpoly) {
            const legdet::OddPrime p(prime);
            std::cout << legdet::charpoly(legdet::build_cp(p)).to_string() << '\n';
        } else if (*class_number) {
            const legdet::OddPrime p(prime);
            const legdet::ClassNumberReport report =
                field == "real" ? legdet::class_number_real(p) : legdet::class_number_imag(p);
            std::cout << "h(" << (field == "real" ? "" : "-") << prime << ") = " << report.h << '\n';
            for (const auto& [method, value] : report.method_values) std::cout << "  " << method << ": " << value << '\n';
        } else if (*unit) {
            const legdet::QuadElem eps = legdet::fundamental_unit(legdet::OddPrime(prime));
            std::cout << eps.to_string() << "  (norm " << eps.norm() << ")\n";
        } else if (*chapman) {
            const legdet::ChapmanCoefficients c = legdet::chapman_ap(legdet::OddPrime(prime));
            std::cout << "exponent " << c.exponent << "\na_p = " << c.a << "\nb_p = " << c.b << '\n';
        } else if (*verify) {
            const auto target = legdet::parse_target(target_name);
            const legdet::SweepReport report = legdet::run_sweep(*target, from, to, sweep_options);
            const std::string rendered = legdet::render_report(report, kFormats.at(format));
            if (out_path.empty()) {
                std::cout << rendered;
            } else {
                std::ofstream out(out_path);
                if (!out) {
                    std::cerr << "cannot open " << out_path << '\n';
                    return kUsageError;
                }
                out << rendered;
            }
            return report.exit_code();
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const legdet::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
