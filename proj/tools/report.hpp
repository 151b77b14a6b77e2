#ifndef MLDE_TOOLS_REPORT_HPP
#define MLDE_TOOLS_REPORT_HPP

#include "mlde/genus1_numeric.hpp"
#include "mlde/qseries.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace mlde::cli
{

// flagged = known misprint in the reference values; reported, never fails a run
enum class Status { pass, fail, flagged };
const char *status_name(Status s);

struct Check {
    std::string name;
    Status status = Status::pass;
    std::string detail;
};

struct RunReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;
    double wall_seconds = 0;
    nlohmann::json extra = nlohmann::json::object();

    bool ok() const;
    nlohmann::json to_json() const;
    void print(std::ostream &out) const;
};

// MLDE_TRUNC, else 60
long default_trunc();

// 2^3*13*17*193; the integer itself when it has a prime factor above 10^6
std::string factor_integer(const Integer &n);
// value * D^k when that is an integer: "-2*3*13/36^2", otherwise factored p/q
std::string render_scaled(const Rational &value, const Integer &D, int k);

// published alpha table for (2,nu), keyed by m; nu = 13 also has the cusp coefficient
std::map<int, Rational> reference_alphas(int nu);
Rational reference_cusp13();

RunReport ode_table_report(const std::vector<int> &nus, long N);
RunReport verify_report(const std::string &suite, int trials, std::uint64_t seed);
RunReport genus1_report(Complex tau, double lambda, const std::string &check, double eps, long qterms);
RunReport frobenius_report(const Rational &c, int dim);
RunReport reproduce_report(long N, int trials, std::uint64_t seed);

// argv without the program name; exit code 0 pass, 1 fail, 2 usage
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mlde::cli

#endif
