#ifndef MLDE_CATALOG_HPP
#define MLDE_CATALOG_HPP

#include "mlde/multipoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mlde
{

struct UnknownIdentity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// one exact equality lhs == rhs; X3 and xi3 are eliminated before comparing
struct IdentityPart {
    std::string label;
    Fraction lhs, rhs;
};

struct Identity {
    std::string id;
    std::string title;
    std::vector<IdentityPart> parts;
};

struct PartResult {
    std::string label;
    bool pass = false;
    MultiPoly residual; // numerator of lhs - rhs
};

struct IdentityResult {
    std::string id, title;
    bool pass = false;
    std::vector<PartResult> parts;
    std::size_t residual_terms() const;
};

// a..k plus "l" (moment identity for the branch points)
std::vector<std::string> identity_ids();
Identity make_identity(const std::string &id);
IdentityResult verify_identity(const Identity &identity);
IdentityResult verify_identity(const std::string &id);
// all ids in parallel, in id order
std::vector<IdentityResult> verify_all(const std::vector<std::string> &ids);

// ids grouped for the CLI: appendix-a, appendix-b, appendix-c, psi-n3, b-coeffs, equivalence, all
std::vector<std::string> suite_ids(const std::string &suite);

// claimed coefficients of B(x1,x2) for n = 5
struct BClaims {
    MultiPoly b00, b10, b20_plus_b11, b21, b22;
};
BClaims stated_b_claims();   // as printed with the Corollary
BClaims corrected_b_claims(); // what the expansion actually gives
Identity b_coefficient_identity(const BClaims &claims);
// psi - Corollary limit at x1 = x2 = x, c = -22/5, as a polynomial in x
MultiPoly b_limit_polynomial();

struct PointCheckResult {
    std::string id;
    bool pass = false;
    int trials = 0;
    int pole_retries = 0;
    std::string failed_part;
};
// exact evaluation of every part at random rational points (denominators <= 10^6)
PointCheckResult rational_point_check(const Identity &identity, int trials, std::uint64_t seed);
PointCheckResult rational_point_check(const std::string &id, int trials, std::uint64_t seed);

// Laurent expansion claims about a branch point X = roots[0] of p = a0 prod (x - r)
struct LaurentResult {
    std::string label;
    bool pass = false;
};
std::vector<LaurentResult> laurent_checks(const std::vector<Rational> &roots, const Rational &a0,
                                          const UPoly &theta);
// random instances with n in {3, 5, 7}
std::vector<LaurentResult> laurent_checks_random(int instances, std::uint64_t seed);

} // namespace mlde

#endif
