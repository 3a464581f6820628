#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <jacquet/exec.hpp>
#include <jacquet/formal_sum.hpp>
#include <jacquet/group_mode.hpp>

namespace jacquet
{

// How the lower bound on the Jordan exponents is read.
//  permissive: b_i - a in Z and -1 < b_1 < ... < b_k; b_i = a - k + i - 1
//              encodes an empty i-th segment.
//  strict:     additionally b_i - a + k - i >= 0, so no segment is empty.
enum class JordConvention { permissive, strict };

// Increasing exponent sequence b_1 < ... < b_k, k = ceil(a), attached to a
// cuspidal label rho with reducibility point a.
struct JordSequence {
    GLLabel rho;
    HalfInt a;
    std::vector<HalfInt> b;

    std::int64_t k() const
    {
        return ceil(a);
    }
    // Empty string when the invariants hold, else the first violation.
    std::string violation(JordConvention conv = JordConvention::permissive) const;
    // Segments [nu^{a-k+j} rho, nu^{b_j} rho], j = 1..k, including empty ones.
    std::vector<Segment> segments() const;

    friend bool operator==(const JordSequence &, const JordSequence &) = default;
};

// All sequences for (rho, a) with b_k <= max_b, lexicographic.
// Throws DomainError unless a >= 0 and max_b >= a.
std::vector<JordSequence> enumerate_jord(const GLLabel &rho, HalfInt a, HalfInt max_b,
                                         JordConvention conv = JordConvention::permissive);

// (Jord, sigma') with Jord given per label.
struct LJDatum {
    std::vector<JordSequence> jord;
    GULabel sigma;

    friend bool operator==(const LJDatum &, const LJDatum &) = default;
};

struct ConditionResult {
    std::string clause; // "(i)", "(ii)", "(iii)"
    bool passed = true;
    std::string message;
};

struct ValidationReport {
    std::vector<ConditionResult> conditions;

    bool ok() const;
    // First failed clause, if any.
    std::optional<ConditionResult> first_failure() const;
    std::string to_string() const;
};

// Conditions (i)-(iii) of the LJ set:
//  (i)   labels pairwise distinct, conjugate self-dual, with a declared
//        reducibility a' equal to the datum's a; a' > 0 unless the sequence
//        is empty,
//  (ii)  sequence length k = ceil(a'),
//  (iii) b_j - a' in Z and -1 < b_1 < ... < b_k (plus the strict bound under
//        JordConvention::strict).
ValidationReport validate_lj(const LJDatum &datum, JordConvention conv = JordConvention::permissive);

struct InducingRep {
    GUClass rep;
    // Segments ordered by exponent center, ties by label name.
    std::vector<Segment> ordered_segments;
    std::vector<std::string> warnings;
};

// prod_i prod_j delta([nu^{a_i - k_i + j} rho_i, nu^{b_j} rho_i]) |x| sigma,
// empty segments dropped. Throws InvalidDatum. Warns when a label with a
// nonempty sequence is not declared twist-fixed on sigma.
InducingRep build_inducing_rep(const LJDatum &datum, JordConvention conv = JordConvention::permissive);

// Starts a-k+1, ..., a; strictly increasing ends; k <= ceil(a); every
// segment strongly positive. The segments share one label and are sorted by
// start.
bool check_exponent_constraints(std::span<const Segment> segments, HalfInt a);

struct NecessaryConditions {
    bool conj_self_dual = false;
    bool twist_fixed = false;
    bool reducibility_declared = false;
    bool reducibility_positive = false;

    // Both necessary conditions for a strongly positive subrepresentation.
    bool sp_possible() const
    {
        return conj_self_dual && twist_fixed;
    }
    std::string to_string() const;
};

NecessaryConditions sp_necessary_conditions(const GLLabel &rho, const GULabel &sigma);

// delta(D1) (x) ... (x) delta(Dk) (x) sigma_cusp, segments in center order.
TensorTerm leading_term(const InducingRep &ind);

// Coefficient of the leading term in r_s of the inducing representation,
// s = the ranks of the ordered segments. Throws InvalidDatum before any
// computation when the datum is invalid.
Multiplicity leading_term_multiplicity(const LJDatum &datum, GroupMode mode,
                                       JordConvention conv = JordConvention::permissive,
                                       Exec exec = Exec::serial);

struct SpDiagnostics {
    bool exponents_ok = false;
    Multiplicity leading_multiplicity;
    std::vector<std::string> warnings;
};

struct SpEntry {
    LJDatum datum;
    InducingRep inducing;
    SpDiagnostics diagnostics;
};

// Cartesian product of the per-label enumerations, each assembled into a
// datum with its inducing representation and diagnostics. Order is the
// lexicographic product order regardless of the schedule.
// Throws UndeclaredReducibility, or DomainError when a label fails the
// necessary conditions.
std::vector<SpEntry> enumerate_sp(std::span<const GLLabel> labels, const GULabel &sigma, HalfInt max_b,
                                  GroupMode mode, JordConvention conv = JordConvention::permissive,
                                  Exec exec = Exec::parallel);

} // namespace jacquet
