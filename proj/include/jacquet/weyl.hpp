#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <jacquet/exec.hpp>
#include <jacquet/group_mode.hpp>

namespace jacquet
{

// Element (perm, signs) of S_n x| {+-1}^n acting on coordinates by
// e_j -> signs[j] * e_{perm[j]}. Indices are 1-based in the interface.
class SignedPermutation
{
public:
    // Throws NonBijection if perm is not a bijection of {1..n}, InvalidParams
    // if a sign is not +-1 or the sizes differ.
    SignedPermutation(std::vector<int> perm, std::vector<int> signs);

    static SignedPermutation identity(int n);
    // s_{alpha_i}: swaps i, i+1 for i < n, flips the sign of e_n for i = n.
    static SignedPermutation simple_reflection(int n, int i);

    int n() const
    {
        return static_cast<int>(m_perm.size());
    }
    int image(int j) const
    {
        return m_perm[j - 1];
    }
    int sign(int j) const
    {
        return m_signs[j - 1];
    }
    const std::vector<int> &perm() const
    {
        return m_perm;
    }
    const std::vector<int> &signs() const
    {
        return m_signs;
    }

    // (x * y)(v) = x(y(v)).
    friend SignedPermutation operator*(const SignedPermutation &x, const SignedPermutation &y);
    SignedPermutation inverse() const;

    std::vector<int> apply(std::span<const int> v) const;

    // Number of positive roots of type C_n sent to negative roots.
    int length() const;

    // Cycle notation of the underlying permutation, fixed points omitted
    // ("()" for the identity).
    std::string cycle_notation() const;
    // e.g. "(+,-,+)".
    std::string sign_string() const;

    friend bool operator==(const SignedPermutation &, const SignedPermutation &) = default;
    friend auto operator<=>(const SignedPermutation &, const SignedPermutation &) = default;

private:
    std::vector<int> m_perm;
    std::vector<int> m_signs;
};

struct GeomParams {
    int n = 0;
    int i1 = 0;
    int i2 = 0;
    int d = 0;
    int k = 0;

    bool admissible() const;
    std::string to_string() const;

    friend bool operator==(const GeomParams &, const GeomParams &) = default;
};

// The piecewise permutation p_n(d,k)_{i1,i2}. Throws InvalidParams, or
// NonBijection naming the params if the branches fail to assemble one.
SignedPermutation p_rep(const GeomParams &params);
// p_rep with signs (1^{i2-d}, (-1)^d, 1^{n-i2}).
SignedPermutation q_rep(const GeomParams &params);

// All admissible (d, k), lexicographic.
std::vector<GeomParams> enumerate_geom_params(int n, int i1, int i2);

// Every element of W(C_n), in lexicographic (perm, signs) order.
std::vector<SignedPermutation> hyperoctahedral_group(int n);

struct DoubleCoset {
    std::vector<SignedPermutation> members;
    SignedPermutation minimal;
    bool unique_minimal;
};

// W_{Theta(i1)} \ W / W_{Theta(i2)} with Theta(i) = simple roots minus
// alpha_i, by orbit enumeration. Serial reference for the oracle.
std::vector<DoubleCoset> double_cosets(int n, int i1, int i2, int bound = 4);

// Minimal-length double-coset representatives. The serial path collects the
// minima of double_cosets(); the parallel path tests every group element for
// the left and right descent conditions.
std::set<SignedPermutation> brute_force_coset_reps(int n, int i1, int i2, int bound = 4,
                                                   Exec exec = Exec::parallel);

struct OracleReport {
    std::vector<GeomParams> params;
    std::set<SignedPermutation> closed_form;
    std::set<SignedPermutation> brute_force;
    bool match = false;
};

OracleReport compare_with_oracle(int n, int i1, int i2, int bound = 4, Exec exec = Exec::parallel);

struct LeviBlock {
    std::string label;
    int size = 0;
    bool dual = false;
    // The lambda factor of the GU Levi; toggles together with dual.
    bool twisted = false;

    friend bool operator==(const LeviBlock &, const LeviBlock &) = default;
};

// (g_1, ..., g_r, h): GL blocks followed by the anchor occupying the last
// anchor_size coordinates.
struct LeviTuple {
    std::vector<LeviBlock> blocks;
    std::string anchor;
    int anchor_size = 0;

    int n() const;
    std::string to_string() const;

    friend bool operator==(const LeviTuple &, const LeviTuple &) = default;
};

// w . (g_1, ..., g_r, h). Each block must be carried either order-preserving
// with positive signs, or order-reversing with negative signs (then it is
// dualized, and twisted in GU mode); the anchor coordinates must be fixed.
// Zero-size blocks are dropped. Throws IncompatibleLevi.
LeviTuple levi_action(const SignedPermutation &w, const LeviTuple &tuple, GroupMode mode);

} // namespace jacquet
