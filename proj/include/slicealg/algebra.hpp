#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slicealg/errors.hpp"

namespace slicealg {

inline constexpr double kDefaultTol = 1e-9;

class AlgebraSpec;
using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

/// A finite-dimensional real algebra with unity given by structure constants,
/// together with a fixed antiinvolution x -> x^c. Immutable once constructed;
/// instances are shared by pointer and may be used from any thread.
class AlgebraSpec {
public:
    /// Structure constant c[i][j][k]: (e_i e_j) = sum_k c[i][j][k] e_k.
    double mul_coeff(int i, int j, int k) const { return mul_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }
    /// Antiinvolution in basis coordinates: (x^c)_k = sum_j conj_coeff(k, j) x_j.
    double conj_coeff(int k, int j) const { return conj_[static_cast<size_t>(k) * dim_ + j]; }

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis_labels() const { return basis_; }
    const std::vector<double>& mul_table() const { return mul_; }
    const std::vector<double>& conj_matrix() const { return conj_; }

    /// True when every basis triple associates exactly (checked at construction,
    /// exhaustively up to dim 64, on 10^4 sampled triples above).
    bool is_associative() const { return associative_; }

    struct SparseEntry {
        int k;
        double c;
    };
    /// Non-zero products of basis pairs, for the multiplication kernel.
    std::span<const SparseEntry> basis_product(int i, int j) const {
        const auto& row = sparse_[static_cast<size_t>(i) * dim_ + j];
        return {row.data(), row.size()};
    }

    static AlgebraPtr create(std::string name, int dim, std::vector<std::string> basis,
                             std::vector<double> mul_table, std::vector<double> conj_matrix,
                             bool validate = true);

private:
    AlgebraSpec() = default;

    int dim_ = 0;
    std::string name_;
    std::vector<std::string> basis_;
    std::vector<double> mul_;   // dim^3, row-major (i, j, k)
    std::vector<double> conj_;  // dim^2, row-major (k, j)
    std::vector<std::vector<SparseEntry>> sparse_;
    bool associative_ = false;
};

/// Outcome of the structural checks on an algebra table. Empty = valid.
struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    std::string to_string() const;
};

enum class Builtin { reals, complexes, quaternions, octonions };

/// Standard algebras. Quaternions and octonions are produced by doubling
/// (a,b)(c,d) = (ac - d*b, da + bc*), conjugation (a,b)^c = (a^c, -b), starting
/// from the complexes; with the resulting labels, e1*e2 = e3 in the octonions.
AlgebraPtr make_builtin(Builtin kind);

/// Clifford algebra Cl(0,n): basis blades indexed by subsets of {1..n} ordered
/// by (grade, lexicographic), e_i^2 = -1, Clifford conjugation with grade signs
/// (-1)^(k(k+1)/2). The cap bounds the dimension 2^n.
AlgebraPtr make_clifford(int n, int cap = 6);

/// Parse "reals", "complexes", "quaternions", "octonions", "clifford<N>" or
/// "clifford(<N>)".
AlgebraPtr make_builtin_named(const std::string& kind);

/// Builds and validates a user-supplied table; throws ValidationFailure with
/// the full report if any invariant fails.
AlgebraPtr make_custom(std::string name, int dim, std::vector<std::string> basis_labels,
                       std::vector<double> mul_table, std::vector<double> conj_matrix);

/// Runs every structural check: unity, involution, antiautomorphism,
/// alternativity (associator antisymmetry over basis triples).
ValidationReport validate_algebra(const AlgebraSpec& spec);

/// Coordinate vector in a fixed AlgebraSpec basis; the value type for all of A.
class Element {
public:
    Element(AlgebraPtr algebra, std::vector<double> coords);

    static Element zero(const AlgebraPtr& a);
    static Element scalar(const AlgebraPtr& a, double value);
    static Element basis(const AlgebraPtr& a, int k);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<double>& coords() const { return coords_; }
    double operator[](int k) const { return coords_[static_cast<size_t>(k)]; }
    double& operator[](int k) { return coords_[static_cast<size_t>(k)]; }
    int dim() const { return static_cast<int>(coords_.size()); }

    double inf_norm() const;
    bool is_zero() const;  // exact

private:
    AlgebraPtr algebra_;
    std::vector<double> coords_;
};

void require_same_algebra(const Element& a, const Element& b);

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(const Element& a, double s);
Element operator*(double s, const Element& a);
Element& operator+=(Element& a, const Element& b);
Element& operator-=(Element& a, const Element& b);

/// Structure-constant bilinear product.
Element mul(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }

Element conj(const Element& x);
/// t(x) = x + x^c (not assumed real).
Element trace(const Element& x);
/// n(x) = x x^c (not assumed real).
Element norm_elem(const Element& x);

/// Membership in R*e0: all non-unity coordinates below tol*(1 + |x|_inf).
bool is_real(const Element& x, double tol = kDefaultTol);
double real_part_scalar(const Element& x);

/// x = 0, or n(x) = n(x^c) is a nonzero real (within tol).
bool in_normal_cone(const Element& x, double tol = kDefaultTol);

/// x real, or t(x) and n(x) real with 4 n(x) > t(x)^2.
bool in_quadratic_cone(const Element& x, double tol = kDefaultTol);

/// t(J) = 0 and n(J) = 1, i.e. J is a square root of -1 in the quadratic cone.
bool is_sqrt_minus_one(const Element& x, double tol = kDefaultTol);

struct Decomposition {
    double real_part;   // t(x)/2
    Element imaginary;  // (x - x^c)/2, trace-free
};
/// Splits x in the quadratic cone as x = alpha + im.
Decomposition decompose(const Element& x, double tol = kDefaultTol);

struct SliceCoords {
    double alpha = 0.0;
    double beta = 0.0;                  // sqrt(n(im)), >= 0
    std::optional<Element> unit;        // J = im/beta; empty when x is real
};
/// x = alpha + beta*J with J a square root of -1 (J absent for real x).
SliceCoords slice_coords(const Element& x, double tol = kDefaultTol);

/// x^c / n(x) on the normal cone; otherwise solves the left-multiplication
/// system and verifies x v = v x = 1 within tol.
Element inverse(const Element& x, double tol = kDefaultTol);

/// (xy)z - x(yz).
Element associator(const Element& x, const Element& y, const Element& z);

/// True iff the span of the inputs lies in the normal cone (plus 0), via the
/// polarized pairwise test: b_i b_j^c + b_j b_i^c real and equal to
/// b_i^c b_j + b_j^c b_i. The "nonzero norm" clause of the cone is waived on a
/// subspace, which is the correct reading for admissibility checks.
bool subspace_in_normal_cone(std::span<const Element> spanning, double tol = kDefaultTol);

struct HypothesisReport {
    size_t samples = 0;
    size_t real_norm_cases = 0;  // samples where n(x) came out real
    size_t violations = 0;       // among those, n(x) != n(x^c) or n(x) == 0
    bool ok() const { return violations == 0; }
};
/// Sample test of the hypothesis "n(x) real implies n(x) = n(x^c) != 0" used by
/// the admissibility-multiplicativity results. Probabilistic: a clean report is
/// evidence, not proof.
HypothesisReport check_real_norm_symmetric(const AlgebraPtr& a, size_t samples,
                                           double tol = kDefaultTol, unsigned seed = 2026);

namespace detail {
/// Gaussian elimination with partial pivoting; A is n x n row-major.
std::optional<std::vector<double>> solve_linear(std::vector<double> a, std::vector<double> b);
}  // namespace detail

}  // namespace slicealg
