#include "slicealg/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>

namespace slicealg {

namespace {

size_t mul_index(int d, int i, int j, int k) {
    return (static_cast<size_t>(i) * d + j) * d + k;
}

// Associator of basis vectors computed from the table via sparse rows.
std::vector<double> basis_associator(const AlgebraSpec& s, int i, int j, int k) {
    const int d = s.dim();
    std::vector<double> out(static_cast<size_t>(d), 0.0);
    for (const auto& e : s.basis_product(i, j))       // (e_i e_j) e_k
        for (const auto& f : s.basis_product(e.k, k)) out[f.k] += e.c * f.c;
    for (const auto& e : s.basis_product(j, k))       // e_i (e_j e_k)
        for (const auto& f : s.basis_product(i, e.k)) out[f.k] -= e.c * f.c;
    return out;
}

bool exactly_zero(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

struct TripleSource {
    // Exhaustive triples up to dim 64; 10^4 deterministic random triples above.
    std::vector<std::array<int, 3>> triples;
    explicit TripleSource(int d) {
        if (d <= 64) {
            triples.reserve(static_cast<size_t>(d) * d * d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < d; ++k) triples.push_back({i, j, k});
        } else {
            std::mt19937_64 rng(0x51a9u);
            std::uniform_int_distribution<int> pick(0, d - 1);
            for (int t = 0; t < 10000; ++t) triples.push_back({pick(rng), pick(rng), pick(rng)});
        }
    }
};

}  // namespace

std::string ValidationReport::to_string() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (const auto& f : failures) os << f << '\n';
    return os.str();
}

AlgebraPtr AlgebraSpec::create(std::string name, int dim, std::vector<std::string> basis,
                               std::vector<double> mul_table, std::vector<double> conj_matrix,
                               bool validate) {
    if (dim < 1) throw ValidationFailure("algebra dimension must be >= 1");
    const auto d = static_cast<size_t>(dim);
    if (basis.size() != d) throw ValidationFailure("basis label count does not match dim");
    if (mul_table.size() != d * d * d) throw ValidationFailure("mul_table must have dim^3 entries");
    if (conj_matrix.size() != d * d) throw ValidationFailure("conj matrix must have dim^2 entries");

    auto spec = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
    spec->dim_ = dim;
    spec->name_ = std::move(name);
    spec->basis_ = std::move(basis);
    spec->mul_ = std::move(mul_table);
    spec->conj_ = std::move(conj_matrix);

    spec->sparse_.resize(d * d);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            auto& row = spec->sparse_[static_cast<size_t>(i) * dim + j];
            for (int k = 0; k < dim; ++k) {
                const double c = spec->mul_coeff(i, j, k);
                if (c != 0.0) row.push_back({k, c});
            }
        }

    if (validate) {
        ValidationReport report = validate_algebra(*spec);
        if (!report.ok())
            throw ValidationFailure("algebra '" + spec->name_ + "' failed validation:\n" +
                                    report.to_string());
    }

    spec->associative_ = [&spec, dim] {
        TripleSource src(dim);
        for (const auto& [i, j, k] : src.triples)
            if (!exactly_zero(basis_associator(*spec, i, j, k))) return false;
        return true;
    }();
    return spec;
}

ValidationReport validate_algebra(const AlgebraSpec& s) {
    ValidationReport report;
    const int d = s.dim();

    // Unity: e_0 x = x e_0 = x on the table.
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            const double want = (j == k) ? 1.0 : 0.0;
            if (s.mul_coeff(0, j, k) != want || s.mul_coeff(j, 0, k) != want) {
                report.failures.push_back("unity fails at basis index " + std::to_string(j));
                break;
            }
        }

    // Involution: conj^2 = id, conj(e_0) = e_0.
    for (int k = 0; k < d; ++k) {
        if (s.conj_coeff(k, 0) != (k == 0 ? 1.0 : 0.0)) {
            report.failures.push_back("conj does not fix the unity");
            break;
        }
    }
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            double acc = 0.0;
            for (int j = 0; j < d; ++j) acc += s.conj_coeff(k, j) * s.conj_coeff(j, i);
            if (acc != (i == k ? 1.0 : 0.0)) {
                report.failures.push_back("conj is not an involution at basis index " +
                                          std::to_string(i));
                i = d;
                break;
            }
        }

    // Antiautomorphism: conj(e_i e_j) = conj(e_j) conj(e_i) for all pairs.
    for (int i = 0; i < d && report.failures.size() < 64; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<double> lhs(static_cast<size_t>(d), 0.0), rhs(static_cast<size_t>(d), 0.0);
            for (const auto& e : s.basis_product(i, j))
                for (int k = 0; k < d; ++k) lhs[k] += e.c * s.conj_coeff(k, e.k);
            for (int a = 0; a < d; ++a) {
                const double ca = s.conj_coeff(a, j);
                if (ca == 0.0) continue;
                for (int b = 0; b < d; ++b) {
                    const double cb = s.conj_coeff(b, i);
                    if (cb == 0.0) continue;
                    for (const auto& e : s.basis_product(a, b)) rhs[e.k] += ca * cb * e.c;
                }
            }
            if (lhs != rhs) {
                report.failures.push_back("antiautomorphism fails at basis pair (" +
                                          std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }

    // Alternativity: the associator must be antisymmetric under swapping any two
    // arguments (the polarized form of (x,x,y) = (y,x,x) = 0). Checked on basis
    // triples; bilinearity extends it to the whole algebra.
    {
        TripleSource src(d);
        size_t reported = 0;
        for (const auto& [i, j, k] : src.triples) {
            auto a = basis_associator(s, i, j, k);
            auto b = basis_associator(s, j, i, k);
            auto c = basis_associator(s, i, k, j);
            bool bad = false;
            for (int t = 0; t < d; ++t)
                if (a[t] + b[t] != 0.0 || a[t] + c[t] != 0.0) bad = true;
            if (bad && reported < 16) {
                report.failures.push_back("alternativity fails at basis triple (" +
                                          std::to_string(i) + ", " + std::to_string(j) + ", " +
                                          std::to_string(k) + ")");
                ++reported;
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Built-in algebras

namespace {

struct Table {
    int dim;
    std::vector<std::string> basis;
    std::vector<double> mul;
    std::vector<double> conj;
};

Table reals_table() {
    return {1, {"1"}, {1.0}, {1.0}};
}

Table complexes_table() {
    Table t;
    t.dim = 2;
    t.basis = {"1", "i"};
    t.mul.assign(8, 0.0);
    auto set = [&](int i, int j, int k, double v) { t.mul[mul_index(2, i, j, k)] = v; };
    set(0, 0, 0, 1);
    set(0, 1, 1, 1);
    set(1, 0, 1, 1);
    set(1, 1, 0, -1);
    t.conj = {1, 0, 0, -1};
    return t;
}

// Cayley-Dickson doubling with (a,b)(c,d) = (ac - d^c b, da + b c^c) and
// conjugation (a,b)^c = (a^c, -b).
Table double_table(const Table& base) {
    const int n = base.dim;
    const int d = 2 * n;
    Table t;
    t.dim = d;
    t.mul.assign(static_cast<size_t>(d) * d * d, 0.0);
    t.conj.assign(static_cast<size_t>(d) * d, 0.0);
    auto bmul = [&](int i, int j, int k) { return base.mul[mul_index(n, i, j, k)]; };
    auto bconj = [&](int k, int j) { return base.conj[static_cast<size_t>(k) * n + j]; };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // (a,0)(c,0) = (ac, 0)
                t.mul[mul_index(d, i, j, k)] += bmul(i, j, k);
                // (a,0)(0,d): second slot d*a
                t.mul[mul_index(d, i, n + j, n + k)] += bmul(j, i, k);
                // (0,b)(c,0): second slot b*c^c
                double acc = 0.0;
                for (int m = 0; m < n; ++m) acc += bconj(m, j) * bmul(i, m, k);
                t.mul[mul_index(d, n + i, j, n + k)] += acc;
                // (0,b)(0,d): first slot -d^c b
                acc = 0.0;
                for (int m = 0; m < n; ++m) acc += bconj(m, j) * bmul(m, i, k);
                t.mul[mul_index(d, n + i, n + j, k)] -= acc;
            }

    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) t.conj[static_cast<size_t>(k) * d + j] = bconj(k, j);
    for (int k = 0; k < n; ++k) t.conj[static_cast<size_t>(n + k) * d + (n + k)] = -1.0;
    return t;
}

// Blades as sorted index subsets of {1..n}; product sign by counting the
// transpositions that merge the two index lists, with e_i^2 = -1.
struct Blade {
    uint32_t mask;
    std::vector<int> indices;  // ascending
};

int blade_grade(uint32_t m) { return __builtin_popcount(m); }

std::vector<Blade> clifford_basis(int n) {
    std::vector<Blade> blades;
    for (uint32_t m = 0; m < (1u << n); ++m) {
        Blade b{m, {}};
        for (int i = 0; i < n; ++i)
            if (m & (1u << i)) b.indices.push_back(i + 1);
        blades.push_back(std::move(b));
    }
    std::sort(blades.begin(), blades.end(), [](const Blade& a, const Blade& b) {
        if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
        return a.indices < b.indices;
    });
    return blades;
}

int reorder_sign(uint32_t a, uint32_t b) {
    int swaps = 0;
    a >>= 1;
    while (a) {
        swaps += __builtin_popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

std::string blade_label(const Blade& b) {
    if (b.indices.empty()) return "1";
    std::string s = "e";
    for (int i : b.indices) s += std::to_string(i);
    return s;
}

Table clifford_table(int n) {
    auto blades = clifford_basis(n);
    const int d = static_cast<int>(blades.size());
    std::vector<int> index_of_mask(static_cast<size_t>(d), 0);
    for (int i = 0; i < d; ++i) index_of_mask[blades[i].mask] = i;

    Table t;
    t.dim = d;
    t.mul.assign(static_cast<size_t>(d) * d * d, 0.0);
    t.conj.assign(static_cast<size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) {
        t.basis.push_back(blade_label(blades[i]));
        const int g = blade_grade(blades[i].mask);
        const int csign = (((g * (g + 1)) / 2) & 1) ? -1 : 1;  // (-1)^(g(g+1)/2)
        t.conj[static_cast<size_t>(i) * d + i] = csign;
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const uint32_t ma = blades[i].mask, mb = blades[j].mask;
            int sign = reorder_sign(ma, mb);
            if (blade_grade(ma & mb) & 1) sign = -sign;  // each repeated e_i gives -1
            t.mul[mul_index(d, i, j, index_of_mask[ma ^ mb])] = sign;
        }
    return t;
}

AlgebraPtr from_table(std::string name, Table t) {
    return AlgebraSpec::create(std::move(name), t.dim, std::move(t.basis), std::move(t.mul),
                               std::move(t.conj));
}

}  // namespace

AlgebraPtr make_builtin(Builtin kind) {
    switch (kind) {
        case Builtin::reals:
            return from_table("reals", reals_table());
        case Builtin::complexes:
            return from_table("complexes", complexes_table());
        case Builtin::quaternions: {
            Table t = double_table(complexes_table());
            t.basis = {"1", "i", "j", "k"};
            return from_table("quaternions", std::move(t));
        }
        case Builtin::octonions: {
            Table q = double_table(complexes_table());
            Table t = double_table(q);
            t.basis = {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
            return from_table("octonions", std::move(t));
        }
    }
    throw Error("unknown builtin algebra");
}

AlgebraPtr make_clifford(int n, int cap) {
    if (n < 1 || n > cap)
        throw Error("clifford(n) requires 1 <= n <= " + std::to_string(cap));
    Table t = clifford_table(n);
    return from_table("clifford" + std::to_string(n), std::move(t));
}

AlgebraPtr make_builtin_named(const std::string& kind) {
    if (kind == "reals") return make_builtin(Builtin::reals);
    if (kind == "complexes") return make_builtin(Builtin::complexes);
    if (kind == "quaternions") return make_builtin(Builtin::quaternions);
    if (kind == "octonions") return make_builtin(Builtin::octonions);
    if (kind.rfind("clifford", 0) == 0) {
        std::string rest = kind.substr(8);
        if (!rest.empty() && rest.front() == '(') rest = rest.substr(1);
        if (!rest.empty() && rest.back() == ')') rest.pop_back();
        try {
            return make_clifford(std::stoi(rest));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw Error("unknown algebra '" + kind + "'");
}

AlgebraPtr make_custom(std::string name, int dim, std::vector<std::string> basis_labels,
                       std::vector<double> mul_table, std::vector<double> conj_matrix) {
    return AlgebraSpec::create(std::move(name), dim, std::move(basis_labels), std::move(mul_table),
                               std::move(conj_matrix));
}

// ---------------------------------------------------------------------------
// Element arithmetic

Element::Element(AlgebraPtr algebra, std::vector<double> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (!algebra_) throw Error("element requires an algebra");
    if (static_cast<int>(coords_.size()) != algebra_->dim())
        throw Error("coordinate count does not match algebra dimension");
}

Element Element::zero(const AlgebraPtr& a) {
    return Element(a, std::vector<double>(static_cast<size_t>(a->dim()), 0.0));
}

Element Element::scalar(const AlgebraPtr& a, double value) {
    Element e = zero(a);
    e[0] = value;
    return e;
}

Element Element::basis(const AlgebraPtr& a, int k) {
    Element e = zero(a);
    e[k] = 1.0;
    return e;
}

double Element::inf_norm() const {
    double m = 0.0;
    for (double c : coords_) m = std::max(m, std::abs(c));
    return m;
}

bool Element::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

void require_same_algebra(const Element& a, const Element& b) {
    if (a.algebra() != b.algebra()) throw AlgebraMismatch();
}

Element operator+(const Element& a, const Element& b) {
    require_same_algebra(a, b);
    std::vector<double> c(a.coords());
    for (int k = 0; k < a.dim(); ++k) c[k] += b[k];
    return Element(a.algebra(), std::move(c));
}

Element operator-(const Element& a, const Element& b) {
    require_same_algebra(a, b);
    std::vector<double> c(a.coords());
    for (int k = 0; k < a.dim(); ++k) c[k] -= b[k];
    return Element(a.algebra(), std::move(c));
}

Element operator-(const Element& a) {
    std::vector<double> c(a.coords());
    for (double& v : c) v = -v;
    return Element(a.algebra(), std::move(c));
}

Element operator*(const Element& a, double s) {
    std::vector<double> c(a.coords());
    for (double& v : c) v *= s;
    return Element(a.algebra(), std::move(c));
}

Element operator*(double s, const Element& a) { return a * s; }

Element& operator+=(Element& a, const Element& b) {
    require_same_algebra(a, b);
    for (int k = 0; k < a.dim(); ++k) a[k] += b[k];
    return a;
}

Element& operator-=(Element& a, const Element& b) {
    require_same_algebra(a, b);
    for (int k = 0; k < a.dim(); ++k) a[k] -= b[k];
    return a;
}

Element mul(const Element& a, const Element& b) {
    require_same_algebra(a, b);
    const AlgebraSpec& s = *a.algebra();
    const int d = s.dim();
    std::vector<double> out(static_cast<size_t>(d), 0.0);
    for (int i = 0; i < d; ++i) {
        const double ai = a[i];
        if (ai == 0.0) continue;
        for (int j = 0; j < d; ++j) {
            const double p = ai * b[j];
            if (p == 0.0) continue;
            for (const auto& e : s.basis_product(i, j)) out[e.k] += p * e.c;
        }
    }
    return Element(a.algebra(), std::move(out));
}

Element conj(const Element& x) {
    const AlgebraSpec& s = *x.algebra();
    const int d = s.dim();
    std::vector<double> out(static_cast<size_t>(d), 0.0);
    for (int k = 0; k < d; ++k) {
        double acc = 0.0;
        for (int j = 0; j < d; ++j) acc += s.conj_coeff(k, j) * x[j];
        out[k] = acc;
    }
    return Element(x.algebra(), std::move(out));
}

Element trace(const Element& x) { return x + conj(x); }

Element norm_elem(const Element& x) { return mul(x, conj(x)); }

bool is_real(const Element& x, double tol) {
    const double bound = tol * (1.0 + x.inf_norm());
    for (int k = 1; k < x.dim(); ++k)
        if (std::abs(x[k]) > bound) return false;
    return true;
}

double real_part_scalar(const Element& x) { return x[0]; }

bool in_normal_cone(const Element& x, double tol) {
    const double scale = 1.0 + x.inf_norm();
    if (x.inf_norm() <= tol) return true;  // the cone contains 0
    const Element n = norm_elem(x);
    if (!is_real(n, tol)) return false;
    const double n0 = n[0];
    if (std::abs(n0) <= tol * scale * scale) return false;  // "nonzero real"
    const Element nc = mul(conj(x), x);  // n(x^c)
    if (!is_real(nc, tol)) return false;
    return std::abs(n0 - nc[0]) <= tol * scale * scale;
}

bool in_quadratic_cone(const Element& x, double tol) {
    if (is_real(x, tol)) return true;
    const Element t = trace(x);
    if (!is_real(t, tol)) return false;
    const Element n = norm_elem(x);
    if (!is_real(n, tol)) return false;
    const double scale = 1.0 + x.inf_norm();
    // Strict inequality up to the tolerance scale; genuine boundary points are
    // only admitted through the explicit "x real" clause above.
    return 4.0 * n[0] - t[0] * t[0] > -tol * scale * scale;
}

bool is_sqrt_minus_one(const Element& x, double tol) {
    const double scale = 1.0 + x.inf_norm();
    const Element t = trace(x);
    if (t.inf_norm() > tol * scale) return false;
    Element n = norm_elem(x);
    n[0] -= 1.0;
    return n.inf_norm() <= tol * scale * scale;
}

Decomposition decompose(const Element& x, double tol) {
    if (!in_quadratic_cone(x, tol)) throw NotInQuadraticCone();
    const Element xc = conj(x);
    const double alpha = 0.5 * (x[0] + xc[0]);
    return {alpha, (x - xc) * 0.5};
}

SliceCoords slice_coords(const Element& x, double tol) {
    Decomposition dec = decompose(x, tol);
    const Element n = norm_elem(dec.imaginary);
    const double beta = std::sqrt(std::max(n[0], 0.0));
    if (beta <= tol * (1.0 + x.inf_norm())) return {dec.real_part, 0.0, std::nullopt};
    return {dec.real_part, beta, dec.imaginary * (1.0 / beta)};
}

Element inverse(const Element& x, double tol) {
    if (x.is_zero()) throw Singular("zero element has no inverse");
    if (in_normal_cone(x, tol)) {
        const double n0 = norm_elem(x)[0];
        return conj(x) * (1.0 / n0);
    }
    // Fall back to the left-multiplication system L_x v = e_0 and verify both
    // sides; the closed form is only guaranteed on the normal cone.
    const int d = x.dim();
    std::vector<double> lx(static_cast<size_t>(d) * d, 0.0);
    for (int j = 0; j < d; ++j) {
        const Element col = mul(x, Element::basis(x.algebra(), j));
        for (int k = 0; k < d; ++k) lx[static_cast<size_t>(k) * d + j] = col[k];
    }
    std::vector<double> rhs(static_cast<size_t>(d), 0.0);
    rhs[0] = 1.0;
    auto sol = detail::solve_linear(std::move(lx), std::move(rhs));
    if (!sol) throw Singular();
    Element v(x.algebra(), std::move(*sol));
    const double scale = (1.0 + x.inf_norm()) * (1.0 + v.inf_norm());
    Element left = mul(x, v), right = mul(v, x);
    left[0] -= 1.0;
    right[0] -= 1.0;
    if (left.inf_norm() > tol * scale || right.inf_norm() > tol * scale)
        throw Singular("linear solve produced no two-sided inverse");
    return v;
}

Element associator(const Element& x, const Element& y, const Element& z) {
    return mul(mul(x, y), z) - mul(x, mul(y, z));
}

bool subspace_in_normal_cone(std::span<const Element> spanning, double tol) {
    for (size_t i = 0; i < spanning.size(); ++i) {
        for (size_t j = i; j < spanning.size(); ++j) {
            const Element& a = spanning[i];
            const Element& b = spanning[j];
            // Comparisons are relative to the input magnitudes: the polarized
            // products are quadratic in them, and their imaginary junk must be
            // judged on that scale, not on their own (possibly tiny) size.
            const double scale = (1.0 + a.inf_norm()) * (1.0 + b.inf_norm());
            const Element p = mul(a, conj(b)) + mul(b, conj(a));
            for (int k = 1; k < p.dim(); ++k)
                if (std::abs(p[k]) > tol * scale) return false;
            const Element q = mul(conj(a), b) + mul(conj(b), a);
            if ((p - q).inf_norm() > tol * scale) return false;
        }
    }
    return true;
}

HypothesisReport check_real_norm_symmetric(const AlgebraPtr& a, size_t samples, double tol,
                                           unsigned seed) {
    HypothesisReport rep;
    rep.samples = samples;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (size_t s = 0; s < samples; ++s) {
        std::vector<double> c(static_cast<size_t>(a->dim()));
        for (double& v : c) v = u(rng);
        Element x(a, std::move(c));
        const Element n = norm_elem(x);
        if (!is_real(n, tol)) continue;
        ++rep.real_norm_cases;
        const Element nc = mul(conj(x), x);
        const double scale = (1.0 + x.inf_norm()) * (1.0 + x.inf_norm());
        if (!is_real(nc, tol) || std::abs(n[0] - nc[0]) > tol * scale ||
            std::abs(n[0]) <= tol * scale)
            ++rep.violations;
    }
    return rep;
}

namespace detail {

std::optional<std::vector<double>> solve_linear(std::vector<double> a, std::vector<double> b) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        if (std::abs(a[piv * n + col]) < 1e-300) return std::nullopt;
        if (piv != col) {
            for (size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[col * n + k]);
            std::swap(b[piv], b[col]);
        }
        const double inv = 1.0 / a[col * n + col];
        for (size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] * inv;
            if (f == 0.0) continue;
            for (size_t k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (size_t r = n; r-- > 0;) {
        double acc = b[r];
        for (size_t k = r + 1; k < n; ++k) acc -= a[r * n + k] * x[k];
        x[r] = acc / a[r * n + r];
    }
    return x;
}

}  // namespace detail

}  // namespace slicealg
