#pragma once

#include <utility>

#include "slicealg/slicefn.hpp"

namespace slicealg {

/// Quadrature description for Cauchy-type integrals on a slice plane: J picks
/// the plane, the domain is a disk or a conjugate pair of disks, and the node
/// counts control the boundary trapezoid rule and the polar area grid.
struct ContourSpec {
    Element J;
    DomainDescriptor domain;
    int n_boundary = 256;
    int n_radial = 64;
    int n_angular = 128;
};

/// The slice-regular Cauchy kernel: the slice function of x induced by the
/// stem -(z - y^c) / Delta_y(z), i.e. the slice-product inverse of (y - x).
/// On a common slice it reduces to the pointwise (y - x)^{-1}. Throws
/// OnSingularSphere when x lies on the sphere through y.
Element cauchy_kernel(const Element& x, const Element& y, double tol = kDefaultTol);

/// Reconstructs a slice regular f at x from boundary values on the contour's
/// slice plane:  (1/2pi) \int C_A(x,y) J^{-1} dy f(y), trapezoid rule per
/// circle, products grouped left-to-right exactly as displayed. For a
/// non-associative algebra, x must lie on the slice plane unless f is real.
Element cauchy_boundary(const SliceFunction& f, const ContourSpec& contour, const Element& x,
                        double tol = kDefaultTol);

/// C^1 reconstruction: the boundary term plus the area correction
/// -(1/2pi) \int C_A(x,y) J^{-1} (dy^c ^ dy) df/dy^c, with dy^c ^ dy = 2J dA on
/// the slice plane. The area integrand has a pole where y meets the sphere of
/// x; it is integrated in polar coordinates centred on the singular parameter
/// (where the Jacobian cancels the pole), and off-slice points are assembled
/// from the two on-slice evaluations by the representation formula, mirroring
/// how the formula itself extends off the slice.
Element cauchy_pompeiu(const SliceFunction& f, const ContourSpec& contour, const Element& x,
                       double tol = kDefaultTol);

/// Boundary reconstruction at x computed directly versus assembled, via the
/// representation formula, from values at alpha + beta J and alpha + beta K.
/// Returns (direct, assembled) for test assertions.
std::pair<Element, Element> representation_via_kernel_check(const SliceFunction& f,
                                                            const ContourSpec& contour,
                                                            const Element& K, const Element& x,
                                                            double tol = kDefaultTol);

namespace detail {
/// Gauss-Legendre nodes and weights on [0, 1].
void gauss_legendre01(int n, std::vector<double>& nodes, std::vector<double>& weights);
/// Fixed-order pairwise summation for reproducible accumulation.
Element pairwise_sum(std::vector<Element>& terms, const AlgebraPtr& a);
}  // namespace detail

}  // namespace slicealg
