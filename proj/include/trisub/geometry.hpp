#pragma once

#include <array>
#include <utility>

#include "trisub/derive.hpp"

namespace trisub {

// Structure coefficients c_{ij}^k of a 3-frame: [e_i, e_j] = sum_k c_{ij}^k e_k,
// antisymmetric in (i, j). Indices are 1-based frame labels.
class FrameAlgebra {
public:
    FrameAlgebra();  // all brackets zero

    // The adapted frame of a Riemannian submersion from a 3-manifold:
    // [e1,e3] = k1 e3, [e2,e3] = k2 e3, [e1,e2] = f1 e1 + f2 e2 - 2 sigma e3.
    static FrameAlgebra standard();
    // Same frame after choosing k2 = 0.
    static FrameAlgebra standard_k2_zero();

    // Sets c_{ij}^k and c_{ji}^k = -c_{ij}^k.
    void set_bracket(int i, int j, int k, Poly value);
    const Poly& coeff(int i, int j, int k) const { return c_[i - 1][j - 1][k - 1]; }

private:
    std::array<std::array<std::array<Poly, 3>, 3>, 3> c_;
};

// Levi-Civita connection in an orthonormal frame: gamma(i,j,k) is the
// coefficient of e_k in nabla_{e_i} e_j.
class ConnectionTable {
public:
    const Poly& gamma(int i, int j, int k) const { return g_[i - 1][j - 1][k - 1]; }
    Poly& gamma(int i, int j, int k) { return g_[i - 1][j - 1][k - 1]; }
    std::array<Poly, 3> entry(int i, int j) const {
        return {gamma(i, j, 1), gamma(i, j, 2), gamma(i, j, 3)};
    }

private:
    std::array<std::array<std::array<Poly, 3>, 3>, 3> g_;
};

// Koszul formula for an orthonormal frame: gamma_{ij}^k =
// (c_{ij}^k - c_{ik}^j - c_{jk}^i) / 2. Metric-compatible and torsion-free by
// construction.
ConnectionTable koszul_connection(const FrameAlgebra& fa);

// A vector field along the submersion, in components on the target frame
// (eps1, eps2).
struct Section {
    Poly c1;
    Poly c2;

    bool operator==(const Section&) const = default;
    bool is_zero() const { return c1.is_zero() && c2.is_zero(); }
};

// R(e_i, e_j) e_k as frame components, with R(U,W) = nabla_U nabla_W -
// nabla_W nabla_U - nabla_{[U,W]}.
std::array<Poly, 3> curvature_vector(const ConnectionTable& conn, const FrameAlgebra& fa, int i,
                                     int j, int k,
                                     const RewriteSystem& rules = RewriteSystem::generic());

// Component R_{ijkl} = <R(e_i, e_j) e_l, e_k>. The slot placement is fixed by
// requiring R_{1313} on a space form to come out as e1(k1) + sigma^2 - k1^2.
Poly curvature_component(const ConnectionTable& conn, const FrameAlgebra& fa, int i, int j, int k,
                         int l, const RewriteSystem& rules = RewriteSystem::generic());

// Drops every monomial that carries a k2 factor (the k2 = 0 frame choice) or
// a vertical derivative of the integrability data (e3 of everything vanishes
// on a space form).
Poly reduce_space_form(const Poly& p);

// The seven constraints whose simultaneous vanishing expresses constant
// sectional curvature c in the k2 = 0 adapted frame, oriented to the
// conventional presentation: e1(sigma) - 2 k1 sigma; e1(k1) + sigma^2 - k1^2
// - c; k1 f1; -(e2(f1) - e1(f2) + f1^2 + f2^2 + 3 sigma^2) - c; e2(sigma);
// e2(k1); sigma^2 - k1 f2 - c.
std::array<Poly, 7> space_form_constraints();

// Pullback connection on the target frame: entries (i, j) -> nabla^phi_{e_i} eps_j.
std::array<std::array<Section, 2>, 3> pullback_connection();

// nabla^phi_{e_i} applied to a section.
Section pullback_derivative(int i, const Section& s, const RewriteSystem& rules);

// Gaussian curvature of the target, pulled back:
// e1(f2) - e2(f1) - f1^2 - f2^2.
Poly gaussian_curvature();

// tau(phi) = -k1 eps1 - k2 eps2.
Section tension_field();

// Connection Laplacian sum_i nabla_i nabla_i s - nabla_{nabla_{e_i} e_i} s.
// Applied to the tension field it yields the second-order components (A, B).
Section rough_laplacian(const Section& s, const RewriteSystem& rules = RewriteSystem::generic());

// J(s) = rough_laplacian(s) - K^N s; the curvature trace collapses to
// multiplication by the Gaussian curvature on a surface target.
Section jacobi_operator(const Section& s, const RewriteSystem& rules = RewriteSystem::generic());

// -sum_i R^N(nabla^phi_{e_i} tau, tau) dphi(e_i), expanded through the
// surface curvature identity R^N(X,Y)Z = K^N(<Y,Z>X - <X,Z>Y).
Section tritension_correction(const RewriteSystem& rules = RewriteSystem::generic());

// The two component equations of the triharmonic condition,
// J(rough_laplacian(tau)) plus the curvature correction.
std::pair<Poly, Poly> tritension_components();

// The two component equations of the biharmonic condition with k2 = 0. The
// curvature trace enters with the opposite orientation from the triharmonic
// display; both presentations are reproduced exactly as stated.
std::pair<Poly, Poly> bitension_components();

// Substitutes k2 = 0 and e_i(k2) = 0 throughout.
std::pair<Poly, Poly> specialize_k2_zero(const std::pair<Poly, Poly>& system);
Poly specialize_k2_zero(const Poly& p);

// Renders "-k1*eps1 - k2*eps2"; multi-term components are parenthesized.
std::string render(const Section& s);

// Renders a frame vector such as "sigma*e2 - k1*e3".
std::string render_frame_vector(const std::array<Poly, 3>& v);

}  // namespace trisub
