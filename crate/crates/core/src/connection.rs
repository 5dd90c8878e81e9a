//! Levi-Civita connection of a left-invariant structure in the frame `X₁, X₂`.
//!
//! Because the metric has constant components in this frame, covariant
//! derivatives of frame fields are constant linear combinations of the frame,
//! and the curvature tensor reduces to algebra on 2×2 coefficient tables.

use crate::group::TangentVector;
use crate::problem::Problem;

/// `D_{Xᵢ}Xⱼ = mu[i][j]·X₁ + nu[i][j]·X₂`, indices from zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectionCoefficients {
    pub mu: [[f64; 2]; 2],
    pub nu: [[f64; 2]; 2],
}

impl ConnectionCoefficients {
    /// `D_{Xᵢ}Xⱼ` as a frame vector.
    pub fn frame_derivative(&self, i: usize, j: usize) -> TangentVector {
        TangentVector::new(self.mu[i][j], self.nu[i][j])
    }

    /// `D_U V` for constant-coefficient fields `U`, `V`.
    pub fn derivative(&self, u: &TangentVector, v: &TangentVector) -> TangentVector {
        let uc = [u.u1, u.u2];
        let vc = [v.u1, v.u2];
        let mut out = TangentVector::default();
        for (i, ui) in uc.iter().enumerate() {
            for (j, vj) in vc.iter().enumerate() {
                let w = ui * vj;
                out.u1 += w * self.mu[i][j];
                out.u2 += w * self.nu[i][j];
            }
        }
        out
    }

    /// `D_{X₂}X₁ − D_{X₁}X₂ − [X₂, X₁]`; vanishes for a torsion-free connection.
    pub fn torsion_defect(&self) -> (f64, f64) {
        (
            self.mu[1][0] - self.mu[0][1] - 1.0,
            self.nu[1][0] - self.nu[0][1],
        )
    }
}

/// Lie bracket of constant-coefficient left-invariant fields, `[X₁, X₂] = −X₁`.
pub fn frame_bracket(u: &TangentVector, v: &TangentVector) -> TangentVector {
    TangentVector::new(-(u.u1 * v.u2 - u.u2 * v.u1), 0.0)
}

pub fn levi_civita(spec: &Problem) -> ConnectionCoefficients {
    let (g11, g12, g22) = spec.metric();
    let s = -1.0 / (spec.det() * spec.det());
    ConnectionCoefficients {
        mu: [
            [s * (-g12 * g11), s * (-g22 * g11)],
            [s * (-g12 * g12), s * (-g22 * g12)],
        ],
        nu: [
            [s * (g11 * g11), s * (g12 * g11)],
            [s * (g11 * g12), s * (g12 * g12)],
        ],
    }
}

/// `R_{XY}Z = D_{[X,Y]}Z − D_X D_Y Z + D_Y D_X Z` on constant frame fields.
pub fn curvature_tensor(
    conn: &ConnectionCoefficients,
    x: &TangentVector,
    y: &TangentVector,
    z: &TangentVector,
) -> TangentVector {
    let a = conn.derivative(&frame_bracket(x, y), z);
    let b = conn.derivative(x, &conn.derivative(y, z));
    let c = conn.derivative(y, &conn.derivative(x, z));
    TangentVector::new(a.u1 - b.u1 + c.u1, a.u2 - b.u2 + c.u2)
}

/// Sectional curvature `g(R_{X₁X₂}X₁, X₂) / (g₁₁g₂₂ − g₁₂²)` computed from the
/// connection alone, an independent check of the closed form `(c² − a²)/det²`.
pub fn sectional_curvature_numeric(spec: &Problem) -> f64 {
    let conn = levi_civita(spec);
    let e1 = TangentVector::new(1.0, 0.0);
    let e2 = TangentVector::new(0.0, 1.0);
    let r = curvature_tensor(&conn, &e1, &e2, &e1);
    let (g11, g12, g22) = spec.metric();
    spec.inner(&r, &e2) / (g11 * g22 - g12 * g12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::{make_problem, Preset};

    #[test]
    fn anti_de_sitter_coefficients() {
        let c = levi_civita(&Preset::P1.problem());
        assert_eq!((c.mu[0][0], c.nu[0][0]), (0.0, -1.0));
        assert_eq!((c.mu[0][1], c.nu[0][1]), (-1.0, 0.0));
        assert_eq!((c.mu[1][0], c.nu[1][0]), (0.0, 0.0));
        assert_eq!((c.mu[1][1], c.nu[1][1]), (0.0, 0.0));
    }

    #[test]
    fn de_sitter_coefficients() {
        let c = levi_civita(&Preset::P2.problem());
        assert_eq!((c.mu[0][0], c.nu[0][0]), (0.0, -1.0));
        assert_eq!((c.mu[1][0], c.nu[1][0]), (0.0, 0.0));
    }

    #[test]
    fn torsion_free_and_metric() {
        for m in [(1.0, 0.0, 0.0, 1.0), (0.3, -1.2, 0.8, 2.0), (2.0, 1.0, -2.0, 0.5)] {
            let p = make_problem(m.0, m.1, m.2, m.3).unwrap();
            let c = levi_civita(&p);
            let (t1, t2) = c.torsion_defect();
            assert!(t1.abs() < 1e-10 && t2.abs() < 1e-10);
            let e = [TangentVector::new(1.0, 0.0), TangentVector::new(0.0, 1.0)];
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        let s = p.inner(&c.frame_derivative(i, j), &e[k])
                            + p.inner(&e[j], &c.frame_derivative(i, k));
                        assert!(s.abs() < 1e-10, "{i}{j}{k}: {s}");
                    }
                }
            }
        }
    }

    #[test]
    fn preset_curvatures() {
        assert!((sectional_curvature_numeric(&Preset::P1.problem()) + 1.0).abs() < 1e-12);
        assert!((sectional_curvature_numeric(&Preset::P2.problem()) - 1.0).abs() < 1e-12);
        assert!(sectional_curvature_numeric(&Preset::P3.problem()).abs() < 1e-12);
    }
}
