//! Floating-point cross-check of the eigenvalue formula for type A.
//!
//! On the opposite big cell of `SL_{n}/P` a point is a unipotent lower
//! triangular matrix `s(z)` whose free entries sit at the positions of
//! `Φ_I⁺`. The norm `‖s(z) v⁺_{ϖ_k}‖²` in the k-th fundamental
//! representation `Λ^k ℂⁿ` is the sum of squared moduli of the k×k minors on
//! the first k columns, and an invariant Kähler potential is
//!
//! ```text
//! φ = Σ_α c_α (1/2π) log ‖s(z) v⁺_{ϖ_α}‖².
//! ```
//!
//! The complex Hessian `∂²φ/∂z_j∂z̄_k` at the origin is taken by central
//! finite differences and compared with the exact eigenvalues of `ω₀⁻¹ ∘ ψ`.

use nalgebra::{Complex, DMatrix};
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::flag::{InvariantClass, ParabolicFlag};
use crate::rational::Rational;
use crate::root_system::Family;

pub type C64 = Complex<f64>;

/// Default finite-difference step.
pub const DEFAULT_STEP: f64 = 1e-4;

/// Coordinates `z_β`, one per `β ∈ Φ_I⁺` in root order.
#[derive(Debug, Clone, PartialEq)]
pub struct BigCellPoint {
    pub coords: Vec<C64>,
}

impl BigCellPoint {
    pub fn new(coords: Vec<C64>) -> Self {
        BigCellPoint { coords }
    }

    pub fn origin(flag: &ParabolicFlag) -> Self {
        BigCellPoint {
            coords: vec![C64::new(0.0, 0.0); flag.dim()],
        }
    }
}

/// Coefficients `c_α` over `Δ∖I`. Kähler potentials need all `c_α > 0`;
/// signed coefficients describe differences of potentials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialSpec {
    pub coeffs: Vec<Rational>,
}

impl PotentialSpec {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        PotentialSpec { coeffs }
    }

    pub fn from_class(class: &InvariantClass) -> Self {
        PotentialSpec {
            coeffs: class.coeffs.clone(),
        }
    }

    pub fn class(&self) -> InvariantClass {
        InvariantClass::new(self.coeffs.clone(), 0)
    }

    pub fn is_kahler(&self) -> bool {
        self.coeffs.iter().all(|c| *c > Rational::from_integer(0.into()))
    }

    fn as_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

fn require_type_a(flag: &ParabolicFlag) -> Result<()> {
    let family = flag.datum().lie_type().family();
    if family == Family::A {
        Ok(())
    } else {
        Err(Error::UnsupportedType(family))
    }
}

/// Matrix position `(row, col)` of the root `α_col + … + α_{row-1}`.
fn root_position(root_coords: &[i64]) -> (usize, usize) {
    let first = root_coords.iter().position(|&c| c != 0).expect("nonzero root");
    let last = root_coords.iter().rposition(|&c| c != 0).expect("nonzero root");
    (last + 1, first)
}

/// The unipotent matrix `s(z)` representing a big-cell point.
pub fn unipotent_matrix(flag: &ParabolicFlag, point: &BigCellPoint) -> Result<DMatrix<C64>> {
    require_type_a(flag)?;
    if point.coords.len() != flag.dim() {
        return Err(Error::DimensionMismatch {
            expected: flag.dim(),
            got: point.coords.len(),
        });
    }
    let n = flag.datum().rank() + 1;
    let mut m = DMatrix::<C64>::identity(n, n);
    for (beta, z) in flag.phi_plus().zip(&point.coords) {
        let (row, col) = root_position(&beta.root_coords);
        m[(row, col)] = *z;
    }
    Ok(m)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// `‖s v⁺_{ϖ_k}‖² - 1`: the top-left minor is identically 1, so the remaining
/// minors carry all the variation and `log1p` keeps full precision near `o`.
fn excess_norm_sq(m: &DMatrix<C64>, k: usize) -> f64 {
    let n = m.nrows();
    k_subsets(n, k)
        .into_iter()
        .skip(1)
        .map(|rows| {
            let minor = DMatrix::from_fn(k, k, |i, j| m[(rows[i], j)]);
            minor.determinant().norm_sqr()
        })
        .sum()
}

fn fundamental_index(flag: &ParabolicFlag, alpha: usize) -> Result<usize> {
    flag.slot_of(alpha)?;
    Ok(alpha + 1)
}

/// `‖s(z) v⁺_{ϖ_α}‖²` for simple root `alpha` (0-based) in `Δ∖I`.
pub fn norm_sq_fundamental(flag: &ParabolicFlag, point: &BigCellPoint, alpha: usize) -> Result<f64> {
    let m = unipotent_matrix(flag, point)?;
    let k = fundamental_index(flag, alpha)?;
    Ok(1.0 + excess_norm_sq(&m, k))
}

/// `Σ_α c_α (1/2π) log ‖s(z) v⁺_{ϖ_α}‖²`.
pub fn kahler_potential(flag: &ParabolicFlag, spec: &PotentialSpec, point: &BigCellPoint) -> Result<f64> {
    let m = unipotent_matrix(flag, point)?;
    potential_from_matrix(flag, &spec.as_f64(), &m)
}

fn potential_from_matrix(flag: &ParabolicFlag, coeffs: &[f64], m: &DMatrix<C64>) -> Result<f64> {
    if coeffs.len() != flag.picard_rank() {
        return Err(Error::DimensionMismatch {
            expected: flag.picard_rank(),
            got: coeffs.len(),
        });
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    Ok(flag
        .complement()
        .iter()
        .zip(coeffs)
        .map(|(&alpha, c)| c / two_pi * excess_norm_sq(m, alpha + 1).ln_1p())
        .sum())
}

/// `∂²φ/∂z_j∂z̄_k` at the origin, before Hermitian symmetrisation.
///
/// Real coordinates are `(x_1, y_1, …, x_n, y_n)`; the real Hessian uses the
/// three-point stencil on the diagonal and the four-point mixed stencil off
/// it, then `∂²/∂z_j∂z̄_k = ¼[(∂x_j∂x_k + ∂y_j∂y_k) + i(∂x_j∂y_k − ∂y_j∂x_k)]`.
pub fn raw_form_at_origin(flag: &ParabolicFlag, spec: &PotentialSpec, step: f64) -> Result<DMatrix<C64>> {
    require_type_a(flag)?;
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidParameter(format!("step must be positive, got {step}")));
    }
    let dim = flag.dim();
    let coeffs = spec.as_f64();
    let eval = |shifts: &[(usize, f64)]| -> Result<f64> {
        let mut coords = vec![C64::new(0.0, 0.0); dim];
        for &(real_index, delta) in shifts {
            let z = &mut coords[real_index / 2];
            if real_index % 2 == 0 {
                z.re += delta;
            } else {
                z.im += delta;
            }
        }
        let m = unipotent_matrix(flag, &BigCellPoint::new(coords))?;
        potential_from_matrix(flag, &coeffs, &m)
    };

    let f0 = eval(&[])?;
    let h = step;
    let real_dim = 2 * dim;
    let mut hess = vec![vec![0.0; real_dim]; real_dim];
    for a in 0..real_dim {
        for b in 0..real_dim {
            hess[a][b] = if a == b {
                (eval(&[(a, h)])? - 2.0 * f0 + eval(&[(a, -h)])?) / (h * h)
            } else {
                (eval(&[(a, h), (b, h)])? - eval(&[(a, h), (b, -h)])? - eval(&[(a, -h), (b, h)])?
                    + eval(&[(a, -h), (b, -h)])?)
                    / (4.0 * h * h)
            };
        }
    }

    Ok(DMatrix::from_fn(dim, dim, |j, k| {
        let (xj, yj, xk, yk) = (2 * j, 2 * j + 1, 2 * k, 2 * k + 1);
        C64::new(
            0.25 * (hess[xj][xk] + hess[yj][yk]),
            0.25 * (hess[xj][yk] - hess[yj][xk]),
        )
    }))
}

/// Hermitian part `(H + H†)/2` of [`raw_form_at_origin`].
pub fn numeric_form_at_origin(flag: &ParabolicFlag, spec: &PotentialSpec, step: f64) -> Result<DMatrix<C64>> {
    let raw = raw_form_at_origin(flag, spec, step)?;
    Ok((&raw + raw.adjoint()).scale(0.5))
}

/// Generalised eigenvalues of `(H_ω, H_ψ)`, ascending.
pub fn generalized_eigenvalues(h_omega: &DMatrix<C64>, h_psi: &DMatrix<C64>) -> Result<Vec<f64>> {
    let scale = h_omega.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let chol = h_omega.clone().cholesky().ok_or(Error::IllConditioned)?;
    let l = chol.l();
    let min_pivot = (0..l.nrows()).map(|i| l[(i, i)].re).fold(f64::INFINITY, f64::min);
    if min_pivot.is_nan() || min_pivot * min_pivot <= 1e-12 * scale {
        return Err(Error::IllConditioned);
    }
    // L⁻¹ H_ψ L⁻†
    let left = l.solve_lower_triangular(h_psi).ok_or(Error::IllConditioned)?;
    let inner = l
        .solve_lower_triangular(&left.adjoint())
        .ok_or(Error::IllConditioned)?
        .adjoint();
    let hermitian = (&inner + inner.adjoint()).scale(0.5);
    let mut values: Vec<f64> = hermitian.symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueReport {
    /// Exact eigenvalues in root order.
    pub exact: Vec<Rational>,
    /// Exact eigenvalues, ascending.
    pub exact_sorted: Vec<Rational>,
    /// Finite-difference eigenvalues, ascending.
    pub numeric: Vec<f64>,
    pub max_deviation: f64,
    pub exact_contraction: Rational,
    pub numeric_trace: f64,
    pub step: f64,
    pub tol: f64,
}

impl EigenvalueReport {
    pub fn passed(&self) -> bool {
        self.max_deviation < self.tol
    }
}

/// Compare finite-difference eigenvalues of `ω₀⁻¹ ∘ ψ` with the exact
/// pairing ratios `<λ(ψ), β∨> / <λ(ω₀), β∨>`.
pub fn check_eigenvalue_formula(
    flag: &ParabolicFlag,
    omega0: &PotentialSpec,
    psi: &PotentialSpec,
    step: f64,
    tol: f64,
) -> Result<EigenvalueReport> {
    require_type_a(flag)?;
    if !omega0.is_kahler() {
        return Err(Error::NotKahler);
    }
    let exact = flag.endomorphism_eigenvalues(&omega0.class(), &psi.class())?;
    let mut exact_sorted = exact.clone();
    exact_sorted.sort();

    let h_omega = numeric_form_at_origin(flag, omega0, step)?;
    let h_psi = numeric_form_at_origin(flag, psi, step)?;
    let numeric = generalized_eigenvalues(&h_omega, &h_psi)?;

    let max_deviation = exact_sorted
        .iter()
        .zip(&numeric)
        .map(|(e, n)| (e.to_f64().unwrap_or(f64::NAN) - n).abs())
        .fold(0.0, f64::max);
    Ok(EigenvalueReport {
        exact_contraction: exact.iter().sum(),
        numeric_trace: numeric.iter().sum(),
        exact,
        exact_sorted,
        numeric,
        max_deviation,
        step,
        tol,
    })
}
