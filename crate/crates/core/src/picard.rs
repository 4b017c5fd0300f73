//! The degree-zero part of `Pic(X_P)` with respect to an integral Kähler class.
//!
//! For an integral class `ω₀` the pairings `Q(Ω_α, ω₀) = (n-1)! Λ_{ω₀}(Ω_α) Vol`
//! are positive integers. Dividing by their GCD `τ` gives coprime weights
//! `q_α`, and `ξ_α = -q_α [Ω_γ] + q_γ [Ω_α]` (for a pivot `γ`) are degree-zero
//! classes spanning a full-rank sublattice of the primitive lattice.
//!
//! The span of the `ξ_α` has index `|q_γ|^(ϱ-2)` in the degree-zero lattice,
//! so it is the whole lattice only when `ϱ = 2` or `q_γ = 1`;
//! [`PrimitiveBasis::index_in_kernel`] reports this index.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::flag::{InvariantClass, ParabolicFlag, TwoPiMultiple};
use crate::rational::{as_integer, denominator_lcm, gcd_all, Rational};

/// `⊗_α 𝒪_α(s_α)`, stored as the integer vector `s` over `Δ∖I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LineBundleClass {
    pub coeffs: Vec<BigInt>,
}

impl LineBundleClass {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        LineBundleClass { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        LineBundleClass {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `c₁` as an invariant class (no factor of `2π`).
    pub fn first_chern_class(&self) -> InvariantClass {
        InvariantClass::new(
            self.coeffs.iter().cloned().map(Rational::from_integer).collect(),
            0,
        )
    }

    pub fn tensor(&self, other: &Self) -> Self {
        LineBundleClass {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn power(&self, k: &BigInt) -> Self {
        LineBundleClass {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveBasis {
    /// Simple-root index of the pivot `γ`.
    pub pivot_gamma: usize,
    /// The integral representative of `ω₀` the pairings were computed against.
    pub omega0: Vec<BigInt>,
    pub q: Vec<BigInt>,
    pub tau: BigInt,
    /// `ξ_α` for every `α ∈ Δ∖I` other than `γ`, in complement order.
    pub basis: Vec<LineBundleClass>,
}

impl PrimitiveBasis {
    /// Integer coefficients `c` with `Σ c_i ξ_i = class`, if they exist.
    pub fn express(&self, class: &LineBundleClass) -> Option<Vec<BigInt>> {
        let rows = class.coeffs.len();
        let columns: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|xi| xi.coeffs.iter().cloned().map(Rational::from_integer).collect())
            .collect();
        let matrix: Vec<Vec<Rational>> = (0..rows)
            .map(|r| columns.iter().map(|col| col[r].clone()).collect())
            .collect();
        let rhs: Vec<Rational> = class.coeffs.iter().cloned().map(Rational::from_integer).collect();
        let solution = solve_exact(&matrix, &rhs)?;
        solution.iter().map(as_integer).collect()
    }

    /// Index of the lattice spanned by the `ξ_α` inside the full degree-zero
    /// lattice: the GCD of the maximal minors of the basis matrix, since the
    /// degree-zero lattice is saturated.
    pub fn index_in_kernel(&self) -> BigInt {
        if self.basis.is_empty() {
            return BigInt::one();
        }
        let rows = self.q.len();
        let minors: Vec<BigInt> = (0..rows)
            .map(|skip| {
                let square: Vec<Vec<Rational>> = (0..rows)
                    .filter(|&r| r != skip)
                    .map(|r| {
                        self.basis
                            .iter()
                            .map(|xi| Rational::from_integer(xi.coeffs[r].clone()))
                            .collect()
                    })
                    .collect();
                determinant(square).to_integer()
            })
            .collect();
        gcd_all(&minors)
    }
}

/// Minimal integral representative of a rational class: coefficients scaled
/// by the LCM of their denominators. The power of `2π` is dropped, since
/// primitivity and the `q_α` are invariant under positive rescaling.
pub fn integral_representative(omega0: &InvariantClass) -> Vec<BigInt> {
    let lcm = denominator_lcm(&omega0.coeffs);
    omega0
        .coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect()
}

/// `Q_{ω₀}(Ω_α, ω₀) = (n-1)! Λ_{ω₀}([Ω_α]) Vol(X_P, ω₀)` for an integral `ω₀`.
pub fn hodge_riemann_pairing(
    flag: &ParabolicFlag,
    alpha: usize,
    omega0: &InvariantClass,
) -> Result<BigInt> {
    let slot = flag.slot_of(alpha)?;
    if !flag.is_kahler(omega0) {
        return Err(Error::NotKahler);
    }
    if omega0.two_pi_power != 0 || omega0.coeffs.iter().any(|c| !c.is_integer()) {
        return Err(Error::NotIntegral(
            "the Kähler class must have integer coefficients and no factor of 2π".into(),
        ));
    }
    let generator = InvariantClass::generator(flag.picard_rank(), slot);
    let degree = flag.degree(&generator, omega0)?;
    as_integer(&degree.value).ok_or_else(|| {
        Error::NotIntegral(format!("pairing for α_{} evaluates to {}", alpha + 1, degree.value))
    })
}

/// `ξ_α = -q_α [Ω_γ] + q_γ [Ω_α]`; `gamma` defaults to the first simple root of `Δ∖I`.
pub fn primitive_basis(
    flag: &ParabolicFlag,
    omega0: &InvariantClass,
    gamma: Option<usize>,
) -> Result<PrimitiveBasis> {
    if flag.picard_rank() < 2 {
        return Err(Error::PicardRankOne);
    }
    let gamma = gamma.unwrap_or(flag.complement()[0]);
    let gamma_slot = flag.slot_of(gamma)?;
    if !flag.is_kahler(omega0) {
        return Err(Error::NotKahler);
    }
    let integral = integral_representative(omega0);
    let omega_int = InvariantClass::new(
        integral.iter().cloned().map(Rational::from_integer).collect(),
        0,
    );
    let pairings = flag
        .complement()
        .iter()
        .map(|&a| hodge_riemann_pairing(flag, a, &omega_int))
        .collect::<Result<Vec<_>>>()?;
    let tau = gcd_all(&pairings);
    let q: Vec<BigInt> = pairings.iter().map(|p| p / &tau).collect();

    let basis = (0..flag.picard_rank())
        .filter(|&slot| slot != gamma_slot)
        .map(|slot| {
            let mut coeffs = vec![BigInt::zero(); flag.picard_rank()];
            coeffs[gamma_slot] = -q[slot].clone();
            coeffs[slot] += &q[gamma_slot];
            LineBundleClass::new(coeffs)
        })
        .collect();

    Ok(PrimitiveBasis {
        pivot_gamma: gamma,
        omega0: integral,
        q,
        tau,
        basis,
    })
}

/// Whether `Λ_{ω₀}(c) = 0`, i.e. `c` has degree zero.
pub fn is_primitive(flag: &ParabolicFlag, c: &InvariantClass, omega0: &InvariantClass) -> Result<bool> {
    Ok(flag.lefschetz_contraction(omega0, c)?.value.is_zero())
}

/// `c = m ω₀ + p` with `Λ_{ω₀}(p) = 0` and `m = Λ_{ω₀}(c) / n`.
/// The primitive part keeps the power of `2π` carried by `c`.
pub fn orthogonal_decompose(
    flag: &ParabolicFlag,
    c: &InvariantClass,
    omega0: &InvariantClass,
) -> Result<(TwoPiMultiple, InvariantClass)> {
    let contraction = flag.lefschetz_contraction(omega0, c)?;
    let m = contraction.value / Rational::from_integer(BigInt::from(flag.dim()));
    let along = InvariantClass::new(
        omega0.coeffs.iter().map(|w| w * &m).collect(),
        c.two_pi_power,
    );
    let primitive = InvariantClass::new(
        c.coeffs.iter().zip(&along.coeffs).map(|(a, b)| a - b).collect(),
        c.two_pi_power,
    )
    .normalized();
    Ok((TwoPiMultiple::new(m, contraction.two_pi_power), primitive))
}

/// Unique solution of an overdetermined exact system with independent
/// columns, or `None` when inconsistent.
pub(crate) fn solve_exact(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(found) = (pivot_row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, found);
        let inv = aug[pivot_row][col].recip();
        for v in aug[pivot_row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in 0..=cols {
                    let delta = &factor * &aug[pivot_row][c];
                    aug[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if aug[pivot_row..].iter().any(|r| !r[cols].is_zero()) || pivots.len() < cols {
        return None;
    }
    let mut solution = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        solution[c] = aug[r][cols].clone();
    }
    Some(solution)
}

pub(crate) fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            let factor = &m[r][col] / &pivot;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}
