//! Hermitian data on principal `T^{2r}`-bundles `U(E) → X_P`.
//!
//! A torus bundle built from line bundles `E_1, …, E_{2r}` carries the metric
//! `Ω = π*ω₀ + ½ tr(Θ ∧ 𝕁Θ)`, where the connection `Θ` has curvature classes
//! `ψ_j = 2π c₁(E_j)`. Everything checked here is an identity between
//! invariant classes on the base:
//!
//! * Ricci form of the t-Gauduchon connection: `ρ₀ + (t-1)/2 Σ Λ_{ω₀}(ψ_j) ψ_j`,
//! * co-differential of `Ω`: the contractions `Λ_{ω₀}(ψ_j)`,
//! * Lee form: `Σ_j Λ(ψ_{2j}) Θ_{2j-1} - Λ(ψ_{2j-1}) Θ_{2j}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::flag::{InvariantClass, ParabolicFlag};
use crate::picard::LineBundleClass;
use crate::rational::{int, Rational};

/// `λ(k, t) = (1 - t)/2 · k² n / I(X_P)²`.
pub fn lambda_kt(flag: &ParabolicFlag, k: i64, t: &Rational) -> Result<Rational> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be nonzero".into()));
    }
    if *t >= Rational::one() {
        return Err(Error::InvalidParameter(format!("t must be < 1, got {t}")));
    }
    Ok(unchecked_lambda(flag, k, t))
}

fn unchecked_lambda(flag: &ParabolicFlag, k: i64, t: &Rational) -> Rational {
    let index = Rational::from_integer(flag.fano_index());
    let n = int(flag.dim() as i64);
    (Rational::one() - t) / int(2) * int(k * k) * n / (&index * &index)
}

fn curvature(bundle: &LineBundleClass) -> InvariantClass {
    bundle.first_chern_class().with_two_pi_power(1)
}

fn check_bundle_lengths(flag: &ParabolicFlag, bundles: &[LineBundleClass]) -> Result<()> {
    for b in bundles {
        if b.coeffs.len() != flag.picard_rank() {
            return Err(Error::DimensionMismatch {
                expected: flag.picard_rank(),
                got: b.coeffs.len(),
            });
        }
    }
    Ok(())
}

/// t-Gauduchon Ricci-flat datum on `U(𝒪(k) ⊕ F_1 ⊕ … ⊕ F_{2r-1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GauduchonDatum {
    pub flag: ParabolicFlag,
    pub k: i64,
    pub t: Rational,
    pub lambda: Rational,
    /// `ω₀ = λ ρ₀`.
    pub omega0: InvariantClass,
    /// `ψ_1 = (k/I) ρ₀`, then `ψ_{j+1} = 2π c₁(F_j)`.
    pub psi: Vec<InvariantClass>,
    pub r: usize,
}

impl GauduchonDatum {
    /// Validated construction; `λ` is forced to `λ(k, t)`.
    pub fn build(
        flag: &ParabolicFlag,
        k: i64,
        t: &Rational,
        bundles: &[LineBundleClass],
    ) -> Result<Self> {
        let lambda = lambda_kt(flag, k, t)?;
        if flag.picard_rank() < 2 {
            return Err(Error::PicardRankOne);
        }
        if bundles.len().is_multiple_of(2) {
            return Err(Error::OddCount(bundles.len() + 1));
        }
        check_bundle_lengths(flag, bundles)?;
        let theta = flag.anticanonical_class();
        for (j, b) in bundles.iter().enumerate() {
            if b.is_trivial() {
                return Err(Error::TrivialBundle(j + 1));
            }
            if !flag.lefschetz_contraction(&theta, &b.first_chern_class())?.value.is_zero() {
                return Err(Error::NotPrimitive(j + 1));
            }
        }
        Ok(Self::assemble(flag, k, t.clone(), lambda, bundles))
    }

    /// Unvalidated construction with arbitrary `λ > 0` and any `t`, so the
    /// verifiers can be exercised on data that should fail them.
    pub fn diagnostic(
        flag: &ParabolicFlag,
        k: i64,
        t: &Rational,
        lambda: &Rational,
        bundles: &[LineBundleClass],
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be nonzero".into()));
        }
        if *lambda <= Rational::zero() {
            return Err(Error::InvalidParameter("λ must be positive".into()));
        }
        check_bundle_lengths(flag, bundles)?;
        Ok(Self::assemble(flag, k, t.clone(), lambda.clone(), bundles))
    }

    fn assemble(
        flag: &ParabolicFlag,
        k: i64,
        t: Rational,
        lambda: Rational,
        bundles: &[LineBundleClass],
    ) -> Self {
        let rho0 = flag.ricci_class();
        let index = Rational::from_integer(flag.fano_index());
        let mut psi = vec![rho0.scale(&(int(k) / index))];
        psi.extend(bundles.iter().map(curvature));
        GauduchonDatum {
            flag: flag.clone(),
            k,
            omega0: rho0.scale(&lambda),
            t,
            lambda,
            r: psi.len().div_ceil(2),
            psi,
        }
    }

    /// `ψ_1`, the curvature class of `𝒪(k)`.
    pub fn psi1(&self) -> &InvariantClass {
        &self.psi[0]
    }

    /// `ρ₀ + (t-1)/2 Σ_j Λ_{ω₀}(ψ_j) ψ_j`; zero exactly when the t-Gauduchon
    /// Ricci form of the total space vanishes.
    pub fn verify_ricci_flat(&self) -> InvariantClass {
        let half = (&self.t - Rational::one()) / int(2);
        let mut residual = self.flag.ricci_class();
        for psi in &self.psi {
            let c = self
                .flag
                .lefschetz_contraction(&self.omega0, psi)
                .expect("ω₀ is Kähler by construction");
            let term = psi.scale(&(&half * c.value));
            residual = residual.add(&term).expect("all classes carry one factor of 2π");
        }
        residual.normalized()
    }

    /// The rational `c` with `ρ₀ = c ψ_1`. Since `ψ_1` pulls back to `dΘ_1`,
    /// its existence makes `ρ(Ω, 1)` exact on `U(E)`, so `c₁(U(E)) = 0`.
    pub fn verify_c1_trivial(&self) -> Result<Rational> {
        let rho0 = self.flag.ricci_class();
        proportionality(&rho0, self.psi1()).ok_or(Error::NotProportional)
    }

    /// Contractions `Λ_{ω₀}(ψ_j)`, rational parts.
    pub fn contractions(&self) -> Vec<Rational> {
        contractions(&self.flag, &self.omega0, &self.psi).expect("ω₀ is Kähler")
    }

    /// Lee-form coefficients; only the `Θ_2` slot is nonzero for valid data.
    pub fn lee_form(&self) -> Vec<Rational> {
        lee_form_coefficients(&self.flag, &self.psi, &self.omega0)
            .expect("ω₀ is Kähler and the count is even")
    }
}

/// `c` with `lhs = c · rhs`, if it exists.
fn proportionality(lhs: &InvariantClass, rhs: &InvariantClass) -> Option<Rational> {
    if lhs.two_pi_power != rhs.two_pi_power || rhs.is_zero() {
        return None;
    }
    let pivot = rhs.coeffs.iter().position(|c| !c.is_zero())?;
    let c = &lhs.coeffs[pivot] / &rhs.coeffs[pivot];
    (rhs.scale(&c) == *lhs).then_some(c)
}

/// Balanced datum on `U(F_1 ⊕ … ⊕ F_{2r})` with every `F_j` of degree zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedDatum {
    pub flag: ParabolicFlag,
    pub omega0: InvariantClass,
    pub psi: Vec<InvariantClass>,
}

impl BalancedDatum {
    pub fn build(
        flag: &ParabolicFlag,
        omega0: &InvariantClass,
        bundles: &[LineBundleClass],
    ) -> Result<Self> {
        if flag.picard_rank() < 2 {
            return Err(Error::PicardRankOne);
        }
        if !flag.is_kahler(omega0) {
            return Err(Error::NotKahler);
        }
        if bundles.is_empty() || bundles.len() % 2 == 1 {
            return Err(Error::OddCount(bundles.len()));
        }
        check_bundle_lengths(flag, bundles)?;
        for (j, b) in bundles.iter().enumerate() {
            if !flag.lefschetz_contraction(omega0, &b.first_chern_class())?.value.is_zero() {
                return Err(Error::NotPrimitive(j + 1));
            }
        }
        Ok(BalancedDatum {
            flag: flag.clone(),
            omega0: omega0.clone(),
            psi: bundles.iter().map(curvature).collect(),
        })
    }

    /// Arbitrary curvature classes, unchecked.
    pub fn diagnostic(flag: &ParabolicFlag, omega0: &InvariantClass, psi: Vec<InvariantClass>) -> Result<Self> {
        if !flag.is_kahler(omega0) {
            return Err(Error::NotKahler);
        }
        Ok(BalancedDatum {
            flag: flag.clone(),
            omega0: omega0.clone(),
            psi,
        })
    }

    /// `(Λ_{ω₀}(ψ_j))_j`; all zero iff `δΩ = 0`.
    pub fn verify_coclosed(&self) -> Vec<Rational> {
        contractions(&self.flag, &self.omega0, &self.psi).expect("ω₀ is Kähler")
    }

    pub fn lee_form(&self) -> Result<Vec<Rational>> {
        lee_form_coefficients(&self.flag, &self.psi, &self.omega0)
    }
}

fn contractions(
    flag: &ParabolicFlag,
    omega0: &InvariantClass,
    psi: &[InvariantClass],
) -> Result<Vec<Rational>> {
    psi.iter()
        .map(|p| Ok(flag.lefschetz_contraction(omega0, p)?.value))
        .collect()
}

/// Coefficients of `Θ_1, …, Θ_{2r}` in the Lee form: slot `2j-1` holds
/// `Λ(ψ_{2j})` and slot `2j` holds `-Λ(ψ_{2j-1})`.
pub fn lee_form_coefficients(
    flag: &ParabolicFlag,
    psi: &[InvariantClass],
    omega0: &InvariantClass,
) -> Result<Vec<Rational>> {
    if !flag.is_kahler(omega0) {
        return Err(Error::NotKahler);
    }
    if psi.len() % 2 == 1 {
        return Err(Error::OddCount(psi.len()));
    }
    let c = contractions(flag, omega0, psi)?;
    Ok(c
        .chunks(2)
        .flat_map(|pair| [pair[1].clone(), -pair[0].clone()])
        .collect())
}

pub fn build_t_gauduchon(
    flag: &ParabolicFlag,
    k: i64,
    t: &Rational,
    bundles: &[LineBundleClass],
) -> Result<GauduchonDatum> {
    GauduchonDatum::build(flag, k, t, bundles)
}

pub fn build_balanced(
    flag: &ParabolicFlag,
    omega0: &InvariantClass,
    bundles: &[LineBundleClass],
) -> Result<BalancedDatum> {
    BalancedDatum::build(flag, omega0, bundles)
}

/// `I(X_P) / k`, the expected output of [`GauduchonDatum::verify_c1_trivial`].
pub fn expected_c1_ratio(flag: &ParabolicFlag, k: i64) -> Rational {
    Rational::new(flag.fano_index(), BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::primitive_basis;
    use crate::rational::rat;
    use crate::root_system::{Family, LieType, RootDatum};

    fn flag(family: Family, rank: usize, parabolic: &[usize]) -> ParabolicFlag {
        let d = RootDatum::new(LieType::new(family, rank).unwrap());
        ParabolicFlag::new(d, parabolic).unwrap()
    }

    fn lb(v: &[i64]) -> LineBundleClass {
        LineBundleClass::from_i64(v)
    }

    #[test]
    fn lambda_examples() {
        let f = flag(Family::A, 2, &[]);
        for k in [1, -1, 2, -2, 3] {
            for t in [int(-1), int(0), rat(1, 2), rat(-7, 3)] {
                let expected = rat(3, 8) * (int(1) - &t) * int(k * k);
                assert_eq!(lambda_kt(&f, k, &t).unwrap(), expected);
            }
        }
        assert_eq!(
            lambda_kt(&f, 3, &int(0)).unwrap(),
            int(2) * lambda_kt(&f, 3, &rat(1, 2)).unwrap()
        );
        assert_eq!(lambda_kt(&flag(Family::A, 3, &[]), 2, &int(-1)).unwrap(), int(6));
        assert!(matches!(lambda_kt(&f, 0, &int(0)), Err(Error::InvalidParameter(_))));
        assert!(matches!(lambda_kt(&f, 1, &int(1)), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn build_gauduchon_a2() {
        let f = flag(Family::A, 2, &[]);
        let d = GauduchonDatum::build(&f, 1, &int(-1), &[lb(&[-1, 1])]).unwrap();
        assert_eq!(d.lambda, rat(3, 4));
        assert_eq!(d.r, 1);
        assert_eq!(d.psi1(), &InvariantClass::from_integers(&[1, 1]).with_two_pi_power(1));
        assert_eq!(d.omega0, InvariantClass::new(vec![rat(3, 2), rat(3, 2)], 1));
        assert!(d.verify_ricci_flat().is_zero());
        assert_eq!(d.verify_c1_trivial().unwrap(), int(2));

        assert_eq!(
            GauduchonDatum::build(&f, 1, &int(-1), &[lb(&[0, 0])]),
            Err(Error::TrivialBundle(1))
        );
        assert_eq!(
            GauduchonDatum::build(&f, 1, &int(-1), &[lb(&[1, 0])]),
            Err(Error::NotPrimitive(1))
        );
        assert_eq!(
            GauduchonDatum::build(&f, 1, &int(-1), &[lb(&[-1, 1]), lb(&[1, -1])]),
            Err(Error::OddCount(3))
        );
        let p2 = flag(Family::A, 2, &[1]);
        assert_eq!(
            GauduchonDatum::build(&p2, 1, &int(0), &[lb(&[1])]),
            Err(Error::PicardRankOne)
        );
    }

    #[test]
    fn c1_ratio() {
        let f = flag(Family::A, 2, &[]);
        let d = GauduchonDatum::build(&f, -2, &int(0), &[lb(&[-1, 1])]).unwrap();
        assert_eq!(d.verify_c1_trivial().unwrap(), int(-1));
        assert_eq!(d.lambda, rat(3, 2));
        let d = GauduchonDatum::build(&f, 2, &int(0), &[lb(&[-1, 1])]).unwrap();
        assert_eq!(d.verify_c1_trivial().unwrap(), int(1));
        // corrupted ψ₁ is caught
        let mut broken = d.clone();
        broken.psi[0] = InvariantClass::from_integers(&[1, 2]).with_two_pi_power(1);
        assert_eq!(broken.verify_c1_trivial(), Err(Error::NotProportional));
    }

    #[test]
    fn ricci_residual_diagnostics() {
        let f = flag(Family::A, 2, &[]);
        let t = int(-1);
        let lambda = lambda_kt(&f, 1, &t).unwrap();
        let d = GauduchonDatum::diagnostic(&f, 1, &t, &(int(2) * &lambda), &[lb(&[-1, 1])]).unwrap();
        assert_eq!(d.verify_ricci_flat(), f.ricci_class().scale(&rat(1, 2)));

        let chern = GauduchonDatum::diagnostic(&f, 1, &int(1), &int(5), &[lb(&[-1, 1])]).unwrap();
        assert_eq!(chern.verify_ricci_flat(), f.ricci_class());
    }

    #[test]
    fn contraction_relation() {
        for (fam, rank, par) in [(Family::A, 2, vec![]), (Family::B, 3, vec![0]), (Family::C, 4, vec![1, 2])] {
            let f = flag(fam, rank, &par);
            let basis = primitive_basis(&f, &f.anticanonical_class(), None).unwrap();
            for k in [-2, 1, 3] {
                let d = GauduchonDatum::build(&f, k, &rat(1, 3), &basis.basis[..1]).unwrap();
                let c = d.contractions();
                let lhs = &c[0] * &d.lambda;
                let rhs = int(k * f.dim() as i64) / Rational::from_integer(f.fano_index());
                assert_eq!(lhs, rhs);
                assert!(c[1..].iter().all(Zero::is_zero));
                assert_eq!(d.verify_c1_trivial().unwrap(), expected_c1_ratio(&f, k));
                let lee = d.lee_form();
                assert_eq!(lee, vec![int(0), -c[0].clone()]);
            }
        }
    }

    #[test]
    fn balanced_examples() {
        let f = flag(Family::A, 2, &[]);
        let theta = f.anticanonical_class();
        let d = BalancedDatum::build(&f, &theta, &[lb(&[-1, 1]), lb(&[-2, 2])]).unwrap();
        assert!(d.verify_coclosed().iter().all(Zero::is_zero));
        assert!(d.lee_form().unwrap().iter().all(Zero::is_zero));

        assert_eq!(
            BalancedDatum::build(&f, &theta, &[lb(&[1, 1]), lb(&[-1, 1])]),
            Err(Error::NotPrimitive(1))
        );
        assert_eq!(f.lefschetz_contraction(&theta, &lb(&[1, 1]).first_chern_class()).unwrap().value, rat(3, 2));
        assert_eq!(
            BalancedDatum::build(&f, &theta, &[lb(&[-1, 1])]),
            Err(Error::OddCount(1))
        );
        assert_eq!(
            BalancedDatum::build(&flag(Family::A, 3, &[0, 1]), &InvariantClass::from_integers(&[4]), &[lb(&[1]), lb(&[1])]),
            Err(Error::PicardRankOne)
        );
        assert_eq!(
            BalancedDatum::build(&f, &InvariantClass::from_integers(&[1, 0]), &[lb(&[-1, 1]), lb(&[1, -1])]),
            Err(Error::NotKahler)
        );
    }

    #[test]
    fn coclosed_diagnostics() {
        let f = flag(Family::A, 2, &[]);
        let theta = f.anticanonical_class();
        let d = BalancedDatum::diagnostic(&f, &theta, vec![theta.clone(), theta.clone()]).unwrap();
        assert_eq!(d.verify_coclosed(), vec![int(3), int(3)]);
        assert_eq!(d.lee_form().unwrap(), vec![int(3), int(-3)]);

        let mixed = vec![
            InvariantClass::from_integers(&[1, 0]),
            InvariantClass::from_integers(&[-1, 1]),
            InvariantClass::from_integers(&[0, 2]),
            InvariantClass::from_integers(&[2, 1]),
        ];
        let d = BalancedDatum::diagnostic(&f, &theta, mixed.clone()).unwrap();
        let each: Vec<_> = mixed
            .iter()
            .map(|p| f.lefschetz_contraction(&theta, p).unwrap().value)
            .collect();
        assert_eq!(d.verify_coclosed(), each);
        assert_eq!(each, vec![rat(3, 4), int(0), rat(3, 2), rat(9, 4)]);
        assert_eq!(
            d.lee_form().unwrap(),
            vec![int(0), rat(-3, 4), rat(9, 4), rat(-3, 2)]
        );
        assert_eq!(
            lee_form_coefficients(&f, &mixed[..3], &theta),
            Err(Error::OddCount(3))
        );
    }
}
