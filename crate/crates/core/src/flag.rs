//! Flag varieties `X_P = G/P_I` and their invariant (1,1)-class calculus.
//!
//! An invariant real (1,1)-class is a combination of the generators
//! `[Ω_α]`, `α ∈ Δ∖I`. Its associated weight is `Σ c_α ϖ_α`, and every
//! quantity below reduces to pairings of such weights against the coroots of
//! `Φ_I⁺`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, gcd_all, Rational};
use crate::root_system::{pairing, PositiveRoot, RootDatum, Weight};

/// A rational number times an explicit integer power of `2π`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPiMultiple {
    pub value: Rational,
    pub two_pi_power: i32,
}

impl TwoPiMultiple {
    pub fn new(value: Rational, two_pi_power: i32) -> Self {
        let two_pi_power = if value.is_zero() { 0 } else { two_pi_power };
        TwoPiMultiple {
            value,
            two_pi_power,
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.value.to_f64().unwrap_or(f64::NAN)
            * (2.0 * std::f64::consts::PI).powi(self.two_pi_power)
    }
}

/// `(2π)^two_pi_power · Σ_α coeffs[α] [Ω_α]`, indexed by the complement `Δ∖I`.
#[derive(Debug, Clone, Eq)]
pub struct InvariantClass {
    pub two_pi_power: i32,
    pub coeffs: Vec<Rational>,
}

impl PartialEq for InvariantClass {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
            && (self.normalized_power() == other.normalized_power())
    }
}

impl InvariantClass {
    pub fn new(coeffs: Vec<Rational>, two_pi_power: i32) -> Self {
        InvariantClass {
            two_pi_power,
            coeffs,
        }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        InvariantClass::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
            0,
        )
    }

    pub fn zero(len: usize) -> Self {
        InvariantClass::new(vec![Rational::zero(); len], 0)
    }

    /// The generator `[Ω_α]` at position `slot` of the complement.
    pub fn generator(len: usize, slot: usize) -> Self {
        let mut c = InvariantClass::zero(len);
        c.coeffs[slot] = Rational::one();
        c
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn normalized_power(&self) -> i32 {
        if self.is_zero() {
            0
        } else {
            self.two_pi_power
        }
    }

    pub fn normalized(mut self) -> Self {
        self.two_pi_power = self.normalized_power();
        self
    }

    pub fn scale(&self, s: &Rational) -> Self {
        InvariantClass::new(self.coeffs.iter().map(|c| c * s).collect(), self.two_pi_power)
    }

    pub fn with_two_pi_power(&self, power: i32) -> Self {
        InvariantClass::new(self.coeffs.clone(), power)
    }

    /// Sum of two classes. A zero summand adopts the other's power of `2π`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coeffs.len(),
                got: other.coeffs.len(),
            });
        }
        let power = match (self.is_zero(), other.is_zero()) {
            (true, _) => other.two_pi_power,
            (_, true) => self.two_pi_power,
            _ if self.two_pi_power == other.two_pi_power => self.two_pi_power,
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "cannot add classes with 2π powers {} and {}",
                    self.two_pi_power, other.two_pi_power
                )))
            }
        };
        Ok(InvariantClass::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            power,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn is_kahler(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_positive())
    }
}

/// `X_P = G/P_I` for a parabolic subset `I` of the simple roots (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicFlag {
    datum: RootDatum,
    parabolic_set: Vec<usize>,
    complement: Vec<usize>,
    phi_plus: Vec<usize>,
}

impl ParabolicFlag {
    pub fn new(datum: RootDatum, parabolic_set: &[usize]) -> Result<Self> {
        let rank = datum.rank();
        if let Some(&index) = parabolic_set.iter().find(|&&i| i >= rank) {
            return Err(Error::IndexOutOfRange { index, rank });
        }
        let mut parabolic: Vec<usize> = parabolic_set.to_vec();
        parabolic.sort_unstable();
        parabolic.dedup();
        let complement: Vec<usize> = (0..rank).filter(|i| !parabolic.contains(i)).collect();
        if complement.is_empty() {
            return Err(Error::TrivialFlag);
        }
        let phi_plus = datum
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, r)| complement.iter().any(|&a| r.involves(a)))
            .map(|(i, _)| i)
            .collect();
        Ok(ParabolicFlag {
            datum,
            parabolic_set: parabolic,
            complement,
            phi_plus,
        })
    }

    pub fn full(datum: RootDatum) -> Self {
        ParabolicFlag::new(datum, &[]).expect("full flag is always valid")
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn parabolic_set(&self) -> &[usize] {
        &self.parabolic_set
    }

    /// `Δ∖I`, ascending; slot `k` of every class refers to `complement()[k]`.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    /// Position of simple root `index` inside the complement.
    pub fn slot_of(&self, index: usize) -> Result<usize> {
        self.complement
            .iter()
            .position(|&a| a == index)
            .ok_or(Error::IndexOutOfRange {
                index,
                rank: self.datum.rank(),
            })
    }

    /// `Φ_I⁺` in the datum's root order.
    pub fn phi_plus(&self) -> impl Iterator<Item = &PositiveRoot> + '_ {
        self.phi_plus.iter().map(|&i| &self.datum.positive_roots()[i])
    }

    pub fn dim(&self) -> usize {
        self.phi_plus.len()
    }

    pub fn picard_rank(&self) -> usize {
        self.complement.len()
    }

    fn check_len(&self, c: &InvariantClass) -> Result<()> {
        if c.coeffs.len() != self.picard_rank() {
            return Err(Error::DimensionMismatch {
                expected: self.picard_rank(),
                got: c.coeffs.len(),
            });
        }
        Ok(())
    }

    fn require_kahler(&self, c: &InvariantClass) -> Result<()> {
        self.check_len(c)?;
        if !c.is_kahler() {
            return Err(Error::NotKahler);
        }
        Ok(())
    }

    /// Weight `λ([c]) = Σ c_α ϖ_α` together with the class's power of `2π`.
    pub fn class_weight(&self, c: &InvariantClass) -> Result<(Weight, i32)> {
        self.check_len(c)?;
        let mut w = Weight::zero(self.datum.rank());
        for (slot, &alpha) in self.complement.iter().enumerate() {
            w.coeffs[alpha] = c.coeffs[slot].clone();
        }
        Ok((w, c.normalized_power()))
    }

    /// Class over `Δ∖I` with the given weight's coefficients there.
    pub fn weight_class(&self, w: &Weight, two_pi_power: i32) -> InvariantClass {
        InvariantClass::new(
            self.complement.iter().map(|&a| w.coeffs[a].clone()).collect(),
            two_pi_power,
        )
    }

    /// `δ_P = Σ_{β ∈ Φ_I⁺} β` in the fundamental-weight basis.
    pub fn delta_p(&self) -> Weight {
        let mut sum = Weight::zero(self.datum.rank());
        for beta in self.phi_plus() {
            sum = sum
                .add(&self.datum.root_to_weight(&beta.root_coords))
                .expect("same rank");
        }
        sum
    }

    /// `ℓ_α = <δ_P, α∨>` for `α ∈ Δ∖I`.
    pub fn anticanonical_coeffs(&self) -> Vec<BigInt> {
        let delta = self.delta_p();
        self.complement
            .iter()
            .map(|&a| delta.coeffs[a].to_integer())
            .collect()
    }

    /// The integral anticanonical class `ϑ₀ = Σ ℓ_α [Ω_α]`, i.e. `c₁(X_P)`.
    pub fn anticanonical_class(&self) -> InvariantClass {
        InvariantClass::new(
            self.anticanonical_coeffs()
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
            0,
        )
    }

    /// The Kähler–Einstein Ricci form class `ρ₀ = 2π ϑ₀`.
    pub fn ricci_class(&self) -> InvariantClass {
        self.anticanonical_class().with_two_pi_power(1)
    }

    /// GCD of the `ℓ_α`.
    pub fn fano_index(&self) -> BigInt {
        gcd_all(&self.anticanonical_coeffs())
    }

    pub fn is_kahler(&self, c: &InvariantClass) -> bool {
        c.coeffs.len() == self.picard_rank() && c.is_kahler()
    }

    /// Eigenvalues of `ω₀⁻¹ ∘ ψ`, one per `β ∈ Φ_I⁺` in root order:
    /// `<λ([ψ]), β∨> / <λ([ω₀]), β∨>`.
    pub fn endomorphism_eigenvalues(
        &self,
        omega0: &InvariantClass,
        psi: &InvariantClass,
    ) -> Result<Vec<Rational>> {
        self.require_kahler(omega0)?;
        let (w0, _) = self.class_weight(omega0)?;
        let (wp, _) = self.class_weight(psi)?;
        self.phi_plus()
            .map(|beta| Ok(pairing(&wp, beta)? / pairing(&w0, beta)?))
            .collect()
    }

    /// `Λ_{ω₀}(ψ)`, the trace of `ω₀⁻¹ ∘ ψ`.
    pub fn lefschetz_contraction(
        &self,
        omega0: &InvariantClass,
        psi: &InvariantClass,
    ) -> Result<TwoPiMultiple> {
        let sum: Rational = self.endomorphism_eigenvalues(omega0, psi)?.into_iter().sum();
        Ok(TwoPiMultiple::new(
            sum,
            psi.normalized_power() - omega0.normalized_power(),
        ))
    }

    /// `Vol(X_P, ω) = Π_{β ∈ Φ_I⁺} <λ([ω]), β∨> / <ϱ⁺, β∨>`.
    pub fn volume(&self, omega: &InvariantClass) -> Result<TwoPiMultiple> {
        self.require_kahler(omega)?;
        let (w, power) = self.class_weight(omega)?;
        let rho = self.datum.rho_plus();
        let mut product = Rational::one();
        for beta in self.phi_plus() {
            product *= pairing(&w, beta)? / pairing(&rho, beta)?;
        }
        Ok(TwoPiMultiple::new(product, power * self.dim() as i32))
    }

    /// `deg_ω(E) = (n-1)! Λ_ω(c₁(E)) Vol(X_P, ω)`.
    pub fn degree(
        &self,
        bundle_class: &InvariantClass,
        omega: &InvariantClass,
    ) -> Result<TwoPiMultiple> {
        let contraction = self.lefschetz_contraction(omega, bundle_class)?;
        let volume = self.volume(omega)?;
        let fact = Rational::from_integer(factorial(self.dim() - 1));
        Ok(TwoPiMultiple::new(
            fact * contraction.value * volume.value,
            contraction.two_pi_power + volume.two_pi_power,
        ))
    }
}

pub fn make_flag(datum: RootDatum, parabolic_set: &[usize]) -> Result<ParabolicFlag> {
    ParabolicFlag::new(datum, parabolic_set)
}
