//! Root systems of the simple complex Lie algebras and coroot pairings.
//!
//! Simple roots follow Bourbaki labelling. Root lengths are normalised so
//! that short roots have half-square-length 1; only the pairings `<λ, β∨>`
//! enter the geometry, so this choice never shows up in results.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(format!("unknown Lie family `{other}`")),
        }
    }
}

/// A simple Lie type such as `A2` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, from the classification tables.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Symmetric Gram matrix `<α_i, α_j>` of the simple roots, scaled so that
    /// short roots have square length 2.
    fn gram_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let mut link = |i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => (0..n.saturating_sub(1)).for_each(|i| link(i, i + 1, -1)),
            Family::D => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1));
                link(n - 3, n - 1, -1);
            }
            Family::E => {
                // Bourbaki: 1-3-4-5-6(-7-8), with 2 attached to 4.
                link(0, 2, -1);
                link(1, 3, -1);
                (2..n - 1).for_each(|i| link(i, i + 1, -1));
            }
            Family::B => {
                (0..n - 1).for_each(|i| link(i, i + 1, -2));
            }
            Family::C => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1));
                link(n - 2, n - 1, -2);
            }
            Family::F => {
                link(0, 1, -2);
                link(1, 2, -2);
                link(2, 3, -1);
            }
            Family::G => link(0, 1, -3),
        }
        let half_lengths = self.half_square_lengths();
        for (i, d) in half_lengths.iter().enumerate() {
            g[i][i] = 2 * d;
        }
        g
    }

    /// `<α_j, α_j> / 2` for each simple root, short roots normalised to 1.
    fn half_square_lengths(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![1; n],
            Family::B => (0..n).map(|i| if i + 1 < n { 2 } else { 1 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 < n { 1 } else { 2 }).collect(),
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![1, 3],
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A positive root `β` with its coroot `β∨`, both in simple bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    pub root_coords: Vec<i64>,
    pub coroot_coords: Vec<Rational>,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.root_coords.iter().sum()
    }

    /// Whether the root involves `α_index` with a nonzero coefficient.
    pub fn involves(&self, index: usize) -> bool {
        self.root_coords[index] != 0
    }
}

/// A weight in the fundamental-weight basis `{ϖ_1, …, ϖ_r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    pub coeffs: Vec<Rational>,
}

impl Weight {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Weight { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coeffs: vec![Rational::zero(); rank],
        }
    }

    /// The fundamental weight `ϖ_index`.
    pub fn fundamental(rank: usize, index: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.coeffs[index] = Rational::one();
        w
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Weight {
            coeffs: coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn scale(&self, s: &Rational) -> Weight {
        Weight {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        if self.rank() != other.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        Ok(Weight {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

/// Root datum of a simple Lie algebra: Cartan matrix and the ordered list of
/// positive roots (by height, then simple roots of lower index first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Rational>,
    positive_roots: Vec<PositiveRoot>,
}

impl RootDatum {
    pub fn new(lie_type: LieType) -> Self {
        let gram = lie_type.gram_matrix();
        let n = lie_type.rank();
        // C_ij = 2<α_i, α_j> / <α_j, α_j> = <α_i, α_j∨>
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let symmetrizer = lie_type
            .half_square_lengths()
            .into_iter()
            .map(|d| Rational::from_integer(BigInt::from(d)))
            .collect::<Vec<_>>();

        let roots = enumerate_positive_roots(&cartan);
        let positive_roots = roots
            .into_iter()
            .map(|coords| {
                let norm: i64 = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .map(|(i, j)| coords[i] * coords[j] * gram[i][j])
                    .sum();
                let half_norm = Rational::new(BigInt::from(norm), BigInt::from(2));
                let coroot_coords = coords
                    .iter()
                    .zip(&symmetrizer)
                    .map(|(&b, d)| Rational::from_integer(BigInt::from(b)) * d / &half_norm)
                    .collect();
                PositiveRoot {
                    root_coords: coords,
                    coroot_coords,
                }
            })
            .collect();

        RootDatum {
            lie_type,
            cartan,
            symmetrizer,
            positive_roots,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[Rational] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    /// The simple root `α_index` as a positive root.
    pub fn simple_root(&self, index: usize) -> &PositiveRoot {
        self.positive_roots
            .iter()
            .find(|r| r.height() == 1 && r.root_coords[index] == 1)
            .expect("simple roots are always enumerated")
    }

    /// `<w, β∨>` in exact arithmetic.
    pub fn pairing(&self, w: &Weight, beta: &PositiveRoot) -> Result<Rational> {
        pairing(w, beta)
    }

    /// Convert a root given in the simple-root basis into the fundamental-weight basis.
    pub fn root_to_weight(&self, root_coords: &[i64]) -> Weight {
        let n = self.rank();
        Weight {
            coeffs: (0..n)
                .map(|j| {
                    let s: i64 = (0..n).map(|i| root_coords[i] * self.cartan[i][j]).sum();
                    Rational::from_integer(BigInt::from(s))
                })
                .collect(),
        }
    }

    /// Half the sum of the positive roots, which is `ϖ_1 + … + ϖ_r`.
    pub fn rho_plus(&self) -> Weight {
        Weight {
            coeffs: vec![Rational::one(); self.rank()],
        }
    }
}

/// `<w, β∨> = Σ_j w_j · (β∨)_j`.
pub fn pairing(w: &Weight, beta: &PositiveRoot) -> Result<Rational> {
    if w.coeffs.len() != beta.coroot_coords.len() {
        return Err(Error::DimensionMismatch {
            expected: beta.coroot_coords.len(),
            got: w.coeffs.len(),
        });
    }
    Ok(w
        .coeffs
        .iter()
        .zip(&beta.coroot_coords)
        .map(|(a, b)| a * b)
        .sum())
}

/// Height-graded closure under root strings.
///
/// For a positive root `β` and simple root `α_i`, the `α_i`-string through
/// `β` runs from `β - pα_i` to `β + qα_i` with `p - q = <β, α_i∨>`, so `β + α_i`
/// is a root exactly when `q = p - <β, α_i∨> > 0`.
fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();

    while !layer.is_empty() {
        // Simple roots of lower index first within a height.
        layer.sort_by(|a, b| b.cmp(a));
        layer.dedup();
        all.extend(layer.iter().cloned());

        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let pair: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if probe[i] < 0 || !all.contains(&probe) {
                        break;
                    }
                    p += 1;
                }
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    all
}

pub fn build_root_datum(lie_type: LieType) -> RootDatum {
    RootDatum::new(lie_type)
}
