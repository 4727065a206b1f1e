//! `K_0(P^n)` as a rank `n + 1` lattice.
//!
//! A class is stored as its χ-profile `(χ(F(0)), …, χ(F(n)))`. Against the
//! standard basis `O, O(−1), …, O(−n)` that profile is a unitriangular
//! integer transform, so integer coordinates come from forward substitution.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bwb::{euler_characteristic, euler_pairing, BundleExpr};
use crate::error::{Error, Result};
use crate::linalg::{det_bareiss, solve};
use crate::monad::MonadData;
use crate::rational::{self, qi, Q};
use crate::sheaves::{hilbert_polynomial, SheafExpr};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct K0Class {
    n: usize,
    #[serde(serialize_with = "ser_profile")]
    chi: Vec<BigInt>,
}

fn ser_profile<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

impl K0Class {
    pub fn from_profile(n: usize, chi: Vec<BigInt>) -> Result<Self> {
        if chi.len() != n + 1 {
            return Err(Error::LengthMismatch {
                what: "χ-profile",
                expected: n + 1,
                found: chi.len(),
            });
        }
        Ok(K0Class { n, chi })
    }

    pub fn of_bundle(b: &BundleExpr) -> Self {
        K0Class {
            n: b.n(),
            chi: (0..=b.n() as i64).map(|j| euler_characteristic(b, j)).collect(),
        }
    }

    pub fn line(n: usize, d: i64) -> Self {
        K0Class::of_bundle(&BundleExpr::line(n, d))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chi_profile(&self) -> &[BigInt] {
        &self.chi
    }

    pub fn rational_profile(&self) -> Vec<Q> {
        self.chi.iter().map(qi).collect()
    }

    /// Integer coordinates in `O, O(−1), …, O(−n)`.
    pub fn standard_coordinates(&self) -> Vec<BigInt> {
        let n = self.n;
        let mut c: Vec<BigInt> = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut r = self.chi[j].clone();
            for (k, ck) in c.iter().enumerate() {
                r -= ck * standard_entry(n, j, k);
            }
            c.push(r);
        }
        c
    }

    pub fn scale(&self, k: &BigInt) -> K0Class {
        K0Class {
            n: self.n,
            chi: self.chi.iter().map(|x| x * k).collect(),
        }
    }
}

/// `χ(O(j − k)) = binom(j − k + n, n)` for `0 ≤ k, j ≤ n`.
fn standard_entry(n: usize, j: usize, k: usize) -> BigInt {
    if j + n < k {
        return BigInt::zero();
    }
    binomial(BigInt::from(j + n - k), BigInt::from(n))
}

/// Which basis a coordinate vector refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisLabel {
    Standard,
    W,
    Wperp,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalCoordinates {
    pub basis: BasisLabel,
    #[serde(with = "rational::vec")]
    pub coords: Vec<Q>,
}

impl RationalCoordinates {
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(rational::fmt).collect();
        format!("({})", parts.join(", "))
    }
}

/// `χ(F(j))` for `j = 0..=n`, rational for formal sums.
pub fn rational_profile(f: &SheafExpr) -> Result<Vec<Q>> {
    let p = hilbert_polynomial(f)?;
    Ok((0..=f.n() as i64).map(|j| p.eval(j)).collect())
}

pub fn k0_class(f: &SheafExpr) -> Result<K0Class> {
    let chi = rational_profile(f)?
        .into_iter()
        .map(|x| rational::as_integer(&x))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::NotLatticeClass(format!("{f} has a non-integral χ-profile")))?;
    Ok(K0Class { n: f.n(), chi })
}

fn solve_profile(target: &[Q], basis: &[Vec<Q>], n: usize) -> Result<Vec<Q>> {
    if basis.len() != n + 1 {
        return Err(Error::LengthMismatch {
            what: "basis",
            expected: n + 1,
            found: basis.len(),
        });
    }
    let a: Vec<Vec<Q>> = (0..=n)
        .map(|j| basis.iter().map(|b| b[j].clone()).collect())
        .collect();
    solve(&a, target).ok_or(Error::NotABasis("given"))
}

pub fn coords_in_basis(c: &K0Class, basis: &[K0Class]) -> Result<RationalCoordinates> {
    check_ambients(c.n, basis)?;
    let profiles: Vec<Vec<Q>> = basis.iter().map(|b| b.rational_profile()).collect();
    Ok(RationalCoordinates {
        basis: BasisLabel::Custom,
        coords: solve_profile(&c.rational_profile(), &profiles, c.n)?,
    })
}

/// Coordinates of a possibly non-lattice class, given by its rational χ-profile.
pub fn coords_of_profile(profile: &[Q], basis: &[K0Class]) -> Result<Vec<Q>> {
    let n = profile.len() - 1;
    check_ambients(n, basis)?;
    let profiles: Vec<Vec<Q>> = basis.iter().map(|b| b.rational_profile()).collect();
    solve_profile(profile, &profiles, n)
}

fn check_ambients(n: usize, classes: &[K0Class]) -> Result<()> {
    match classes.iter().find(|b| b.n != n) {
        Some(b) => Err(Error::AmbientMismatch {
            left: n,
            right: b.n,
        }),
        None => Ok(()),
    }
}

pub fn standard_basis(n: usize) -> Vec<K0Class> {
    (0..=n as i64).map(|k| K0Class::line(n, -k)).collect()
}

/// Index of the subgroup spanned by `n + 1` classes; `0` when they are dependent.
pub fn subgroup_index(classes: &[K0Class]) -> BigInt {
    let Some(first) = classes.first() else {
        return BigInt::zero();
    };
    if classes.len() != first.n + 1 || classes.iter().any(|c| c.n != first.n) {
        return BigInt::zero();
    }
    let m: Vec<Vec<BigInt>> = classes.iter().map(|c| c.standard_coordinates()).collect();
    det_bareiss(&m).abs()
}

/// Which side of the monad the coefficients of [`decompose_cor14`] refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    W,
    Wperp,
}

pub fn w_classes(m: &MonadData) -> Vec<K0Class> {
    m.w().iter().map(|&w| K0Class::line(m.n(), -w)).collect()
}

pub fn wperp_classes(m: &MonadData) -> Vec<K0Class> {
    m.wperp().iter().map(K0Class::of_bundle).collect()
}

/// `[F] = Σ_j (−1)^j χ(F ⊗ E_j)/N_W · [O(−w_j)]` on the `W` side and
/// `[F] = Σ_j (−1)^j χ(F(−w_j))/N_W · [E_j]` on the `W^⊥` side.
/// The result is cross-checked against a direct linear solve.
pub fn decompose_cor14(f: &SheafExpr, m: &MonadData, side: Side) -> Result<RationalCoordinates> {
    if f.n() != m.n() {
        return Err(Error::AmbientMismatch {
            left: f.n(),
            right: m.n(),
        });
    }
    let nw = qi(m.n_w());
    let mut coords = Vec::with_capacity(m.n() + 1);
    for j in 0..=m.n() {
        let col = match side {
            Side::W => f.tensor_column(&m.wperp()[j], 0)?,
            Side::Wperp => f.column(-m.w()[j])?,
        };
        let chi: Q = col
            .iter()
            .enumerate()
            .map(|(i, x)| rational::sign_power(i as i64) * x)
            .sum();
        coords.push(rational::sign_power(j as i64) * chi / &nw);
    }
    let basis = match side {
        Side::W => w_classes(m),
        Side::Wperp => wperp_classes(m),
    };
    let direct = coords_of_profile(&rational_profile(f)?, &basis)?;
    if direct != coords {
        return Err(Error::breach(format!(
            "χ-pairing coefficients {coords:?} disagree with the linear solve {direct:?}"
        )));
    }
    Ok(RationalCoordinates {
        basis: match side {
            Side::W => BasisLabel::W,
            Side::Wperp => BasisLabel::Wperp,
        },
        coords,
    })
}

/// `χ(B_a, B_b)` over a list of bundles.
pub fn gram_matrix(bundles: &[BundleExpr]) -> Result<Vec<Vec<BigInt>>> {
    bundles
        .iter()
        .map(|a| bundles.iter().map(|b| euler_pairing(a, b)).collect())
        .collect()
}
