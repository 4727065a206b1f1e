//! Borel–Weil–Bott on `P^n` and the calculus of equivariant bundles built from `Q*`.
//!
//! Every bundle is a formal sum of `S_α Q* ⊗ O(d)` with `α` normalized to last
//! part zero. Identities such as `Q ≅ Λ^{n−1}Q*(1)` fall out of that canonical
//! form, so equality of [`BundleExpr`] values is equality of bundles.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{
    branch_restrict, dim_schur, dual_weight, littlewood_richardson, normalize_twist, RootSequence,
    Weight,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub weight: Weight,
    pub twist: i64,
    pub mult: u64,
}

/// A direct sum of twisted Schur bundles `S_α Q* ⊗ O(d)` on `P^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BundleExpr {
    n: usize,
    terms: BTreeMap<(Weight, i64), u64>,
}

#[derive(Serialize, Deserialize)]
struct BundleJson {
    n: usize,
    summands: Vec<Summand>,
}

impl Serialize for BundleExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BundleJson {
            n: self.n,
            summands: self.summands().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BundleExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BundleJson::deserialize(d)?;
        BundleExpr::from_summands(raw.n, raw.summands).map_err(serde::de::Error::custom)
    }
}

impl BundleExpr {
    pub fn zero(n: usize) -> Self {
        BundleExpr {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn line(n: usize, d: i64) -> Self {
        BundleExpr::zero(n).with(Weight::zero(n), d, 1)
    }

    /// `S_α Q* ⊗ O(d)`; `α` must have `n` parts.
    pub fn schur(n: usize, alpha: Weight, d: i64) -> Result<Self> {
        alpha.check_len(n)?;
        Ok(BundleExpr::zero(n).with(alpha, d, 1))
    }

    /// `Q*`, the dual of the tautological quotient.
    pub fn q_dual(n: usize) -> Self {
        BundleExpr::zero(n).with(Weight::column(1, n), 0, 1)
    }

    /// `Λ^j Q* = Ω^j(j)`.
    pub fn exterior(n: usize, j: usize) -> Result<Self> {
        if j > n {
            return Err(Error::OutOfRange {
                what: "exterior power",
                detail: format!("Λ^{j} of a rank {n} bundle"),
            });
        }
        Ok(BundleExpr::zero(n).with(Weight::column(j, n), 0, 1))
    }

    pub fn from_summands(n: usize, summands: impl IntoIterator<Item = Summand>) -> Result<Self> {
        let mut b = BundleExpr::zero(n);
        for s in summands {
            s.weight.check_len(n)?;
            if s.mult == 0 {
                return Err(Error::Invalid {
                    field: "mult",
                    detail: "summand multiplicities must be positive".into(),
                });
            }
            b = b.with(s.weight, s.twist, s.mult);
        }
        Ok(b)
    }

    fn with(mut self, alpha: Weight, d: i64, mult: u64) -> Self {
        if mult > 0 {
            let key = normalize_twist(&alpha, d);
            *self.terms.entry(key).or_insert(0) += mult;
        }
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn summands(&self) -> impl Iterator<Item = Summand> + '_ {
        self.terms.iter().map(|((w, d), &m)| Summand {
            weight: w.clone(),
            twist: *d,
            mult: m,
        })
    }

    pub fn num_summands(&self) -> usize {
        self.terms.len()
    }

    /// The single `(α, d)` when the expression is one summand of multiplicity one.
    pub fn as_single(&self) -> Option<(&Weight, i64)> {
        match self.terms.iter().next() {
            Some(((w, d), 1)) if self.terms.len() == 1 => Some((w, *d)),
            _ => None,
        }
    }

    /// Line bundle `O(d)` when the expression is exactly that.
    pub fn as_line(&self) -> Option<i64> {
        self.as_single()
            .filter(|(w, _)| w.is_zero())
            .map(|(_, d)| d)
    }

    pub fn rank(&self) -> BigInt {
        self.terms
            .iter()
            .map(|((w, _), m)| dim_schur(w, self.n).expect("canonical weight") * m)
            .sum()
    }

    pub fn twist(&self, j: i64) -> Self {
        BundleExpr {
            n: self.n,
            terms: self.terms.iter().map(|((w, d), m)| ((w.clone(), d + j), *m)).collect(),
        }
    }

    pub fn scale(&self, k: u64) -> Self {
        if k == 0 {
            return BundleExpr::zero(self.n);
        }
        BundleExpr {
            n: self.n,
            terms: self.terms.iter().map(|(key, m)| (key.clone(), m * k)).collect(),
        }
    }

    pub fn direct_sum(&self, other: &BundleExpr) -> Result<Self> {
        check_ambient(self.n, other.n)?;
        let mut out = self.clone();
        for (key, m) in &other.terms {
            *out.terms.entry(key.clone()).or_insert(0) += m;
        }
        Ok(out)
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((w, d), m)| {
                let base = summand_name(w, *d);
                if *m == 1 {
                    base
                } else {
                    format!("{base}^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

fn summand_name(w: &Weight, d: i64) -> String {
    let p = w.parts();
    let twist = if d == 0 { String::new() } else { format!("({d})") };
    if w.is_zero() {
        return format!("O({d})");
    }
    let ones = p.iter().take_while(|&&x| x == 1).count();
    let core = if p[1..].iter().all(|&x| x == 0) {
        if p[0] == 1 {
            "Q*".to_string()
        } else {
            format!("Sym^{} Q*", p[0])
        }
    } else if p[ones..].iter().all(|&x| x == 0) {
        format!("Λ^{ones} Q*")
    } else {
        let nz: Vec<String> = p.iter().filter(|&&x| x != 0).map(|x| x.to_string()).collect();
        format!("S_{{{}}}Q*", nz.join(","))
    };
    if d == 0 {
        core
    } else if core == "Q*" {
        format!("Q*{twist}")
    } else {
        format!("({core}){twist}")
    }
}

fn check_ambient(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::AmbientMismatch { left: a, right: b });
    }
    Ok(())
}

/// Result of Borel–Weil–Bott for a single `S_α Q* ⊗ O(d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CohomologyOutcome {
    Vanishing,
    Nonvanishing {
        degree: usize,
        gamma: Weight,
        #[serde(serialize_with = "crate::ser_bigint")]
        dimension: BigInt,
    },
}

impl CohomologyOutcome {
    pub fn dimension_in(&self, i: usize) -> BigInt {
        match self {
            CohomologyOutcome::Nonvanishing {
                degree, dimension, ..
            } if *degree == i => dimension.clone(),
            _ => BigInt::zero(),
        }
    }
}

/// `H^•(P^n, S_α Q* ⊗ O(d))`: with `β = (d, α)` and `ρ = (n,...,0)`, either
/// `β + ρ` repeats an entry and everything vanishes, or sorting it strictly
/// decreasing takes `ℓ` inversions and `H^ℓ = S_γ(V*)` with `γ = sorted − ρ`.
pub fn bwb_cohomology(alpha: &Weight, d: i64, n: usize) -> Result<CohomologyOutcome> {
    alpha.check_len(n)?;
    let shifted: Vec<i64> = std::iter::once(d)
        .chain(alpha.parts().iter().copied())
        .enumerate()
        .map(|(k, b)| b + (n - k) as i64)
        .collect();
    let mut inversions = 0usize;
    for i in 0..=n {
        for j in i + 1..=n {
            if shifted[i] == shifted[j] {
                return Ok(CohomologyOutcome::Vanishing);
            }
            if shifted[i] < shifted[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let gamma = Weight::new(
        sorted
            .iter()
            .enumerate()
            .map(|(k, s)| s - (n - k) as i64)
            .collect(),
    )?;
    let dimension = dim_schur(&gamma, n + 1)?;
    Ok(CohomologyOutcome::Nonvanishing {
        degree: inversions,
        gamma,
        dimension,
    })
}

/// `h^i(P^n, B(j))` for `i = 0..=n`.
pub fn cohomology_of_bundle(b: &BundleExpr, j: i64) -> Vec<BigInt> {
    let mut h = vec![BigInt::zero(); b.n + 1];
    for ((w, d), m) in &b.terms {
        if let CohomologyOutcome::Nonvanishing {
            degree, dimension, ..
        } = bwb_cohomology(w, d + j, b.n).expect("canonical weight")
        {
            h[degree] += dimension * m;
        }
    }
    h
}

pub fn euler_characteristic(b: &BundleExpr, j: i64) -> BigInt {
    cohomology_of_bundle(b, j)
        .into_iter()
        .enumerate()
        .map(|(i, h)| if i % 2 == 0 { h } else { -h })
        .sum()
}

/// Tensor product via Littlewood–Richardson on the rank-`n` weights; twists add.
pub fn tensor(b1: &BundleExpr, b2: &BundleExpr) -> Result<BundleExpr> {
    check_ambient(b1.n, b2.n)?;
    let mut out = BundleExpr::zero(b1.n);
    for ((w1, d1), m1) in &b1.terms {
        for ((w2, d2), m2) in &b2.terms {
            for (nu, c) in littlewood_richardson(w1, w2, b1.n)? {
                out = out.with(nu, d1 + d2, c * m1 * m2);
            }
        }
    }
    Ok(out)
}

pub fn dual(b: &BundleExpr) -> BundleExpr {
    let mut out = BundleExpr::zero(b.n);
    for ((w, d), m) in &b.terms {
        out = out.with(dual_weight(w), -d, *m);
    }
    out
}

/// `dim Ext^i(B1, B2) = h^i(B1* ⊗ B2)` for locally free expressions.
pub fn ext_dims(b1: &BundleExpr, b2: &BundleExpr) -> Result<Vec<BigInt>> {
    let hom = tensor(&dual(b1), b2)?;
    Ok(cohomology_of_bundle(&hom, 0))
}

pub fn euler_pairing(b1: &BundleExpr, b2: &BundleExpr) -> Result<BigInt> {
    Ok(ext_dims(b1, b2)?
        .into_iter()
        .enumerate()
        .map(|(i, e)| if i % 2 == 0 { e } else { -e })
        .sum())
}

/// Restriction to a linear `P^m ⊂ P^n`, using `Q|_{P^m} ≅ Q_{P^m} ⊕ O^{n−m}`.
pub fn restrict_linear(b: &BundleExpr, m: usize) -> Result<BundleExpr> {
    if m > b.n {
        return Err(Error::OutOfRange {
            what: "linear subspace",
            detail: format!("P^{m} inside P^{}", b.n),
        });
    }
    let mut out = BundleExpr::zero(m);
    for ((w, d), mult) in &b.terms {
        for (beta, c) in branch_restrict(w, b.n, m)? {
            out = out.with(beta, *d, c * mult);
        }
    }
    Ok(out)
}

/// Roots of a single summand `S_α Q* ⊗ O(d)`: the twists `j = α_i − i − d`
/// at which all cohomology vanishes.
pub fn supernatural_roots(b: &BundleExpr) -> Result<RootSequence> {
    let mut keys = b.terms.keys();
    let (w, d) = match (keys.next(), keys.next()) {
        (Some(k), None) => k,
        _ => {
            return Err(Error::Unsupported(format!(
                "roots are defined for a single Schur summand, got {b}"
            )))
        }
    };
    RootSequence::new(
        w.parts()
            .iter()
            .enumerate()
            .map(|(i, a)| a - (i as i64 + 1) - d)
            .collect(),
    )
}

/// Castelnuovo–Mumford regularity `−f_1 + 1` of a supernatural sheaf with roots `f`.
pub fn supernatural_regularity(f: &RootSequence) -> i64 {
    -f.roots().first().copied().unwrap_or(0) + 1
}

/// The equivariant `S_α Q* ⊗ O(d)` whose roots are `f`.
pub fn equivariant_representative(f: &RootSequence) -> BundleExpr {
    let n = f.len();
    let r = f.roots();
    let last = r.last().copied().unwrap_or(0);
    let d = -(n as i64) - last;
    let alpha: Vec<i64> = (0..n).map(|i| r[i] + (i as i64 + 1) + d).collect();
    BundleExpr::zero(n).with(Weight::new(alpha).expect("roots strictly decrease"), d, 1)
}
