//! Weakly decreasing integer sequences and the GL_m combinatorics on them.
//!
//! A [`Weight`] with `m` parts names the irreducible polynomial-times-determinant
//! representation `S_α(k^m)`. Parts may be negative; every combinatorial routine
//! shifts to a partition (last part zero), works there, and shifts back.
//!
//! Littlewood–Richardson coefficients are enumerated tableau by tableau, which
//! is exponential in the number of boxes of the smaller factor. Inputs arising
//! from monads on `P^n` with `n <= 4` stay well under a dozen boxes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Weight {
    parts: Vec<i64>,
}

impl Weight {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing {
                what: "weight",
                parts,
            });
        }
        Ok(Weight { parts })
    }

    pub fn zero(m: usize) -> Self {
        Weight { parts: vec![0; m] }
    }

    /// `(1,...,1,0,...,0)` with `k` ones: the weight of `Λ^k`.
    pub fn column(k: usize, m: usize) -> Self {
        let mut parts = vec![0; m];
        parts[..k.min(m)].iter_mut().for_each(|p| *p = 1);
        Weight { parts }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn last(&self) -> i64 {
        self.parts.last().copied().unwrap_or(0)
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// Adds `c` to every part (tensoring with `det^c`).
    pub fn shift(&self, c: i64) -> Weight {
        Weight {
            parts: self.parts.iter().map(|p| p + c).collect(),
        }
    }

    /// Appends zeros up to `m` parts.
    pub fn pad(&self, m: usize) -> Result<Weight> {
        if m < self.len() {
            return Err(Error::LengthMismatch {
                what: "pad target",
                expected: self.len(),
                found: m,
            });
        }
        let mut parts = self.parts.clone();
        parts.resize(m, 0);
        Weight::new(parts)
    }

    pub fn check_len(&self, m: usize) -> Result<()> {
        if self.len() != m {
            return Err(Error::LengthMismatch {
                what: "weight",
                expected: m,
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<i64>> for Weight {
    type Error = Error;
    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Weight::new(parts)
    }
}

impl From<Weight> for Vec<i64> {
    fn from(w: Weight) -> Self {
        w.parts
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Strictly decreasing roots `f_1 > ... > f_n` of a supernatural Hilbert polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct RootSequence {
    roots: Vec<i64>,
}

impl RootSequence {
    pub fn new(roots: Vec<i64>) -> Result<Self> {
        if roots.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyMonotone {
                what: "root sequence",
                order: "decreasing",
                parts: roots,
            });
        }
        Ok(RootSequence { roots })
    }

    pub fn roots(&self) -> &[i64] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, j: i64) -> bool {
        self.roots.contains(&j)
    }

    /// The partial order `f <= g` iff `f_i <= g_i` for all `i`.
    pub fn le(&self, other: &RootSequence) -> bool {
        self.len() == other.len() && self.roots.iter().zip(&other.roots).all(|(a, b)| a <= b)
    }
}

impl TryFrom<Vec<i64>> for RootSequence {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        RootSequence::new(v)
    }
}

impl From<RootSequence> for Vec<i64> {
    fn from(r: RootSequence) -> Self {
        r.roots
    }
}

impl fmt::Display for RootSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.roots.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Strictly increasing degrees `d_0 < d_1 < ... < d_s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DegreeSequence {
    degrees: Vec<i64>,
}

impl DegreeSequence {
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        if degrees.is_empty() || degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyMonotone {
                what: "degree sequence",
                order: "increasing",
                parts: degrees,
            });
        }
        Ok(DegreeSequence { degrees })
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Length `s` in `d_0 < ... < d_s`.
    pub fn length(&self) -> usize {
        self.degrees.len() - 1
    }

    /// Inserts `e` at its sorted position; fails if `e` is already present.
    pub fn insert(&self, e: i64) -> Result<DegreeSequence> {
        let mut d = self.degrees.clone();
        match d.binary_search(&e) {
            Ok(_) => Err(Error::Invalid {
                field: "degree sequence",
                detail: format!("{e} already occurs in {:?}", self.degrees),
            }),
            Err(pos) => {
                d.insert(pos, e);
                DegreeSequence::new(d)
            }
        }
    }
}

impl TryFrom<Vec<i64>> for DegreeSequence {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        DegreeSequence::new(v)
    }
}

impl From<DegreeSequence> for Vec<i64> {
    fn from(d: DegreeSequence) -> Self {
        d.degrees
    }
}

/// Weyl dimension formula `prod_{i<j} (α_i − α_j + j − i)/(j − i)`.
pub fn dim_schur(alpha: &Weight, m: usize) -> Result<BigInt> {
    alpha.check_len(m)?;
    let p = alpha.parts();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        for j in i + 1..m {
            num *= p[i] - p[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    Ok(num / den)
}

/// `(α_1,...,α_r) ↦ (−α_r,...,−α_1)`, the weight of the dual representation.
pub fn dual_weight(alpha: &Weight) -> Weight {
    Weight {
        parts: alpha.parts.iter().rev().map(|p| -p).collect(),
    }
}

/// Canonical form of `S_α Q* ⊗ O(d)`: subtract `c = α_m` from every part and
/// use `det Q* = O(−1)`, giving `(α − c, d − c)` with last part zero.
pub fn normalize_twist(alpha: &Weight, d: i64) -> (Weight, i64) {
    let c = alpha.last();
    (alpha.shift(-c), d - c)
}

fn to_partition(alpha: &Weight) -> (Vec<i64>, i64) {
    let c = alpha.last();
    (alpha.parts.iter().map(|p| p - c).collect(), c)
}

/// `S_α ⊗ S_β = ⊕ S_ν^{c_ν}` for GL_m; weights with more than `m` rows are dropped.
pub fn littlewood_richardson(
    alpha: &Weight,
    beta: &Weight,
    m: usize,
) -> Result<BTreeMap<Weight, u64>> {
    alpha.check_len(m)?;
    beta.check_len(m)?;
    let (lam, a) = to_partition(alpha);
    let (mu, b) = to_partition(beta);
    // Enumerate adding the smaller shape's boxes; the coefficients are symmetric.
    let (outer, inner) = if lam.iter().sum::<i64>() >= mu.iter().sum::<i64>() {
        (lam, mu)
    } else {
        (mu, lam)
    };
    let mut out = BTreeMap::new();
    for (nu, c) in lr_partitions(&outer, &inner, m) {
        let w = Weight { parts: nu }.shift(a + b);
        *out.entry(w).or_insert(0) += c;
    }
    Ok(out)
}

/// LR coefficients `c^ν_{λ μ}` for partitions with at most `m` rows, by
/// placing the letters of `μ` as successive horizontal strips on `λ` and
/// keeping fillings whose reverse reading word is a lattice word.
fn lr_partitions(lam: &[i64], mu: &[i64], m: usize) -> BTreeMap<Vec<i64>, u64> {
    let labels: Vec<i64> = mu.iter().copied().filter(|&x| x > 0).collect();
    // counts[r][t] = number of letter t placed in row r
    let mut counts = vec![vec![0i64; labels.len()]; m];
    let mut out = BTreeMap::new();
    place_label(lam.to_vec(), &labels, 0, &mut counts, &mut out);
    out
}

fn place_label(
    shape: Vec<i64>,
    labels: &[i64],
    t: usize,
    counts: &mut Vec<Vec<i64>>,
    out: &mut BTreeMap<Vec<i64>, u64>,
) {
    if t == labels.len() {
        if is_lattice(counts, labels.len()) {
            *out.entry(shape).or_insert(0) += 1;
        }
        return;
    }
    let mut strips = Vec::new();
    horizontal_strips(&shape, labels[t], 0, &mut shape.clone(), &mut strips);
    for next in strips {
        for r in 0..shape.len() {
            counts[r][t] = next[r] - shape[r];
        }
        // Letter t+1 may only appear in row t or below (0-indexed).
        let legal = (0..t.min(shape.len())).all(|r| counts[r][t] == 0);
        if legal {
            place_label(next, labels, t + 1, counts, out);
        }
        for row in counts.iter_mut() {
            row[t] = 0;
        }
    }
}

fn horizontal_strips(
    base: &[i64],
    remaining: i64,
    row: usize,
    current: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    if row == base.len() {
        return;
    }
    let cap = if row == 0 {
        remaining
    } else {
        (base[row - 1] - base[row]).min(remaining)
    };
    for add in (0..=cap).rev() {
        current[row] = base[row] + add;
        horizontal_strips(base, remaining - add, row + 1, current, out);
    }
    current[row] = base[row];
}

fn is_lattice(counts: &[Vec<i64>], letters: usize) -> bool {
    let mut seen = vec![0i64; letters];
    for row in counts {
        for t in (0..letters).rev() {
            seen[t] += row[t];
            if t > 0 && seen[t] > seen[t - 1] {
                return false;
            }
        }
    }
    true
}

/// Restriction of `S_α` along `GL_m × GL_1^{n−m} ⊂ GL_n`, i.e. the decomposition
/// of `S_α(A ⊕ k^{n−m})` with `rank A = m`, by iterated interlacing.
pub fn branch_restrict(alpha: &Weight, n: usize, m: usize) -> Result<BTreeMap<Weight, u64>> {
    alpha.check_len(n)?;
    if m > n {
        return Err(Error::OutOfRange {
            what: "branching rank",
            detail: format!("need 0 <= m <= n, got m={m}, n={n}"),
        });
    }
    let mut level: BTreeMap<Vec<i64>, u64> = BTreeMap::from([(alpha.parts.clone(), 1)]);
    for _ in m..n {
        let mut next = BTreeMap::new();
        for (w, mult) in &level {
            for beta in interlacing(w) {
                *next.entry(beta).or_insert(0) += mult;
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|(parts, c)| (Weight { parts }, c))
        .collect())
}

/// All `β` with `α_1 >= β_1 >= α_2 >= ... >= β_{r−1} >= α_r`.
fn interlacing(alpha: &[i64]) -> Vec<Vec<i64>> {
    let r = alpha.len();
    if r == 0 {
        return vec![];
    }
    let mut out = vec![vec![]];
    for i in 0..r - 1 {
        let mut grown = Vec::new();
        for prefix in &out {
            for b in alpha[i + 1]..=alpha[i] {
                let mut p: Vec<i64> = prefix.clone();
                p.push(b);
                grown.push(p);
            }
        }
        out = grown;
    }
    out
}
