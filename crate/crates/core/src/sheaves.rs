//! Sheaf expressions on `P^n` and their cohomology tables `γ_{i,j} = h^i(F(j))`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};

use crate::bwb::{bwb_cohomology, cohomology_of_bundle, restrict_linear, tensor, BundleExpr};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, q, qi, Q};
use crate::weights::{RootSequence, Weight};

/// Closed twist range `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    lo: i64,
    hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Invalid {
                field: "window",
                detail: format!("empty window [{lo},{hi}]"),
            });
        }
        Ok(Window { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn width(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn contains(&self, j: i64) -> bool {
        self.lo <= j && j <= self.hi
    }

    pub fn twists(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    /// Default window for a monad on `W`: `[−w_n − n − 1, −w_0 + n + 1]`.
    pub fn for_collection(w: &[i64], n: usize) -> Window {
        let n = n as i64;
        Window {
            lo: -w[w.len() - 1] - n - 1,
            hi: -w[0] + n + 1,
        }
    }
}

impl std::str::FromStr for Window {
    type Err = Error;

    /// Parses `a:b`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid {
            field: "window",
            detail: format!("expected a:b, got {s:?}"),
        };
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        Window::new(a, b)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// Cohomology table over an explicit window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    n: usize,
    window: Window,
    /// `rows[i][j − lo]`
    rows: Vec<Vec<Q>>,
}

impl CohomologyTable {
    pub fn zero(n: usize, window: Window) -> Self {
        CohomologyTable {
            n,
            window,
            rows: vec![vec![Q::zero(); window.width()]; n + 1],
        }
    }

    pub fn from_rows(n: usize, window: Window, rows: Vec<Vec<Q>>) -> Result<Self> {
        if rows.len() != n + 1 {
            return Err(Error::LengthMismatch {
                what: "table rows",
                expected: n + 1,
                found: rows.len(),
            });
        }
        for row in &rows {
            if row.len() != window.width() {
                return Err(Error::LengthMismatch {
                    what: "table row",
                    expected: window.width(),
                    found: row.len(),
                });
            }
            if row.iter().any(|x| x.is_negative()) {
                return Err(Error::Invalid {
                    field: "table",
                    detail: "entries must be nonnegative".into(),
                });
            }
        }
        Ok(CohomologyTable { n, window, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn get(&self, i: usize, j: i64) -> &Q {
        &self.rows[i][(j - self.window.lo) as usize]
    }

    fn get_mut(&mut self, i: usize, j: i64) -> &mut Q {
        &mut self.rows[i][(j - self.window.lo) as usize]
    }

    pub fn column(&self, j: i64) -> Vec<Q> {
        (0..=self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn chi(&self, j: i64) -> Q {
        (0..=self.n)
            .map(|i| rational::sign_power(i as i64) * self.get(i, j))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|x| x.is_zero())
    }

    pub fn has_negative(&self) -> bool {
        self.rows.iter().flatten().any(|x| x.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(|x| x.is_integer())
    }

    pub fn scale(&self, c: &Q) -> CohomologyTable {
        CohomologyTable {
            n: self.n,
            window: self.window,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &CohomologyTable) -> Result<CohomologyTable> {
        self.check_shape(other)?;
        Ok(CohomologyTable {
            n: self.n,
            window: self.window,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        })
    }

    /// Entrywise difference; may leave the cone (negative entries allowed).
    pub(crate) fn sub_unchecked(&self, other: &CohomologyTable) -> CohomologyTable {
        CohomologyTable {
            n: self.n,
            window: self.window,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
                .collect(),
        }
    }

    pub fn compare_entrywise(&self, other: &CohomologyTable) -> Result<TableOrdering> {
        self.check_shape(other)?;
        let (mut less, mut greater) = (false, false);
        for (a, b) in self.rows.iter().flatten().zip(other.rows.iter().flatten()) {
            match a.cmp(b) {
                Ordering::Less => less = true,
                Ordering::Greater => greater = true,
                Ordering::Equal => {}
            }
        }
        Ok(match (less, greater) {
            (false, false) => TableOrdering::Equal,
            (true, false) => TableOrdering::Less,
            (false, true) => TableOrdering::Greater,
            (true, true) => TableOrdering::Incomparable,
        })
    }

    /// The same table on a sub-window.
    pub fn restrict(&self, window: Window) -> Result<CohomologyTable> {
        if window.lo < self.window.lo || window.hi > self.window.hi {
            return Err(self.mismatch(window));
        }
        let off = (window.lo - self.window.lo) as usize;
        Ok(CohomologyTable {
            n: self.n,
            window,
            rows: self
                .rows
                .iter()
                .map(|r| r[off..off + window.width()].to_vec())
                .collect(),
        })
    }

    fn check_shape(&self, other: &CohomologyTable) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.window != other.window {
            return Err(self.mismatch(other.window));
        }
        Ok(())
    }

    fn mismatch(&self, w: Window) -> Error {
        Error::WindowMismatch {
            a0: self.window.lo,
            a1: self.window.hi,
            b0: w.lo,
            b1: w.hi,
        }
    }

    /// Plain-text rendering: degree rows `n` down to `0`, twists left to right, `.` for zero.
    pub fn render(&self) -> String {
        let cells: Vec<Vec<String>> = (0..=self.n)
            .rev()
            .map(|i| {
                self.rows[i]
                    .iter()
                    .map(|x| {
                        if x.is_zero() {
                            ".".to_string()
                        } else {
                            rational::fmt(x)
                        }
                    })
                    .collect()
            })
            .collect();
        let header: Vec<String> = self.window.twists().map(|j| j.to_string()).collect();
        let width = cells
            .iter()
            .flatten()
            .chain(&header)
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        let label = format!("h^{}", self.n).len() + 1;
        let mut out = format!("{:label$}", "j:");
        for h in &header {
            out += &format!(" {h:>width$}");
        }
        out.push('\n');
        for (k, row) in cells.iter().enumerate() {
            let i = self.n - k;
            out += &format!("{:label$}", format!("h^{i}:"));
            for c in row {
                out += &format!(" {c:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for CohomologyTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Rows<'a>(&'a CohomologyTable);
        struct Row<'a>(&'a CohomologyTable, usize);
        impl Serialize for Row<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.window.width()))?;
                for j in self.0.window.twists() {
                    m.serialize_entry(&j.to_string(), &rational::fmt(self.0.get(self.1, j)))?;
                }
                m.end()
            }
        }
        impl Serialize for Rows<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.n + 1))?;
                for i in 0..=self.0.n {
                    m.serialize_entry(&i.to_string(), &Row(self.0, i))?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("n", &self.n)?;
        m.serialize_entry("window", &[self.window.lo, self.window.hi])?;
        m.serialize_entry("rows", &Rows(self))?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for CohomologyTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            window: [i64; 2],
            rows: BTreeMap<String, BTreeMap<String, String>>,
        }
        let raw = Raw::deserialize(d)?;
        let window = Window::new(raw.window[0], raw.window[1]).map_err(D::Error::custom)?;
        let mut t = CohomologyTable::zero(raw.n, window);
        for (i, row) in &raw.rows {
            let i: usize = i.parse().map_err(D::Error::custom)?;
            if i > raw.n {
                return Err(D::Error::custom(format!("degree {i} exceeds n = {}", raw.n)));
            }
            for (j, v) in row {
                let j: i64 = j.parse().map_err(D::Error::custom)?;
                if !window.contains(j) {
                    return Err(D::Error::custom(format!("twist {j} outside window")));
                }
                let v = rational::parse(v).map_err(D::Error::custom)?;
                if v.is_negative() {
                    return Err(D::Error::custom("table entries must be nonnegative"));
                }
                *t.get_mut(i, j) = v;
            }
        }
        Ok(t)
    }
}

/// Strongest entrywise relation between two tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableOrdering {
    Equal,
    /// `≤` everywhere, strict somewhere.
    Less,
    /// `≥` everywhere, strict somewhere.
    Greater,
    Incomparable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SheafTerm {
    Bundle(BundleExpr),
    /// `O_{P^m}(d)` on a linear subspace.
    LinearSubspace { m: usize, d: i64 },
    /// A formal supernatural table with the given roots and rank-normalized scale.
    FormalSupernatural {
        roots: RootSequence,
        #[serde(with = "rational")]
        scale: Q,
    },
    ExplicitTable(CohomologyTable),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedTerm {
    #[serde(with = "rational", default = "one")]
    pub coeff: Q,
    #[serde(flatten)]
    pub term: SheafTerm,
}

fn one() -> Q {
    Q::one()
}

/// A finite formal sum `Σ c_k F_k` with positive rational `c_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SheafExpr {
    n: usize,
    terms: Vec<WeightedTerm>,
}

impl<'de> Deserialize<'de> for SheafExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            terms: Vec<WeightedTerm>,
        }
        let raw = Raw::deserialize(d)?;
        let mut out = SheafExpr::zero(raw.n);
        for t in raw.terms {
            out = out
                .plus(t.coeff, t.term)
                .map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}

impl SheafExpr {
    pub fn zero(n: usize) -> Self {
        SheafExpr { n, terms: vec![] }
    }

    pub fn bundle(b: BundleExpr) -> Self {
        SheafExpr {
            n: b.n(),
            terms: vec![WeightedTerm {
                coeff: Q::one(),
                term: SheafTerm::Bundle(b),
            }],
        }
    }

    pub fn line(n: usize, d: i64) -> Self {
        SheafExpr::bundle(BundleExpr::line(n, d))
    }

    pub fn linear_subspace(n: usize, m: usize, d: i64) -> Result<Self> {
        SheafExpr::zero(n).plus(Q::one(), SheafTerm::LinearSubspace { m, d })
    }

    pub fn supernatural(n: usize, roots: RootSequence, scale: Q) -> Result<Self> {
        SheafExpr::zero(n).plus(Q::one(), SheafTerm::FormalSupernatural { roots, scale })
    }

    pub fn table(t: CohomologyTable) -> Self {
        SheafExpr {
            n: t.n(),
            terms: vec![WeightedTerm {
                coeff: Q::one(),
                term: SheafTerm::ExplicitTable(t),
            }],
        }
    }

    /// Adds `c · term`, validating the term.
    pub fn plus(mut self, c: Q, term: SheafTerm) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::Invalid {
                field: "coeff",
                detail: format!("multiplicities must be positive, got {c}"),
            });
        }
        match &term {
            SheafTerm::Bundle(b) if b.n() != self.n => {
                return Err(Error::AmbientMismatch {
                    left: self.n,
                    right: b.n(),
                })
            }
            SheafTerm::LinearSubspace { m, .. } if *m > self.n => {
                return Err(Error::OutOfRange {
                    what: "linear subspace",
                    detail: format!("P^{m} inside P^{}", self.n),
                })
            }
            SheafTerm::FormalSupernatural { roots, scale } => {
                if roots.len() != self.n {
                    return Err(Error::LengthMismatch {
                        what: "root sequence",
                        expected: self.n,
                        found: roots.len(),
                    });
                }
                if !scale.is_positive() {
                    return Err(Error::Invalid {
                        field: "scale",
                        detail: "supernatural scale must be positive".into(),
                    });
                }
            }
            SheafTerm::ExplicitTable(t) if t.n() != self.n => {
                return Err(Error::AmbientMismatch {
                    left: self.n,
                    right: t.n(),
                })
            }
            _ => {}
        }
        self.terms.push(WeightedTerm { coeff: c, term });
        Ok(self)
    }

    pub fn sum(mut self, other: SheafExpr) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        self.terms.extend(other.terms);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[WeightedTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The underlying bundle when every term is a bundle with integral coefficient.
    pub fn as_bundle(&self) -> Option<BundleExpr> {
        let mut out = BundleExpr::zero(self.n);
        for t in &self.terms {
            match &t.term {
                SheafTerm::Bundle(b) if t.coeff.is_integer() => {
                    let k = t.coeff.to_integer();
                    let k = u64::try_from(k).ok()?;
                    out = out.direct_sum(&b.scale(k)).ok()?;
                }
                _ => return None,
            }
        }
        Some(out)
    }

    /// `O(d)` when the expression is exactly one line bundle.
    pub fn as_line(&self) -> Option<i64> {
        match self.terms.as_slice() {
            [t] if t.coeff.is_one() => match &t.term {
                SheafTerm::Bundle(b) => b.as_line(),
                _ => None,
            },
            _ => None,
        }
    }

    /// `h^•(F(j))` for a single twist.
    pub fn column(&self, j: i64) -> Result<Vec<Q>> {
        let mut col = vec![Q::zero(); self.n + 1];
        for t in &self.terms {
            let c = term_column(&t.term, self.n, j)?;
            for (acc, x) in col.iter_mut().zip(c) {
                *acc += &t.coeff * x;
            }
        }
        Ok(col)
    }

    pub fn chi(&self, j: i64) -> Result<Q> {
        Ok(self
            .column(j)?
            .iter()
            .enumerate()
            .map(|(i, x)| rational::sign_power(i as i64) * x)
            .sum())
    }

    /// `h^•((F ⊗ E)(j))` for a bundle `E`. Only bundle and linear-subspace
    /// terms qualify: the cohomology of a tensor product is not determined by tables.
    pub fn tensor_column(&self, e: &BundleExpr, j: i64) -> Result<Vec<Q>> {
        if e.n() != self.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: e.n(),
            });
        }
        let mut col = vec![Q::zero(); self.n + 1];
        for t in &self.terms {
            let h = match &t.term {
                SheafTerm::Bundle(b) => cohomology_of_bundle(&tensor(b, e)?, j),
                SheafTerm::LinearSubspace { m, d } => {
                    cohomology_of_bundle(&restrict_linear(e, *m)?, d + j)
                }
                SheafTerm::FormalSupernatural { .. } | SheafTerm::ExplicitTable(_) => {
                    return Err(Error::Unsupported(format!(
                        "tensor product with {self}: only bundle and linear-subspace terms are supported"
                    )))
                }
            };
            for (acc, x) in col.iter_mut().zip(h) {
                *acc += &t.coeff * qi(&x);
            }
        }
        Ok(col)
    }

    /// Rank, defined for bundle and formal supernatural terms.
    pub fn rank(&self) -> Result<Q> {
        let mut r = Q::zero();
        for t in &self.terms {
            let rk = match &t.term {
                SheafTerm::Bundle(b) => qi(&b.rank()),
                SheafTerm::FormalSupernatural { scale, .. } => scale.clone(),
                SheafTerm::LinearSubspace { m, .. } if *m == self.n => Q::one(),
                SheafTerm::LinearSubspace { .. } => Q::zero(),
                SheafTerm::ExplicitTable(_) => {
                    return Err(Error::Unsupported("rank of an explicit table".into()))
                }
            };
            r += &t.coeff * rk;
        }
        Ok(r)
    }
}

impl fmt::Display for SheafExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let body = match &t.term {
                    SheafTerm::Bundle(b) => b.to_string(),
                    SheafTerm::LinearSubspace { m, d } => format!("O_{{P^{m}}}({d})"),
                    SheafTerm::FormalSupernatural { roots, scale } => {
                        format!("Super{roots}×{}", rational::fmt(scale))
                    }
                    SheafTerm::ExplicitTable(t) => format!("Table{}", t.window()),
                };
                if t.coeff.is_one() {
                    body
                } else {
                    format!("{}·[{body}]", rational::fmt(&t.coeff))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn term_column(term: &SheafTerm, n: usize, j: i64) -> Result<Vec<Q>> {
    Ok(match term {
        SheafTerm::Bundle(b) => cohomology_of_bundle(b, j).iter().map(qi).collect(),
        SheafTerm::LinearSubspace { m, d } => {
            let mut col = vec![Q::zero(); n + 1];
            let h = bwb_cohomology(&Weight::zero(*m), d + j, *m)?;
            for (i, slot) in col.iter_mut().enumerate().take(m + 1) {
                *slot = qi(&h.dimension_in(i));
            }
            col
        }
        SheafTerm::FormalSupernatural { roots, scale } => supernatural_column(roots, scale, j),
        SheafTerm::ExplicitTable(t) => {
            if !t.window().contains(j) {
                return Err(Error::Unsupported(format!(
                    "explicit table on {} queried at twist {j}",
                    t.window()
                )));
            }
            t.column(j)
        }
    })
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

/// `scale · |∏(j − f_k)| / n!` placed in the unique degree `i` with `f_{i+1} < j < f_i`.
fn supernatural_column(f: &RootSequence, scale: &Q, j: i64) -> Vec<Q> {
    let n = f.len();
    let mut col = vec![Q::zero(); n + 1];
    if f.contains(j) {
        return col;
    }
    let degree = f.roots().iter().filter(|&&r| r > j).count();
    let prod: BigInt = f.roots().iter().map(|&r| BigInt::from(j - r)).product();
    col[degree] = scale * Q::new(prod.abs(), factorial(n));
    col
}

pub fn supernatural_table(f: &RootSequence, scale: &Q, window: Window) -> CohomologyTable {
    let n = f.len();
    let mut t = CohomologyTable::zero(n, window);
    for j in window.twists() {
        for (i, x) in supernatural_column(f, scale, j).into_iter().enumerate() {
            *t.get_mut(i, j) = x;
        }
    }
    t
}

pub fn cohomology_table(f: &SheafExpr, window: Window) -> Result<CohomologyTable> {
    let mut t = CohomologyTable::zero(f.n, window);
    for j in window.twists() {
        for (i, x) in f.column(j)?.into_iter().enumerate() {
            *t.get_mut(i, j) = x;
        }
    }
    Ok(t)
}

/// Rational polynomial in the twist variable, coefficients from degree 0 upward.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertPolynomial {
    #[serde(with = "rational::vec")]
    coeffs: Vec<Q>,
}

impl HilbertPolynomial {
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn eval(&self, j: i64) -> Q {
        let x = q(j);
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * &x + c)
    }

    /// Integer roots, strictly decreasing.
    pub fn integer_roots(&self, search: Window) -> Vec<i64> {
        let mut r: Vec<i64> = search.twists().filter(|&j| self.eval(j).is_zero()).collect();
        r.reverse();
        r
    }

    pub fn from_values(points: &[(i64, Q)]) -> Option<Self> {
        let a: Vec<Vec<Q>> = points
            .iter()
            .map(|(x, _)| {
                let x = q(*x);
                let mut p = Q::one();
                (0..points.len())
                    .map(|_| {
                        let v = p.clone();
                        p *= &x;
                        v
                    })
                    .collect()
            })
            .collect();
        let b: Vec<Q> = points.iter().map(|(_, y)| y.clone()).collect();
        linalg::solve(&a, &b).map(|coeffs| HilbertPolynomial { coeffs })
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "j".into(),
                _ => format!("j^{k}"),
            };
            let coeff = if k > 0 && c.is_one() {
                String::new()
            } else if k > 0 && *c == -Q::one() {
                "-".into()
            } else if k > 0 && !c.is_integer() {
                format!("({})", rational::fmt(c))
            } else {
                rational::fmt(c)
            };
            parts.push(format!("{coeff}{mono}"));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// Interpolates `χ(F(j))` through `n + 1` twists. Explicit tables interpolate
/// through the first `n + 1` columns of their window.
pub fn hilbert_polynomial(f: &SheafExpr) -> Result<HilbertPolynomial> {
    let start = f
        .terms
        .iter()
        .filter_map(|t| match &t.term {
            SheafTerm::ExplicitTable(tab) => Some(tab.window()),
            _ => None,
        })
        .try_fold(None::<Window>, |acc, w| match acc {
            None => Ok(Some(w)),
            Some(a) if a == w => Ok(Some(a)),
            Some(a) => Err(Error::WindowMismatch {
                a0: a.lo,
                a1: a.hi,
                b0: w.lo,
                b1: w.hi,
            }),
        })?;
    let lo = match start {
        Some(w) if w.width() < f.n + 1 => {
            return Err(Error::Unsupported(format!(
                "window {w} too narrow to interpolate a degree-{} polynomial",
                f.n
            )))
        }
        Some(w) => w.lo,
        None => 0,
    };
    let points: Vec<(i64, Q)> = (lo..=lo + f.n as i64)
        .map(|j| f.chi(j).map(|c| (j, c)))
        .collect::<Result<_>>()?;
    HilbertPolynomial::from_values(&points)
        .ok_or_else(|| Error::breach("Vandermonde system on distinct nodes was singular"))
}
