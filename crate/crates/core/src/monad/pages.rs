//! `E^1` pages of the two Fourier–Mukai transforms and their degeneration patterns.
//!
//! Differentials are never computed. A page is only read off when its shape
//! forces every differential that could matter to vanish, or when the abutment
//! is pinned down by the fact that `Φ_i^W(F)` is a sheaf in degree zero.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::strands::{phi1_line_bundle_strands, PureResolutionShape, PureTerm, TwoStrandReport};
use super::{build_monad, MonadData};
use crate::bwb::{ext_dims, BundleExpr};
use crate::error::{Error, Result};
use crate::ktheory::{rational_profile, K0Class};
use crate::rational::{self, qi, Q};
use crate::sheaves::{cohomology_table, CohomologyTable, SheafExpr, Window};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Phi1,
    Phi2,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Phi1 => "phi1",
            Orientation::Phi2 => "phi2",
        })
    }
}

/// `E^1_{p,q}`: `object` with multiplicity `mult = h^{−p}(…)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PageEntry {
    pub p: i64,
    pub q: usize,
    pub object: BundleExpr,
    #[serde(serialize_with = "crate::ser_bigint")]
    pub mult: BigInt,
}

impl PageEntry {
    pub fn total_degree(&self) -> i64 {
        self.p + self.q as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralPage {
    #[serde(rename = "kind")]
    orientation: Orientation,
    n: usize,
    w: Vec<i64>,
    entries: Vec<PageEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    line_bundle_source: Option<i64>,
}

impl SpectralPage {
    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn entries(&self) -> &[PageEntry] {
        &self.entries
    }

    pub fn entry(&self, p: i64, q: usize) -> Option<&PageEntry> {
        self.entries.iter().find(|e| e.p == p && e.q == q)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `χ`-profile of `Σ (−1)^{p+q} mult · [object]`.
    pub fn alternating_profile(&self) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.n + 1];
        for e in &self.entries {
            let sign = rational::sign_power(e.total_degree());
            let class = K0Class::of_bundle(&e.object);
            for (acc, x) in out.iter_mut().zip(class.chi_profile()) {
                *acc += &sign * qi(&e.mult) * qi(x);
            }
        }
        out
    }

    /// `Σ (−1)^{p+q} mult · rank(object)`, the rank of the abutment.
    pub fn alternating_rank(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| {
                let r = &e.mult * e.object.rank();
                if e.total_degree() % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    pub fn render(&self) -> String {
        if self.entries.is_empty() {
            return format!("{} page: empty\n", self.orientation);
        }
        let mut out = format!("{} page (p,q): object^mult\n", self.orientation);
        for e in &self.entries {
            out += &format!("  ({},{}): {}^{}\n", e.p, e.q, bracket(&e.object), e.mult);
        }
        out
    }
}

fn bracket(b: &BundleExpr) -> String {
    let s = b.to_string();
    if s.contains(' ') {
        format!("[{s}]")
    } else {
        s
    }
}

fn integral(x: &Q, what: impl FnOnce() -> String) -> Result<BigInt> {
    rational::as_integer(x).ok_or_else(|| {
        Error::Unsupported(format!("non-integral page multiplicity {} at {}", rational::fmt(x), what()))
    })
}

fn finish(
    orientation: Orientation,
    f: &SheafExpr,
    m: &MonadData,
    entries: Vec<PageEntry>,
) -> Result<SpectralPage> {
    let page = SpectralPage {
        orientation,
        n: m.n(),
        w: m.w().to_vec(),
        entries,
        line_bundle_source: if orientation == Orientation::Phi1 { f.as_line() } else { None },
    };
    let nw = qi(m.n_w());
    let expected: Vec<Q> = rational_profile(f)?.into_iter().map(|x| x * &nw).collect();
    if page.alternating_profile() != expected {
        return Err(Error::breach(format!(
            "{} page of {f} does not sum to N_W·[F] in K_0",
            page.orientation
        )));
    }
    Ok(page)
}

fn check_ambient(f: &SheafExpr, m: &MonadData) -> Result<()> {
    if f.n() != m.n() {
        return Err(Error::AmbientMismatch {
            left: f.n(),
            right: m.n(),
        });
    }
    Ok(())
}

/// `E^1_{p,q} = O(−w_q) ⊗ H^{−p}(E_q ⊗ F)`.
pub fn phi1_page(f: &SheafExpr, m: &MonadData) -> Result<SpectralPage> {
    check_ambient(f, m)?;
    let mut entries = Vec::new();
    for q in 0..=m.n() {
        let col = f.tensor_column(m.e(q), 0)?;
        for (i, h) in col.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            entries.push(PageEntry {
                p: -(i as i64),
                q,
                object: BundleExpr::line(m.n(), -m.w()[q]),
                mult: integral(h, || format!("({},{q})", -(i as i64)))?,
            });
        }
    }
    finish(Orientation::Phi1, f, m, entries)
}

/// `E^1_{p,q} = H^{−p}(F(−w_q)) ⊗ E_q`.
pub fn phi2_page(f: &SheafExpr, m: &MonadData) -> Result<SpectralPage> {
    check_ambient(f, m)?;
    let mut entries = Vec::new();
    for q in 0..=m.n() {
        let col = f.column(-m.w()[q])?;
        for (i, h) in col.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            entries.push(PageEntry {
                p: -(i as i64),
                q,
                object: m.e(q).clone(),
                mult: integral(h, || format!("({},{q})", -(i as i64)))?,
            });
        }
    }
    finish(Orientation::Phi2, f, m, entries)
}

/// One graded piece `object^{⊕mult}` sitting at column `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quotient {
    pub q: usize,
    pub object: BundleExpr,
    #[serde(serialize_with = "crate::ser_bigint")]
    pub mult: BigInt,
}

impl Quotient {
    pub fn bundle(&self) -> BundleExpr {
        let k: u64 = (&self.mult).try_into().expect("multiplicity fits in u64");
        self.object.scale(k)
    }
}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_one() {
            write!(f, "{}", self.object)
        } else {
            write!(f, "{}^{}", bracket(&self.object), self.mult)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitFlag {
    CertifiedSplit,
    ExtensionUnknown,
}

/// `dim Ext^1(higher, lower)` for one pair of graded pieces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtCertificate {
    pub lower: usize,
    pub higher: usize,
    #[serde(serialize_with = "crate::ser_bigint")]
    pub ext1: BigInt,
}

/// Graded pieces listed bottom (sub) to top (quotient).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Filtration {
    pub quotients: Vec<Quotient>,
    pub split: SplitFlag,
    pub certificates: Vec<ExtCertificate>,
}

impl Filtration {
    /// Orders by `q` and certifies splitting when `Ext^1(higher, lower) = 0` for every pair.
    pub fn new(mut quotients: Vec<Quotient>) -> Result<Self> {
        quotients.sort_by_key(|x| x.q);
        let mut certificates = Vec::new();
        for (a, lo) in quotients.iter().enumerate() {
            for hi in &quotients[a + 1..] {
                let ext = ext_dims(&hi.object, &lo.object)?;
                certificates.push(ExtCertificate {
                    lower: lo.q,
                    higher: hi.q,
                    ext1: ext.get(1).cloned().unwrap_or_default(),
                });
            }
        }
        let split = if certificates.iter().all(|c| c.ext1.is_zero()) {
            SplitFlag::CertifiedSplit
        } else {
            SplitFlag::ExtensionUnknown
        };
        Ok(Filtration {
            quotients,
            split,
            certificates,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    pub fn is_split(&self) -> bool {
        self.split == SplitFlag::CertifiedSplit
    }

    /// `⊕ object^{mult}`; only meaningful as the filtered object when split.
    pub fn associated_graded(&self, n: usize) -> Result<BundleExpr> {
        self.quotients
            .iter()
            .try_fold(BundleExpr::zero(n), |acc, x| acc.direct_sum(&x.bundle()))
    }

    /// Table of the filtered object, available only when the splitting is certified.
    pub fn table(&self, n: usize, window: Window) -> Result<CohomologyTable> {
        if !self.is_split() {
            return Err(Error::Unsupported(
                "table of a filtration whose extensions are not certified split".into(),
            ));
        }
        cohomology_table(&SheafExpr::bundle(self.associated_graded(n)?), window)
    }

    pub fn render(&self) -> String {
        if self.quotients.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.quotients.iter().map(|x| x.to_string()).collect();
        let sep = if self.is_split() { " ⊕ " } else { " | " };
        parts.join(sep)
    }
}

/// Single-row `Φ_2` page: `0 ← Φ ← T_0 ← T_1 ← ⋯ ← 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionShape {
    pub terms: Vec<Quotient>,
}

/// Entries in total degrees `0` and `1`: `0 ← Φ ← degree0 ← degree1 ← 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoTermReport {
    pub degree0: Filtration,
    pub degree1: Filtration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Convergence {
    Empty,
    TwoStrand(TwoStrandReport),
    Filtration(Filtration),
    PureResolution(PureResolutionShape),
    Resolution(ResolutionShape),
    TwoTerm(TwoTermReport),
    Indeterminate { reason: String },
}

impl Convergence {
    pub fn render(&self) -> String {
        match self {
            Convergence::Empty => "Φ = 0".into(),
            Convergence::TwoStrand(r) => r.render(),
            Convergence::Filtration(f) => format!(
                "filtration (bottom to top): {}  [{}]",
                f.quotients
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join("; "),
                split_word(f)
            ),
            Convergence::PureResolution(r) => r.render(),
            Convergence::Resolution(r) => {
                let mut s = "0 <- Φ".to_string();
                for t in &r.terms {
                    s += &format!(" <- {t}");
                }
                s + " <- 0"
            }
            Convergence::TwoTerm(t) => format!(
                "0 <- Φ <- {} <- {} <- 0  [degree 0 {}]",
                t.degree0.render(),
                t.degree1.render(),
                split_word(&t.degree0)
            ),
            Convergence::Indeterminate { reason } => format!("indeterminate: {reason}"),
        }
    }
}

fn split_word(f: &Filtration) -> &'static str {
    match f.split {
        SplitFlag::CertifiedSplit => "certified split",
        SplitFlag::ExtensionUnknown => "extensions unknown",
    }
}

fn quotients(entries: &[&PageEntry]) -> Vec<Quotient> {
    entries
        .iter()
        .map(|e| Quotient {
            q: e.q,
            object: e.object.clone(),
            mult: e.mult.clone(),
        })
        .collect()
}

/// Reads the abutment off a page when its shape forces degeneration.
pub fn page_convergence(page: &SpectralPage) -> Result<Convergence> {
    if page.entries.is_empty() {
        return Ok(Convergence::Empty);
    }
    if let (Orientation::Phi1, Some(d)) = (page.orientation, page.line_bundle_source) {
        let m = build_monad(&page.w, page.n)?;
        return Ok(Convergence::TwoStrand(phi1_line_bundle_strands(d, &m)?));
    }
    let all: Vec<&PageEntry> = page.entries.iter().collect();
    if all.iter().all(|e| e.total_degree() == 0) {
        return Ok(Convergence::Filtration(Filtration::new(quotients(&all))?));
    }
    if all.iter().all(|e| e.p == 0) {
        return Ok(match page.orientation {
            Orientation::Phi1 => Convergence::PureResolution(PureResolutionShape {
                terms: all
                    .iter()
                    .map(|e| PureTerm {
                        twist: -page.w[e.q],
                        rank: e.mult.clone(),
                    })
                    .collect(),
            }),
            Orientation::Phi2 => Convergence::Resolution(ResolutionShape {
                terms: quotients(&all),
            }),
        });
    }
    let deg0: Vec<&PageEntry> = all.iter().copied().filter(|e| e.total_degree() == 0).collect();
    let deg1: Vec<&PageEntry> = all.iter().copied().filter(|e| e.total_degree() == 1).collect();
    if deg0.len() + deg1.len() == all.len() {
        let top0 = deg0.iter().map(|e| e.q).max();
        let bottom1 = deg1.iter().map(|e| e.q).min();
        if let (Some(t), Some(b)) = (top0, bottom1) {
            if b > t {
                return Ok(Convergence::TwoTerm(TwoTermReport {
                    degree0: Filtration::new(quotients(&deg0))?,
                    degree1: Filtration::new(quotients(&deg1))?,
                }));
            }
        }
    }
    Ok(Convergence::Indeterminate {
        reason: format!(
            "entries in total degrees {:?} admit differentials that are not determined",
            {
                let mut d: Vec<i64> = all.iter().map(|e| e.total_degree()).collect();
                d.sort_unstable();
                d.dedup();
                d
            }
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sheaves::SheafTerm;
    use crate::weights::Weight;

    fn monad() -> MonadData {
        build_monad(&[0, 2, 3], 2).unwrap()
    }

    #[test]
    fn phi1_of_collection_member() {
        let m = monad();
        for (i, &w) in m.w().iter().enumerate() {
            let page = phi1_page(&SheafExpr::line(2, -w), &m).unwrap();
            assert_eq!(page.entries().len(), 1);
            let e = &page.entries()[0];
            assert_eq!((e.p, e.q, e.mult.clone()), (-(i as i64), i, BigInt::from(3)));
        }
    }

    #[test]
    fn line_in_plane_pages() {
        let m = monad();
        let l = SheafExpr::linear_subspace(2, 1, 0).unwrap();
        let p1 = phi1_page(&l, &m).unwrap();
        let ranks: Vec<(i64, usize, BigInt)> =
            p1.entries().iter().map(|e| (e.p, e.q, e.mult.clone())).collect();
        assert_eq!(ranks, vec![(0, 0, 2.into()), (0, 1, 3.into()), (0, 2, 1.into())]);
        match page_convergence(&p1).unwrap() {
            Convergence::PureResolution(r) => {
                assert_eq!(r.ranks(), vec![BigInt::from(2), 3.into(), 1.into()])
            }
            other => panic!("{other:?}"),
        }
        let p2 = phi2_page(&l, &m).unwrap();
        match page_convergence(&p2).unwrap() {
            Convergence::TwoTerm(t) => {
                assert_eq!(t.degree0.render(), "O(1) ⊕ (Sym^2 Q*)(1)");
                assert_eq!(t.degree1.render(), "Q*^2");
                assert_eq!(t.degree0.certificates[0].ext1, BigInt::zero());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn phi2_of_structure_sheaf_splits() {
        let m = monad();
        let page = phi2_page(&SheafExpr::line(2, 0), &m).unwrap();
        match page_convergence(&page).unwrap() {
            Convergence::Filtration(f) => {
                assert!(f.is_split());
                assert_eq!(f.render(), "O(1) ⊕ Q*");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_page() {
        let m = monad();
        let page = phi2_page(&SheafExpr::zero(2), &m).unwrap();
        assert_eq!(page_convergence(&page).unwrap(), Convergence::Empty);
    }

    #[test]
    fn fractional_multiplicity_is_refused() {
        let m = monad();
        let f = SheafExpr::zero(2)
            .plus(Q::new(1.into(), 2.into()), SheafTerm::Bundle(BundleExpr::line(2, 0)))
            .unwrap();
        assert!(matches!(phi2_page(&f, &m), Err(Error::Unsupported(_))));
        let s = SheafExpr::bundle(BundleExpr::schur(2, Weight::new(vec![1, 0]).unwrap(), 0).unwrap());
        assert!(phi2_page(&s, &m).is_ok());
    }
}
