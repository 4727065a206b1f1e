//! `Φ_1^W` of line bundles and pure resolutions of regular sheaves.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::pages::phi1_page;
use super::{efw_insert, EFWShape, MonadData};
use crate::error::{Error, Result};
use crate::ktheory::{rational_profile, K0Class};
use crate::rational::{self, qi, Q};
use crate::sheaves::SheafExpr;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PureTerm {
    pub twist: i64,
    #[serde(serialize_with = "crate::ser_bigint")]
    pub rank: BigInt,
}

/// `0 ← F ← O(−w_0)^{b_0} ← ⋯ ← O(−w_n)^{b_n} ← 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PureResolutionShape {
    pub terms: Vec<PureTerm>,
}

impl PureResolutionShape {
    pub fn ranks(&self) -> Vec<BigInt> {
        self.terms.iter().map(|t| t.rank.clone()).collect()
    }

    pub fn render(&self) -> String {
        let mut s = "0 <- Φ".to_string();
        for t in &self.terms {
            s += &format!(" <- O({})^{}", t.twist, t.rank);
        }
        s + " <- 0"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StrandConclusion {
    /// `d = −w_k`: `Φ_1(O(d)) ≅ O(d)^{N_W}`.
    OnCollection { position: usize },
    /// `d > −w_0`: strand A is empty and `Φ_1(O(d)) ≅ O(d)^{N_W}`.
    AboveCollection,
    /// `d < −w_n`: strand B is empty and `Φ_1(O(d)) ≅ O(d)^{N_W}`.
    BelowCollection,
    /// `−w_i > d > −w_{i+1}`: `Φ_1(O(d)) ≅ ker A ⊕ coker B`.
    KerAPlusCokerB { index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandTerm {
    pub q: usize,
    pub twist: i64,
    #[serde(serialize_with = "crate::ser_bigint")]
    pub rank: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EfwWitness {
    pub shape: EFWShape,
    pub inserted_position: usize,
}

/// The two strands of the `Φ_1^W(O(d))` page.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoStrandReport {
    pub d: i64,
    #[serde(serialize_with = "crate::ser_bigint")]
    pub n_w: BigInt,
    /// Cohomological degree `i` of strand A; strand B sits in degree `i + 1`.
    pub strand_a: Vec<StrandTerm>,
    pub strand_b: Vec<StrandTerm>,
    pub witness: Option<EfwWitness>,
    pub conclusion: StrandConclusion,
    pub class_identity: bool,
}

impl TwoStrandReport {
    pub fn render(&self) -> String {
        let strand = |s: &[StrandTerm]| -> String {
            if s.is_empty() {
                return "0".into();
            }
            s.iter()
                .map(|t| format!("O({})^{}", t.twist, t.rank))
                .collect::<Vec<_>>()
                .join(" <- ")
        };
        let head = match &self.conclusion {
            StrandConclusion::OnCollection { .. }
            | StrandConclusion::AboveCollection
            | StrandConclusion::BelowCollection => {
                format!("Φ_1(O({})) ≅ O({})^{}", self.d, self.d, self.n_w)
            }
            StrandConclusion::KerAPlusCokerB { .. } => {
                format!("Φ_1(O({})) ≅ ker A ⊕ coker B", self.d)
            }
        };
        let mut out = format!("{head}\n  A: {}\n  B: {}", strand(&self.strand_a), strand(&self.strand_b));
        if let Some(w) = &self.witness {
            out += &format!(
                "\n  EFW witness {:?}: ranks [{}], inserted slot {}",
                w.shape.degrees.degrees(),
                w.shape.ranks.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(", "),
                w.inserted_position
            );
        }
        out
    }
}

/// Splits the `Φ_1^W(O(d))` page into strand A in degree `i` (columns `≤ i`)
/// and strand B in degree `i + 1` (columns `> i`), where `−w_i > d > −w_{i+1}`,
/// and matches their ranks against the EFW complex of `W` with `−d` inserted.
pub fn phi1_line_bundle_strands(d: i64, m: &MonadData) -> Result<TwoStrandReport> {
    let n = m.n();
    let page = phi1_page(&SheafExpr::line(n, d), m)?;
    let term = |q: usize, rank: &BigInt| StrandTerm {
        q,
        twist: -m.w()[q],
        rank: rank.clone(),
    };
    if let Some(k) = m.position_of_twist(d) {
        let ok = matches!(page.entries(), [e] if e.p == -(k as i64) && e.q == k && e.mult == *m.n_w());
        if !ok {
            return Err(Error::breach(format!(
                "Φ_1 page of O({d}) is not a single N_W entry at ({}, {k})",
                -(k as i64)
            )));
        }
        return Ok(TwoStrandReport {
            d,
            n_w: m.n_w().clone(),
            strand_a: vec![term(k, m.n_w())],
            strand_b: vec![],
            witness: None,
            conclusion: StrandConclusion::OnCollection { position: k },
            class_identity: true,
        });
    }
    // Number of collection twists above d; strand A lives in degree i = above − 1.
    let above = m.w().iter().filter(|&&w| -w > d).count();
    let mut strand_a = Vec::new();
    let mut strand_b = Vec::new();
    for e in page.entries() {
        let degree = (-e.p) as usize;
        if e.q < above && degree + 1 == above {
            strand_a.push(term(e.q, &e.mult));
        } else if e.q >= above && degree == above {
            strand_b.push(term(e.q, &e.mult));
        } else {
            return Err(Error::breach(format!(
                "Φ_1 page of O({d}) has an entry off both strands at ({}, {})",
                e.p, e.q
            )));
        }
    }
    if strand_a.len() != above || strand_b.len() != n + 1 - above {
        return Err(Error::breach(format!("Φ_1 page of O({d}) has a gap in a strand")));
    }
    let (shape, pos) = efw_insert(m, -d)?;
    for t in strand_a.iter().chain(&strand_b) {
        let slot = if t.q < above { t.q } else { t.q + 1 };
        if shape.ranks[slot] != t.rank {
            return Err(Error::breach(format!(
                "strand rank {} at column {} differs from EFW rank {}",
                t.rank, t.q, shape.ranks[slot]
            )));
        }
    }
    let conclusion = match above {
        0 => StrandConclusion::AboveCollection,
        a if a == n + 1 => StrandConclusion::BelowCollection,
        a => StrandConclusion::KerAPlusCokerB { index: a - 1 },
    };
    Ok(TwoStrandReport {
        d,
        n_w: m.n_w().clone(),
        strand_a,
        strand_b,
        witness: Some(EfwWitness {
            shape,
            inserted_position: pos,
        }),
        conclusion,
        class_identity: true,
    })
}

/// Pure resolution of type `(w_0, …, w_n)` with `b_i = h^0(E_i ⊗ F)`, provided
/// every `E_i ⊗ F` has vanishing higher cohomology.
pub fn pure_resolution(f: &SheafExpr, m: &MonadData) -> Result<PureResolutionShape> {
    if f.n() != m.n() {
        return Err(Error::AmbientMismatch {
            left: f.n(),
            right: m.n(),
        });
    }
    let mut terms = Vec::with_capacity(m.n() + 1);
    for (q, e) in m.wperp().iter().enumerate() {
        let col = f.tensor_column(e, 0)?;
        if let Some(degree) = (1..col.len()).find(|&i| !col[i].is_zero()) {
            return Err(Error::NotRegular { degree, index: q });
        }
        let rank = rational::as_integer(&col[0]).ok_or_else(|| {
            Error::Unsupported(format!("non-integral rank h^0(E_{q} ⊗ F) = {}", rational::fmt(&col[0])))
        })?;
        terms.push(PureTerm {
            twist: -m.w()[q],
            rank,
        });
    }
    let mut lhs = vec![Q::zero(); m.n() + 1];
    for (i, t) in terms.iter().enumerate() {
        let class = K0Class::line(m.n(), t.twist);
        for (acc, x) in lhs.iter_mut().zip(class.chi_profile()) {
            *acc += rational::sign_power(i as i64) * qi(&t.rank) * qi(x);
        }
    }
    let nw = qi(m.n_w());
    let rhs: Vec<Q> = rational_profile(f)?.into_iter().map(|x| x * &nw).collect();
    if lhs != rhs {
        return Err(Error::breach("pure resolution ranks do not sum to N_W·[F]"));
    }
    Ok(PureResolutionShape { terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monad::build_monad;

    #[test]
    fn strands_between_collection_twists() {
        let m = build_monad(&[0, 2, 3], 2).unwrap();
        let r = phi1_line_bundle_strands(-1, &m).unwrap();
        assert_eq!(r.conclusion, StrandConclusion::KerAPlusCokerB { index: 0 });
        let ranks = |s: &[StrandTerm]| s.iter().map(|t| t.rank.clone()).collect::<Vec<_>>();
        assert_eq!(ranks(&r.strand_a), vec![BigInt::from(1)]);
        assert_eq!(ranks(&r.strand_b), vec![BigInt::from(3), 1.into()]);
        let w = r.witness.unwrap();
        assert_eq!(w.shape.ranks, [1, 3, 3, 1].map(BigInt::from));
        assert_eq!(w.inserted_position, 1);
    }

    #[test]
    fn extreme_twists() {
        let m = build_monad(&[0, 2, 3], 2).unwrap();
        assert_eq!(
            phi1_line_bundle_strands(2, &m).unwrap().conclusion,
            StrandConclusion::AboveCollection
        );
        let below = phi1_line_bundle_strands(-5, &m).unwrap();
        assert_eq!(below.conclusion, StrandConclusion::BelowCollection);
        assert!(below.strand_b.is_empty());
        assert_eq!(
            phi1_line_bundle_strands(-2, &m).unwrap().conclusion,
            StrandConclusion::OnCollection { position: 1 }
        );
    }

    #[test]
    fn pure_resolutions() {
        let m = build_monad(&[0, 2, 3], 2).unwrap();
        let l = SheafExpr::linear_subspace(2, 1, 0).unwrap();
        assert_eq!(pure_resolution(&l, &m).unwrap().ranks(), [2, 3, 1].map(BigInt::from));
        assert_eq!(
            pure_resolution(&SheafExpr::line(2, 0), &m).unwrap().ranks(),
            [3, 0, 0].map(BigInt::from)
        );
        assert!(matches!(
            pure_resolution(&SheafExpr::line(2, -1), &m),
            Err(Error::NotRegular { .. })
        ));
    }
}
