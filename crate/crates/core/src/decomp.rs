//! Boij–Söderberg decomposition of cohomology tables into supernatural tables.
//!
//! Tables are normalized so that the Hilbert polynomial of the root sequence
//! `f` is `∏(j − f_k)/n!`. The equivariant normalization divides by the rank
//! of the Schur bundle with roots `f`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::bwb::equivariant_representative;
use crate::error::{Error, Result};
use crate::monad::MonadData;
use crate::rational::{self, q, qi, Q};
use crate::sheaves::{cohomology_table, supernatural_table, CohomologyTable, SheafExpr, Window};
use crate::weights::RootSequence;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BSSummand {
    pub roots: RootSequence,
    #[serde(with = "rational")]
    pub coeff: Q,
    /// Coefficient against the table of the equivariant bundle with these roots.
    #[serde(with = "rational")]
    pub equivariant_coeff: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BSDecomposition {
    pub summands: Vec<BSSummand>,
}

impl BSDecomposition {
    pub fn reconstruct(&self, n: usize, window: Window) -> CohomologyTable {
        self.summands
            .iter()
            .fold(CohomologyTable::zero(n, window), |acc, s| {
                acc.add(&supernatural_table(&s.roots, &s.coeff, window))
                    .expect("same shape")
            })
    }

    pub fn is_chain(&self) -> bool {
        self.summands
            .windows(2)
            .all(|p| p[1].roots.le(&p[0].roots) && p[1].roots != p[0].roots)
    }

    pub fn render(&self) -> String {
        if self.summands.is_empty() {
            return "0\n".into();
        }
        let mut out = String::new();
        for s in &self.summands {
            out += &format!(
                "roots {}: {} · π_f   ({} · γ(E_f), E_f = {})\n",
                s.roots,
                rational::fmt(&s.coeff),
                rational::fmt(&s.equivariant_coeff),
                equivariant_representative(&s.roots)
            );
        }
        out
    }
}

/// The largest root sequence compatible with the nonzero pattern of `t`: reading
/// rows `n` down to `1`, `f_i` sits just above the last twist where some row
/// `≥ i` is nonzero.
fn top_roots(t: &CohomologyTable) -> Result<RootSequence> {
    let n = t.n();
    let w = t.window();
    let mut roots = vec![0i64; n];
    let mut floor: Option<i64> = None;
    for i in (1..=n).rev() {
        let last = w
            .twists()
            .rev()
            .find(|&j| (i..=n).any(|l| !t.get(l, j).is_zero()))
            .ok_or_else(|| {
                Error::NotDecomposable(format!(
                    "rows ≥ {i} vanish on {w}; only tables of full support decompose"
                ))
            })?;
        if last == w.hi() {
            return Err(Error::NotDecomposable(format!(
                "row {i} is nonzero at the right edge of {w}; widen the window"
            )));
        }
        let f = match floor {
            Some(prev) => (last + 1).max(prev + 1),
            None => last + 1,
        };
        roots[i - 1] = f;
        floor = Some(f);
    }
    RootSequence::new(roots)
}

/// Greedy decomposition along a descending chain of root sequences.
pub fn bs_decompose(t: &CohomologyTable) -> Result<BSDecomposition> {
    let n = t.n();
    let window = t.window();
    if t.has_negative() {
        return Err(Error::NotDecomposable("negative entries".into()));
    }
    let budget = 4 * window.width() * (n + 1);
    let mut rest = t.clone();
    let mut summands: Vec<BSSummand> = Vec::new();
    for _ in 0..budget {
        if rest.is_zero() {
            return Ok(BSDecomposition { summands });
        }
        let f = top_roots(&rest)?;
        if let Some(prev) = summands.last() {
            if !f.le(&prev.roots) || f == prev.roots {
                return Err(Error::NotDecomposable(format!(
                    "root sequence {f} breaks the chain after {}",
                    prev.roots
                )));
            }
        }
        let unit = supernatural_table(&f, &q(1), window);
        let mut coeff: Option<Q> = None;
        for i in 0..=n {
            for j in window.twists() {
                let u = unit.get(i, j);
                if u.is_zero() {
                    continue;
                }
                let r = rest.get(i, j) / u;
                if coeff.as_ref().is_none_or(|c| r < *c) {
                    coeff = Some(r);
                }
            }
        }
        let coeff = coeff.ok_or_else(|| {
            Error::NotDecomposable(format!("supernatural table of {f} vanishes on {window}"))
        })?;
        if !coeff.is_positive() {
            return Err(Error::NotDecomposable(format!(
                "table does not dominate any multiple of the {f} table"
            )));
        }
        rest = rest.sub_unchecked(&unit.scale(&coeff));
        let rank = qi(&equivariant_representative(&f).rank());
        summands.push(BSSummand {
            equivariant_coeff: &coeff / rank,
            roots: f,
            coeff,
        });
    }
    Err(Error::NotDecomposable(format!(
        "step budget {budget} exhausted"
    )))
}

pub fn bs_decompose_sheaf(f: &SheafExpr, window: Window) -> Result<BSDecomposition> {
    bs_decompose(&cohomology_table(f, window)?)
}

/// `a_i = T_{i,−w_i}/N_W` when `T = Σ a_i γ(E_i)` holds on the whole window.
pub fn hypothesis_check_wperp(t: &CohomologyTable, m: &MonadData) -> Result<Option<Vec<Q>>> {
    if t.n() != m.n() {
        return Err(Error::AmbientMismatch {
            left: t.n(),
            right: m.n(),
        });
    }
    let w = t.window();
    let (lo, hi) = (-m.w()[m.n()] - 1, -m.w()[0] + 1);
    if w.lo() > lo || w.hi() < hi {
        return Err(Error::WindowMismatch {
            a0: w.lo(),
            a1: w.hi(),
            b0: lo,
            b1: hi,
        });
    }
    let nw = qi(m.n_w());
    let a: Vec<Q> = (0..=m.n()).map(|i| t.get(i, -m.w()[i]) / &nw).collect();
    let mut sum = CohomologyTable::zero(m.n(), w);
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        let e = cohomology_table(&SheafExpr::bundle(m.e(i).clone()), w)?;
        sum = sum.add(&e.scale(ai))?;
    }
    Ok((sum == *t).then_some(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bwb::BundleExpr;
    use crate::monad::build_monad;
    use crate::rational::frac;
    use crate::sheaves::SheafTerm;
    use crate::weights::Weight;

    fn roots(v: &[i64]) -> RootSequence {
        RootSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn formal_sum_decomposes() {
        let e1 = BundleExpr::schur(2, Weight::new(vec![2, 0]).unwrap(), 1).unwrap();
        let f = SheafExpr::bundle(BundleExpr::q_dual(2))
            .plus(frac(1, 3), SheafTerm::Bundle(e1))
            .unwrap();
        let w = Window::new(-6, 4).unwrap();
        let d = bs_decompose_sheaf(&f, w).unwrap();
        let got: Vec<(RootSequence, Q, Q)> = d
            .summands
            .iter()
            .map(|s| (s.roots.clone(), s.coeff.clone(), s.equivariant_coeff.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                (roots(&[0, -2]), q(2), q(1)),
                (roots(&[0, -3]), q(1), frac(1, 3)),
            ]
        );
        assert!(d.is_chain());
        assert_eq!(d.reconstruct(2, w), cohomology_table(&f, w).unwrap());
    }

    #[test]
    fn split_bundle_on_line() {
        let b = BundleExpr::line(1, 0).direct_sum(&BundleExpr::line(1, -1)).unwrap();
        let d = bs_decompose_sheaf(&SheafExpr::bundle(b), Window::new(-5, 5).unwrap()).unwrap();
        let got: Vec<(RootSequence, Q)> =
            d.summands.iter().map(|s| (s.roots.clone(), s.coeff.clone())).collect();
        assert_eq!(got, vec![(roots(&[0]), q(1)), (roots(&[-1]), q(1))]);
    }

    #[test]
    fn supernatural_is_idempotent() {
        let f = roots(&[3, 0, -4]);
        let w = Window::new(-8, 6).unwrap();
        let d = bs_decompose(&supernatural_table(&f, &frac(5, 2), w)).unwrap();
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].coeff, frac(5, 2));
    }

    #[test]
    fn narrow_window_is_refused() {
        let w = Window::new(-2, 0).unwrap();
        assert!(matches!(
            bs_decompose_sheaf(&SheafExpr::line(2, 0), w),
            Err(Error::NotDecomposable(_))
        ));
    }

    #[test]
    fn wperp_membership() {
        let m = build_monad(&[0, 2, 3], 2).unwrap();
        let w = Window::new(-6, 4).unwrap();
        for i in 0..=2 {
            let t = cohomology_table(&SheafExpr::bundle(m.e(i).clone()), w).unwrap();
            let mut e = vec![q(0); 3];
            e[i] = q(1);
            assert_eq!(hypothesis_check_wperp(&t, &m).unwrap(), Some(e));
        }
        let t = cohomology_table(&SheafExpr::line(2, -1), w).unwrap();
        assert_eq!(hypothesis_check_wperp(&t, &m).unwrap(), None);
    }
}
