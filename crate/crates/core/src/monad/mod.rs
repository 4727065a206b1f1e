//! The monad attached to a collection `W = {O(−w_0), …, O(−w_n)}`.
//!
//! `W^⊥ = {E_0, …, E_n}` with `E_j = S_{λ(w)^j} Q* ⊗ O(w_n − n)`, the dual
//! collection satisfying `h^i(E_k(−w_j)) = N_W` exactly when `i = j = k`.

mod categorify;
mod pages;
mod strands;

pub use categorify::{corollary19, prop51_check, theorem18, Cor19Report, Prop51Report, TableVerdict, Theorem18Report};
pub use pages::{
    page_convergence, phi1_page, phi2_page, Convergence, ExtCertificate, Filtration, Orientation,
    PageEntry, Quotient, ResolutionShape, SpectralPage, SplitFlag, TwoTermReport,
};
pub use strands::{phi1_line_bundle_strands, pure_resolution, PureResolutionShape, StrandConclusion, TwoStrandReport};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::bwb::{supernatural_roots, BundleExpr};
use crate::error::{Error, Result};
use crate::linalg::det_bareiss;
use crate::weights::{dim_schur, DegreeSequence, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonadData {
    n: usize,
    w: Vec<i64>,
    mu: Weight,
    #[serde(serialize_with = "crate::ser_bigint")]
    n_w: BigInt,
    wperp: Vec<BundleExpr>,
}

/// `λ(d)^j` of length `m` for a strictly increasing `d` of length `m + 1`.
fn lambda(d: &[i64], j: usize) -> Vec<i64> {
    let m = d.len() - 1;
    (1..=m)
        .map(|i| {
            if i <= j {
                d[m] - d[i - 1] - (m - i) as i64
            } else {
                d[m] - d[i] - (m - i) as i64
            }
        })
        .collect()
}

/// `μ(W)_i = w_n − w_{i−1} − (n − i + 1)`, padded with a trailing zero.
pub fn mu_weight(w: &[i64]) -> Vec<i64> {
    let n = w.len() - 1;
    let mut mu: Vec<i64> = (1..=n)
        .map(|i| w[n] - w[i - 1] - (n - i + 1) as i64)
        .collect();
    mu.push(0);
    mu
}

/// `|det binom(w_n − w_{i−1} + j − 1, n)|` over `i, j = 1..=n+1`.
pub fn binomial_determinant(w: &[i64]) -> BigInt {
    let n = w.len() - 1;
    let m: Vec<Vec<BigInt>> = (1..=n + 1)
        .map(|i| {
            (1..=n + 1)
                .map(|j| {
                    let top = w[n] - w[i - 1] + j as i64 - 1;
                    if top < n as i64 {
                        BigInt::zero()
                    } else {
                        binomial(BigInt::from(top), BigInt::from(n))
                    }
                })
                .collect()
        })
        .collect();
    det_bareiss(&m).abs()
}

pub fn build_monad(w: &[i64], n: usize) -> Result<MonadData> {
    if w.len() != n + 1 {
        return Err(Error::LengthMismatch {
            what: "W",
            expected: n + 1,
            found: w.len(),
        });
    }
    DegreeSequence::new(w.to_vec()).map_err(|_| Error::NotStrictlyMonotone {
        what: "W",
        order: "increasing",
        parts: w.to_vec(),
    })?;
    let mu = Weight::new(mu_weight(w))?;
    let n_w = dim_schur(&mu, n + 1)?;
    let det = binomial_determinant(w);
    if n_w != det {
        return Err(Error::breach(format!(
            "N_W: Weyl dimension {n_w} but binomial determinant {det}"
        )));
    }
    let wperp = (0..=n)
        .map(|j| BundleExpr::schur(n, Weight::new(lambda(w, j))?, w[n] - n as i64))
        .collect::<Result<Vec<_>>>()?;
    let data = MonadData {
        n,
        w: w.to_vec(),
        mu,
        n_w,
        wperp,
    };
    for j in 0..=n {
        let expected: Vec<i64> = (0..=n).filter(|&k| k != j).map(|k| -w[k]).collect();
        if n > 0 {
            let roots = supernatural_roots(&data.wperp[j])?;
            if roots.roots() != expected.as_slice() {
                return Err(Error::breach(format!(
                    "E_{j} has roots {roots}, expected {expected:?}"
                )));
            }
        }
    }
    Ok(data)
}

impl MonadData {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> &[i64] {
        &self.w
    }

    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    pub fn n_w(&self) -> &BigInt {
        &self.n_w
    }

    pub fn wperp(&self) -> &[BundleExpr] {
        &self.wperp
    }

    pub fn e(&self, j: usize) -> &BundleExpr {
        &self.wperp[j]
    }

    /// Terms `O(−w_j) ⊠ E_j` of the resolution of the diagonal-supported sheaf.
    pub fn ew_terms(&self) -> Vec<(BundleExpr, BundleExpr)> {
        self.w
            .iter()
            .zip(&self.wperp)
            .map(|(&w, e)| (BundleExpr::line(self.n, -w), e.clone()))
            .collect()
    }

    /// `h^i(E_k(−w_j))` indexed `[k][j][i]`.
    pub fn orthogonality_cube(&self) -> Vec<Vec<Vec<BigInt>>> {
        self.wperp
            .iter()
            .map(|e| {
                self.w
                    .iter()
                    .map(|&w| crate::bwb::cohomology_of_bundle(e, -w))
                    .collect()
            })
            .collect()
    }

    /// Fails with the first `(i, j, k)` where `h^i(E_k(−w_j))` breaks the `N_W·δ` pattern.
    pub fn check_orthogonality(&self) -> Result<()> {
        for (k, by_j) in self.orthogonality_cube().iter().enumerate() {
            for (j, col) in by_j.iter().enumerate() {
                for (i, h) in col.iter().enumerate() {
                    let expected = if i == j && j == k {
                        self.n_w.clone()
                    } else {
                        BigInt::zero()
                    };
                    if *h != expected {
                        return Err(Error::breach(format!(
                            "h^{i}(E_{k}(−w_{j})) = {h}, expected {expected}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `j` with `−w_j = d`.
    pub fn position_of_twist(&self, d: i64) -> Option<usize> {
        self.w.iter().position(|&w| -w == d)
    }
}

/// Shape of the Eisenbud–Fløystad–Weyman pure resolution of a degree sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EFWShape {
    pub degrees: DegreeSequence,
    pub m: usize,
    pub weights: Vec<Weight>,
    #[serde(serialize_with = "ser_ranks")]
    pub ranks: Vec<BigInt>,
}

fn ser_ranks<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn efw_shape(d: &DegreeSequence, m: usize) -> Result<EFWShape> {
    if d.length() != m {
        return Err(Error::LengthMismatch {
            what: "degree sequence",
            expected: m + 1,
            found: d.length() + 1,
        });
    }
    let weights = (0..=m)
        .map(|j| Weight::new(lambda(d.degrees(), j)))
        .collect::<Result<Vec<_>>>()?;
    let ranks = weights
        .iter()
        .map(|w| dim_schur(w, m))
        .collect::<Result<Vec<_>>>()?;
    if ranks.iter().any(|b| !b.is_positive()) {
        return Err(Error::breach(format!("EFW ranks {ranks:?} must be positive")));
    }
    Ok(EFWShape {
        degrees: d.clone(),
        m,
        weights,
        ranks,
    })
}

impl EFWShape {
    pub fn render(&self) -> String {
        let terms: Vec<String> = self
            .degrees
            .degrees()
            .iter()
            .zip(&self.ranks)
            .map(|(d, b)| format!("A({})^{b}", -d))
            .collect();
        terms.join(" <- ")
    }
}

/// The EFW shape of `W` with `e` inserted, and the inserted position.
pub fn efw_insert(m: &MonadData, e: i64) -> Result<(EFWShape, usize)> {
    let d = DegreeSequence::new(m.w.clone())?.insert(e)?;
    let pos = d
        .degrees()
        .iter()
        .position(|&x| x == e)
        .ok_or_else(|| Error::breach("inserted degree missing"))?;
    let shape = efw_shape(&d, m.n + 1)?;
    if shape.ranks[pos] != m.n_w {
        return Err(Error::breach(format!(
            "EFW rank {} at inserted slot differs from N_W = {}",
            shape.ranks[pos], m.n_w
        )));
    }
    Ok((shape, pos))
}
