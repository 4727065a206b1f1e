//! `Φ_2^W` as a categorification of Boij–Söderberg decompositions supported on `W^⊥`.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use super::pages::{page_convergence, phi2_page, Convergence, Filtration, Quotient};
use super::MonadData;
use crate::bwb::supernatural_roots;
use crate::decomp::hypothesis_check_wperp;
use crate::error::{Error, Result};
use crate::rational::{self, qi, Q};
use crate::sheaves::{cohomology_table, CohomologyTable, SheafExpr, SheafTerm, Window};
use crate::weights::RootSequence;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableVerdict {
    pub window: [i64; 2],
    /// `Σ N_W a_i γ(E_i)`, the table of the split filtered object.
    pub quotient_sum: CohomologyTable,
    pub scaled_source: CohomologyTable,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem18Report {
    #[serde(with = "rational::vec")]
    pub a: Vec<Q>,
    pub filtration: Filtration,
    pub verdict: TableVerdict,
}

impl Theorem18Report {
    pub fn render(&self) -> String {
        let a: Vec<String> = self.a.iter().map(rational::fmt).collect();
        let quotients: Vec<String> = self.filtration.quotients.iter().map(|x| x.to_string()).collect();
        let mut out = format!("a = ({})\n", a.join(", "));
        out += &format!(
            "filtration quotients (bottom to top): {}\n",
            if quotients.is_empty() { "none".to_string() } else { quotients.join("; ") }
        );
        for c in &self.filtration.certificates {
            out += &format!("Ext^1(E_{}, E_{}) = {}\n", c.higher, c.lower, c.ext1);
        }
        out += &format!(
            "γ(Φ_2(F)) = N_W·γ(F) on [{},{}]: {}\n",
            self.verdict.window[0], self.verdict.window[1], self.verdict.equal
        );
        out
    }
}

/// For `F` whose table is `Σ a_i γ(E_i)` with `a_i ≥ 0`, `Φ_2^W(F)` is filtered
/// with quotients `E_i^{⊕N_W a_i}` and `γ(Φ_2^W(F)) = N_W γ(F)`.
pub fn theorem18(f: &SheafExpr, m: &MonadData, window: Window) -> Result<Theorem18Report> {
    let table = cohomology_table(f, window)?;
    let a = hypothesis_check_wperp(&table, m)?.ok_or_else(|| {
        Error::Hypothesis(format!(
            "γ({f}) is not a nonnegative combination of the γ(E_i) on {window}"
        ))
    })?;
    let nw = qi(m.n_w());
    let mut expected = Vec::new();
    for (i, ai) in a.iter().enumerate() {
        let k = rational::as_integer(&(ai * &nw)).ok_or_else(|| {
            Error::Hypothesis(format!("N_W·a_{i} = {} is not an integer", rational::fmt(&(ai * &nw))))
        })?;
        if k.is_positive() {
            expected.push(Quotient {
                q: i,
                object: m.e(i).clone(),
                mult: k,
            });
        }
    }
    let filtration = match page_convergence(&phi2_page(f, m)?)? {
        Convergence::Empty => Filtration::new(vec![])?,
        Convergence::Filtration(fl) => fl,
        other => {
            return Err(Error::breach(format!(
                "Φ_2 page under the W^⊥ hypothesis is not antidiagonal: {}",
                other.render()
            )))
        }
    };
    if filtration.quotients != expected {
        return Err(Error::breach("Φ_2 page quotients differ from E_i^{N_W a_i}"));
    }
    let mut quotient_sum = CohomologyTable::zero(m.n(), window);
    for x in &filtration.quotients {
        let t = cohomology_table(&SheafExpr::bundle(x.object.clone()), window)?;
        quotient_sum = quotient_sum.add(&t.scale(&qi(&x.mult)))?;
    }
    let scaled_source = table.scale(&nw);
    let equal = quotient_sum == scaled_source;
    if !equal {
        return Err(Error::breach(format!(
            "Σ quotient tables differ from N_W·γ(F) on {window}"
        )));
    }
    Ok(Theorem18Report {
        a,
        filtration,
        verdict: TableVerdict {
            window: [window.lo(), window.hi()],
            quotient_sum,
            scaled_source,
            equal,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cor19Report {
    pub i: usize,
    #[serde(serialize_with = "crate::ser_bigint")]
    pub m: BigInt,
    #[serde(with = "rational")]
    pub rank_f: Q,
    #[serde(serialize_with = "crate::ser_bigint")]
    pub rank_e: BigInt,
    pub single_entry: bool,
}

impl Cor19Report {
    pub fn render(&self) -> String {
        format!(
            "i = {}\nΦ_2(F) ≅ E_{}^{}\nm·rank E_i = {}·{} = N_W·rank F\n",
            self.i, self.i, self.m, self.m, self.rank_e
        )
    }
}

fn roots_of(f: &SheafExpr) -> Result<RootSequence> {
    let mut found: Option<RootSequence> = None;
    for t in f.terms() {
        let rs = match &t.term {
            SheafTerm::Bundle(b) => {
                let mut local: Vec<RootSequence> = Vec::new();
                for s in b.summands() {
                    let single = crate::bwb::BundleExpr::schur(b.n(), s.weight, s.twist)?;
                    local.push(supernatural_roots(&single)?);
                }
                local
            }
            SheafTerm::FormalSupernatural { roots, .. } => vec![roots.clone()],
            _ => {
                return Err(Error::Unsupported(format!(
                    "supernatural roots of {f}: only bundle and formal supernatural terms"
                )))
            }
        };
        for r in rs {
            match &found {
                None => found = Some(r),
                Some(prev) if *prev == r => {}
                Some(prev) => {
                    return Err(Error::Hypothesis(format!(
                        "{f} is not supernatural: roots {prev} and {r}"
                    )))
                }
            }
        }
    }
    found.ok_or_else(|| Error::Hypothesis("the zero sheaf has no root sequence".into()))
}

/// For supernatural `F` with roots `{−w_0,…,−w_n} ∖ {−w_i}`: `Φ_2^W(F) ≅ E_i^{⊕m}`
/// with `m·rank E_i = N_W·rank F`.
pub fn corollary19(f: &SheafExpr, m: &MonadData) -> Result<Cor19Report> {
    let roots = roots_of(f)?;
    let i = (0..=m.n())
        .find(|&i| {
            let c: Vec<i64> = (0..=m.n()).filter(|&k| k != i).map(|k| -m.w()[k]).collect();
            roots.roots() == c.as_slice()
        })
        .ok_or_else(|| {
            Error::Hypothesis(format!(
                "roots {roots} are not {{−w}} minus one element for W = {:?}",
                m.w()
            ))
        })?;
    let h = f.column(-m.w()[i])?[i].clone();
    let mult = rational::as_integer(&h)
        .ok_or_else(|| Error::Hypothesis(format!("m = {} is not an integer", rational::fmt(&h))))?;
    let rank_f = f.rank()?;
    let rank_e = m.e(i).rank();
    if qi(&mult) * qi(&rank_e) != qi(m.n_w()) * &rank_f {
        return Err(Error::breach("m·rank E_i differs from N_W·rank F"));
    }
    let page = phi2_page(f, m)?;
    let single = matches!(page.entries(), [e] if e.p == -(i as i64) && e.q == i && e.mult == mult);
    if !single {
        return Err(Error::breach(format!(
            "Φ_2 page of a supernatural sheaf is not the single entry E_{i}^{mult}"
        )));
    }
    Ok(Cor19Report {
        i,
        m: mult,
        rank_f,
        rank_e,
        single_entry: single,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop51Report {
    pub window: [i64; 2],
    /// Twists where every degree attains equality.
    pub equality_columns: Vec<i64>,
    /// `(i, d)` with `h^i(Φ(d)) > N_W h^i(F(d))`.
    pub strict: Vec<(usize, i64)>,
}

impl Prop51Report {
    pub fn render(&self) -> String {
        format!(
            "γ(Φ_2(F)) ≥ N_W·γ(F) on [{},{}]\nequality at d = {:?}\nstrict at (i,d) = {:?}\n",
            self.window[0], self.window[1], self.equality_columns, self.strict
        )
    }
}

/// Checks `h^i(Φ(d)) ≥ N_W·h^i(F(d))` on the window, with equality forced at
/// `d ∈ {−w_0,…,−w_n}`, `d > −w_0` and `d < −w_n`.
pub fn prop51_check(
    f: &SheafExpr,
    m: &MonadData,
    phi2_table: &CohomologyTable,
    window: Window,
) -> Result<Prop51Report> {
    if phi2_table.window() != window {
        return Err(Error::WindowMismatch {
            a0: phi2_table.window().lo(),
            a1: phi2_table.window().hi(),
            b0: window.lo(),
            b1: window.hi(),
        });
    }
    if phi2_table.n() != m.n() || f.n() != m.n() {
        return Err(Error::AmbientMismatch {
            left: phi2_table.n(),
            right: m.n(),
        });
    }
    let nw = qi(m.n_w());
    let (top, bottom) = (-m.w()[0], -m.w()[m.n()]);
    let mut equality_columns = Vec::new();
    let mut strict = Vec::new();
    for d in window.twists() {
        let col = f.column(d)?;
        let forced = d > top || d < bottom || m.position_of_twist(d).is_some();
        let mut all_equal = true;
        for (i, h) in col.iter().enumerate() {
            let lower = h * &nw;
            let got = phi2_table.get(i, d);
            if *got < lower {
                return Err(Error::breach(format!(
                    "h^{i}(Φ({d})) = {} < N_W·h^{i}(F({d})) = {}",
                    rational::fmt(got),
                    rational::fmt(&lower)
                )));
            }
            if *got > lower {
                if forced {
                    return Err(Error::breach(format!(
                        "strict inequality at (i={i}, d={d}) where equality is forced"
                    )));
                }
                all_equal = false;
                strict.push((i, d));
            }
        }
        if all_equal {
            equality_columns.push(d);
        }
    }
    Ok(Prop51Report {
        window: [window.lo(), window.hi()],
        equality_columns,
        strict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bwb::BundleExpr;
    use crate::monad::build_monad;
    use crate::rational::frac;
    use crate::weights::Weight;

    fn win() -> Window {
        Window::new(-6, 4).unwrap()
    }

    fn example_sheaf() -> SheafExpr {
        let e1 = BundleExpr::schur(2, Weight::new(vec![2, 0]).unwrap(), 1).unwrap();
        SheafExpr::bundle(BundleExpr::q_dual(2))
            .plus(frac(1, 3), SheafTerm::Bundle(e1))
            .unwrap()
    }

    #[test]
    fn formal_sum_categorifies() {
        let m = build_monad(&[0, 2, 3], 2).unwrap();
        let r = theorem18(&example_sheaf(), &m, win()).unwrap();
        assert_eq!(r.a, vec![frac(0, 1), frac(1, 3), frac(1, 1)]);
        assert_eq!(r.filtration.render(), "(Sym^2 Q*)(1) ⊕ Q*^3");
        assert!(r.verdict.equal);
    }

    #[test]
    fn zero_sheaf() {
        let m = build_monad(&[0, 2, 3], 2).unwrap();
        let r = theorem18(&SheafExpr::zero(2), &m, win()).unwrap();
        assert!(r.a.iter().all(|x| *x == Q::from_integer(0.into())));
        assert!(r.filtration.is_empty());
    }

    #[test]
    fn structure_sheaf_fails_hypothesis() {
        let m = build_monad(&[0, 2, 3], 2).unwrap();
        assert!(matches!(
            theorem18(&SheafExpr::line(2, 0), &m, win()),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn supernatural_images() {
        let m = build_monad(&[0, 2, 3], 2).unwrap();
        for i in 0..=2 {
            let r = corollary19(&SheafExpr::bundle(m.e(i).clone()), &m).unwrap();
            assert_eq!((r.i, r.m.clone()), (i, BigInt::from(3)));
            let r = corollary19(&SheafExpr::bundle(m.e(i).scale(2)), &m).unwrap();
            assert_eq!(r.m, BigInt::from(6));
        }
        let f = SheafExpr::supernatural(2, RootSequence::new(vec![0, -3]).unwrap(), frac(3, 1)).unwrap();
        let r = corollary19(&f, &m).unwrap();
        assert_eq!((r.i, r.m.clone()), (1, BigInt::from(3)));
        assert!(corollary19(&SheafExpr::line(2, 0), &m).is_err());
    }

    #[test]
    fn structure_sheaf_bound() {
        let m = build_monad(&[0, 2, 3], 2).unwrap();
        let phi = cohomology_table(
            &SheafExpr::bundle(BundleExpr::line(2, 1).direct_sum(&BundleExpr::q_dual(2)).unwrap()),
            win(),
        )
        .unwrap();
        let r = prop51_check(&SheafExpr::line(2, 0), &m, &phi, win()).unwrap();
        assert_eq!(r.equality_columns, vec![-6, -5, -4, -3, -2, 0, 1, 2, 3, 4]);
        assert_eq!(r.strict, vec![(0, -1), (1, -1)]);
    }
}
