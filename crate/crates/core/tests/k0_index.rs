mod common;

use common::{collection_grid, smith_index};
use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use supernatural::bwb::{dual, euler_pairing, BundleExpr};
use supernatural::ktheory::{subgroup_index, w_classes, wperp_classes};
use supernatural::monad::{binomial_determinant, build_monad, efw_insert};
use supernatural::weights::dim_schur;

#[test]
fn collection_index_is_n_w() {
    for w in collection_grid() {
        let m = build_monad(&w, w.len() - 1).unwrap();
        let n_w = m.n_w().clone();
        assert_eq!(dim_schur(m.mu(), m.n() + 1).unwrap(), n_w);
        assert_eq!(binomial_determinant(&w), n_w);
        assert_eq!(subgroup_index(&w_classes(&m)), n_w, "W={w:?}");
    }
}

/// `N_W [O(−e)]` lies in the span of `W` because the EFW complex with `e` inserted has rank `N_W` there.
#[test]
fn inserted_efw_rank_is_n_w() {
    for w in collection_grid() {
        let m = build_monad(&w, w.len() - 1).unwrap();
        for e in w[0] - 2..=w[w.len() - 1] + 2 {
            if w.contains(&e) {
                continue;
            }
            let (shape, pos) = efw_insert(&m, e).unwrap();
            assert_eq!(shape.degrees.degrees()[pos], e);
            assert_eq!(shape.ranks[pos], *m.n_w(), "W={w:?} e={e}");
        }
    }
}

#[test]
fn dual_pairing_is_diagonal() {
    for w in collection_grid() {
        let m = build_monad(&w, w.len() - 1).unwrap();
        for (j, e) in m.wperp().iter().enumerate() {
            for (i, &wi) in m.w().iter().enumerate() {
                let p = euler_pairing(&dual(e), &BundleExpr::line(m.n(), -wi)).unwrap();
                let expected = if i == j {
                    if j % 2 == 0 { m.n_w().clone() } else { -m.n_w().clone() }
                } else {
                    BigInt::zero()
                };
                assert_eq!(p, expected, "W={w:?} i={i} j={j}");
            }
        }
    }
}

/// The Euler pairing is unimodular and pairs `W^⊥*` with `W` diagonally by `±N_W`,
/// so the two indices multiply to `N_W^{n+1}`.
#[test]
fn dual_collection_index_is_power_of_n_w() {
    for w in collection_grid() {
        let n = w.len() - 1;
        let m = build_monad(&w, n).unwrap();
        let classes = wperp_classes(&m);
        let idx = subgroup_index(&classes);
        let coords: Vec<Vec<BigInt>> = classes.iter().map(|c| c.standard_coordinates()).collect();
        assert_eq!(idx, smith_index(&coords));
        assert_eq!(idx, Pow::pow(m.n_w(), n as u32), "W={w:?}");
    }
}

#[test]
#[ignore = "W^⊥ spans a subgroup of index N_W^n, not N_W, whenever n >= 2 and N_W > 1"]
fn dual_collection_index_is_n_w() {
    for w in collection_grid() {
        let m = build_monad(&w, w.len() - 1).unwrap();
        assert_eq!(subgroup_index(&wperp_classes(&m)), *m.n_w(), "W={w:?}");
    }
}
