//! Cohomology tables of bundles, linear subspaces and formal rational sums.

use supernatural::bwb::BundleExpr;
use supernatural::rational::frac;
use supernatural::sheaves::{cohomology_table, hilbert_polynomial, SheafTerm};
use supernatural::{SheafExpr, Weight, Window};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let window = Window::new(-6, 4)?;

    let q = SheafExpr::bundle(BundleExpr::q_dual(2));
    println!("γ(Q*) on P^2:\n{}", cohomology_table(&q, window)?.render());

    let line = SheafExpr::linear_subspace(3, 1, 0)?;
    println!("γ({line}) inside P^3:\n{}", cohomology_table(&line, window)?.render());

    let sym2 = BundleExpr::schur(2, Weight::new(vec![2, 0])?, 1)?;
    let f = q.plus(frac(1, 3), SheafTerm::Bundle(sym2))?;
    println!("γ({f}):\n{}", cohomology_table(&f, window)?.render());

    let p = hilbert_polynomial(&f)?;
    println!("integer roots of its Hilbert polynomial: {:?}", p.integer_roots(window));
    Ok(())
}
