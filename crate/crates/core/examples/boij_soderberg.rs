//! Boij–Söderberg decompositions of cohomology tables into supernatural tables.

use supernatural::bwb::BundleExpr;
use supernatural::decomp::{bs_decompose, bs_decompose_sheaf};
use supernatural::sheaves::cohomology_table;
use supernatural::{SheafExpr, Weight, Window};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let window = Window::new(-8, 6)?;

    let b = BundleExpr::q_dual(2).direct_sum(&BundleExpr::line(2, 1))?;
    let f = SheafExpr::bundle(b);
    let d = bs_decompose_sheaf(&f, window)?;
    println!("γ({f}) =\n{}", d.render());

    // Q itself, written as S_(0,0,-1) Q*, is supernatural.
    let q = SheafExpr::bundle(BundleExpr::schur(3, Weight::new(vec![0, 0, -1])?, 0)?);
    let t = cohomology_table(&q, window)?;
    let d = bs_decompose(&t)?;
    println!("γ({q}) =\n{}", d.render());
    assert_eq!(d.reconstruct(3, window), t);
    Ok(())
}
