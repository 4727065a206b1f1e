//! Classes in `K_0(P^n)`: coordinates in `W` and `W^⊥`, and the lattices they span.

use supernatural::ktheory::{decompose_cor14, gram_matrix, k0_class, subgroup_index, w_classes, wperp_classes, Side};
use supernatural::monad::build_monad;
use supernatural::bwb::BundleExpr;
use supernatural::SheafExpr;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = build_monad(&[0, 2, 3], 2)?;
    let l = SheafExpr::linear_subspace(2, 1, 0)?;

    let c = k0_class(&l)?;
    let chi: Vec<String> = c.chi_profile().iter().map(|x| x.to_string()).collect();
    println!("[{l}] has χ-profile ({})", chi.join(", "));
    println!("  in W:   {}", decompose_cor14(&l, &m, Side::W)?.render());
    println!("  in W^⊥: {}", decompose_cor14(&l, &m, Side::Wperp)?.render());

    println!("index of W   = {}", subgroup_index(&w_classes(&m)));
    println!("index of W^⊥ = {}", subgroup_index(&wperp_classes(&m)));
    println!("N_W          = {}", m.n_w());

    let lines: Vec<BundleExpr> = (0..=2).map(|k| BundleExpr::line(2, -k)).collect();
    println!("Gram matrix of O, O(-1), O(-2): {:?}", gram_matrix(&lines)?);
    Ok(())
}
