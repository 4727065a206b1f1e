//! `Φ_2^W` turning a decomposition over `W^⊥` into a filtration, and the bound it obeys in general.

use supernatural::bwb::BundleExpr;
use supernatural::monad::{build_monad, corollary19, page_convergence, phi2_page, prop51_check, theorem18, Convergence};
use supernatural::rational::frac;
use supernatural::sheaves::SheafTerm;
use supernatural::{SheafExpr, Weight, Window};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = build_monad(&[0, 2, 3], 2)?;
    let window = Window::new(-6, 4)?;

    let sym2 = BundleExpr::schur(2, Weight::new(vec![2, 0])?, 1)?;
    let f = SheafExpr::bundle(BundleExpr::q_dual(2)).plus(frac(1, 3), SheafTerm::Bundle(sym2))?;
    println!("F = {f}");
    print!("{}", theorem18(&f, &m, window)?.render());

    for (i, e) in m.wperp().iter().enumerate() {
        let r = corollary19(&SheafExpr::bundle(e.clone()), &m)?;
        println!("Φ_2(E_{i}) = E_{}^{}", r.i, r.m);
    }

    // O is not a nonnegative combination of W^⊥, so only the inequality survives.
    let o = SheafExpr::line(2, 0);
    if let Convergence::Filtration(fl) = page_convergence(&phi2_page(&o, &m)?)? {
        println!("Φ_2(O) = {}", fl.render());
        print!("{}", prop51_check(&o, &m, &fl.table(2, window)?, window)?.render());
    }
    Ok(())
}
