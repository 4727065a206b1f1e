//! First pages of the spectral sequences computing `Φ_1^W` and `Φ_2^W`, and what they converge to.

use supernatural::monad::{build_monad, page_convergence, phi1_page, phi2_page};
use supernatural::SheafExpr;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = build_monad(&[0, 2, 3], 2)?;
    let sheaves = [
        SheafExpr::line(2, 0),
        SheafExpr::line(2, -1),
        SheafExpr::linear_subspace(2, 1, 0)?,
    ];
    for f in &sheaves {
        println!("F = {f}");
        for page in [phi1_page(f, &m)?, phi2_page(f, &m)?] {
            print!("{}", page.render());
            println!("{}\n", page_convergence(&page)?.render());
        }
    }
    Ok(())
}
