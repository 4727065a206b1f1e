//! Eisenbud–Fløystad–Weyman shapes, pure resolutions of `Φ_1^W(F)`, and strands of `Φ_1^W(O(d))`.

use supernatural::monad::{build_monad, efw_shape, phi1_line_bundle_strands, pure_resolution};
use supernatural::{DegreeSequence, SheafExpr};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = DegreeSequence::new(vec![0, 1, 3, 4])?;
    println!("EFW shape of {:?}: {}", d.degrees(), efw_shape(&d, d.length())?.render());

    let m = build_monad(&[0, 2, 3], 2)?;
    for f in [SheafExpr::line(2, 0), SheafExpr::line(2, 2), SheafExpr::line(2, -1), SheafExpr::linear_subspace(2, 1, 1)?] {
        match pure_resolution(&f, &m) {
            Ok(r) => println!("Φ_1({f}) has a pure resolution {}", r.render()),
            Err(e) => println!("Φ_1({f}): {e}"),
        }
    }

    for d in [1, 0, -1, -4] {
        println!("{}", phi1_line_bundle_strands(d, &m)?.render());
    }
    Ok(())
}
