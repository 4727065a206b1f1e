//! Borel–Weil–Bott on projective space: which degree a Schur bundle lives in.

use supernatural::bwb::{bwb_cohomology, cohomology_of_bundle, BundleExpr};
use supernatural::weights::dim_schur;
use supernatural::{CohomologyOutcome, Weight};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Sym^2 Q* on P^2, twisted through the range where it changes degree.
    let alpha = Weight::new(vec![2, 0])?;
    for d in -6..=2 {
        match bwb_cohomology(&alpha, d, 2)? {
            CohomologyOutcome::Vanishing => println!("Sym^2 Q*({d}): all cohomology vanishes"),
            CohomologyOutcome::Nonvanishing { degree, gamma, dimension } => {
                println!("Sym^2 Q*({d}): H^{degree} = S_{gamma} V*, dimension {dimension}")
            }
        }
    }

    let mu = Weight::new(vec![1, 0, 0])?;
    println!("dim S_(1,0,0) k^3 = {}", dim_schur(&mu, 3)?);

    let b = BundleExpr::q_dual(3).direct_sum(&BundleExpr::line(3, 1))?;
    let h: Vec<String> = cohomology_of_bundle(&b, 0).iter().map(|x| x.to_string()).collect();
    println!("h^*({b}) = ({})", h.join(", "));
    Ok(())
}
