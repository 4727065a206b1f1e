//! The dual collection `W^⊥` of a collection of line bundles, and its orthogonality.

use supernatural::monad::{binomial_determinant, build_monad};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for w in [vec![0, 1, 2], vec![0, 2, 3], vec![-1, 1, 4], vec![0, 1, 3, 6]] {
        let n = w.len() - 1;
        let m = build_monad(&w, n)?;
        println!("W = {w:?} on P^{n}");
        println!("  mu(W) = {}, N_W = {} = |det| {}", m.mu(), m.n_w(), binomial_determinant(&w));
        for (j, e) in m.wperp().iter().enumerate() {
            println!("  E_{j} = {e}  (rank {})", e.rank());
        }
        m.check_orthogonality()?;
        let cube = m.orthogonality_cube();
        let diag: Vec<String> = (0..=n).map(|j| cube[j][j][j].to_string()).collect();
        println!("  h^j(E_j(-w_j)) = {}, everything else zero", diag.join(", "));
    }
    Ok(())
}
