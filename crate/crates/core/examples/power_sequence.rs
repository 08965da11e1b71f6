//! Lower bounds on the spectral radius from the power sequence
//! M(t) = d^(t-1) D^alpha, approaching mu1 as t grows.

use distspec::{
    d_eigenvalues, distance_profile, generate_family, mu1_lower_power, power_sequence, Family,
};

fn main() -> distspec::Result<()> {
    let g = generate_family(Family::CompleteBipartite(2, 5))?;
    let dp = distance_profile(&g)?;
    let mu1 = d_eigenvalues(&dp)?.spectral_radius();
    println!("K2,5: mu1 = {mu1:.12}");
    for alpha in [0.5, 1.0, 2.0] {
        let ps = power_sequence(&dp, alpha, 12)?;
        println!("alpha = {alpha}");
        for t in [1, 2, 4, 8, 11] {
            let lower = mu1_lower_power(&ps, t)?;
            println!(
                "  t = {t:>2}  sqrt(S(t+1)/S(t)) = {lower:.12}  gap = {:.3e}",
                mu1 - lower
            );
        }
    }
    Ok(())
}
