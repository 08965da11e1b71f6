//! Distance invariants and spectrum of a graph given as graph6 on the command
//! line (defaults to the Petersen graph).
//!
//!     cargo run --example invariants -- 'IheA@GUAo'

use distspec::{
    d_eigenvalues, distance_energy, distance_estrada, distance_estrada_series, distance_profile,
    parse_graph6, SeriesOptions,
};

fn main() -> distspec::Result<()> {
    let code = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "IheA@GUAo".to_string());
    let g = parse_graph6(&code)?;
    let dp = distance_profile(&g)?;
    let spec = d_eigenvalues(&dp)?;

    println!("n = {}, m = {}, diameter = {}", g.n(), g.m(), dp.diameter());
    println!("Wiener index W = {}", dp.wiener());
    println!("distance degrees D = {:?}", dp.dist_degrees());
    println!("second distance degrees T = {:?}", dp.second_degrees());
    let mu: Vec<String> = spec
        .eigenvalues()
        .iter()
        .map(|x| format!("{x:.6}"))
        .collect();
    println!("spectrum = [{}]", mu.join(", "));
    println!("n+ = {}, residual = {:.1e}", spec.n_plus(), spec.residual());
    println!("DEE (eigenvalues) = {:.9}", distance_estrada(&spec)?);
    println!(
        "DEE (trace series) = {:.9}",
        distance_estrada_series(&dp, &SeriesOptions::default())?
    );
    println!("distance energy = {:.9}", distance_energy(&spec));
    Ok(())
}
