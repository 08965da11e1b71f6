//! All-pairs distances and the integer invariants derived from them:
//! distance degrees, second distance degrees, diameter and Wiener index,
//! plus the iterated distance-degree power sequence.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap on the depth of a [`PowerSequence`]; `S_t` grows like `mu1^(2t)`.
pub const MAX_POWER_DEPTH: usize = 50;

/// Distance matrix of a connected graph together with its integer invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    n: usize,
    dist: Vec<u32>,
    diameter: u32,
    dist_degrees: Vec<u64>,
    second_degrees: Vec<u128>,
    wiener: u64,
}

/// Builds the distance matrix with one BFS per vertex.
///
/// Disconnected graphs are rejected: their distance matrix is undefined.
pub fn distance_profile(g: &Graph) -> Result<DistanceProfile> {
    let n = g.n();
    let components = g.component_count();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    let adj = g.adjacency_lists();
    let mut dist = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let next = row[u] + 1;
            for &w in &adj[u] {
                if row[w] == u32::MAX {
                    row[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }

    let diameter = dist.iter().copied().max().unwrap_or(0);
    let dist_degrees: Vec<u64> = dist
        .chunks_exact(n)
        .map(|row| row.iter().map(|&d| u64::from(d)).sum())
        .collect();
    let second_degrees = dist
        .chunks_exact(n)
        .map(|row| {
            row.iter()
                .zip(&dist_degrees)
                .map(|(&d, &deg)| u128::from(d) * u128::from(deg))
                .sum()
        })
        .collect();
    let wiener = dist_degrees.iter().sum::<u64>() / 2;

    Ok(DistanceProfile {
        n,
        dist,
        diameter,
        dist_degrees,
        second_degrees,
        wiener,
    })
}

impl DistanceProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn distance(&self, i: usize, j: usize) -> u32 {
        self.dist[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.dist[i * self.n..(i + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// `D_i`, the row sums of the distance matrix.
    pub fn dist_degrees(&self) -> &[u64] {
        &self.dist_degrees
    }

    /// `T_i = sum_j d_ij D_j`.
    pub fn second_degrees(&self) -> &[u128] {
        &self.second_degrees
    }

    /// Sum of distances over unordered vertex pairs.
    pub fn wiener(&self) -> u64 {
        self.wiener
    }

    /// `sum_{i<j} d_ij^2`; the second spectral moment is twice this.
    pub fn sum_squared_distances(&self) -> u128 {
        let mut total = 0u128;
        for i in 0..self.n {
            for &d in &self.row(i)[i + 1..] {
                total += u128::from(d) * u128::from(d);
            }
        }
        total
    }

    /// Every off-diagonal distance equals one.
    pub fn is_complete(&self) -> bool {
        self.diameter <= 1
    }

    /// Row-major copy of the distance matrix as floats.
    pub fn to_f64_matrix(&self) -> Vec<f64> {
        self.dist.iter().map(|&d| f64::from(d)).collect()
    }

    /// `y = D x`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.dist
            .chunks_exact(self.n)
            .map(|row| row.iter().zip(x).map(|(&d, &xj)| f64::from(d) * xj).sum())
            .collect()
    }
}

/// The vectors `M^(1..=depth)` with `M^(1)_i = D_i^alpha` and
/// `M^(t) = D M^(t-1)`, together with their squared norms `S_t`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSequence {
    alpha: f64,
    m_vectors: Vec<Vec<f64>>,
    s_values: Vec<f64>,
}

pub fn power_sequence(dp: &DistanceProfile, alpha: f64, t_max: usize) -> Result<PowerSequence> {
    if dp.n() < 2 {
        return Err(Error::InvalidParameter(
            "power sequence needs at least two vertices".into(),
        ));
    }
    if !(2..=MAX_POWER_DEPTH).contains(&t_max) {
        return Err(Error::InvalidParameter(format!(
            "depth {t_max} outside 2..={MAX_POWER_DEPTH}"
        )));
    }
    if !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "alpha = {alpha} is not finite"
        )));
    }

    let first: Vec<f64> = dp
        .dist_degrees()
        .iter()
        .map(|&d| (d as f64).powf(alpha))
        .collect();
    let mut m_vectors = vec![first];
    while m_vectors.len() < t_max {
        let next = dp.apply(m_vectors.last().expect("non-empty"));
        m_vectors.push(next);
    }
    let s_values: Vec<f64> = m_vectors
        .iter()
        .map(|v| v.iter().map(|x| x * x).sum())
        .collect();

    if let Some(t) = s_values.iter().position(|s| !s.is_finite() || *s <= 0.0) {
        return Err(Error::Overflow(format!(
            "power sequence S_{} = {} (alpha = {alpha})",
            t + 1,
            s_values[t]
        )));
    }
    Ok(PowerSequence {
        alpha,
        m_vectors,
        s_values,
    })
}

impl PowerSequence {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn depth(&self) -> usize {
        self.m_vectors.len()
    }

    /// `M^(t)`, 1-indexed.
    pub fn m(&self, t: usize) -> &[f64] {
        &self.m_vectors[t - 1]
    }

    /// `S_t`, 1-indexed.
    pub fn s(&self, t: usize) -> f64 {
        self.s_values[t - 1]
    }

    pub fn s_values(&self) -> &[f64] {
        &self.s_values
    }
}
