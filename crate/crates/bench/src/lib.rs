//! Shared inputs for the criterion benchmarks.

use phi3q_core::{NakagamiBivariate, Phi3Args, WishartModel};

/// (b, c, w, z) points spanning small, moderate and large arguments.
pub fn phi3_points() -> Vec<Phi3Args> {
    [(1, 2, 0.5, 0.5), (3, 2, 2.0, 0.5), (4, -2, 5.0, 5.0), (4, 4, 20.0, 40.0)]
        .iter()
        .map(|&(b, c, w, z)| Phi3Args::new(f64::from(b), f64::from(c), w, z))
        .collect()
}

/// (m, a, b) points; the last one sits in the far tail.
pub fn marcum_points() -> Vec<(i32, f64, f64)> {
    vec![(1, 1.0, 1.0), (3, 2.0, 4.0), (-2, 3.0, 1.0), (6, 10.0, 10.0), (1, 0.1, 10.0)]
}

pub fn nakagami_models() -> Vec<NakagamiBivariate> {
    [(1, 0.5), (2, 0.5), (4, 0.9)]
        .iter()
        .map(|&(m, rho)| NakagamiBivariate::normalized(m, rho).expect("valid model"))
        .collect()
}

/// Two rank-one Wishart models per dimension, from fixed seeds.
pub fn wishart_models() -> Vec<WishartModel> {
    (2..=4)
        .flat_map(|m| (0..2).map(move |s| WishartModel::random_rank_one(m, 100 + s).expect("valid model")))
        .collect()
}
