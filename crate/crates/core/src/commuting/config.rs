use serde::{Deserialize, Serialize};

/// A source of commuting pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// `x = e_i` with its full partner space.
    Basis,
    /// `x = e_i + λ e_j` over the λ-grid.
    LineSweep,
    /// Known polynomial families evaluated on the λ-grid.
    Family,
    /// Random `x` (and, for modules, random `v`).
    Random,
}

/// Sampler settings. A fixed seed fixes the entire pair stream.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SamplerConfig {
    pub strategies: Vec<Strategy>,
    pub seed: u64,
    /// Maximum number of random rounds.
    pub rounds: usize,
    /// Random coefficients over Q are drawn from `-coeff_box..=coeff_box`.
    pub coeff_box: i64,
    /// The λ-grid is `{0, ±1, …, ±lambda_radius}`.
    pub lambda_radius: i64,
    /// Consecutive random rounds without span growth before giving up.
    pub window: usize,
    /// Fresh pairs a witness functional must vanish on.
    pub validation: usize,
    /// Cap on `p^(k−1)` for exhaustive enumeration.
    pub budget: u64,
    /// Enumerate every projective point instead of sampling (finite fields only).
    pub exhaustive: bool,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            strategies: vec![
                Strategy::Basis,
                Strategy::LineSweep,
                Strategy::Family,
                Strategy::Random,
            ],
            seed: 0,
            rounds: 64,
            coeff_box: 3,
            lambda_radius: 4,
            window: 8,
            validation: 200,
            budget: 10_000_000,
            exhaustive: false,
        }
    }
}

impl SamplerConfig {
    pub fn uses(&self, s: Strategy) -> bool {
        self.strategies.contains(&s)
    }

    /// `0, 1, −1, 2, −2, …` up to the radius.
    pub fn lambda_grid(&self) -> Vec<i64> {
        interleaved(2 * self.lambda_radius.max(0) as usize + 1)
    }
}

/// The first `count` integers in the order `0, 1, −1, 2, −2, …`.
pub(crate) fn interleaved(count: usize) -> Vec<i64> {
    (0..count as i64)
        .map(|k| if k % 2 == 1 { (k + 1) / 2 } else { -k / 2 })
        .collect()
}
