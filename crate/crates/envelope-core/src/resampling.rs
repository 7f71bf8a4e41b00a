//! Data-level imbalance treatments: random under-sampling of the majority
//! class and random over-sampling (duplication) of the minority class.
//!
//! Both are seeded ChaCha8 draws so results reproduce across platforms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::data::LabeledDataset;
use crate::error::{Error, Result};

/// Resampling mode selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResampleMode {
    Under,
    Over,
}

impl std::str::FromStr for ResampleMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "under" => Ok(ResampleMode::Under),
            "over" => Ok(ResampleMode::Over),
            other => Err(Error::InvalidParameter(format!(
                "unknown resample mode {other:?} (expected under|over)"
            ))),
        }
    }
}

pub fn resample(dataset: &LabeledDataset, mode: ResampleMode, seed: u64) -> Result<LabeledDataset> {
    match mode {
        ResampleMode::Under => undersample(dataset, seed),
        ResampleMode::Over => oversample(dataset, seed),
    }
}

/// Removes samples of the larger class (uniformly, without replacement)
/// until the class counts match. Sample order of the input is preserved.
pub fn undersample(dataset: &LabeledDataset, seed: u64) -> Result<LabeledDataset> {
    let (larger, smaller) = split_classes(dataset)?;
    if larger.len() == smaller.len() {
        return Ok(dataset.clone());
    }
    let mut larger = larger;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    larger.shuffle(&mut rng);
    let mut keep: Vec<usize> = larger[..smaller.len()].to_vec();
    keep.extend(&smaller);
    keep.sort_unstable();
    dataset.subset(&keep)
}

/// Duplicates samples of the smaller class (uniformly, with replacement)
/// until the class counts match. Every input sample appears at least once;
/// the duplicates are appended after the original rows.
pub fn oversample(dataset: &LabeledDataset, seed: u64) -> Result<LabeledDataset> {
    let (larger, smaller) = split_classes(dataset)?;
    if larger.len() == smaller.len() {
        return Ok(dataset.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut keep: Vec<usize> = (0..dataset.len()).collect();
    for _ in 0..(larger.len() - smaller.len()) {
        keep.push(smaller[rng.random_range(0..smaller.len())]);
    }
    dataset.subset(&keep)
}

/// Index lists of the (larger, smaller) classes. Ties resolve to
/// (+1, −1), matching the majority/minority convention.
fn split_classes(dataset: &LabeledDataset) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut stable = Vec::new();
    let mut unstable = Vec::new();
    for (i, l) in dataset.labels().iter().enumerate() {
        if l.is_stable() {
            stable.push(i);
        } else {
            unstable.push(i);
        }
    }
    if unstable.is_empty() {
        return Err(Error::NoMinoritySamples);
    }
    if stable.is_empty() {
        return Err(Error::DegenerateLabels);
    }
    if stable.len() >= unstable.len() {
        Ok((stable, unstable))
    } else {
        Ok((unstable, stable))
    }
}
