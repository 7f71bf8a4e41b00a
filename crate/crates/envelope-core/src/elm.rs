//! Extreme learning machine classifier: a random sigmoid hidden layer that
//! stays fixed after initialization, with output weights trained in closed
//! form by ridge least squares on the ±1 targets. The cost-sensitive
//! variant weights each sample's squared error by a per-class factor γ.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::data::{sign, ClassLabel, FeatureVector, LabeledDataset, ScaleParams};
use crate::error::{Error, Result};
use crate::linalg::solve_spd;

/// Random input layer: n_h neurons, each with n input weights and a bias,
/// drawn i.i.d. uniform on [−1, 1] from a seeded generator.
#[derive(Debug, Clone, PartialEq)]
pub struct HiddenLayer {
    weights: Vec<f64>, // neuron-major, n_h rows of n
    biases: Vec<f64>,
    n: usize,
    n_h: usize,
    seed: u64,
}

/// Draws a hidden layer. The same (n, n_h, seed) triple always produces
/// bit-identical parameters.
pub fn init_hidden_layer(n: usize, n_h: usize, seed: u64) -> Result<HiddenLayer> {
    if n == 0 || n_h == 0 {
        return Err(Error::InvalidParameter(
            "hidden layer needs n >= 1 and n_h >= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights = (0..n * n_h)
        .map(|_| rng.random_range(-1.0..=1.0))
        .collect();
    let biases = (0..n_h).map(|_| rng.random_range(-1.0..=1.0)).collect();
    Ok(HiddenLayer {
        weights,
        biases,
        n,
        n_h,
        seed,
    })
}

fn sigmoid(t: f64) -> f64 {
    1.0 / (1.0 + (-t).exp())
}

impl HiddenLayer {
    /// Rebuilds a layer from stored parameters (model files, tests).
    pub fn from_parts(
        weights: Vec<f64>,
        biases: Vec<f64>,
        n: usize,
        seed: u64,
    ) -> Result<Self> {
        let n_h = biases.len();
        if n_h == 0 || n == 0 || weights.len() != n * n_h {
            return Err(Error::InvalidParameter(
                "inconsistent hidden layer dimensions".into(),
            ));
        }
        if weights.iter().chain(&biases).any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "hidden layer parameters",
            });
        }
        Ok(HiddenLayer {
            weights,
            biases,
            n,
            n_h,
            seed,
        })
    }

    pub fn input_dim(&self) -> usize {
        self.n
    }

    pub fn neuron_count(&self) -> usize {
        self.n_h
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Input weights in neuron-major order (n_h rows of n values).
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn biases(&self) -> &[f64] {
        &self.biases
    }

    /// True when the stored parameters regenerate from the stored seed.
    pub fn matches_seed(&self) -> bool {
        init_hidden_layer(self.n, self.n_h, self.seed)
            .map(|regen| regen == *self)
            .unwrap_or(false)
    }

    /// Hidden-layer map h_j = ψ(w_j·x + b_j) on a standardized input.
    pub fn map(&self, standardized: &[f64]) -> Result<Vec<f64>> {
        if standardized.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: standardized.len(),
            });
        }
        Ok((0..self.n_h)
            .map(|j| {
                let row = &self.weights[j * self.n..(j + 1) * self.n];
                let t: f64 = row
                    .iter()
                    .zip(standardized)
                    .map(|(w, x)| w * x)
                    .sum::<f64>()
                    + self.biases[j];
                sigmoid(t)
            })
            .collect())
    }
}

/// Per-sample weights γᵢ: 1 for the majority class, r·f for the minority,
/// with r = N⁺/N⁻.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassWeights {
    gamma: Vec<f64>,
    r: f64,
    f: f64,
}

pub fn class_weights(labels: &[ClassLabel], f: f64) -> Result<ClassWeights> {
    if !(f > 0.0) || !f.is_finite() {
        return Err(Error::InvalidParameter("scaling factor f must be > 0".into()));
    }
    let majority = labels.iter().filter(|l| l.is_stable()).count();
    let minority = labels.len() - majority;
    if minority == 0 {
        return Err(Error::NoMinoritySamples);
    }
    if majority == 0 {
        return Err(Error::DegenerateLabels);
    }
    let r = majority as f64 / minority as f64;
    let minority_weight = r * f;
    let gamma = labels
        .iter()
        .map(|l| if l.is_stable() { 1.0 } else { minority_weight })
        .collect();
    Ok(ClassWeights { gamma, r, f })
}

impl ClassWeights {
    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    pub fn ratio(&self) -> f64 {
        self.r
    }

    pub fn scaling_factor(&self) -> f64 {
        self.f
    }

    pub fn minority_weight(&self) -> f64 {
        self.r * self.f
    }
}

/// Trained ELM classifier.
#[derive(Debug, Clone, PartialEq)]
pub struct ElmModel {
    hidden: HiddenLayer,
    output: Vec<f64>,
    lambda: f64,
    scale: ScaleParams,
}

impl ElmModel {
    pub fn from_parts(
        hidden: HiddenLayer,
        output: Vec<f64>,
        lambda: f64,
        scale: ScaleParams,
    ) -> Result<Self> {
        if output.len() != hidden.neuron_count() {
            return Err(Error::DimensionMismatch {
                expected: hidden.neuron_count(),
                got: output.len(),
            });
        }
        if scale.dim() != hidden.input_dim() {
            return Err(Error::DimensionMismatch {
                expected: hidden.input_dim(),
                got: scale.dim(),
            });
        }
        if output.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "output weights",
            });
        }
        Ok(ElmModel {
            hidden,
            output,
            lambda,
            scale,
        })
    }

    pub fn hidden(&self) -> &HiddenLayer {
        &self.hidden
    }

    pub fn output_weights(&self) -> &[f64] {
        &self.output
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn scale(&self) -> &ScaleParams {
        &self.scale
    }

    /// Parameter count n·n_h + 2·n_h: input weights, biases, and output
    /// weights. Independent of the training-set size.
    pub fn n_p(&self) -> usize {
        let n = self.hidden.input_dim();
        let n_h = self.hidden.neuron_count();
        n * n_h + 2 * n_h
    }

    pub fn decision_value(&self, x: &FeatureVector) -> Result<f64> {
        let z = self.scale.apply_slice(x.values())?;
        let h = self.hidden.map(&z)?;
        Ok(h.iter().zip(&self.output).map(|(a, b)| a * b).sum())
    }

    pub fn predict(&self, x: &FeatureVector) -> Result<ClassLabel> {
        sign(self.decision_value(x)?)
    }
}

/// Closed-form ELM training: solves (HᵀΓH + λI)·W = HᵀΓy via a dense
/// Cholesky factorization, with Γ = I on the unweighted path.
pub fn elm_train(
    dataset: &LabeledDataset,
    hidden: &HiddenLayer,
    lambda: f64,
    weights: Option<&ClassWeights>,
) -> Result<ElmModel> {
    if lambda < 0.0 || !lambda.is_finite() {
        return Err(Error::InvalidParameter("lambda must be >= 0".into()));
    }
    if dataset.dim() != hidden.input_dim() {
        return Err(Error::DimensionMismatch {
            expected: hidden.input_dim(),
            got: dataset.dim(),
        });
    }
    if let Some(w) = weights {
        if w.gamma().len() != dataset.len() {
            return Err(Error::DimensionMismatch {
                expected: dataset.len(),
                got: w.gamma().len(),
            });
        }
    }
    let scale = ScaleParams::fit(dataset)?;
    let z = scale.apply_dataset(dataset)?;
    let n_h = hidden.neuron_count();

    let mut gram = vec![0.0; n_h * n_h];
    let mut rhs = vec![0.0; n_h];
    match weights {
        None => {
            for (row, label) in z.iter().zip(dataset.labels()) {
                let h = hidden.map(row)?;
                accumulate(&mut gram, &mut rhs, &h, label.as_f64(), n_h);
            }
        }
        Some(w) => {
            for ((row, label), &g) in z.iter().zip(dataset.labels()).zip(w.gamma()) {
                let h = hidden.map(row)?;
                let hw: Vec<f64> = h.iter().map(|v| v * g).collect();
                // HᵀΓH accumulates γᵢ·hᵢhᵢᵀ, HᵀΓy accumulates γᵢ·yᵢ·hᵢ
                for r in 0..n_h {
                    let hr = hw[r];
                    for c in r..n_h {
                        gram[r * n_h + c] += hr * h[c];
                    }
                    rhs[r] += hr * label.as_f64();
                }
            }
        }
    }
    for r in 0..n_h {
        gram[r * n_h + r] += lambda;
        for c in 0..r {
            gram[r * n_h + c] = gram[c * n_h + r];
        }
    }
    let output = solve_spd(gram, &rhs)?;
    ElmModel::from_parts(hidden.clone(), output, lambda, scale)
}

fn accumulate(gram: &mut [f64], rhs: &mut [f64], h: &[f64], y: f64, n_h: usize) {
    for r in 0..n_h {
        let hr = h[r];
        for c in r..n_h {
            gram[r * n_h + c] += hr * h[c];
        }
        rhs[r] += hr * y;
    }
}
