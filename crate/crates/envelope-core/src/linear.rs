//! Baseline linear classifiers: logistic regression trained by full-batch
//! gradient descent with backtracking line search, and ridge-regularized
//! linear least squares on the ±1 targets. Both take optional per-sample
//! weights, which is how the cost-sensitive variants are expressed.

use crate::data::{sign, ClassLabel, FeatureVector, LabeledDataset, ScaleParams};
use crate::error::{Error, Result};
use crate::linalg::solve_spd;

/// Affine decision model f(x) = β₁ᵀ·standardize(x) + β₀.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearModel {
    beta1: Vec<f64>,
    beta0: f64,
    scale: ScaleParams,
}

impl LinearModel {
    pub fn from_parts(beta1: Vec<f64>, beta0: f64, scale: ScaleParams) -> Result<Self> {
        if beta1.len() != scale.dim() {
            return Err(Error::DimensionMismatch {
                expected: scale.dim(),
                got: beta1.len(),
            });
        }
        if beta1.iter().any(|v| !v.is_finite()) || !beta0.is_finite() {
            return Err(Error::NonFinite {
                context: "linear model coefficients",
            });
        }
        Ok(LinearModel {
            beta1,
            beta0,
            scale,
        })
    }

    pub fn dim(&self) -> usize {
        self.beta1.len()
    }

    pub fn beta1(&self) -> &[f64] {
        &self.beta1
    }

    pub fn beta0(&self) -> f64 {
        self.beta0
    }

    pub fn scale(&self) -> &ScaleParams {
        &self.scale
    }

    /// Parameter count n_p = n + 1.
    pub fn n_p(&self) -> usize {
        self.beta1.len() + 1
    }

    /// Decision value at a raw (unstandardized) input.
    pub fn decision_value(&self, x: &FeatureVector) -> Result<f64> {
        let z = self.scale.apply_slice(x.values())?;
        Ok(dot(&self.beta1, &z) + self.beta0)
    }

    pub fn predict(&self, x: &FeatureVector) -> Result<ClassLabel> {
        sign(self.decision_value(x)?)
    }

    /// The equivalent raw-space coefficients (slope, intercept), i.e. the
    /// affine map acting on unstandardized inputs.
    pub fn raw_coefficients(&self) -> (Vec<f64>, f64) {
        let slope: Vec<f64> = self
            .beta1
            .iter()
            .zip(self.scale.scales())
            .map(|(b, s)| b / s)
            .collect();
        let intercept = self.beta0
            - slope
                .iter()
                .zip(self.scale.means())
                .map(|(b, m)| b * m)
                .sum::<f64>();
        (slope, intercept)
    }
}

/// Gradient-descent settings for logistic regression.
#[derive(Debug, Clone, PartialEq)]
pub struct LogisticOptions {
    pub max_iters: usize,
    /// Convergence tolerance on the gradient norm.
    pub tol: f64,
    /// Ridge coefficient on β₁ (the bias is not penalized). Zero keeps the
    /// plain maximum-likelihood objective, which diverges on separable data.
    pub l2: f64,
}

impl Default for LogisticOptions {
    fn default() -> Self {
        LogisticOptions {
            max_iters: 10_000,
            tol: 1e-8,
            l2: 1e-6,
        }
    }
}

/// Result of a logistic fit, with the convergence diagnostics.
#[derive(Debug, Clone)]
pub struct LogisticFit {
    pub model: LinearModel,
    pub converged: bool,
    pub iterations: usize,
    pub grad_norm: f64,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// log(1 + exp(−m)) without overflow for |m| up to the exp range.
fn log1p_exp_neg(m: f64) -> f64 {
    if m >= 0.0 {
        (-m).exp().ln_1p()
    } else {
        -m + m.exp().ln_1p()
    }
}

/// σ(−m) = 1 / (1 + exp(m)), the negative-margin sigmoid of the gradient.
fn sigmoid_neg(m: f64) -> f64 {
    if m >= 0.0 {
        let e = (-m).exp();
        e / (1.0 + e)
    } else {
        1.0 / (1.0 + m.exp())
    }
}

fn validate_weights(weights: Option<&[f64]>, n: usize) -> Result<()> {
    if let Some(w) = weights {
        if w.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: w.len(),
            });
        }
        if w.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidParameter(
                "sample weights must be finite and non-negative".into(),
            ));
        }
    }
    Ok(())
}

fn weight_at(weights: Option<&[f64]>, i: usize) -> f64 {
    weights.map_or(1.0, |w| w[i])
}

/// Weighted logistic loss Σᵢ wᵢ·log(1 + exp(−yᵢ(β₁ᵀxᵢ + β₀))) and its exact
/// gradient, on the features exactly as given (no standardization). The
/// gradient is laid out as n entries for β₁ followed by one for β₀.
pub fn logistic_loss_and_gradient(
    beta1: &[f64],
    beta0: f64,
    dataset: &LabeledDataset,
    sample_weights: Option<&[f64]>,
) -> Result<(f64, Vec<f64>)> {
    if beta1.len() != dataset.dim() {
        return Err(Error::DimensionMismatch {
            expected: dataset.dim(),
            got: beta1.len(),
        });
    }
    validate_weights(sample_weights, dataset.len())?;
    let rows: Vec<&[f64]> = dataset.features().iter().map(|x| x.values()).collect();
    let y: Vec<f64> = dataset.labels().iter().map(|l| l.as_f64()).collect();
    Ok(loss_and_gradient_rows(
        beta1,
        beta0,
        &rows,
        &y,
        sample_weights,
    ))
}

fn loss_and_gradient_rows(
    beta1: &[f64],
    beta0: f64,
    rows: &[&[f64]],
    y: &[f64],
    weights: Option<&[f64]>,
) -> (f64, Vec<f64>) {
    let n = beta1.len();
    let mut loss = 0.0;
    let mut grad = vec![0.0; n + 1];
    for (i, (row, &yi)) in rows.iter().zip(y).enumerate() {
        let w = weight_at(weights, i);
        let margin = yi * (dot(beta1, row) + beta0);
        loss += w * log1p_exp_neg(margin);
        let g = -w * yi * sigmoid_neg(margin);
        for (gj, xj) in grad[..n].iter_mut().zip(*row) {
            *gj += g * xj;
        }
        grad[n] += g;
    }
    (loss, grad)
}

fn loss_rows(
    beta1: &[f64],
    beta0: f64,
    rows: &[&[f64]],
    y: &[f64],
    weights: Option<&[f64]>,
) -> f64 {
    rows.iter()
        .zip(y)
        .enumerate()
        .map(|(i, (row, &yi))| {
            weight_at(weights, i) * log1p_exp_neg(yi * (dot(beta1, row) + beta0))
        })
        .sum()
}

/// Trains logistic regression by deterministic full-batch gradient descent
/// with Armijo backtracking, on standardized features.
pub fn train_logistic(
    dataset: &LabeledDataset,
    sample_weights: Option<&[f64]>,
    opts: &LogisticOptions,
) -> Result<LogisticFit> {
    if !dataset.has_both_classes() {
        return Err(Error::DegenerateLabels);
    }
    validate_weights(sample_weights, dataset.len())?;
    let scale = ScaleParams::fit(dataset)?;
    let z = scale.apply_dataset(dataset)?;
    let rows: Vec<&[f64]> = z.iter().map(|r| r.as_slice()).collect();
    let y: Vec<f64> = dataset.labels().iter().map(|l| l.as_f64()).collect();

    let n = dataset.dim();
    let mut beta = vec![0.0; n + 1];
    let mut step = 1.0f64;
    let mut converged = false;
    let mut iterations = 0;
    let mut grad_norm = f64::INFINITY;

    let objective = |beta: &[f64]| {
        loss_rows(&beta[..n], beta[n], &rows, &y, sample_weights)
            + 0.5 * opts.l2 * dot(&beta[..n], &beta[..n])
    };

    for iter in 0..opts.max_iters {
        iterations = iter + 1;
        let (loss, mut grad) =
            loss_and_gradient_rows(&beta[..n], beta[n], &rows, &y, sample_weights);
        for (g, b) in grad[..n].iter_mut().zip(&beta[..n]) {
            *g += opts.l2 * b;
        }
        let obj = loss + 0.5 * opts.l2 * dot(&beta[..n], &beta[..n]);
        let g2 = dot(&grad, &grad);
        grad_norm = g2.sqrt();
        if grad_norm <= opts.tol {
            converged = true;
            break;
        }

        // Armijo backtracking, starting from twice the last accepted step
        // but never above unit step.
        let mut t = (step * 2.0).min(1.0);
        let mut accepted = false;
        while t > 1e-18 {
            let candidate: Vec<f64> = beta.iter().zip(&grad).map(|(b, g)| b - t * g).collect();
            if objective(&candidate) <= obj - 1e-4 * t * g2 {
                beta = candidate;
                step = t;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            break; // step underflow: no further progress possible
        }
    }

    let model = LinearModel::from_parts(beta[..n].to_vec(), beta[n], scale)?;
    Ok(LogisticFit {
        model,
        converged,
        iterations,
        grad_norm,
    })
}

/// Trains ridge linear least squares on standardized features: solves
/// ([Z 1]ᵀΓ[Z 1] + λI)·θ = [Z 1]ᵀΓy. The ridge applies to every
/// coordinate, bias included.
pub fn train_linear_ls(
    dataset: &LabeledDataset,
    sample_weights: Option<&[f64]>,
    lambda: f64,
) -> Result<LinearModel> {
    let scale = ScaleParams::fit(dataset)?;
    train_linear_ls_scaled(dataset, scale, sample_weights, lambda)
}

/// Same as [`train_linear_ls`] with a caller-supplied standardization,
/// which may be the identity.
pub fn train_linear_ls_scaled(
    dataset: &LabeledDataset,
    scale: ScaleParams,
    sample_weights: Option<&[f64]>,
    lambda: f64,
) -> Result<LinearModel> {
    if lambda < 0.0 || !lambda.is_finite() {
        return Err(Error::InvalidParameter("lambda must be >= 0".into()));
    }
    validate_weights(sample_weights, dataset.len())?;
    let z = scale.apply_dataset(dataset)?;
    let n = dataset.dim();
    let d = n + 1;

    // Normal equations over the design [Z 1].
    let mut a = vec![0.0; d * d];
    let mut rhs = vec![0.0; d];
    let mut padded = vec![0.0; d];
    for (i, row) in z.iter().enumerate() {
        let w = weight_at(sample_weights, i);
        let yi = dataset.labels()[i].as_f64();
        padded[..n].copy_from_slice(row);
        padded[n] = 1.0;
        for r in 0..d {
            let wr = w * padded[r];
            for c in r..d {
                a[r * d + c] += wr * padded[c];
            }
            rhs[r] += wr * yi;
        }
    }
    for r in 0..d {
        a[r * d + r] += lambda;
        for c in 0..r {
            a[r * d + c] = a[c * d + r];
        }
    }
    let theta = solve_spd(a, &rhs)?;
    LinearModel::from_parts(theta[..n].to_vec(), theta[n], scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::{Distribution, StandardNormal};

    fn dataset(rows: &[(&[f64], i64)]) -> LabeledDataset {
        let samples = rows
            .iter()
            .map(|(x, y)| {
                (
                    FeatureVector::new(x.to_vec()).unwrap(),
                    ClassLabel::from_i64(*y).unwrap(),
                )
            })
            .collect();
        LabeledDataset::new(samples).unwrap()
    }

    fn random_dataset(rng: &mut ChaCha8Rng, n_samples: usize, dim: usize) -> LabeledDataset {
        let rows: Vec<(Vec<f64>, i64)> = (0..n_samples)
            .map(|i| {
                let x: Vec<f64> = (0..dim).map(|_| rng.random_range(-2.0..2.0)).collect();
                // force both classes
                let y = if i % 2 == 0 { 1 } else { -1 };
                (x, y)
            })
            .collect();
        let refs: Vec<(&[f64], i64)> = rows.iter().map(|(x, y)| (x.as_slice(), *y)).collect();
        dataset(&refs)
    }

    #[test]
    fn zero_beta_loss_is_n_log2() {
        let d = dataset(&[(&[1.0, 2.0], 1), (&[0.0, -1.0], -1), (&[3.0, 0.5], 1)]);
        let (loss, _) = logistic_loss_and_gradient(&[0.0, 0.0], 0.0, &d, None).unwrap();
        assert!((loss - 3.0 * std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn single_sample_loss_matches_formula() {
        let d = dataset(&[(&[1.0], 1)]);
        let (loss, _) = logistic_loss_and_gradient(&[10.0], 0.0, &d, None).unwrap();
        assert!((loss - (1.0 + (-10.0f64).exp()).ln()).abs() < 1e-16);
        assert!((loss - 4.5398e-5).abs() < 1e-8);
    }

    #[test]
    fn gradient_matches_central_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let d = random_dataset(&mut rng, 5, 3);
        let w: Vec<f64> = (0..5).map(|_| rng.random_range(0.1..3.0)).collect();
        let beta1: Vec<f64> = (0..3).map(|_| rng.random_range(-1.0..1.0)).collect();
        let beta0: f64 = rng.random_range(-1.0..1.0);

        let (_, grad) = logistic_loss_and_gradient(&beta1, beta0, &d, Some(&w)).unwrap();
        let h = 1e-6;
        let loss_at = |b1: &[f64], b0: f64| {
            logistic_loss_and_gradient(b1, b0, &d, Some(&w)).unwrap().0
        };
        let mut max_rel = 0.0f64;
        for j in 0..3 {
            let mut plus = beta1.clone();
            let mut minus = beta1.clone();
            plus[j] += h;
            minus[j] -= h;
            let fd = (loss_at(&plus, beta0) - loss_at(&minus, beta0)) / (2.0 * h);
            max_rel = max_rel.max((fd - grad[j]).abs() / grad[j].abs().max(1e-8));
        }
        let fd0 = (loss_at(&beta1, beta0 + h) - loss_at(&beta1, beta0 - h)) / (2.0 * h);
        max_rel = max_rel.max((fd0 - grad[3]).abs() / grad[3].abs().max(1e-8));
        assert!(max_rel < 1e-5, "max relative error {max_rel}");
    }

    #[test]
    fn loss_is_convex_at_midpoints() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let d = random_dataset(&mut rng, 8, 2);
        for _ in 0..100 {
            let a: Vec<f64> = (0..3).map(|_| rng.random_range(-3.0..3.0)).collect();
            let b: Vec<f64> = (0..3).map(|_| rng.random_range(-3.0..3.0)).collect();
            let mid: Vec<f64> = a.iter().zip(&b).map(|(x, y)| 0.5 * (x + y)).collect();
            let f = |v: &[f64]| {
                logistic_loss_and_gradient(&v[..2], v[2], &d, None).unwrap().0
            };
            assert!(f(&mid) <= 0.5 * (f(&a) + f(&b)) + 1e-9);
        }
    }

    #[test]
    fn trains_symmetric_separable_pair() {
        let d = dataset(&[(&[-1.0], -1), (&[1.0], 1)]);
        let fit = train_logistic(
            &d,
            None,
            &LogisticOptions {
                l2: 0.1,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(fit.converged);
        assert!(fit.model.beta0().abs() < 1e-6, "beta0 = {}", fit.model.beta0());
        for (x, y) in d.features().iter().zip(d.labels()) {
            assert_eq!(fit.model.predict(x).unwrap(), *y);
        }
    }

    #[test]
    fn unregularized_separable_runs_to_iteration_cap() {
        let d = dataset(&[(&[-1.0], -1), (&[1.0], 1)]);
        let opts = LogisticOptions {
            l2: 0.0,
            max_iters: 200,
            ..Default::default()
        };
        let fit = train_logistic(&d, None, &opts).unwrap();
        assert!(!fit.converged);
        assert!(fit.model.beta1()[0] > 1.0);
        for (x, y) in d.features().iter().zip(d.labels()) {
            assert_eq!(fit.model.predict(x).unwrap(), *y);
        }
    }

    #[test]
    fn single_class_is_degenerate() {
        let d = dataset(&[(&[1.0], 1), (&[2.0], 1)]);
        assert!(matches!(
            train_logistic(&d, None, &LogisticOptions::default()),
            Err(Error::DegenerateLabels)
        ));
    }

    #[test]
    fn logistic_tracks_bayes_rule_on_gaussian_pair() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let normal = StandardNormal;
        let mut samples = Vec::new();
        for i in 0..200 {
            let y = if i % 2 == 0 { 1.0 } else { -1.0 };
            let x = vec![
                y + <StandardNormal as Distribution<f64>>::sample(&normal, &mut rng),
                y + <StandardNormal as Distribution<f64>>::sample(&normal, &mut rng),
            ];
            samples.push((
                FeatureVector::new(x).unwrap(),
                ClassLabel::from_i64(y as i64).unwrap(),
            ));
        }
        let d = LabeledDataset::new(samples).unwrap();
        // Bayes-optimal rule for means ±(1,1) and unit covariance
        let bayes_acc = d
            .features()
            .iter()
            .zip(d.labels())
            .filter(|(x, y)| {
                sign(x.values()[0] + x.values()[1]).unwrap() == **y
            })
            .count() as f64
            / d.len() as f64;
        let fit = train_logistic(&d, None, &LogisticOptions::default()).unwrap();
        let lr_acc = d
            .features()
            .iter()
            .zip(d.labels())
            .filter(|(x, y)| fit.model.predict(x).unwrap() == **y)
            .count() as f64
            / d.len() as f64;
        assert!(
            (lr_acc - bayes_acc).abs() <= 0.05,
            "LR {lr_acc} vs Bayes {bayes_acc}"
        );
    }

    #[test]
    fn ls_interpolates_two_points() {
        let d = dataset(&[(&[0.0], -1), (&[2.0], 1)]);
        let model = train_linear_ls(&d, None, 0.0).unwrap();
        let (slope, intercept) = model.raw_coefficients();
        assert!((slope[0] - 1.0).abs() < 1e-12);
        assert!((intercept - (-1.0)).abs() < 1e-12);
    }

    #[test]
    fn huge_ridge_shrinks_everything_to_unstable() {
        let d = dataset(&[(&[0.0], -1), (&[2.0], 1), (&[1.0], 1)]);
        let model = train_linear_ls(&d, None, 1e9).unwrap();
        let norm: f64 = model
            .beta1()
            .iter()
            .map(|v| v * v)
            .sum::<f64>()
            .sqrt()
            .max(model.beta0().abs());
        assert!(norm < 1e-6);

        // With every input present under both labels the right-hand side
        // cancels exactly, θ is identically zero, and sign(0) sends every
        // prediction to the unstable class.
        let sym = dataset(&[(&[0.0], -1), (&[0.0], 1), (&[2.0], 1), (&[2.0], -1)]);
        let model = train_linear_ls(&sym, None, 1e9).unwrap();
        assert!(model.beta1().iter().all(|&v| v == 0.0));
        assert_eq!(model.beta0(), 0.0);
        for x in sym.features() {
            assert_eq!(model.predict(x).unwrap(), ClassLabel::Unstable);
        }
    }

    /// Independent normal-equations oracle: Gauss-Jordan on the explicit
    /// (weighted) system, no shared code with the Cholesky path.
    fn gauss_jordan_ls(
        rows: &[Vec<f64>],
        y: &[f64],
        w: &[f64],
        lambda: f64,
    ) -> Vec<f64> {
        let n = rows[0].len();
        let d = n + 1;
        let mut a = vec![vec![0.0; d + 1]; d];
        for (i, row) in rows.iter().enumerate() {
            let mut xp: Vec<f64> = row.clone();
            xp.push(1.0);
            for r in 0..d {
                for c in 0..d {
                    a[r][c] += w[i] * xp[r] * xp[c];
                }
                a[r][d] += w[i] * xp[r] * y[i];
            }
        }
        for r in 0..d {
            a[r][r] += lambda;
        }
        for col in 0..d {
            let pivot = (col..d)
                .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
                .unwrap();
            a.swap(col, pivot);
            let p = a[col][col];
            for c in col..=d {
                a[col][c] /= p;
            }
            for r in 0..d {
                if r != col {
                    let f = a[r][col];
                    for c in col..=d {
                        a[r][c] -= f * a[col][c];
                    }
                }
            }
        }
        (0..d).map(|r| a[r][d]).collect()
    }

    #[test]
    fn ls_matches_normal_equations_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let d = random_dataset(&mut rng, 6, 3);
        let model =
            train_linear_ls_scaled(&d, ScaleParams::identity(3), None, 0.5).unwrap();
        let rows: Vec<Vec<f64>> = d.features().iter().map(|x| x.values().to_vec()).collect();
        let y: Vec<f64> = d.labels().iter().map(|l| l.as_f64()).collect();
        let oracle = gauss_jordan_ls(&rows, &y, &vec![1.0; 6], 0.5);
        for j in 0..3 {
            assert!((model.beta1()[j] - oracle[j]).abs() < 1e-8);
        }
        assert!((model.beta0() - oracle[3]).abs() < 1e-8);
    }

    #[test]
    fn singular_unregularized_system_is_detected() {
        // duplicated feature column: rank deficient without a ridge
        let d = dataset(&[(&[1.0, 1.0], 1), (&[2.0, 2.0], -1), (&[3.0, 3.0], 1)]);
        let err =
            train_linear_ls_scaled(&d, ScaleParams::identity(2), None, 0.0).unwrap_err();
        assert!(matches!(err, Error::SingularSystem(_)));
        // and a ridge restores solvability
        assert!(train_linear_ls(&d, None, 0.5).is_ok());
    }

    #[test]
    fn unit_weights_match_unweighted() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let d = random_dataset(&mut rng, 10, 2);
        let unit = vec![1.0; 10];
        let a = train_linear_ls(&d, None, 0.3).unwrap();
        let b = train_linear_ls(&d, Some(&unit), 0.3).unwrap();
        for j in 0..2 {
            assert!((a.beta1()[j] - b.beta1()[j]).abs() < 1e-10);
        }
        assert!((a.beta0() - b.beta0()).abs() < 1e-10);

        let fa = train_logistic(&d, None, &LogisticOptions::default()).unwrap();
        let fb = train_logistic(&d, Some(&unit), &LogisticOptions::default()).unwrap();
        for j in 0..2 {
            assert!((fa.model.beta1()[j] - fb.model.beta1()[j]).abs() < 1e-10);
        }
    }

    #[test]
    fn duplication_equals_weighting_for_ls() {
        // duplicating each minority sample m times == weighting it by m
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let base = random_dataset(&mut rng, 8, 2);
        let m = 4usize;
        let mut duplicated = Vec::new();
        let mut weights = Vec::new();
        for (x, y) in base.features().iter().zip(base.labels()) {
            duplicated.push((x.clone(), *y));
            if y.is_stable() {
                weights.push(1.0);
            } else {
                weights.push(m as f64);
                for _ in 1..m {
                    duplicated.push((x.clone(), *y));
                }
            }
        }
        let dup = LabeledDataset::new(duplicated).unwrap();
        let scale = ScaleParams::identity(2);
        let a = train_linear_ls_scaled(&dup, scale.clone(), None, 0.7).unwrap();
        let b = train_linear_ls_scaled(&base, scale, Some(&weights), 0.7).unwrap();
        for j in 0..2 {
            assert!((a.beta1()[j] - b.beta1()[j]).abs() < 1e-9);
        }
        assert!((a.beta0() - b.beta0()).abs() < 1e-9);
    }

    #[test]
    fn predict_examples() {
        let model = LinearModel::from_parts(vec![1.0], 0.0, ScaleParams::identity(1)).unwrap();
        assert_eq!(
            model.predict(&FeatureVector::new(vec![2.0]).unwrap()).unwrap(),
            ClassLabel::Stable
        );
        // zero margin classifies unstable
        assert_eq!(
            model.predict(&FeatureVector::new(vec![0.0]).unwrap()).unwrap(),
            ClassLabel::Unstable
        );
        let model =
            LinearModel::from_parts(vec![1.0, -1.0], 0.5, ScaleParams::identity(2)).unwrap();
        assert_eq!(
            model
                .predict(&FeatureVector::new(vec![0.0, 0.0]).unwrap())
                .unwrap(),
            ClassLabel::Stable
        );
        assert!(model.predict(&FeatureVector::new(vec![1.0]).unwrap()).is_err());
    }
}
