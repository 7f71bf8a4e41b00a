//! Soft-margin RBF SVM trained by an SMO-style dual solver.
//!
//! The solver runs pairwise coordinate ascent on the dual with
//! maximal-KKT-violation working-pair selection, per-class box constraints
//! C (majority) and C·(r·f) (minority), and a byte-budgeted kernel row
//! cache. Convergence means the maximal violating pair gap has dropped
//! below `kkt_tol`, which bounds every KKT residual by the same tolerance.

use crate::data::{sign, ClassLabel, FeatureVector, LabeledDataset, ScaleParams};
use crate::error::{Error, Result};
use crate::kernel::{rbf_kernel, KernelCache, KernelParams};

/// Solver and penalty configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SvmConfig {
    /// Base cost penalty C (box bound of majority-class multipliers).
    pub c: f64,
    /// Gaussian kernel width (σ-multiplier form).
    pub sigma: f64,
    /// Minority box bound multiplier: minority samples get C·minority_factor.
    /// The cost-sensitive rule sets this to r·f; use 1 for a regular SVM.
    pub minority_factor: f64,
    /// Convergence tolerance on the maximal KKT violation.
    pub kkt_tol: f64,
    /// Cap on pair updates before the solver reports non-convergence.
    pub max_passes: usize,
    /// Kernel row cache budget in bytes.
    pub cache_bytes: usize,
}

impl Default for SvmConfig {
    fn default() -> Self {
        SvmConfig {
            c: 1.0,
            sigma: 1.0,
            minority_factor: 1.0,
            kkt_tol: 1e-3,
            max_passes: 10_000_000,
            cache_bytes: 256 << 20,
        }
    }
}

impl SvmConfig {
    fn validate(&self) -> Result<()> {
        if !(self.c > 0.0) || !self.c.is_finite() {
            return Err(Error::InvalidParameter("C must be > 0".into()));
        }
        KernelParams::new(self.sigma)?;
        if !(self.minority_factor > 0.0) || !self.minority_factor.is_finite() {
            return Err(Error::InvalidParameter(
                "minority_factor must be > 0".into(),
            ));
        }
        if !(self.kkt_tol > 0.0) {
            return Err(Error::InvalidParameter("kkt_tol must be > 0".into()));
        }
        Ok(())
    }

    fn box_bound(&self, label: f64) -> f64 {
        if label > 0.0 {
            self.c
        } else {
            self.c * self.minority_factor
        }
    }
}

/// Trained SVM: support vectors (standardized), their coefficients αᵢyᵢ,
/// and the bias.
#[derive(Debug, Clone, PartialEq)]
pub struct SvmModel {
    support_vectors: Vec<Vec<f64>>,
    coefficients: Vec<f64>,
    bias: f64,
    kernel: KernelParams,
    scale: ScaleParams,
}

impl SvmModel {
    pub fn from_parts(
        support_vectors: Vec<Vec<f64>>,
        coefficients: Vec<f64>,
        bias: f64,
        kernel: KernelParams,
        scale: ScaleParams,
    ) -> Result<Self> {
        if support_vectors.len() != coefficients.len() {
            return Err(Error::DimensionMismatch {
                expected: support_vectors.len(),
                got: coefficients.len(),
            });
        }
        for sv in &support_vectors {
            if sv.len() != scale.dim() {
                return Err(Error::DimensionMismatch {
                    expected: scale.dim(),
                    got: sv.len(),
                });
            }
        }
        if coefficients.iter().any(|v| !v.is_finite()) || !bias.is_finite() {
            return Err(Error::NonFinite {
                context: "SVM coefficients",
            });
        }
        Ok(SvmModel {
            support_vectors,
            coefficients,
            bias,
            kernel,
            scale,
        })
    }

    pub fn support_count(&self) -> usize {
        self.support_vectors.len()
    }

    pub fn support_vectors(&self) -> &[Vec<f64>] {
        &self.support_vectors
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn bias(&self) -> f64 {
        self.bias
    }

    pub fn kernel(&self) -> KernelParams {
        self.kernel
    }

    pub fn scale(&self) -> &ScaleParams {
        &self.scale
    }

    /// Parameter count n_sv·(n+1) + 1: each support vector stores its n
    /// features and one coefficient, plus the bias. Grows with the number
    /// of support vectors, hence with the training-set size.
    pub fn n_p(&self) -> usize {
        self.support_vectors.len() * (self.scale.dim() + 1) + 1
    }

    pub fn decision_value(&self, x: &FeatureVector) -> Result<f64> {
        let z = self.scale.apply_slice(x.values())?;
        let mut score = self.bias;
        for (sv, coeff) in self.support_vectors.iter().zip(&self.coefficients) {
            score += coeff * rbf_kernel(sv, &z, self.kernel.sigma)?;
        }
        Ok(score)
    }

    pub fn predict(&self, x: &FeatureVector) -> Result<ClassLabel> {
        sign(self.decision_value(x)?)
    }
}

/// Solver output: the model plus the full multiplier vector and
/// diagnostics, which the oracle tests check against the dual directly.
#[derive(Debug, Clone)]
pub struct SvmFit {
    pub model: SvmModel,
    /// One multiplier per training sample, in dataset order.
    pub alphas: Vec<f64>,
    pub dual_objective: f64,
    pub iterations: usize,
}

/// Trains the SVM by SMO. Features are standardized internally; the fitted
/// scale is stored in the model.
pub fn svm_train(dataset: &LabeledDataset, cfg: &SvmConfig) -> Result<SvmFit> {
    cfg.validate()?;
    if dataset.len() < 2 {
        return Err(Error::EmptyDataset);
    }
    if !dataset.has_both_classes() {
        return Err(Error::DegenerateLabels);
    }
    let scale = ScaleParams::fit(dataset)?;
    let z = scale.apply_dataset(dataset)?;
    let y: Vec<f64> = dataset.labels().iter().map(|l| l.as_f64()).collect();
    let bounds: Vec<f64> = y.iter().map(|&yi| cfg.box_bound(yi)).collect();

    let n = z.len();
    let mut cache = KernelCache::new(z, cfg.sigma, cfg.cache_bytes);
    let mut alpha = vec![0.0; n];
    // gradient of f(α) = ½αᵀQα − Σα with Q_ij = y_i y_j K_ij
    let mut grad = vec![-1.0; n];
    let mut dual = 0.0;
    let mut iterations = 0;

    loop {
        let (gap, i, j, m, big_m) = select_pair(&alpha, &grad, &y, &bounds);
        if gap <= cfg.kkt_tol {
            let bias = compute_bias(&alpha, &grad, &y, &bounds, m, big_m);
            return finish(dataset, cfg, cache, alpha, bias, dual, iterations, scale);
        }
        if iterations >= cfg.max_passes {
            return Err(Error::SmoNonConvergence {
                iterations,
                gap,
                dual_objective: dual,
            });
        }
        iterations += 1;

        let (row_i, row_j) = cache.pair(i, j);
        let curvature = (row_i[i] + row_j[j] - 2.0 * row_i[j]).max(1e-12);
        let room_i = if y[i] > 0.0 { bounds[i] - alpha[i] } else { alpha[i] };
        let room_j = if y[j] > 0.0 { alpha[j] } else { bounds[j] - alpha[j] };
        let step = (gap / curvature).min(room_i).min(room_j);

        // α_i moves up its feasible direction, α_j down, preserving Σαy.
        if step == room_i {
            alpha[i] = if y[i] > 0.0 { bounds[i] } else { 0.0 };
        } else {
            alpha[i] = (alpha[i] + step * y[i]).clamp(0.0, bounds[i]);
        }
        if step == room_j {
            alpha[j] = if y[j] > 0.0 { 0.0 } else { bounds[j] };
        } else {
            alpha[j] = (alpha[j] - step * y[j]).clamp(0.0, bounds[j]);
        }

        let delta = gap * step - 0.5 * curvature * step * step;
        debug_assert!(
            delta >= -1e-9 * dual.abs().max(1.0),
            "dual objective decreased by {delta}"
        );
        dual += delta;

        for t in 0..n {
            grad[t] += step * y[t] * (row_i[t] - row_j[t]);
        }
    }
}

/// Picks the maximal violating pair: i maximizes −yᵢ∇fᵢ over the samples
/// that can move up, j minimizes it over those that can move down. Returns
/// (gap, i, j, m, M).
fn select_pair(
    alpha: &[f64],
    grad: &[f64],
    y: &[f64],
    bounds: &[f64],
) -> (f64, usize, usize, f64, f64) {
    let mut m = f64::NEG_INFINITY;
    let mut big_m = f64::INFINITY;
    let mut i = 0;
    let mut j = 0;
    for t in 0..alpha.len() {
        let v = -y[t] * grad[t];
        let in_up = (y[t] > 0.0 && alpha[t] < bounds[t]) || (y[t] < 0.0 && alpha[t] > 0.0);
        let in_low = (y[t] > 0.0 && alpha[t] > 0.0) || (y[t] < 0.0 && alpha[t] < bounds[t]);
        if in_up && v > m {
            m = v;
            i = t;
        }
        if in_low && v < big_m {
            big_m = v;
            j = t;
        }
    }
    (m - big_m, i, j, m, big_m)
}

/// Bias from the free support vectors (average of −yᵢ∇fᵢ), falling back to
/// the midpoint of the violating-pair bracket when none are free.
fn compute_bias(alpha: &[f64], grad: &[f64], y: &[f64], bounds: &[f64], m: f64, big_m: f64) -> f64 {
    let mut sum = 0.0;
    let mut count = 0usize;
    for t in 0..alpha.len() {
        if alpha[t] > 0.0 && alpha[t] < bounds[t] {
            sum += -y[t] * grad[t];
            count += 1;
        }
    }
    if count > 0 {
        sum / count as f64
    } else {
        0.5 * (m + big_m)
    }
}

#[allow(clippy::too_many_arguments)]
fn finish(
    dataset: &LabeledDataset,
    cfg: &SvmConfig,
    cache: KernelCache,
    alpha: Vec<f64>,
    bias: f64,
    dual: f64,
    iterations: usize,
    scale: ScaleParams,
) -> Result<SvmFit> {
    let drift: f64 = alpha
        .iter()
        .zip(dataset.labels())
        .map(|(a, l)| a * l.as_f64())
        .sum();
    debug_assert!(drift.abs() <= 1e-6, "equality constraint drift {drift}");

    let mut support_vectors = Vec::new();
    let mut coefficients = Vec::new();
    for (t, &a) in alpha.iter().enumerate() {
        if a > 1e-8 {
            support_vectors.push(cache.samples()[t].clone());
            coefficients.push(a * dataset.labels()[t].as_f64());
        }
    }
    let model = SvmModel::from_parts(
        support_vectors,
        coefficients,
        bias,
        KernelParams::new(cfg.sigma)?,
        scale,
    )?;
    Ok(SvmFit {
        model,
        alphas: alpha,
        dual_objective: dual,
        iterations,
    })
}

/// Dual objective Σαᵢ − ½ΣΣ yᵢyⱼαᵢαⱼK(xᵢ,xⱼ) on the standardized training
/// problem. Rejects α that violate the box or equality constraints by more
/// than 1e-6.
pub fn dual_objective(alphas: &[f64], dataset: &LabeledDataset, cfg: &SvmConfig) -> Result<f64> {
    cfg.validate()?;
    if alphas.len() != dataset.len() {
        return Err(Error::DimensionMismatch {
            expected: dataset.len(),
            got: alphas.len(),
        });
    }
    let y: Vec<f64> = dataset.labels().iter().map(|l| l.as_f64()).collect();
    let mut equality = 0.0;
    for (t, &a) in alphas.iter().enumerate() {
        let bound = cfg.box_bound(y[t]);
        if !(-1e-6..=bound + 1e-6).contains(&a) {
            return Err(Error::InvalidParameter(format!(
                "infeasible alpha[{t}] = {a} outside [0, {bound}]"
            )));
        }
        equality += a * y[t];
    }
    if equality.abs() > 1e-6 {
        return Err(Error::InvalidParameter(format!(
            "infeasible alphas: sum alpha*y = {equality}"
        )));
    }

    let scale = ScaleParams::fit(dataset)?;
    let z = scale.apply_dataset(dataset)?;
    let mut obj: f64 = alphas.iter().sum();
    for i in 0..z.len() {
        if alphas[i] == 0.0 {
            continue;
        }
        for j in 0..z.len() {
            if alphas[j] == 0.0 {
                continue;
            }
            let k = rbf_kernel(&z[i], &z[j], cfg.sigma)?;
            obj -= 0.5 * y[i] * y[j] * alphas[i] * alphas[j] * k;
        }
    }
    Ok(obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

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

    fn two_point_fixture() -> LabeledDataset {
        // standardization maps {0, 2} to {−1, +1}: distances are preserved
        dataset(&[(&[0.0], -1), (&[2.0], 1)])
    }

    /// Six points, XOR-like layout that needs a nonlinear boundary.
    fn xor_fixture() -> LabeledDataset {
        dataset(&[
            (&[1.0, 1.0], 1),
            (&[-1.0, -1.0], 1),
            (&[1.0, -1.0], -1),
            (&[-1.0, 1.0], -1),
            (&[0.9, 1.2], 1),
            (&[-1.1, 0.8], -1),
        ])
    }

    #[test]
    fn two_point_problem_is_symmetric_and_matches_brute_force() {
        let d = two_point_fixture();
        let cfg = SvmConfig {
            c: 10.0,
            sigma: 1.0,
            kkt_tol: 1e-6,
            ..Default::default()
        };
        let fit = svm_train(&d, &cfg).unwrap();
        assert!((fit.alphas[0] - fit.alphas[1]).abs() < 1e-9);
        assert!(fit.model.bias().abs() < 1e-9);

        // Along the feasible segment α₁ = α₂ = t the dual is
        // 2t − t²(1 − k₁₂) with k₁₂ = e^{−4}; maximize by scanning.
        let k12 = (-4.0f64).exp();
        let mut best = f64::NEG_INFINITY;
        let mut best_t = 0.0;
        let steps = 4_000_000;
        for s in 0..=steps {
            let t = 10.0 * s as f64 / steps as f64;
            let obj = 2.0 * t - t * t * (1.0 - k12);
            if obj > best {
                best = obj;
                best_t = t;
            }
        }
        assert!((fit.dual_objective - best).abs() < 1e-6);
        assert!((fit.alphas[0] - best_t).abs() < 1e-4);

        for (x, y) in d.features().iter().zip(d.labels()) {
            assert_eq!(fit.model.predict(x).unwrap(), *y);
        }
    }

    #[test]
    fn vanishing_c_collapses_to_constant_prediction() {
        let d = xor_fixture();
        let cfg = SvmConfig {
            c: 1e-9,
            sigma: 1.0,
            kkt_tol: 1e-6,
            ..Default::default()
        };
        let fit = svm_train(&d, &cfg).unwrap();
        assert!(fit.alphas.iter().all(|&a| a <= 1e-9));
        // decision degenerates to sign(b): one class absorbs every input
        let first = fit.model.predict(&d.features()[0]).unwrap();
        for x in d.features() {
            assert_eq!(fit.model.predict(x).unwrap(), first);
        }
    }

    /// Projection of v onto {α : 0 ≤ αᵢ ≤ Cᵢ, Σαᵢyᵢ = 0} by bisection on
    /// the shift multiplier.
    fn project_feasible(v: &[f64], y: &[f64], bounds: &[f64]) -> Vec<f64> {
        let phi = |lambda: f64| -> f64 {
            v.iter()
                .zip(y)
                .zip(bounds)
                .map(|((&vi, &yi), &ci)| yi * (vi - lambda * yi).clamp(0.0, ci))
                .sum()
        };
        let (mut lo, mut hi) = (-1e9, 1e9);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if phi(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let lambda = 0.5 * (lo + hi);
        v.iter()
            .zip(y)
            .zip(bounds)
            .map(|((&vi, &yi), &ci)| (vi - lambda * yi).clamp(0.0, ci))
            .collect()
    }

    /// Projected-gradient ascent on the dual; independent of the solver.
    fn qp_oracle(d: &LabeledDataset, cfg: &SvmConfig, iters: usize) -> (Vec<f64>, f64) {
        let scale = ScaleParams::fit(d).unwrap();
        let z = scale.apply_dataset(d).unwrap();
        let y: Vec<f64> = d.labels().iter().map(|l| l.as_f64()).collect();
        let n = z.len();
        let bounds: Vec<f64> = y.iter().map(|&yi| cfg.box_bound(yi)).collect();
        let mut q = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let diff2: f64 = z[i]
                    .iter()
                    .zip(&z[j])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                q[i][j] = y[i] * y[j] * (-cfg.sigma * diff2).exp();
            }
        }
        let step = 1.0 / n as f64;
        let mut alpha = vec![0.0; n];
        for _ in 0..iters {
            let mut g = vec![1.0; n]; // ∇D = 1 − Qα
            for i in 0..n {
                for j in 0..n {
                    g[i] -= q[i][j] * alpha[j];
                }
            }
            let moved: Vec<f64> = alpha.iter().zip(&g).map(|(a, gi)| a + step * gi).collect();
            alpha = project_feasible(&moved, &y, &bounds);
        }
        let mut obj: f64 = alpha.iter().sum();
        for i in 0..n {
            for j in 0..n {
                obj -= 0.5 * q[i][j] * alpha[i] * alpha[j];
            }
        }
        (alpha, obj)
    }

    #[test]
    fn xor_fixture_matches_qp_oracle() {
        let d = xor_fixture();
        let cfg = SvmConfig {
            c: 100.0,
            sigma: 1.0,
            kkt_tol: 1e-5,
            ..Default::default()
        };
        let fit = svm_train(&d, &cfg).unwrap();
        let (_, oracle_obj) = qp_oracle(&d, &cfg, 60_000);
        assert!(
            (fit.dual_objective - oracle_obj).abs() < 1e-4,
            "solver {} vs oracle {}",
            fit.dual_objective,
            oracle_obj
        );
        // objective recomputed from scratch agrees with the running value
        let recomputed = dual_objective(&fit.alphas, &d, &cfg).unwrap();
        assert!((recomputed - fit.dual_objective).abs() < 1e-8);
        for (x, y) in d.features().iter().zip(d.labels()) {
            assert_eq!(fit.model.predict(x).unwrap(), *y);
        }
    }

    #[test]
    fn solver_beats_random_feasible_points() {
        let d = xor_fixture();
        let cfg = SvmConfig {
            c: 5.0,
            sigma: 1.0,
            kkt_tol: 1e-5,
            ..Default::default()
        };
        let fit = svm_train(&d, &cfg).unwrap();
        let y: Vec<f64> = d.labels().iter().map(|l| l.as_f64()).collect();
        let bounds: Vec<f64> = y.iter().map(|&yi| cfg.box_bound(yi)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..1000 {
            let v: Vec<f64> = bounds
                .iter()
                .map(|&c| rng.random_range(0.0..=c))
                .collect();
            let feasible = project_feasible(&v, &y, &bounds);
            let obj = dual_objective(&feasible, &d, &cfg).unwrap();
            assert!(obj <= fit.dual_objective + 1e-9);
        }
    }

    #[test]
    fn dual_objective_examples() {
        let d = two_point_fixture();
        let cfg = SvmConfig {
            c: 10.0,
            ..Default::default()
        };
        assert_eq!(dual_objective(&[0.0, 0.0], &d, &cfg).unwrap(), 0.0);

        // α₁ = α₂ = 1: objective 2 − (1 − e^{−4})
        let expected = 2.0 - (1.0 - (-4.0f64).exp());
        let got = dual_objective(&[1.0, 1.0], &d, &cfg).unwrap();
        assert!((got - expected).abs() < 1e-12);

        // box violation and equality violation are both rejected
        assert!(dual_objective(&[11.0, 11.0], &d, &cfg).is_err());
        assert!(dual_objective(&[0.5, 0.0], &d, &cfg).is_err());
    }

    #[test]
    fn kkt_conditions_hold_at_convergence() {
        let d = xor_fixture();
        let cfg = SvmConfig {
            c: 100.0,
            sigma: 1.0,
            kkt_tol: 1e-3,
            ..Default::default()
        };
        let fit = svm_train(&d, &cfg).unwrap();
        let drift: f64 = fit
            .alphas
            .iter()
            .zip(d.labels())
            .map(|(a, l)| a * l.as_f64())
            .sum();
        assert!(drift.abs() <= 1e-6);
        for (t, &a) in fit.alphas.iter().enumerate() {
            let yi = d.labels()[t].as_f64();
            let bound = cfg.box_bound(yi);
            assert!((-1e-12..=bound + 1e-12).contains(&a));
            let margin = yi * fit.model.decision_value(&d.features()[t]).unwrap();
            if a < 1e-8 {
                assert!(margin >= 1.0 - cfg.kkt_tol - 1e-6);
            } else if a > bound - 1e-8 {
                assert!(margin <= 1.0 + cfg.kkt_tol + 1e-6);
            } else {
                assert!((margin - 1.0).abs() <= cfg.kkt_tol + 1e-6);
            }
        }
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        let single = dataset(&[(&[1.0], 1), (&[2.0], 1)]);
        assert!(matches!(
            svm_train(&single, &SvmConfig::default()),
            Err(Error::DegenerateLabels)
        ));
    }

    #[test]
    fn iteration_cap_reports_diagnostics() {
        let d = xor_fixture();
        let cfg = SvmConfig {
            c: 100.0,
            max_passes: 2,
            ..Default::default()
        };
        match svm_train(&d, &cfg) {
            Err(Error::SmoNonConvergence { iterations, gap, .. }) => {
                assert_eq!(iterations, 2);
                assert!(gap > 0.0);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn larger_minority_factor_weakly_relaxes_old_bound() {
        // Minority points buried inside the majority cloud: their
        // multipliers stay pressed against the box, so loosening the box
        // cannot shrink the at-bound count. (On loosely pressured data the
        // count can genuinely move either way; the guaranteed direction is
        // the dual optimum, checked below.)
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut rows: Vec<(Vec<f64>, i64)> = Vec::new();
        for _ in 0..30 {
            rows.push((
                vec![rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)],
                1,
            ));
        }
        for _ in 0..5 {
            rows.push((
                vec![rng.random_range(-0.2..0.2), rng.random_range(-0.2..0.2)],
                -1,
            ));
        }
        let refs: Vec<(&[f64], i64)> = rows.iter().map(|(x, y)| (x.as_slice(), *y)).collect();
        let d = dataset(&refs);

        let base = SvmConfig {
            c: 1.0,
            sigma: 1.0,
            kkt_tol: 1e-5,
            ..Default::default()
        };
        let f1 = SvmConfig {
            minority_factor: 2.0,
            ..base.clone()
        };
        let f2 = SvmConfig {
            minority_factor: 6.0,
            ..base
        };
        let old_bound = f1.c * f1.minority_factor;
        let fit1 = svm_train(&d, &f1).unwrap();
        let fit2 = svm_train(&d, &f2).unwrap();
        let at_old_bound = |alphas: &[f64]| {
            alphas
                .iter()
                .zip(d.labels())
                .filter(|(a, l)| !l.is_stable() && **a >= old_bound - 1e-9)
                .count()
        };
        assert!(at_old_bound(&fit1.alphas) > 0);
        assert!(at_old_bound(&fit2.alphas) >= at_old_bound(&fit1.alphas));
        // loosening the feasible set can only raise the dual optimum
        assert!(fit2.dual_objective >= fit1.dual_objective - 1e-9);
    }

    #[test]
    fn predict_edge_cases() {
        let empty = SvmModel::from_parts(
            vec![],
            vec![],
            -0.5,
            KernelParams::new(1.0).unwrap(),
            ScaleParams::identity(2),
        )
        .unwrap();
        for v in [[0.0, 0.0], [3.0, -1.0]] {
            let x = FeatureVector::new(v.to_vec()).unwrap();
            assert_eq!(empty.predict(&x).unwrap(), ClassLabel::Unstable);
        }

        // single support vector at the query point itself: k = 1, score 1
        let model = SvmModel::from_parts(
            vec![vec![0.5, -0.5]],
            vec![1.0],
            0.0,
            KernelParams::new(1.0).unwrap(),
            ScaleParams::identity(2),
        )
        .unwrap();
        let x = FeatureVector::new(vec![0.5, -0.5]).unwrap();
        assert_eq!(model.decision_value(&x).unwrap(), 1.0);
        assert_eq!(model.predict(&x).unwrap(), ClassLabel::Stable);
        assert!(model
            .predict(&FeatureVector::new(vec![1.0]).unwrap())
            .is_err());
    }

    #[test]
    fn n_p_counts_support_vectors() {
        let model = SvmModel::from_parts(
            vec![vec![0.0; 39]; 10],
            vec![0.5; 10],
            0.1,
            KernelParams::new(1.0).unwrap(),
            ScaleParams::identity(39),
        )
        .unwrap();
        assert_eq!(model.n_p(), 10 * 40 + 1);
    }
}
