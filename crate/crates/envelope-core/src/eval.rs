//! Skewed-data metrics, loss diagnostics, and the model-selection harness:
//! full grid search, scaling-factor sensitivity sweeps, and the multi-seed
//! hidden-layer study.
//!
//! Total accuracy is the mean of the per-class recalls, (TPR + TNR)/2, so
//! a classifier that absorbs everything into the majority class scores
//! exactly 0.5.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::data::{ClassLabel, LabeledDataset};
use crate::elm::{class_weights, elm_train, init_hidden_layer};
use crate::error::{Error, Result};
use crate::linear::{train_linear_ls, train_logistic, LogisticOptions};
use crate::model::TrainedModel;
use crate::resampling::{oversample, undersample};
use crate::svm::{svm_train, SvmConfig};

/// Confusion counts and the skewed-data rates for one evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub tp: usize,
    pub tn: usize,
    pub n_pos: usize,
    pub n_neg: usize,
    pub tpr: f64,
    pub tnr: f64,
    pub total_accuracy: f64,
    /// Model parameter count; zero when no model was involved.
    pub n_p: usize,
    pub hyper_params: BTreeMap<String, String>,
}

/// Exact rates from predictions and reference labels. The counts stay
/// integral until the final divisions, and total accuracy is computed as
/// (TPR + TNR)/2 so the identity holds bit-for-bit.
pub fn confusion_rates(predictions: &[ClassLabel], labels: &[ClassLabel]) -> Result<EvalReport> {
    if predictions.len() != labels.len() {
        return Err(Error::DimensionMismatch {
            expected: labels.len(),
            got: predictions.len(),
        });
    }
    let mut tp = 0usize;
    let mut tn = 0usize;
    let mut n_pos = 0usize;
    let mut n_neg = 0usize;
    for (p, l) in predictions.iter().zip(labels) {
        if l.is_stable() {
            n_pos += 1;
            if p.is_stable() {
                tp += 1;
            }
        } else {
            n_neg += 1;
            if !p.is_stable() {
                tn += 1;
            }
        }
    }
    if n_pos == 0 || n_neg == 0 {
        return Err(Error::UndefinedRate);
    }
    let tpr = tp as f64 / n_pos as f64;
    let tnr = tn as f64 / n_neg as f64;
    Ok(EvalReport {
        tp,
        tn,
        n_pos,
        n_neg,
        tpr,
        tnr,
        total_accuracy: (tpr + tnr) / 2.0,
        n_p: 0,
        hyper_params: BTreeMap::new(),
    })
}

/// Loss functions of the three algorithm families, as functions of the
/// margin m = y·f(x).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LossKind {
    Logistic,
    Hinge,
    Squared,
}

impl std::str::FromStr for LossKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "logistic" => Ok(LossKind::Logistic),
            "hinge" => Ok(LossKind::Hinge),
            "squared" => Ok(LossKind::Squared),
            other => Err(Error::InvalidParameter(format!(
                "unknown loss kind {other:?} (expected logistic|hinge|squared)"
            ))),
        }
    }
}

pub fn loss_value(kind: LossKind, margin: f64) -> Result<f64> {
    if !margin.is_finite() {
        return Err(Error::NonFinite { context: "margin" });
    }
    Ok(match kind {
        LossKind::Logistic => {
            if margin >= 0.0 {
                (-margin).exp().ln_1p()
            } else {
                -margin + margin.exp().ln_1p()
            }
        }
        LossKind::Hinge => (1.0 - margin).max(0.0),
        LossKind::Squared => (1.0 - margin) * (1.0 - margin),
    })
}

/// Classifier family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelFamily {
    Logistic,
    LinearLs,
    Elm,
    Svm,
}

impl ModelFamily {
    pub fn name(self) -> &'static str {
        match self {
            ModelFamily::Logistic => "logistic",
            ModelFamily::LinearLs => "linear-ls",
            ModelFamily::Elm => "elm",
            ModelFamily::Svm => "svm",
        }
    }
}

impl std::str::FromStr for ModelFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "logistic" => Ok(ModelFamily::Logistic),
            "linear-ls" => Ok(ModelFamily::LinearLs),
            "elm" => Ok(ModelFamily::Elm),
            "svm" => Ok(ModelFamily::Svm),
            other => Err(Error::InvalidParameter(format!(
                "unknown model family {other:?} (expected logistic|linear-ls|elm|svm)"
            ))),
        }
    }
}

/// Imbalance treatment applied at training time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImbalanceMode {
    None,
    Under,
    Over,
    Cost,
}

impl ImbalanceMode {
    pub fn name(self) -> &'static str {
        match self {
            ImbalanceMode::None => "none",
            ImbalanceMode::Under => "under",
            ImbalanceMode::Over => "over",
            ImbalanceMode::Cost => "cost",
        }
    }
}

impl std::str::FromStr for ImbalanceMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(ImbalanceMode::None),
            "under" => Ok(ImbalanceMode::Under),
            "over" => Ok(ImbalanceMode::Over),
            "cost" => Ok(ImbalanceMode::Cost),
            other => Err(Error::InvalidParameter(format!(
                "unknown imbalance mode {other:?} (expected none|under|over|cost)"
            ))),
        }
    }
}

/// A reproducible recipe: family + imbalance treatment + hyper-parameters.
///
/// All randomness flows from `seed`: re-sampling and the ELM hidden layer
/// draw from independent streams derived from it. Hyper-parameters in
/// `params` override the family defaults; grid search overrides `params`
/// per cell, and the scaling factor can itself appear as a grid axis `f`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainerSpec {
    pub family: ModelFamily,
    pub imbalance: ImbalanceMode,
    /// Cost-sensitive scaling factor; the minority weight is r·f.
    pub f: f64,
    pub seed: u64,
    pub params: BTreeMap<String, f64>,
}

impl TrainerSpec {
    pub fn new(family: ModelFamily, imbalance: ImbalanceMode) -> Self {
        TrainerSpec {
            family,
            imbalance,
            f: 1.0,
            seed: 0,
            params: BTreeMap::new(),
        }
    }

    pub fn with_param(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_f(mut self, f: f64) -> Self {
        self.f = f;
        self
    }

    fn param(&self, name: &str, default: f64) -> f64 {
        self.params.get(name).copied().unwrap_or(default)
    }

    fn effective_f(&self) -> f64 {
        self.param("f", self.f)
    }

    fn hidden_seed(&self) -> u64 {
        // independent stream from the resampling seed
        self.seed ^ 0x517c_c1b7_2722_0a95
    }

    /// Trains one model on `train` according to the recipe.
    pub fn train(&self, train: &LabeledDataset) -> Result<TrainedModel> {
        let data = match self.imbalance {
            ImbalanceMode::Under => undersample(train, self.seed)?,
            ImbalanceMode::Over => oversample(train, self.seed)?,
            ImbalanceMode::None | ImbalanceMode::Cost => train.clone(),
        };
        let cost_weights = if self.imbalance == ImbalanceMode::Cost {
            Some(class_weights(data.labels(), self.effective_f())?)
        } else {
            None
        };
        match self.family {
            ModelFamily::Logistic => {
                let opts = LogisticOptions {
                    max_iters: self.param("max_iters", 10_000.0) as usize,
                    tol: self.param("tol", 1e-8),
                    l2: self.param("l2", 1e-6),
                };
                let fit = train_logistic(
                    &data,
                    cost_weights.as_ref().map(|w| w.gamma()),
                    &opts,
                )?;
                Ok(TrainedModel::Logistic(fit.model))
            }
            ModelFamily::LinearLs => {
                let lambda = self.param("lambda", 1e-6);
                let model =
                    train_linear_ls(&data, cost_weights.as_ref().map(|w| w.gamma()), lambda)?;
                Ok(TrainedModel::LinearLs(model))
            }
            ModelFamily::Elm => {
                let n_h = self.param("n_h", 90.0).round() as usize;
                let lambda = self.param("lambda", 0.1);
                let hidden = init_hidden_layer(data.dim(), n_h, self.hidden_seed())?;
                let model = elm_train(&data, &hidden, lambda, cost_weights.as_ref())?;
                Ok(TrainedModel::Elm(model))
            }
            ModelFamily::Svm => {
                let minority_factor = match &cost_weights {
                    Some(w) => w.minority_weight(),
                    None => 1.0,
                };
                let cfg = SvmConfig {
                    c: self.param("C", 1.0),
                    sigma: self.param("sigma", 1.0),
                    minority_factor,
                    kkt_tol: self.param("kkt_tol", 1e-3),
                    max_passes: self.param("max_passes", 1e7) as usize,
                    cache_bytes: (self.param("cache_mb", 256.0) * (1 << 20) as f64) as usize,
                };
                Ok(TrainedModel::Svm(svm_train(&data, &cfg)?.model))
            }
        }
    }

    /// Hyper-parameter description attached to evaluation reports.
    pub fn describe(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        out.insert("family".into(), self.family.name().into());
        out.insert("imbalance".into(), self.imbalance.name().into());
        out.insert("seed".into(), self.seed.to_string());
        if self.imbalance == ImbalanceMode::Cost {
            out.insert("f".into(), self.effective_f().to_string());
        }
        for (k, v) in &self.params {
            out.insert(k.clone(), v.to_string());
        }
        out
    }
}

/// Predicts over a test set and reports the rates plus the model size.
pub fn evaluate_model(model: &TrainedModel, test: &LabeledDataset) -> Result<EvalReport> {
    let predictions: Vec<ClassLabel> = test
        .features()
        .iter()
        .map(|x| model.predict(x))
        .collect::<Result<_>>()?;
    let mut report = confusion_rates(&predictions, test.labels())?;
    report.n_p = model.n_p();
    Ok(report)
}

/// Trains per the spec and evaluates on the held-out set.
pub fn train_and_evaluate(
    spec: &TrainerSpec,
    train: &LabeledDataset,
    test: &LabeledDataset,
) -> Result<EvalReport> {
    let model = spec.train(train)?;
    let mut report = evaluate_model(&model, test)?;
    report.hyper_params = spec.describe();
    Ok(report)
}

/// Ordered hyper-parameter axes whose Cartesian product forms the grid.
/// The first axis varies slowest.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    axes: Vec<(String, Vec<f64>)>,
}

impl GridSpec {
    pub fn new(axes: Vec<(String, Vec<f64>)>) -> Result<Self> {
        if axes.is_empty() || axes.iter().any(|(_, v)| v.is_empty()) {
            return Err(Error::InvalidParameter(
                "grid needs at least one axis with at least one value".into(),
            ));
        }
        let mut names: Vec<&str> = axes.iter().map(|(n, _)| n.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        if names.len() != axes.len() {
            return Err(Error::InvalidParameter("duplicate grid axis".into()));
        }
        Ok(GridSpec { axes })
    }

    pub fn axes(&self) -> &[(String, Vec<f64>)] {
        &self.axes
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|(_, v)| v.len()).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Parameter assignment of the cell at a flat index.
    pub fn cell(&self, index: usize) -> Vec<(String, f64)> {
        let mut rem = index;
        let mut strides = vec![1usize; self.axes.len()];
        for i in (0..self.axes.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.axes[i + 1].1.len();
        }
        self.axes
            .iter()
            .zip(strides)
            .map(|((name, values), stride)| {
                let idx = (rem / stride) % values.len();
                rem %= stride;
                (name.clone(), values[idx])
            })
            .collect()
    }
}

/// One grid cell: its parameter assignment and the evaluation outcome.
/// Training failures are recorded in place instead of aborting the sweep.
#[derive(Debug, Clone)]
pub struct GridCell {
    pub index: usize,
    pub params: Vec<(String, f64)>,
    pub outcome: std::result::Result<EvalReport, String>,
}

/// Grid-search output, in grid order.
#[derive(Debug, Clone)]
pub struct GridSearchResult {
    pub grid: GridSpec,
    pub cells: Vec<GridCell>,
}

/// Evaluates every cell of the grid on the held-out test set, with `jobs`
/// worker threads (0 means one per core). Assembly is by cell index, so
/// the result does not depend on completion order.
pub fn grid_search(
    spec: &TrainerSpec,
    grid: &GridSpec,
    train: &LabeledDataset,
    test: &LabeledDataset,
    jobs: usize,
) -> Result<GridSearchResult> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("empty grid".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let cells: Vec<GridCell> = pool.install(|| {
        (0..grid.len())
            .into_par_iter()
            .map(|index| {
                let params = grid.cell(index);
                let mut cell_spec = spec.clone();
                for (name, value) in &params {
                    cell_spec.params.insert(name.clone(), *value);
                }
                let outcome = train_and_evaluate(&cell_spec, train, test)
                    .map_err(|e| e.to_string());
                GridCell {
                    index,
                    params,
                    outcome,
                }
            })
            .collect()
    });
    Ok(GridSearchResult {
        grid: grid.clone(),
        cells,
    })
}

impl GridSearchResult {
    /// Cells ranked by total accuracy descending; ties break toward fewer
    /// parameters, then lexicographic parameter order. Failed cells rank
    /// last, in grid order.
    pub fn ranked(&self) -> Vec<&GridCell> {
        let mut cells: Vec<&GridCell> = self.cells.iter().collect();
        cells.sort_by(|a, b| match (&a.outcome, &b.outcome) {
            (Ok(ra), Ok(rb)) => rb
                .total_accuracy
                .partial_cmp(&ra.total_accuracy)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(ra.n_p.cmp(&rb.n_p))
                .then_with(|| param_order(&a.params, &b.params)),
            (Ok(_), Err(_)) => std::cmp::Ordering::Less,
            (Err(_), Ok(_)) => std::cmp::Ordering::Greater,
            (Err(_), Err(_)) => a.index.cmp(&b.index),
        });
        cells
    }

    pub fn best(&self) -> Option<&GridCell> {
        self.ranked().into_iter().find(|c| c.outcome.is_ok())
    }

    /// One CSV row per cell, in grid order.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (name, _) in self.grid.axes() {
            out.push_str(name);
            out.push(',');
        }
        out.push_str("TP,TN,N_pos,N_neg,TPR,TNR,total_accuracy,n_p,error\n");
        for cell in &self.cells {
            for (_, value) in &cell.params {
                let _ = write!(out, "{value},");
            }
            match &cell.outcome {
                Ok(r) => {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{},{},",
                        r.tp, r.tn, r.n_pos, r.n_neg, r.tpr, r.tnr, r.total_accuracy, r.n_p
                    );
                }
                Err(e) => {
                    let _ = writeln!(out, ",,,,,,,,{}", e.replace([',', '\n'], ";"));
                }
            }
        }
        out
    }

    /// Plain-text tables in the published layout: a TPR block, a TNR
    /// block, and a total-accuracy block. Two-axis grids render as
    /// matrices (first axis down, second across).
    pub fn to_tables_text(&self) -> String {
        let mut out = String::new();
        let blocks: [(&str, fn(&EvalReport) -> f64); 3] = [
            ("TPR", |r| r.tpr),
            ("TNR", |r| r.tnr),
            ("Total Accuracy", |r| r.total_accuracy),
        ];
        if self.grid.axes().len() == 2 {
            let (row_name, row_values) = &self.grid.axes()[0];
            let (col_name, col_values) = &self.grid.axes()[1];
            for (title, metric) in blocks {
                let _ = writeln!(out, "{title}");
                let _ = write!(out, "{:>12}", format!("{row_name}\\{col_name}"));
                for c in col_values {
                    let _ = write!(out, "{c:>8}");
                }
                out.push('\n');
                for (i, r) in row_values.iter().enumerate() {
                    let _ = write!(out, "{r:>12}");
                    for j in 0..col_values.len() {
                        let cell = &self.cells[i * col_values.len() + j];
                        match &cell.outcome {
                            Ok(report) => {
                                let _ = write!(out, "{:>8.3}", metric(report));
                            }
                            Err(_) => {
                                let _ = write!(out, "{:>8}", "err");
                            }
                        }
                    }
                    out.push('\n');
                }
                out.push('\n');
            }
        } else {
            for (title, metric) in blocks {
                let _ = writeln!(out, "{title}");
                for cell in &self.cells {
                    let label = cell
                        .params
                        .iter()
                        .map(|(n, v)| format!("{n}={v}"))
                        .collect::<Vec<_>>()
                        .join(" ");
                    match &cell.outcome {
                        Ok(report) => {
                            let _ = writeln!(out, "{label:>24} {:>8.3}", metric(report));
                        }
                        Err(_) => {
                            let _ = writeln!(out, "{label:>24} {:>8}", "err");
                        }
                    }
                }
                out.push('\n');
            }
        }
        out
    }
}

fn param_order(a: &[(String, f64)], b: &[(String, f64)]) -> std::cmp::Ordering {
    for ((_, va), (_, vb)) in a.iter().zip(b) {
        match va.partial_cmp(vb) {
            Some(std::cmp::Ordering::Equal) | None => continue,
            Some(ord) => return ord,
        }
    }
    std::cmp::Ordering::Equal
}

/// One point of a scaling-factor sensitivity sweep.
#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub f: f64,
    pub outcome: std::result::Result<EvalReport, String>,
}

/// Varies the cost-sensitive scaling factor f with every other
/// hyper-parameter held fixed. Points come back ordered by f.
pub fn sensitivity_sweep(
    spec: &TrainerSpec,
    f_values: &[f64],
    train: &LabeledDataset,
    test: &LabeledDataset,
) -> Result<Vec<SweepPoint>> {
    if f_values.is_empty() {
        return Err(Error::InvalidParameter("empty f sweep".into()));
    }
    if f_values.iter().any(|&f| !(f > 0.0) || !f.is_finite()) {
        return Err(Error::InvalidParameter("sweep f values must be > 0".into()));
    }
    if spec.imbalance != ImbalanceMode::Cost {
        return Err(Error::InvalidParameter(
            "sensitivity sweep requires the cost-sensitive mode".into(),
        ));
    }
    let mut fs = f_values.to_vec();
    fs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(fs
        .into_iter()
        .map(|f| {
            let point_spec = spec.clone().with_f(f);
            let outcome =
                train_and_evaluate(&point_spec, train, test).map_err(|e| e.to_string());
            SweepPoint { f, outcome }
        })
        .collect())
}

/// Sweep curve as CSV `f,TPR,TNR,total`; failed points are omitted.
pub fn sweep_csv(points: &[SweepPoint]) -> String {
    let mut out = String::from("f,TPR,TNR,total\n");
    for p in points {
        if let Ok(r) = &p.outcome {
            let _ = writeln!(out, "{},{},{},{}", p.f, r.tpr, r.tnr, r.total_accuracy);
        }
    }
    out
}

/// Repeated ELM training with different hidden-layer seeds and identical
/// hyper-parameters.
#[derive(Debug, Clone)]
pub struct MultiSeedStudy {
    pub rows: Vec<(u64, EvalReport)>,
    pub min_total: f64,
    pub median_total: f64,
    pub max_total: f64,
}

pub fn multi_seed_study(
    spec: &TrainerSpec,
    seeds: &[u64],
    train: &LabeledDataset,
    test: &LabeledDataset,
) -> Result<MultiSeedStudy> {
    if seeds.len() < 2 {
        return Err(Error::InvalidParameter(
            "multi-seed study needs at least 2 seeds".into(),
        ));
    }
    if spec.family != ModelFamily::Elm {
        return Err(Error::InvalidParameter(
            "multi-seed study applies to the ELM family".into(),
        ));
    }
    let mut rows = Vec::with_capacity(seeds.len());
    for &seed in seeds {
        let row_spec = spec.clone().with_seed(seed);
        let report = train_and_evaluate(&row_spec, train, test)?;
        rows.push((seed, report));
    }
    let mut totals: Vec<f64> = rows.iter().map(|(_, r)| r.total_accuracy).collect();
    totals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let median_total = if totals.len() % 2 == 1 {
        totals[totals.len() / 2]
    } else {
        0.5 * (totals[totals.len() / 2 - 1] + totals[totals.len() / 2])
    };
    Ok(MultiSeedStudy {
        min_total: totals[0],
        median_total,
        max_total: *totals.last().unwrap(),
        rows,
    })
}

/// Study table as CSV, one row per seed plus a min/median/max summary.
pub fn multi_seed_csv(study: &MultiSeedStudy) -> String {
    let mut out = String::from("seed,TPR,TNR,total,n_p\n");
    for (seed, r) in &study.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            seed, r.tpr, r.tnr, r.total_accuracy, r.n_p
        );
    }
    let _ = writeln!(
        out,
        "summary,min={},median={},max={},",
        study.min_total, study.median_total, study.max_total
    );
    out
}
