//! Core dataset containers, feature standardization, and the shared ±1
//! label and sign conventions used by every learner.
//!
//! The stable/majority class carries label +1, the unstable/minority class
//! label −1, and a score of exactly zero classifies as −1 everywhere.

use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// A dense feature vector; every entry is finite.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector(Vec<f64>);

impl FeatureVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "feature vector",
            });
        }
        Ok(FeatureVector(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }
}

/// Binary class label: +1 stable/majority, −1 unstable/minority.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    Stable,
    Unstable,
}

impl ClassLabel {
    pub fn as_f64(self) -> f64 {
        match self {
            ClassLabel::Stable => 1.0,
            ClassLabel::Unstable => -1.0,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            ClassLabel::Stable => 1,
            ClassLabel::Unstable => -1,
        }
    }

    pub fn from_i64(v: i64) -> Result<Self> {
        match v {
            1 => Ok(ClassLabel::Stable),
            -1 => Ok(ClassLabel::Unstable),
            other => Err(Error::InvalidLabel(other)),
        }
    }

    pub fn is_stable(self) -> bool {
        matches!(self, ClassLabel::Stable)
    }
}

/// Sign convention of the decision rules: +1 for v > 0, −1 for v ≤ 0.
///
/// Zero maps to −1 (unstable). Every learner in the crate routes its score
/// through this function so the convention cannot drift.
pub fn sign(v: f64) -> Result<ClassLabel> {
    if !v.is_finite() {
        return Err(Error::NonFinite {
            context: "sign argument",
        });
    }
    Ok(if v > 0.0 {
        ClassLabel::Stable
    } else {
        ClassLabel::Unstable
    })
}

/// Labeled samples sharing one feature dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    feature_names: Vec<String>,
    features: Vec<FeatureVector>,
    labels: Vec<ClassLabel>,
}

impl LabeledDataset {
    /// Builds a dataset with default feature names `x0..x{n-1}`.
    pub fn new(samples: Vec<(FeatureVector, ClassLabel)>) -> Result<Self> {
        let dim = match samples.first() {
            Some((x, _)) => x.len(),
            None => return Err(Error::EmptyDataset),
        };
        let names = (0..dim).map(|i| format!("x{i}")).collect();
        Self::with_names(names, samples)
    }

    pub fn with_names(
        feature_names: Vec<String>,
        samples: Vec<(FeatureVector, ClassLabel)>,
    ) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptyDataset);
        }
        let dim = feature_names.len();
        let mut features = Vec::with_capacity(samples.len());
        let mut labels = Vec::with_capacity(samples.len());
        for (x, y) in samples {
            if x.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: x.len(),
                });
            }
            features.push(x);
            labels.push(y);
        }
        Ok(LabeledDataset {
            feature_names,
            features,
            labels,
        })
    }

    pub fn len(&self) -> usize {
        self.features.len()
    }

    pub fn is_empty(&self) -> bool {
        self.features.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.feature_names.len()
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn features(&self) -> &[FeatureVector] {
        &self.features
    }

    pub fn labels(&self) -> &[ClassLabel] {
        &self.labels
    }

    pub fn sample(&self, i: usize) -> (&FeatureVector, ClassLabel) {
        (&self.features[i], self.labels[i])
    }

    /// Count of +1 (stable, majority) samples.
    pub fn stable_count(&self) -> usize {
        self.labels.iter().filter(|l| l.is_stable()).count()
    }

    /// Count of −1 (unstable, minority) samples.
    pub fn unstable_count(&self) -> usize {
        self.len() - self.stable_count()
    }

    /// Majority-to-minority ratio r = N⁺/N⁻.
    pub fn imbalance_ratio(&self) -> Result<f64> {
        let minority = self.unstable_count();
        if minority == 0 {
            return Err(Error::NoMinoritySamples);
        }
        Ok(self.stable_count() as f64 / minority as f64)
    }

    pub fn has_both_classes(&self) -> bool {
        self.stable_count() > 0 && self.unstable_count() > 0
    }

    /// New dataset holding the given sample indices, in the given order.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        let samples = indices
            .iter()
            .map(|&i| (self.features[i].clone(), self.labels[i]))
            .collect();
        Self::with_names(self.feature_names.clone(), samples)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header: Vec<&str> = self.feature_names.iter().map(|s| s.as_str()).collect();
        header.push("label");
        w.write_record(&header).map_err(csv_err)?;
        let mut record = Vec::with_capacity(self.dim() + 1);
        for (x, y) in self.features.iter().zip(&self.labels) {
            record.clear();
            record.extend(x.values().iter().map(|v| v.to_string()));
            record.push(y.as_i64().to_string());
            w.write_record(&record).map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        String::from_utf8(buf).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn save_csv(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path)?;
        self.write_csv(std::io::BufWriter::new(file))
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut r = csv::Reader::from_reader(input);
        let header = r.headers().map_err(csv_err)?.clone();
        let label_col = header
            .iter()
            .position(|h| h == "label")
            .ok_or_else(|| Error::Format("missing column: label".into()))?;
        let feature_names: Vec<String> = header
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != label_col)
            .map(|(_, h)| h.to_string())
            .collect();

        let mut samples = Vec::new();
        for (row, record) in r.records().enumerate() {
            let record = record.map_err(csv_err)?;
            let mut values = Vec::with_capacity(feature_names.len());
            let mut label = None;
            for (i, field) in record.iter().enumerate() {
                if i == label_col {
                    let v: i64 = field.trim().parse().map_err(|_| {
                        Error::Format(format!("row {}: bad label {:?}", row + 2, field))
                    })?;
                    label = Some(ClassLabel::from_i64(v)?);
                } else {
                    let v: f64 = field.trim().parse().map_err(|_| {
                        Error::Format(format!("row {}: bad number {:?}", row + 2, field))
                    })?;
                    values.push(v);
                }
            }
            let label =
                label.ok_or_else(|| Error::Format(format!("row {}: missing label", row + 2)))?;
            samples.push((FeatureVector::new(values)?, label));
        }
        Self::with_names(feature_names, samples)
    }

    pub fn load_csv(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::read_csv(std::io::BufReader::new(file))
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Format(e.to_string())
}

/// Per-feature affine standardization fitted on training data.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleParams {
    means: Vec<f64>,
    scales: Vec<f64>,
}

impl ScaleParams {
    /// Identity transform for a given dimension.
    pub fn identity(dim: usize) -> Self {
        ScaleParams {
            means: vec![0.0; dim],
            scales: vec![1.0; dim],
        }
    }

    pub fn from_parts(means: Vec<f64>, scales: Vec<f64>) -> Result<Self> {
        if means.len() != scales.len() {
            return Err(Error::DimensionMismatch {
                expected: means.len(),
                got: scales.len(),
            });
        }
        if scales.iter().any(|&s| !(s > 0.0) || !s.is_finite()) {
            return Err(Error::InvalidParameter("scales must be positive".into()));
        }
        Ok(ScaleParams { means, scales })
    }

    pub fn dim(&self) -> usize {
        self.means.len()
    }

    pub fn means(&self) -> &[f64] {
        &self.means
    }

    pub fn scales(&self) -> &[f64] {
        &self.scales
    }

    /// Fits mean and population standard deviation per feature. Features
    /// with deviation below 1e-12 (constants) get scale 1 so applying the
    /// transform stays well defined.
    pub fn fit(dataset: &LabeledDataset) -> Result<Self> {
        if dataset.is_empty() {
            return Err(Error::EmptyDataset);
        }
        let n = dataset.dim();
        let count = dataset.len() as f64;
        let mut means = vec![0.0; n];
        for x in dataset.features() {
            for (m, v) in means.iter_mut().zip(x.values()) {
                *m += v;
            }
        }
        for m in &mut means {
            *m /= count;
        }
        let mut vars = vec![0.0; n];
        for x in dataset.features() {
            for ((s, v), m) in vars.iter_mut().zip(x.values()).zip(&means) {
                let d = v - m;
                *s += d * d;
            }
        }
        let scales = vars
            .iter()
            .map(|&s| {
                let sd = (s / count).sqrt();
                if sd < 1e-12 {
                    1.0
                } else {
                    sd
                }
            })
            .collect();
        Ok(ScaleParams { means, scales })
    }

    pub fn apply(&self, x: &FeatureVector) -> Result<FeatureVector> {
        Ok(FeatureVector(self.apply_slice(x.values())?))
    }

    pub fn apply_slice(&self, values: &[f64]) -> Result<Vec<f64>> {
        if values.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: values.len(),
            });
        }
        Ok(values
            .iter()
            .zip(self.means.iter().zip(&self.scales))
            .map(|(v, (m, s))| (v - m) / s)
            .collect())
    }

    /// Inverse of `apply`: recovers raw values from standardized ones.
    pub fn invert_slice(&self, values: &[f64]) -> Result<Vec<f64>> {
        if values.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: values.len(),
            });
        }
        Ok(values
            .iter()
            .zip(self.means.iter().zip(&self.scales))
            .map(|(v, (m, s))| v * s + m)
            .collect())
    }

    /// Standardizes every feature vector of a dataset into plain rows.
    pub fn apply_dataset(&self, dataset: &LabeledDataset) -> Result<Vec<Vec<f64>>> {
        dataset
            .features()
            .iter()
            .map(|x| self.apply_slice(x.values()))
            .collect()
    }
}
