//! Kind-tagged container for trained models and the text model-file
//! format, so prediction tooling stays model-agnostic.
//!
//! Files start with a format-version line, then `kind`, then the
//! kind-specific blocks, then the standardization parameters. Numbers are
//! written in shortest round-trip form, which makes saved files
//! byte-reproducible and exact to reload.

use std::fmt;
use std::io::{BufRead, Write};
use std::path::Path;

use crate::data::{ClassLabel, FeatureVector, ScaleParams};
use crate::elm::{ElmModel, HiddenLayer};
use crate::error::{Error, Result};
use crate::kernel::KernelParams;
use crate::linear::LinearModel;
use crate::svm::SvmModel;

const FORMAT_LINE: &str = "envelope-model 1";

/// Model family discriminator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Logistic,
    LinearLs,
    Elm,
    Svm,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Logistic => "logistic",
            ModelKind::LinearLs => "linear-ls",
            ModelKind::Elm => "elm",
            ModelKind::Svm => "svm",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ModelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "logistic" => Ok(ModelKind::Logistic),
            "linear-ls" => Ok(ModelKind::LinearLs),
            "elm" => Ok(ModelKind::Elm),
            "svm" => Ok(ModelKind::Svm),
            other => Err(Error::InvalidParameter(format!(
                "unknown model kind {other:?} (expected logistic|linear-ls|elm|svm)"
            ))),
        }
    }
}

/// A trained classifier of any family.
#[derive(Debug, Clone, PartialEq)]
pub enum TrainedModel {
    Logistic(LinearModel),
    LinearLs(LinearModel),
    Elm(ElmModel),
    Svm(SvmModel),
}

impl TrainedModel {
    pub fn kind(&self) -> ModelKind {
        match self {
            TrainedModel::Logistic(_) => ModelKind::Logistic,
            TrainedModel::LinearLs(_) => ModelKind::LinearLs,
            TrainedModel::Elm(_) => ModelKind::Elm,
            TrainedModel::Svm(_) => ModelKind::Svm,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            TrainedModel::Logistic(m) | TrainedModel::LinearLs(m) => m.dim(),
            TrainedModel::Elm(m) => m.hidden().input_dim(),
            TrainedModel::Svm(m) => m.scale().dim(),
        }
    }

    pub fn n_p(&self) -> usize {
        match self {
            TrainedModel::Logistic(m) | TrainedModel::LinearLs(m) => m.n_p(),
            TrainedModel::Elm(m) => m.n_p(),
            TrainedModel::Svm(m) => m.n_p(),
        }
    }

    pub fn decision_value(&self, x: &FeatureVector) -> Result<f64> {
        match self {
            TrainedModel::Logistic(m) | TrainedModel::LinearLs(m) => m.decision_value(x),
            TrainedModel::Elm(m) => m.decision_value(x),
            TrainedModel::Svm(m) => m.decision_value(x),
        }
    }

    pub fn predict(&self, x: &FeatureVector) -> Result<ClassLabel> {
        match self {
            TrainedModel::Logistic(m) | TrainedModel::LinearLs(m) => m.predict(x),
            TrainedModel::Elm(m) => m.predict(x),
            TrainedModel::Svm(m) => m.predict(x),
        }
    }

    pub fn write<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{FORMAT_LINE}")?;
        writeln!(out, "kind {}", self.kind())?;
        match self {
            TrainedModel::Logistic(m) | TrainedModel::LinearLs(m) => {
                writeln!(out, "n {}", m.dim())?;
                writeln!(out, "beta0 {}", m.beta0())?;
                writeln!(out, "beta1")?;
                writeln!(out, "{}", join(m.beta1()))?;
                write_scale(&mut out, m.scale())?;
            }
            TrainedModel::Elm(m) => {
                let hidden = m.hidden();
                let n = hidden.input_dim();
                writeln!(out, "n {n}")?;
                writeln!(out, "n_h {}", hidden.neuron_count())?;
                writeln!(out, "seed {}", hidden.seed())?;
                writeln!(out, "lambda {}", m.lambda())?;
                writeln!(out, "w_r")?;
                for j in 0..hidden.neuron_count() {
                    writeln!(out, "{}", join(&hidden.weights()[j * n..(j + 1) * n]))?;
                }
                writeln!(out, "b_r")?;
                writeln!(out, "{}", join(hidden.biases()))?;
                writeln!(out, "w")?;
                writeln!(out, "{}", join(m.output_weights()))?;
                write_scale(&mut out, m.scale())?;
            }
            TrainedModel::Svm(m) => {
                writeln!(out, "n {}", m.scale().dim())?;
                writeln!(out, "sigma {}", m.kernel().sigma)?;
                writeln!(out, "bias {}", m.bias())?;
                writeln!(out, "n_sv {}", m.support_count())?;
                writeln!(out, "sv")?;
                for (sv, coeff) in m.support_vectors().iter().zip(m.coefficients()) {
                    writeln!(out, "{} {}", coeff, join(sv))?;
                }
                write_scale(&mut out, m.scale())?;
            }
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path)?;
        let mut w = std::io::BufWriter::new(file);
        self.write(&mut w)?;
        w.flush()?;
        Ok(())
    }

    pub fn read<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = Lines::new(input);
        if lines.next_line()? != FORMAT_LINE {
            return Err(Error::Format(
                "not an envelope model file (bad format line)".into(),
            ));
        }
        let kind: ModelKind = lines.field("kind")?.parse()?;
        let n: usize = parse(&lines.field("n")?)?;
        match kind {
            ModelKind::Logistic | ModelKind::LinearLs => {
                let beta0: f64 = parse(&lines.field("beta0")?)?;
                lines.expect("beta1")?;
                let beta1 = lines.numbers(n)?;
                let scale = read_scale(&mut lines, n)?;
                let model = LinearModel::from_parts(beta1, beta0, scale)?;
                Ok(match kind {
                    ModelKind::Logistic => TrainedModel::Logistic(model),
                    _ => TrainedModel::LinearLs(model),
                })
            }
            ModelKind::Elm => {
                let n_h: usize = parse(&lines.field("n_h")?)?;
                let seed: u64 = parse(&lines.field("seed")?)?;
                let lambda: f64 = parse(&lines.field("lambda")?)?;
                lines.expect("w_r")?;
                let mut weights = Vec::with_capacity(n * n_h);
                for _ in 0..n_h {
                    weights.extend(lines.numbers(n)?);
                }
                lines.expect("b_r")?;
                let biases = lines.numbers(n_h)?;
                lines.expect("w")?;
                let output = lines.numbers(n_h)?;
                let scale = read_scale(&mut lines, n)?;
                let hidden = HiddenLayer::from_parts(weights, biases, n, seed)?;
                Ok(TrainedModel::Elm(ElmModel::from_parts(
                    hidden, output, lambda, scale,
                )?))
            }
            ModelKind::Svm => {
                let sigma: f64 = parse(&lines.field("sigma")?)?;
                let bias: f64 = parse(&lines.field("bias")?)?;
                let n_sv: usize = parse(&lines.field("n_sv")?)?;
                lines.expect("sv")?;
                let mut support_vectors = Vec::with_capacity(n_sv);
                let mut coefficients = Vec::with_capacity(n_sv);
                for _ in 0..n_sv {
                    let mut row = lines.numbers(n + 1)?;
                    coefficients.push(row.remove(0));
                    support_vectors.push(row);
                }
                let scale = read_scale(&mut lines, n)?;
                Ok(TrainedModel::Svm(SvmModel::from_parts(
                    support_vectors,
                    coefficients,
                    bias,
                    KernelParams::new(sigma)?,
                    scale,
                )?))
            }
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::read(std::io::BufReader::new(file))
    }
}

fn join(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_scale<W: Write>(out: &mut W, scale: &ScaleParams) -> Result<()> {
    writeln!(out, "scale_means")?;
    writeln!(out, "{}", join(scale.means()))?;
    writeln!(out, "scale_scales")?;
    writeln!(out, "{}", join(scale.scales()))?;
    Ok(())
}

fn read_scale<R: BufRead>(lines: &mut Lines<R>, n: usize) -> Result<ScaleParams> {
    lines.expect("scale_means")?;
    let means = lines.numbers(n)?;
    lines.expect("scale_scales")?;
    let scales = lines.numbers(n)?;
    ScaleParams::from_parts(means, scales)
}

fn parse<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Format(format!("bad value {s:?} in model file")))
}

struct Lines<R: BufRead> {
    inner: std::io::Lines<R>,
}

impl<R: BufRead> Lines<R> {
    fn new(input: R) -> Self {
        Lines {
            inner: input.lines(),
        }
    }

    fn next_line(&mut self) -> Result<String> {
        match self.inner.next() {
            Some(line) => Ok(line?),
            None => Err(Error::Format("truncated model file".into())),
        }
    }

    /// Reads a `name value` line and returns the value.
    fn field(&mut self, name: &str) -> Result<String> {
        let line = self.next_line()?;
        match line.split_once(' ') {
            Some((k, v)) if k == name => Ok(v.to_string()),
            _ => Err(Error::Format(format!(
                "expected field {name:?}, found {line:?}"
            ))),
        }
    }

    fn expect(&mut self, header: &str) -> Result<()> {
        let line = self.next_line()?;
        if line == header {
            Ok(())
        } else {
            Err(Error::Format(format!(
                "expected section {header:?}, found {line:?}"
            )))
        }
    }

    /// Reads one line of exactly `count` space-separated numbers.
    fn numbers(&mut self, count: usize) -> Result<Vec<f64>> {
        let line = self.next_line()?;
        let values: Vec<f64> = line
            .split_whitespace()
            .map(parse::<f64>)
            .collect::<Result<_>>()?;
        if values.len() != count {
            return Err(Error::Format(format!(
                "expected {count} numbers, found {}",
                values.len()
            )));
        }
        Ok(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::LabeledDataset;
    use crate::elm::{class_weights, elm_train, init_hidden_layer};
    use crate::linear::{train_linear_ls, train_logistic, LogisticOptions};
    use crate::svm::{svm_train, SvmConfig};

    fn training_data() -> LabeledDataset {
        let rows: Vec<(Vec<f64>, i64)> = (0..14)
            .map(|i| {
                let t = i as f64;
                (
                    vec![t * 0.7 - 5.0, (t * t) * 0.1 - 1.0],
                    if i % 3 == 0 { -1 } else { 1 },
                )
            })
            .collect();
        let samples = rows
            .into_iter()
            .map(|(x, y)| {
                (
                    FeatureVector::new(x).unwrap(),
                    ClassLabel::from_i64(y).unwrap(),
                )
            })
            .collect();
        LabeledDataset::new(samples).unwrap()
    }

    fn round_trip(model: &TrainedModel) -> TrainedModel {
        let mut buf = Vec::new();
        model.write(&mut buf).unwrap();
        TrainedModel::read(buf.as_slice()).unwrap()
    }

    #[test]
    fn all_kinds_round_trip_exactly() {
        let d = training_data();

        let logistic = TrainedModel::Logistic(
            train_logistic(&d, None, &LogisticOptions::default())
                .unwrap()
                .model,
        );
        assert_eq!(round_trip(&logistic), logistic);

        let ls = TrainedModel::LinearLs(train_linear_ls(&d, None, 0.5).unwrap());
        assert_eq!(round_trip(&ls), ls);

        let hidden = init_hidden_layer(2, 6, 3).unwrap();
        let weights = class_weights(d.labels(), 1.5).unwrap();
        let elm = TrainedModel::Elm(elm_train(&d, &hidden, 0.1, Some(&weights)).unwrap());
        assert_eq!(round_trip(&elm), elm);

        let svm = TrainedModel::Svm(
            svm_train(
                &d,
                &SvmConfig {
                    c: 5.0,
                    sigma: 0.5,
                    ..Default::default()
                },
            )
            .unwrap()
            .model,
        );
        assert_eq!(round_trip(&svm), svm);
    }

    #[test]
    fn saved_bytes_are_deterministic() {
        let d = training_data();
        let model = TrainedModel::LinearLs(train_linear_ls(&d, None, 0.5).unwrap());
        let mut a = Vec::new();
        let mut b = Vec::new();
        model.write(&mut a).unwrap();
        model.write(&mut b).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn loaded_elm_hidden_layer_matches_recorded_seed() {
        let d = training_data();
        let hidden = init_hidden_layer(2, 4, 11).unwrap();
        let model = TrainedModel::Elm(elm_train(&d, &hidden, 0.1, None).unwrap());
        match round_trip(&model) {
            TrainedModel::Elm(m) => assert!(m.hidden().matches_seed()),
            _ => unreachable!(),
        }
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(TrainedModel::read("not a model\n".as_bytes()).is_err());
        assert!(TrainedModel::read("envelope-model 1\nkind mystery\n".as_bytes()).is_err());
        let truncated = "envelope-model 1\nkind logistic\nn 2\n";
        assert!(TrainedModel::read(truncated.as_bytes()).is_err());
    }
}
