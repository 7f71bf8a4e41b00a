//! Scratch: inspect linear model weights.
use envelope_core::eval::{ImbalanceMode, ModelFamily, TrainerSpec};
use envelope_core::labeling::{label_cycles, LabelingConfig};
use envelope_core::model::TrainedModel;
use envelope_core::synth::{generate_trace, GeneratorConfig, Preset};

fn main() {
    let mut cfg = GeneratorConfig::preset(Preset::Default, 8_000, 1);
    cfg.target_imbalance = None;
    let train = label_cycles(&generate_trace(&cfg).unwrap(), &LabelingConfig::default()).unwrap();
    let spec = TrainerSpec::new(ModelFamily::LinearLs, ImbalanceMode::Cost).with_seed(1);
    let model = spec.train(&train).unwrap();
    if let TrainedModel::LinearLs(m) = model {
        let names = train.feature_names();
        let mut pairs: Vec<(String, f64)> = names
            .iter()
            .cloned()
            .zip(m.beta1().iter().copied())
            .collect();
        pairs.sort_by(|a, b| b.1.abs().partial_cmp(&a.1.abs()).unwrap());
        for (n, v) in pairs.iter().take(14) {
            println!("{n:>14}: {v:+.4}");
        }
        println!("beta0: {:+.4}", m.beta0());
    }
}
