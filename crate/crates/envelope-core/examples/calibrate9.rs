//! Scratch: f sensitivity at grid-best cells.
use envelope_core::eval::{sensitivity_sweep, ImbalanceMode, ModelFamily, TrainerSpec};
use envelope_core::labeling::{label_cycles, LabelingConfig};
use envelope_core::synth::{generate_trace, GeneratorConfig, Preset};

fn main() {
    let mut cfg = GeneratorConfig::preset(Preset::Default, 14_000, 1);
    cfg.target_imbalance = None;
    let train = label_cycles(&generate_trace(&cfg).unwrap(), &LabelingConfig::default()).unwrap();
    let mut cfg = GeneratorConfig::preset(Preset::Default, 23_000, 1001);
    cfg.target_imbalance = None;
    let test = label_cycles(&generate_trace(&cfg).unwrap(), &LabelingConfig::default()).unwrap();

    let fs = [0.35, 0.5, 0.75, 1.0, 1.5];
    let mut specs = Vec::new();
    for nh in [90.0, 150.0, 300.0, 600.0] {
        for lam in [1.0, 10.0, 100.0] {
            specs.push((
                format!("cost ELM ({nh}, {lam})"),
                TrainerSpec::new(ModelFamily::Elm, ImbalanceMode::Cost)
                    .with_seed(1)
                    .with_param("n_h", nh)
                    .with_param("lambda", lam),
            ));
        }
    }
    for (name, spec) in specs.iter().map(|(n, s)| (n.as_str(), s.clone())) {
        let points = sensitivity_sweep(&spec, &fs, &train, &test).unwrap();
        print!("{name:>20}:");
        for p in &points {
            if let Ok(r) = &p.outcome {
                print!(" f{}:{:.3}", p.f, r.total_accuracy);
            }
        }
        println!();
    }
}
