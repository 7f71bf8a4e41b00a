//! Scratch calibration harness.
use envelope_core::data::LabeledDataset;
use envelope_core::eval::{train_and_evaluate, ImbalanceMode, ModelFamily, TrainerSpec};
use envelope_core::labeling::{label_cycles, LabelingConfig};
use envelope_core::synth::{generate_trace, GeneratorConfig, Preset};
use std::time::Instant;

fn benchmark(seed: u64) -> (LabeledDataset, LabeledDataset) {
    let mut cfg = GeneratorConfig::preset(Preset::Default, 14_000, seed);
    cfg.target_imbalance = None;
    let train = label_cycles(&generate_trace(&cfg).unwrap(), &LabelingConfig::default()).unwrap();
    let mut cfg = GeneratorConfig::preset(Preset::Default, 23_000, seed + 1000);
    cfg.target_imbalance = None;
    let test = label_cycles(&generate_trace(&cfg).unwrap(), &LabelingConfig::default()).unwrap();
    (train, test)
}

fn run(name: &str, spec: &TrainerSpec, train: &LabeledDataset, test: &LabeledDataset) {
    let t0 = Instant::now();
    match train_and_evaluate(spec, train, test) {
        Ok(r) => println!(
            "{name:>28}: TPR {:.3} TNR {:.3} total {:.3} n_p {:>6}  ({:.1}s)",
            r.tpr, r.tnr, r.total_accuracy, r.n_p, t0.elapsed().as_secs_f64()
        ),
        Err(e) => println!("{name:>28}: ERROR {e}"),
    }
}

fn main() {
    for seed in [1u64, 2] {
        let (train, test) = benchmark(seed);
        println!(
            "== seed {seed}: train {} (r {:.1}), test {} (r {:.1})",
            train.len(),
            train.imbalance_ratio().unwrap(),
            test.len(),
            test.imbalance_ratio().unwrap()
        );
        let elm = |im, nh: f64, lam: f64| {
            TrainerSpec::new(ModelFamily::Elm, im)
                .with_seed(seed)
                .with_param("n_h", nh)
                .with_param("lambda", lam)
        };
        run("regular ELM (90, 0.01)", &elm(ImbalanceMode::None, 90.0, 0.01), &train, &test);
        run("cost ELM (90, 1, f=1)", &elm(ImbalanceMode::Cost, 90.0, 1.0), &train, &test);
        run("cost ELM (300, 1, f=1)", &elm(ImbalanceMode::Cost, 300.0, 1.0), &train, &test);
        run("under ELM (90, 0.1)", &elm(ImbalanceMode::Under, 90.0, 0.1), &train, &test);
        run("over ELM (90, 10)", &elm(ImbalanceMode::Over, 90.0, 10.0), &train, &test);
        let svm = |im, c: f64, s: f64| {
            TrainerSpec::new(ModelFamily::Svm, im)
                .with_seed(seed)
                .with_param("C", c)
                .with_param("sigma", s)
        };
        run("regular SVM (100, 0.01)", &svm(ImbalanceMode::None, 100.0, 0.01), &train, &test);
        run("cost SVM (1,0.01,f=1)", &svm(ImbalanceMode::Cost, 1.0, 0.01), &train, &test);
        run("cost SVM (10,0.03,f=1)", &svm(ImbalanceMode::Cost, 10.0, 0.03), &train, &test);
        run("under SVM (10, 0.03)", &svm(ImbalanceMode::Under, 10.0, 0.03), &train, &test);
        run("over SVM (1, 0.03)", &svm(ImbalanceMode::Over, 1.0, 0.03), &train, &test);
        let lin = |fam, im| TrainerSpec::new(fam, im).with_seed(seed);
        run("regular LR", &lin(ModelFamily::Logistic, ImbalanceMode::None), &train, &test);
        run("under LR", &lin(ModelFamily::Logistic, ImbalanceMode::Under), &train, &test);
        run("over LR", &lin(ModelFamily::Logistic, ImbalanceMode::Over), &train, &test);
        run("cost LS", &lin(ModelFamily::LinearLs, ImbalanceMode::Cost), &train, &test);
        run("under LS", &lin(ModelFamily::LinearLs, ImbalanceMode::Under), &train, &test);
    }
}
