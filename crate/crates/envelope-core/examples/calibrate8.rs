//! Scratch: acceptance-7-style grid benchmark.
use envelope_core::data::LabeledDataset;
use envelope_core::eval::{
    grid_search, train_and_evaluate, GridSpec, ImbalanceMode, ModelFamily, TrainerSpec,
};
use envelope_core::labeling::{label_cycles, LabelingConfig};
use envelope_core::synth::{generate_trace, GeneratorConfig, Preset};
use std::time::Instant;

fn benchmark(seed: u64) -> (LabeledDataset, LabeledDataset) {
    let mut cfg = GeneratorConfig::preset(Preset::Default, 8_700, seed);
    cfg.target_imbalance = None;
    let train = label_cycles(&generate_trace(&cfg).unwrap(), &LabelingConfig::default()).unwrap();
    let mut cfg = GeneratorConfig::preset(Preset::Default, 14_500, seed + 1000);
    cfg.target_imbalance = None;
    let test = label_cycles(&generate_trace(&cfg).unwrap(), &LabelingConfig::default()).unwrap();
    (train, test)
}

fn main() {
    let t0 = Instant::now();
    for seed in [1u64] {
        let (train, test) = benchmark(seed);
        println!("train {} r {:.1} | test {} r {:.1}", train.len(), train.imbalance_ratio().unwrap(), test.len(), test.imbalance_ratio().unwrap());
        let elm_grid = GridSpec::new(vec![
            ("n_h".into(), vec![50.0, 90.0, 150.0, 300.0, 600.0]),
            ("lambda".into(), vec![1.0, 10.0, 100.0]),
        ]).unwrap();
        let svm_grid = GridSpec::new(vec![
            ("C".into(), vec![1.0, 10.0, 100.0]),
            ("sigma".into(), vec![0.01, 0.03, 0.1]),
        ]).unwrap();
        for (name, fam, im, grid) in [
            ("regular ELM", ModelFamily::Elm, ImbalanceMode::None, &elm_grid),
            ("under ELM", ModelFamily::Elm, ImbalanceMode::Under, &elm_grid),
            ("over ELM", ModelFamily::Elm, ImbalanceMode::Over, &elm_grid),
            ("cost ELM", ModelFamily::Elm, ImbalanceMode::Cost, &elm_grid),
            ("cost SVM", ModelFamily::Svm, ImbalanceMode::Cost, &svm_grid),
        ] {
            let spec = TrainerSpec::new(fam, im).with_seed(seed);
            let t1 = Instant::now();
            let result = grid_search(&spec, grid, &train, &test, 0).unwrap();
            let best = result.best().unwrap();
            let r = best.outcome.as_ref().unwrap();
            println!(
                "{name:>12}: best total {:.3} (TPR {:.3} TNR {:.3}) at {:?} ({:.0}s)",
                r.total_accuracy, r.tpr, r.tnr, best.params, t1.elapsed().as_secs_f64()
            );
        }
        for (name, fam, im) in [
            ("regular LR", ModelFamily::Logistic, ImbalanceMode::None),
            ("under LR", ModelFamily::Logistic, ImbalanceMode::Under),
            ("over LR", ModelFamily::Logistic, ImbalanceMode::Over),
            ("regular LS", ModelFamily::LinearLs, ImbalanceMode::None),
            ("under LS", ModelFamily::LinearLs, ImbalanceMode::Under),
            ("over LS", ModelFamily::LinearLs, ImbalanceMode::Over),
            ("cost LS", ModelFamily::LinearLs, ImbalanceMode::Cost),
            ("cost LR", ModelFamily::Logistic, ImbalanceMode::Cost),
        ] {
            let spec = TrainerSpec::new(fam, im).with_seed(seed);
            let r = train_and_evaluate(&spec, &train, &test).unwrap();
            println!("{name:>12}: total {:.3} (TPR {:.3} TNR {:.3})", r.total_accuracy, r.tpr, r.tnr);
        }
    }
    println!("elapsed {:.0}s", t0.elapsed().as_secs_f64());
}
