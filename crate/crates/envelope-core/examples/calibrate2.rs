//! Scratch: labeling stats only.
use envelope_core::labeling::{label_cycles_detailed, LabelingConfig, UnstableCause};
use envelope_core::synth::{generate_trace, GeneratorConfig, Preset};

fn main() {
    for seed in [1u64, 2, 3, 11] {
        let mut cfg = GeneratorConfig::preset(Preset::Default, 20_000, seed);
        cfg.target_imbalance = None;
        let trace = generate_trace(&cfg).unwrap();
        let out = label_cycles_detailed(&trace, &LabelingConfig::default()).unwrap();
        let stable = out.stable_cycles.len();
        let unstable = out.unstable_cycles.len();
        let misf = out.unstable_cycles.iter().filter(|(_, c)| matches!(c, UnstableCause::Misfire | UnstableCause::Both)).count();
        println!(
            "seed {seed}: stable {stable} unstable {unstable} (misfire {misf}, var {}) r {:.1} yield {:.2}",
            unstable - misf,
            stable as f64 / unstable.max(1) as f64,
            (stable + unstable) as f64 / 20000.0
        );
    }
}
