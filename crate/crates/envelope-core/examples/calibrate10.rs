//! Scratch: hot/cold composition of minority labels.
use envelope_core::labeling::{channel, label_cycles_detailed, LabelingConfig, UnstableCause};
use envelope_core::synth::{generate_trace, GeneratorConfig, Preset};

fn main() {
    let mut cfg = GeneratorConfig::preset(Preset::Default, 20_000, 1);
    cfg.target_imbalance = None;
    let trace = generate_trace(&cfg).unwrap();
    let out = label_cycles_detailed(&trace, &LabelingConfig::default()).unwrap();
    let (mut hot, mut cold) = (0, 0);
    let (mut hot_mis, mut cold_mis) = (0, 0);
    for (k, cause) in &out.unstable_cycles {
        // mean CA50 over the triggering window
        let mean: f64 = (k + 1..=k + 5).map(|j| trace.value(j, channel::CA50)).sum::<f64>() / 5.0;
        let is_mis = matches!(cause, UnstableCause::Misfire | UnstableCause::Both);
        if mean < 8.0 {
            hot += 1;
            if is_mis { hot_mis += 1; }
        } else {
            cold += 1;
            if is_mis { cold_mis += 1; }
        }
    }
    println!("minority: hot {hot} (misfire {hot_mis}), cold {cold} (misfire {cold_mis})");
    // inspect misfire-label contexts
    let mut shown = 0;
    for (k, cause) in &out.unstable_cycles {
        if !matches!(cause, UnstableCause::Misfire | UnstableCause::Both) { continue; }
        if shown < 12 {
            println!(
                "k {k}: imep(k..k+2) {:.2} {:.2} {:.2} ca50 {:.1} {:.1} {:.1} fm {} nvo {:.0} soi {}",
                trace.value(*k, channel::IMEP), trace.value(k + 1, channel::IMEP), trace.value(k + 2, channel::IMEP),
                trace.value(*k, channel::CA50), trace.value(k + 1, channel::CA50), trace.value(k + 2, channel::CA50),
                trace.value(*k, channel::FM),
                (trace.value(*k, channel::IVO) - 60.0) + (-60.0 - trace.value(*k, channel::EVC)),
                trace.value(*k, channel::SOI)
            );
            shown += 1;
        }
    }
}
