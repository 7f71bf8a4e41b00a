//! Scratch: eta/imep/ca50 distribution probes.
use envelope_core::labeling::channel;
use envelope_core::synth::{generate_trace, GeneratorConfig, Preset};

fn main() {
    let mut cfg = GeneratorConfig::preset(Preset::Default, 20_000, 1);
    cfg.target_imbalance = None;
    let trace = generate_trace(&cfg).unwrap();
    let mut misfire = 0;
    let mut weak = 0;
    let mut mid = 0;
    let mut strong = 0;
    for k in 0..trace.len() {
        let imep = trace.value(k, channel::IMEP);
        let fm = trace.value(k, channel::FM);
        let eta = imep / (0.287 * fm);
        if imep < 0.1 { misfire += 1; }
        else if eta < 0.5 { weak += 1; }
        else if eta < 0.85 { mid += 1; }
        else { strong += 1; }
    }
    println!("misfire {misfire} weak {weak} mid {mid} strong {strong}");
    // CA50 variance over rolling 5-cycle windows
    let mut hi_var = 0;
    for k in 0..trace.len() - 5 {
        let vals: Vec<f64> = (k + 1..=k + 5).map(|j| trace.value(j, channel::CA50)).collect();
        let m = vals.iter().sum::<f64>() / 5.0;
        let v = vals.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / 5.0;
        if v > 5.0 { hi_var += 1; }
    }
    println!("high-var windows {hi_var} of {}", trace.len() - 5);
}
