//! Scratch: generator-aware oracle ceiling estimate.
use envelope_core::data::ClassLabel;
use envelope_core::eval::confusion_rates;
use envelope_core::labeling::{channel, label_cycles_detailed, LabelingConfig};
use envelope_core::synth::{generate_trace, GeneratorConfig, Preset};

fn sigmoid(t: f64) -> f64 { 1.0 / (1.0 + (-t).exp()) }

fn eta_of(q: f64) -> f64 {
    sigmoid((q - 0.98) / 0.35) * (0.08 + 0.92 * sigmoid((3.0 - q) / 0.28))
}

fn main() {
    let mut cfg = GeneratorConfig::preset(Preset::Default, 13_000, 1001);
    cfg.target_imbalance = None;
    let trace = generate_trace(&cfg).unwrap();
    let lab = LabelingConfig::default();
    let out = label_cycles_detailed(&trace, &lab).unwrap();

    // reconstruct state at each k from observables, simulate forward
    let mut preds = Vec::new();
    let mut labels = Vec::new();
    let all: Vec<(usize, ClassLabel)> = out
        .stable_cycles.iter().map(|&k| (k, ClassLabel::Stable))
        .chain(out.unstable_cycles.iter().map(|(k, _)| (*k, ClassLabel::Unstable)))
        .collect();
    for &(k, truth) in &all {
        let row = |j: usize, c: usize| trace.value(j, c);
        let fm = row(k, channel::FM);
        let ivo = row(k, channel::IVO);
        let evc = row(k, channel::EVC);
        let soi = row(k, channel::SOI);
        let nvo = (ivo - 60.0) + (-60.0 - evc);
        let soi_dev = (soi - 340.0) / 40.0;
        let nvo_dev = (nvo - 80.0) / 30.0;
        let w = ((nvo - 50.0) / 30.0f64).clamp(0.0, 2.0);
        // recover eta and u from the previous cycle (k-1) and q at k from CA50
        let fm_p = row(k - 1, channel::FM);
        let eta_p = (row(k - 1, channel::IMEP) / (0.287 * fm_p)).clamp(0.0, 1.0);
        let mut u = (1.0 - eta_p) * fm_p / 11.0;
        let q_k = 2.0 + (8.0 - row(k, channel::CA50)) / 3.5;
        let mut t = (q_k - 0.15 * (fm - 11.0) + 0.15 * soi_dev * soi_dev
            - 0.05 * nvo_dev
            - 4.0 * u * (1.0 - u).max(0.0) * w) / 2.0;
        // step k itself to update u and t, then simulate k+1..k+5 noise-free
        let mut eta_k = eta_of(q_k);
        let mut q_prev = q_k;
        let mut imeps = Vec::new();
        let mut ca50s = Vec::new();
        let mut cvs = Vec::new();
        for _ in 0..5 {
            let retention = (1.0 - 0.875 * (q_prev - 2.0)).clamp(0.2, 2.2);
            t = 0.85 * t + 0.16 * eta_k * (fm / 11.0) * retention
                + 0.05 * (1.0 - eta_k) * (fm / 11.0) * w
                + 0.08 * nvo_dev - 0.16 * soi_dev * soi_dev - 0.012;
            u = (1.0 - eta_k) * (fm / 11.0);
            let q = 2.0 * t + 0.15 * (fm - 11.0) - 0.15 * soi_dev * soi_dev
                + 0.05 * nvo_dev + 4.0 * u * (1.0 - u).max(0.0) * w;
            eta_k = eta_of(q);
            q_prev = q;
            let cv = (1.0 - eta_k) * (1.0 - eta_k) * (0.8 + 0.6 * w);
            cvs.push(cv);
            imeps.push(0.287 * fm * eta_k - 1.0 * (0.04 + 0.7 * cv));
            ca50s.push(8.0 - 3.5 * (q - 2.0));
        }
        let m = ca50s.iter().sum::<f64>() / 5.0;
        let mean_var = ca50s.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / 5.0;
        let mean_cv = cvs.iter().sum::<f64>() / 5.0;
        let noise_var = 0.8 * (0.6 + 4.0 * mean_cv) * (0.6 + 4.0 * mean_cv);
        let unstable = mean_var + noise_var > lab.ca50_var_limit
            || imeps.iter().any(|&v| v < 0.1);
        preds.push(if unstable { ClassLabel::Unstable } else { ClassLabel::Stable });
        labels.push(truth);
    }
    let r = confusion_rates(&preds, &labels).unwrap();
    println!("oracle: TPR {:.3} TNR {:.3} total {:.3} (N+ {} N- {})", r.tpr, r.tnr, r.total_accuracy, r.n_pos, r.n_neg);

    // anatomy: how many unstable labels follow an input redraw inside the window?
    let mut surprise = 0;
    let mut steady = 0;
    let mut steady_missed = 0;
    for (i, &(k, truth)) in all.iter().enumerate() {
        if truth != ClassLabel::Unstable { continue; }
        let mut redraw_in_window = false;
        for j in k + 1..=k + 5 {
            for c in [channel::FM, channel::IVO, channel::EVC, channel::SOI] {
                if (trace.value(j, c) - trace.value(k, c)).abs() > 1e-9 {
                    redraw_in_window = true;
                }
            }
        }
        if redraw_in_window {
            surprise += 1;
        } else {
            steady += 1;
            if preds[i] != ClassLabel::Unstable { steady_missed += 1; }
        }
    }
    println!("unstable labels: {} with redraw in window, {} steady-input ({} of those missed by oracle)", surprise, steady, steady_missed);
}
