//! Scratch: enumerate the combo lattice, classify noise-free behavior
//! under the current generator formulas.
fn sigmoid(t: f64) -> f64 { 1.0 / (1.0 + (-t).exp()) }

fn census(heat: f64, soi_e: f64, burn: f64, loss: f64, hot_thr: f64, carry: f64) -> (usize, usize, usize, usize) {
    let fms = [9.0, 10.0, 11.0, 12.0, 13.0];
    let ivos = [78.0, 92.0, 106.0, 120.0];
    let evcs = [-120.0, -106.0, -92.0, -78.0];
    let sois = [305.0, 330.0, 340.0, 350.0, 375.0];
    let (mut stable, mut collapse, mut cv_mode, mut hot) = (0, 0, 0, 0);
    let _total = fms.len() * ivos.len() * evcs.len() * sois.len();
    for &fm in &fms {
        for &ivo in &ivos {
            for &evc in &evcs {
                for &soi in &sois {
                    let nvo = (ivo - 60.0) + (-60.0 - evc as f64);
                    let soi_dev: f64 = (soi - 340.0) / 40.0;
                    let nvo_dev: f64 = (nvo - 80.0) / 30.0;
                    let w = ((nvo - 50.0) / 30.0f64).clamp(0.0, 2.0);
                    let phi = fm / 11.0;
                    let mut t: f64 = 0.95;
                    let mut u: f64 = 0.05;
                    let mut misfired = false;
                    let mut last = (0.0, 0.0, 0.0);
                    for _ in 0..60 {
                        let q = 2.0 * t + 0.15 * (fm - 11.0) - 0.15 * soi_dev * soi_dev
                            + 0.05 * nvo_dev + carry * u * (1.0 - u).max(0.0) * w;
                        let chi = sigmoid((q - 0.98) / 0.35);
                        let phasing = sigmoid((hot_thr - q) / 0.28);
                        let slip = ((1.0 - chi) + 0.9 * (1.0 - phasing)).min(1.0);
                        let cv = slip * slip * (0.8 + 0.6 * w) * 0.8;
                        let work = (chi * (1.6 - 0.6 * chi)).min(1.0) * (0.8 + 0.2 * phasing);
                        let imep = 0.287 * fm * work;
                        if imep < 0.1 { misfired = true; break; }
                        t = (0.85 * t + burn * chi * phi + 0.05 * (1.0 - chi) * phi * w
                            + heat * nvo_dev - soi_e * soi_dev * soi_dev - loss)
                            .clamp(0.0, 4.0);
                        u = (1.0 - chi) * phi;
                        last = (q, cv, imep);
                    }
                    if misfired {
                        collapse += 1;
                        continue;
                    }
                    let (q_end, cv_end, _) = last;
                    let sd = 0.4 + 4.0 * cv_end;
                    // expected sampled population CA50 variance
                    if 0.8 * sd * sd > 12.0 {
                        cv_mode += 1;
                        if q_end > 2.0 { hot += 1; }
                    } else {
                        stable += 1;
                    }
                }
            }
        }
    }
    (stable, collapse, cv_mode, hot)
}

fn main() {
    for heat in [0.12, 0.14, 0.16] {
        for soi_e in [0.22] {
            for carry in [1.5] {
                let burn = 0.22;
                let loss = burn * 0.97 - 0.1425;
                for hot_thr in [2.45, 2.55, 2.7] {
                    let (s, c, v, h) = census(heat, soi_e, burn, loss, hot_thr, carry);
                    println!(
                        "heat {heat} soi_e {soi_e} carry {carry}: stable {s} collapse {c} cv {v} (hot {h})"
                    );
                }
            }
        }
    }
}
