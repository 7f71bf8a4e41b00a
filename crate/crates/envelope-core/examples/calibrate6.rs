//! Scratch: single-combo trajectory.
fn sigmoid(t: f64) -> f64 { 1.0 / (1.0 + (-t).exp()) }
fn eta_of(q: f64) -> f64 {
    sigmoid((q - 0.98) / 0.35) * (0.08 + 0.92 * sigmoid((3.0 - q) / 0.28))
}
fn main() {
    for (fm, nvo, soi) in [(13.0, 120.0, 340.0), (12.0, 106.0, 340.0), (11.0, 92.0, 340.0), (9.0, 50.0, 340.0)] {
        let soi_dev: f64 = (soi - 340.0) / 40.0;
        let nvo_dev: f64 = (nvo - 80.0) / 30.0;
        let w = ((nvo - 50.0) / 30.0f64).clamp(0.0, 1.6);
        let phi: f64 = fm / 11.0;
        let mut t: f64 = 0.95;
        let mut u: f64 = 0.05;
        print!("fm {fm} nvo {nvo}: q =");
        for i in 0..30 {
            let q = 2.0 * t + 0.15 * (fm - 11.0) - 0.15 * soi_dev * soi_dev
                + 0.05 * nvo_dev + 3.2 * u * (1.0 - u).max(0.0) * w;
            let eta = eta_of(q);
            if i % 2 == 0 { print!(" {q:.2}/{eta:.2}"); }
            t = (0.85 * t + 0.16 * eta * phi + 0.05 * (1.0 - eta) * phi * w
                + 0.08 * nvo_dev - 0.16 * soi_dev * soi_dev - 0.012)
                .clamp(0.0, 4.0);
            u = (1.0 - eta) * phi;
        }
        println!();
    }
}
