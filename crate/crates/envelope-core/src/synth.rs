//! Seeded surrogate generator of engine-like traces with history-dependent
//! instability, standing in for experimental data at desk scale.
//!
//! The dynamics are deliberately simple but carry the structure that
//! matters for envelope learning. A latent residual-gas temperature proxy
//! `t_res` couples one cycle to the next. Each cycle computes an ignition
//! quality
//!
//! ```text
//! q = b_t·t_res + b_f·(FM − FM_REF)
//!     − b_s·((SOI − SOI_OPT)/s_norm)² − b_n·((NVO − NVO_OPT)/n_norm)² + noise
//! ```
//!
//! and a combustion efficiency η = ψ((q − q_ign)/q_width). Work output is
//! IMEP ∝ FM·η; combustion phasing CA50 retards as q drops. The latent
//! update
//!
//! ```text
//! t_res' = ρ·t_res + burn_gain·η·(FM/FM_REF)
//!          + carryover_gain·(1−η)·(FM/FM_REF)·w(NVO) − heat_loss + noise
//! ```
//!
//! carries unburned fuel into the recompression: at low NVO a weak cycle
//! cools the charge and collapses into misfire, while at high NVO the
//! carried fuel over-primes the next cycle and the pair oscillates, which
//! shows up as high CA50 variance without complete misfire. Both labeling
//! rules therefore fire, the boundary is quadratic in the valve and
//! injection settings (so linear models underfit it), and the latent state
//! makes measurement history genuinely informative.
//!
//! After a misfire the excitation is overridden with safe inputs for a few
//! cycles and the charge is re-primed, mimicking an operator recovering
//! the engine; this is what keeps unstable data scarce.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::labeling::{channel, label_cycles, EngineTrace, LabelingConfig, NUM_CHANNELS};

const FM_REF: f64 = 11.0;
const SOI_OPT: f64 = 340.0;
const SOI_NORM: f64 = 40.0;
const NVO_OPT: f64 = 80.0;
const NVO_NORM: f64 = 30.0;
/// Below this NVO the recompression carries no useful heat.
const NVO_CARRY_MIN: f64 = 50.0;

/// A-PRBS schedule of one input channel: amplitudes drawn uniformly from a
/// fixed set, held for a uniformly drawn number of cycles.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelExcitation {
    pub amplitudes: Vec<f64>,
    pub hold_range: (usize, usize),
}

impl ChannelExcitation {
    fn validate(&self, name: &str) -> Result<()> {
        if self.amplitudes.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "excitation {name}: empty amplitude set"
            )));
        }
        if self.hold_range.0 == 0 || self.hold_range.0 > self.hold_range.1 {
            return Err(Error::InvalidParameter(format!(
                "excitation {name}: bad hold range"
            )));
        }
        Ok(())
    }
}

/// Excitation schedules for the four controlled inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct ExcitationConfig {
    pub fm: ChannelExcitation,
    pub ivo: ChannelExcitation,
    pub evc: ChannelExcitation,
    pub soi: ChannelExcitation,
}

/// Parameters of the latent recursion and the measurement noise.
#[derive(Debug, Clone, PartialEq)]
pub struct InstabilityParams {
    /// ρ: fraction of residual heat surviving to the next cycle.
    pub feedback: f64,
    /// Heat added by a successful burn.
    pub burn_gain: f64,
    /// Heat released by unburned fuel during recompression.
    pub carryover_gain: f64,
    /// Constant per-cycle loss.
    pub heat_loss: f64,
    /// Measured IMEP below this (bar) triggers the recovery override.
    pub misfire_limit: f64,
    /// Cycles of forced-safe inputs after a misfire.
    pub recovery_cycles: usize,
    pub q_noise: f64,
    pub temp_noise: f64,
    pub imep_noise: f64,
    pub ca50_noise: f64,
    pub channel_noise: f64,
}

/// Generator configuration. `target_imbalance`, when set, makes
/// generation fail loudly if the labeled majority/minority ratio of the
/// produced trace falls outside ±30% of the target.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub cycles: usize,
    pub seed: u64,
    pub excitation: ExcitationConfig,
    pub instability: InstabilityParams,
    pub target_imbalance: Option<f64>,
}

/// Canned excitation regimes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Inputs stay near the sweet spot; no instability at all.
    Stable,
    /// Exploration tuned for a labeled imbalance ratio near 17.5.
    Default,
    /// Harsher exploration with several times more unstable data.
    Aggressive,
}

impl std::str::FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stable" => Ok(Preset::Stable),
            "default" => Ok(Preset::Default),
            "aggressive" => Ok(Preset::Aggressive),
            other => Err(Error::InvalidParameter(format!(
                "unknown preset {other:?} (expected stable|default|aggressive)"
            ))),
        }
    }
}

fn default_instability() -> InstabilityParams {
    InstabilityParams {
        feedback: 0.85,
        burn_gain: 0.22,
        carryover_gain: 1.5,
        heat_loss: 0.062,
        misfire_limit: 0.1,
        recovery_cycles: 10,
        q_noise: 0.04,
        temp_noise: 0.012,
        imep_noise: 0.04,
        ca50_noise: 0.4,
        channel_noise: 0.01,
    }
}

impl GeneratorConfig {
    pub fn preset(preset: Preset, cycles: usize, seed: u64) -> Self {
        let hold = (40, 90);
        let excitation = match preset {
            Preset::Stable => ExcitationConfig {
                fm: ChannelExcitation {
                    amplitudes: vec![10.5, 11.0, 11.5, 12.0],
                    hold_range: hold,
                },
                ivo: ChannelExcitation {
                    amplitudes: vec![95.0, 100.0, 105.0],
                    hold_range: hold,
                },
                evc: ChannelExcitation {
                    amplitudes: vec![-105.0, -100.0, -95.0],
                    hold_range: hold,
                },
                soi: ChannelExcitation {
                    amplitudes: vec![330.0, 340.0, 350.0],
                    hold_range: hold,
                },
            },
            Preset::Default => ExcitationConfig {
                fm: ChannelExcitation {
                    amplitudes: vec![9.0, 10.0, 11.0, 12.0, 13.0],
                    hold_range: hold,
                },
                ivo: ChannelExcitation {
                    amplitudes: vec![78.0, 92.0, 106.0, 120.0],
                    hold_range: hold,
                },
                evc: ChannelExcitation {
                    amplitudes: vec![-120.0, -106.0, -92.0, -78.0],
                    hold_range: hold,
                },
                soi: ChannelExcitation {
                    amplitudes: vec![305.0, 330.0, 340.0, 350.0, 375.0],
                    hold_range: hold,
                },
            },
            Preset::Aggressive => ExcitationConfig {
                fm: ChannelExcitation {
                    amplitudes: vec![9.0, 10.0, 11.0, 12.0, 13.0],
                    hold_range: (8, 24),
                },
                ivo: ChannelExcitation {
                    amplitudes: vec![80.0, 90.0, 100.0, 110.0, 120.0],
                    hold_range: (8, 24),
                },
                evc: ChannelExcitation {
                    amplitudes: vec![-120.0, -110.0, -100.0, -90.0, -80.0],
                    hold_range: (8, 24),
                },
                soi: ChannelExcitation {
                    amplitudes: vec![305.0, 330.0, 340.0, 350.0, 375.0],
                    hold_range: (8, 24),
                },
            },
        };
        GeneratorConfig {
            cycles,
            seed,
            excitation,
            instability: default_instability(),
            target_imbalance: match preset {
                Preset::Default => Some(17.5),
                _ => None,
            },
        }
    }

    fn validate(&self) -> Result<()> {
        let labeling = LabelingConfig::default();
        if self.cycles < labeling.min_trace_len() {
            return Err(Error::InvalidParameter(format!(
                "cycles must be at least {}",
                labeling.min_trace_len()
            )));
        }
        self.excitation.fm.validate("FM")?;
        self.excitation.ivo.validate("IVO")?;
        self.excitation.evc.validate("EVC")?;
        self.excitation.soi.validate("SOI")?;
        let p = &self.instability;
        for (name, v) in [
            ("q_noise", p.q_noise),
            ("temp_noise", p.temp_noise),
            ("imep_noise", p.imep_noise),
            ("ca50_noise", p.ca50_noise),
            ("channel_noise", p.channel_noise),
        ] {
            if v < 0.0 || !v.is_finite() {
                return Err(Error::InvalidParameter(format!("{name} must be >= 0")));
            }
        }
        if !(0.0..1.0).contains(&p.feedback) {
            return Err(Error::InvalidParameter("feedback must be in [0,1)".into()));
        }
        Ok(())
    }
}

fn sigmoid(t: f64) -> f64 {
    1.0 / (1.0 + (-t).exp())
}

struct Prbs<'a> {
    channel: &'a ChannelExcitation,
    value: f64,
    remaining: usize,
}

impl<'a> Prbs<'a> {
    fn new(channel: &'a ChannelExcitation, rng: &mut ChaCha8Rng) -> Self {
        let mut prbs = Prbs {
            channel,
            value: 0.0,
            remaining: 0,
        };
        prbs.redraw(rng);
        prbs
    }

    fn redraw(&mut self, rng: &mut ChaCha8Rng) {
        let idx = rng.random_range(0..self.channel.amplitudes.len());
        self.value = self.channel.amplitudes[idx];
        self.remaining = rng.random_range(self.channel.hold_range.0..=self.channel.hold_range.1);
    }

    fn step(&mut self, rng: &mut ChaCha8Rng) -> f64 {
        if self.remaining == 0 {
            self.redraw(rng);
        }
        self.remaining -= 1;
        self.value
    }

    fn expire(&mut self) {
        self.remaining = 0;
    }
}

/// Generates a deterministic trace for the configuration.
pub fn generate_trace(cfg: &GeneratorConfig) -> Result<EngineTrace> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let normal = StandardNormal;
    let mut noise = |rng: &mut ChaCha8Rng| -> f64 { Distribution::sample(&normal, rng) };

    let mut fm_sched = Prbs::new(&cfg.excitation.fm, &mut rng);
    let mut ivo_sched = Prbs::new(&cfg.excitation.ivo, &mut rng);
    let mut evc_sched = Prbs::new(&cfg.excitation.evc, &mut rng);
    let mut soi_sched = Prbs::new(&cfg.excitation.soi, &mut rng);

    let p = &cfg.instability;
    let mut t_res = 1.0_f64;
    let mut unburned = 0.0_f64;
    let mut t_ex = 370.0_f64;
    let mut t_in = 60.0_f64;
    let mut t_c = 91.0_f64;
    let mut last_ca50 = 8.0_f64;
    let mut recovery = 0usize;

    let mut records = Vec::with_capacity(cfg.cycles);
    for _ in 0..cfg.cycles {
        let (fm, ivo, evc, soi);
        if recovery > 0 {
            recovery -= 1;
            // operator override: safe inputs and a re-primed charge
            fm = 11.5;
            ivo = 100.0;
            evc = -100.0;
            soi = SOI_OPT;
            t_res = 0.5 * t_res + 0.55;
        } else {
            fm = fm_sched.step(&mut rng);
            ivo = ivo_sched.step(&mut rng);
            evc = evc_sched.step(&mut rng);
            soi = soi_sched.step(&mut rng);
        }

        let nvo = (ivo - 60.0) + (-60.0 - evc);
        let soi_dev = (soi - SOI_OPT) / SOI_NORM;
        let nvo_dev = (nvo - NVO_OPT) / NVO_NORM;
        let carry_weight =
            ((nvo - NVO_CARRY_MIN) / (NVO_OPT - NVO_CARRY_MIN)).clamp(0.0, 2.0);
        // Two feedback paths: the slow thermal state, and last cycle's
        // unburned fuel reheating during recompression (fast, one cycle).
        // Inputs act on the charge mostly through the trapped residual, so
        // only a small part of their penalty shows up within the cycle.
        let q = 2.0 * t_res + 0.15 * (fm - FM_REF) - 0.15 * soi_dev * soi_dev
            + 0.05 * nvo_dev
            + p.carryover_gain * unburned * (1.0 - unburned).max(0.0) * carry_weight
            + p.q_noise * noise(&mut rng);
        // The permissible charge-state band is two-sided. Too cold and the
        // burn is incomplete (fuel left over, work lost, misfire at the
        // extreme); too hot and the burn completes but runs far advanced,
        // which costs only a modest work fraction yet makes the phasing
        // erratic.
        let completeness = sigmoid((q - 0.98) / 0.35);
        let phasing = sigmoid((2.65 - q) / 0.22);
        let eta = completeness;

        // dispersion grows once either side of the band is violated
        let slip = ((1.0 - completeness) + 0.9 * (1.0 - phasing)).min(1.0);
        let cv = slip * slip * (0.8 + 0.6 * carry_weight) * 0.8;
        // partial burns still extract most of the work (strongly concave
        // in burn fraction); advanced phasing sheds at most a fifth
        let work_eta = completeness.powf(0.6) * (0.8 + 0.2 * phasing);
        let imep = 0.287 * fm * work_eta + (p.imep_noise + 0.3 * cv) * noise(&mut rng);
        // a misfired cycle burns nothing, so there is no phasing to
        // measure; the acquisition holds the last reading
        let ca50 = if imep < p.misfire_limit {
            last_ca50 + 0.2 * p.ca50_noise * noise(&mut rng)
        } else {
            (8.0 - 3.5 * (q - 2.0) + (p.ca50_noise + 4.0 * cv) * noise(&mut rng))
                .clamp(-10.0, 30.0)
        };
        last_ca50 = ca50;

        t_ex = 0.7 * t_ex
            + 0.3 * (200.0 + 180.0 * eta * (fm / FM_REF))
            + 1.5 * noise(&mut rng);
        // the remaining channels all track the operating point: intake
        // picks up heat from the exhaust side, flow follows trapping,
        // coolant follows load
        t_in = 0.95 * t_in + 0.05 * (58.0 + 0.006 * t_ex) + 0.15 * noise(&mut rng);
        let mdot_in = 20.0 - 2.5 * (nvo / NVO_OPT - 1.0) + 0.3 * (fm - FM_REF)
            + p.channel_noise * 12.0 * noise(&mut rng);
        let p_in = 1.013 - 0.004 * nvo_dev + p.channel_noise * 0.2 * noise(&mut rng);
        let p_ex = 1.02 + 0.03 * eta * (fm / FM_REF) + p.channel_noise * 0.3 * noise(&mut rng);
        t_c = 0.98 * t_c + 0.02 * (86.0 + 6.0 * eta * (fm / FM_REF))
            + 0.05 * noise(&mut rng);
        let fa = fm / (mdot_in * 48.0) + p.channel_noise * 0.008 * noise(&mut rng);

        let mut record = [0.0; NUM_CHANNELS];
        record[channel::IVO] = ivo;
        record[channel::EVC] = evc;
        record[channel::FM] = fm;
        record[channel::SOI] = soi;
        record[channel::T_IN] = t_in;
        record[channel::P_IN] = p_in;
        record[channel::MDOT_IN] = mdot_in;
        record[channel::T_EX] = t_ex;
        record[channel::P_EX] = p_ex;
        record[channel::T_C] = t_c;
        record[channel::FA] = fa;
        record[channel::IMEP] = imep;
        record[channel::CA50] = ca50;
        records.push(record);

        // slow thermal feedback: trapped residual mass heats the charge
        // monotonically with NVO, while off-optimum injection timing
        // erodes it over several cycles
        t_res = (p.feedback * t_res
            + p.burn_gain * eta * (fm / FM_REF)
            + 0.05 * (1.0 - eta) * (fm / FM_REF) * carry_weight
            + 0.13 * nvo_dev
            - 0.22 * soi_dev * soi_dev
            - p.heat_loss
            + p.temp_noise * noise(&mut rng))
        .clamp(0.0, 4.0);
        unburned = (1.0 - eta) * (fm / FM_REF);

        if imep < p.misfire_limit && recovery == 0 {
            // the excitation command is changed after a misfire: ride out
            // the recovery, then move to a fresh operating point
            recovery = p.recovery_cycles;
            fm_sched.expire();
            ivo_sched.expire();
            evc_sched.expire();
            soi_sched.expire();
        }
    }

    let trace = EngineTrace::new(records)?;
    if let Some(target) = cfg.target_imbalance {
        let labeled = label_cycles(&trace, &LabelingConfig::default()).map_err(|e| {
            Error::InfeasibleConfig(format!("trace produced no labelable data: {e}"))
        })?;
        let minority = labeled.unstable_count();
        if minority == 0 {
            return Err(Error::InfeasibleConfig(format!(
                "target imbalance {target} unreachable: no unstable cycles at this excitation"
            )));
        }
        let achieved = labeled.stable_count() as f64 / minority as f64;
        if achieved < 0.7 * target || achieved > 1.3 * target {
            return Err(Error::InfeasibleConfig(format!(
                "achieved imbalance ratio {achieved:.2} outside ±30% of target {target} \
                 ({} stable / {} unstable labeled)",
                labeled.stable_count(),
                minority
            )));
        }
    }
    Ok(trace)
}
