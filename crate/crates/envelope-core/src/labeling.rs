//! Conversion of raw per-cycle engine traces into labeled datasets.
//!
//! A cycle k is labeled unstable (−1) when its inputs lead to a misfire at
//! k+1 or to high CA50 variance over the following half-window; it is
//! labeled stable (+1) only when the full window around it is clean. Within
//! a run of consecutive unstable cycles only the first is kept, since the
//! later ones describe an engine that is already misbehaving.

use std::io::{Read, Write};
use std::path::Path;

use crate::data::{ClassLabel, FeatureVector, LabeledDataset};
use crate::error::{Error, Result};

/// Number of recorded channels per combustion cycle.
pub const NUM_CHANNELS: usize = 13;

/// Channel names, in feature-vector order.
pub const CHANNEL_NAMES: [&str; NUM_CHANNELS] = [
    "IVO", "EVC", "FM", "SOI", "T_in", "P_in", "mdot_in", "T_ex", "P_ex", "T_c", "FA", "IMEP",
    "CA50",
];

/// Channel indices into a cycle record.
pub mod channel {
    pub const IVO: usize = 0;
    pub const EVC: usize = 1;
    pub const FM: usize = 2;
    pub const SOI: usize = 3;
    pub const T_IN: usize = 4;
    pub const P_IN: usize = 5;
    pub const MDOT_IN: usize = 6;
    pub const T_EX: usize = 7;
    pub const P_EX: usize = 8;
    pub const T_C: usize = 9;
    pub const FA: usize = 10;
    pub const IMEP: usize = 11;
    pub const CA50: usize = 12;
}

/// A per-cycle time series of the 13 recorded channels.
#[derive(Debug, Clone, PartialEq)]
pub struct EngineTrace {
    records: Vec<[f64; NUM_CHANNELS]>,
}

impl EngineTrace {
    pub fn new(records: Vec<[f64; NUM_CHANNELS]>) -> Result<Self> {
        if records.is_empty() {
            return Err(Error::TraceTooShort {
                cycles: 0,
                needed: 1,
            });
        }
        for r in &records {
            if r.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite {
                    context: "engine trace",
                });
            }
        }
        Ok(EngineTrace { records })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn record(&self, cycle: usize) -> &[f64; NUM_CHANNELS] {
        &self.records[cycle]
    }

    pub fn value(&self, cycle: usize, channel: usize) -> f64 {
        self.records[cycle][channel]
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["cycle"];
        header.extend(CHANNEL_NAMES);
        w.write_record(&header)
            .map_err(|e| Error::Format(e.to_string()))?;
        let mut record = Vec::with_capacity(NUM_CHANNELS + 1);
        for (k, row) in self.records.iter().enumerate() {
            record.clear();
            record.push(k.to_string());
            record.extend(row.iter().map(|v| v.to_string()));
            w.write_record(&record)
                .map_err(|e| Error::Format(e.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        String::from_utf8(buf).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn save_csv(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path)?;
        self.write_csv(std::io::BufWriter::new(file))
    }

    /// Reads a trace CSV. Every channel column must be present; extra
    /// columns are rejected so a malformed header fails loudly.
    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut r = csv::Reader::from_reader(input);
        let header = r.headers().map_err(|e| Error::Format(e.to_string()))?.clone();
        let mut positions = [usize::MAX; NUM_CHANNELS];
        for (ch, name) in CHANNEL_NAMES.iter().enumerate() {
            positions[ch] = header
                .iter()
                .position(|h| h == *name)
                .ok_or_else(|| Error::Format(format!("missing column: {name}")))?;
        }
        let expected_cols = NUM_CHANNELS + usize::from(header.iter().any(|h| h == "cycle"));
        if header.len() != expected_cols {
            return Err(Error::Format(format!(
                "unexpected trace header: {}",
                header.iter().collect::<Vec<_>>().join(",")
            )));
        }

        let mut records = Vec::new();
        for (row, record) in r.records().enumerate() {
            let record = record.map_err(|e| Error::Format(e.to_string()))?;
            let mut values = [0.0; NUM_CHANNELS];
            for (ch, &pos) in positions.iter().enumerate() {
                let field = record.get(pos).ok_or_else(|| {
                    Error::Format(format!("row {}: missing field", row + 2))
                })?;
                values[ch] = field.trim().parse().map_err(|_| {
                    Error::Format(format!("row {}: bad number {:?}", row + 2, field))
                })?;
            }
            records.push(values);
        }
        Self::new(records)
    }

    pub fn load_csv(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::read_csv(std::io::BufReader::new(file))
    }
}

/// Parameters of the labeling rules.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelingConfig {
    /// History depth: the feature vector stacks cycles k, k−1, …, k−n_h.
    pub n_h: usize,
    /// Half-window length; the stability window spans 2p cycles around k.
    pub p: usize,
    /// A cycle with IMEP below this is a misfire (bar).
    pub imep_misfire_limit: f64,
    /// CA50 population-variance threshold over cycles k+1..k+p (deg²).
    pub ca50_var_limit: f64,
}

impl Default for LabelingConfig {
    fn default() -> Self {
        LabelingConfig {
            n_h: 2,
            p: 5,
            imep_misfire_limit: 0.1,
            ca50_var_limit: 12.0,
        }
    }
}

impl LabelingConfig {
    pub fn validate(&self) -> Result<()> {
        if self.p < 1 {
            return Err(Error::InvalidParameter("p must be >= 1".into()));
        }
        if !(self.imep_misfire_limit > 0.0) {
            return Err(Error::InvalidParameter(
                "imep_misfire_limit must be > 0".into(),
            ));
        }
        if !(self.ca50_var_limit > 0.0) {
            return Err(Error::InvalidParameter("ca50_var_limit must be > 0".into()));
        }
        Ok(())
    }

    /// First cycle index eligible for labeling.
    pub fn first_cycle(&self) -> usize {
        self.n_h.max(self.p)
    }

    /// Minimum trace length that yields at least one eligible cycle.
    pub fn min_trace_len(&self) -> usize {
        self.first_cycle() + self.p + 1
    }
}

/// Which unstable rule fired at a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnstableCause {
    Misfire,
    Ca50Variance,
    Both,
}

/// Full labeling result, keeping cycle indices and rule attribution for
/// diagnostics; the dataset rows appear in ascending cycle order.
#[derive(Debug, Clone)]
pub struct LabelingOutcome {
    pub dataset: LabeledDataset,
    pub stable_cycles: Vec<usize>,
    pub unstable_cycles: Vec<(usize, UnstableCause)>,
    /// Unstable cycles dropped because an earlier consecutive cycle was
    /// already emitted.
    pub suppressed_unstable: Vec<usize>,
}

/// Feature names for a history depth: the 13 channels at lag 0, then at
/// lag 1, and so on.
pub fn feature_names(n_h: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(NUM_CHANNELS * (n_h + 1));
    for lag in 0..=n_h {
        for name in CHANNEL_NAMES {
            if lag == 0 {
                names.push(name.to_string());
            } else {
                names.push(format!("{name}_lag{lag}"));
            }
        }
    }
    names
}

/// Stacks the 13 channels at cycles k, k−1, …, k−n_h into one vector of
/// length 13·(n_h+1).
pub fn build_feature_vector(trace: &EngineTrace, k: usize, n_h: usize) -> Result<FeatureVector> {
    if k < n_h {
        return Err(Error::InsufficientHistory { cycle: k, needed: n_h });
    }
    if k >= trace.len() {
        return Err(Error::InvalidParameter(format!(
            "cycle {k} out of range for trace of {} cycles",
            trace.len()
        )));
    }
    let mut values = Vec::with_capacity(NUM_CHANNELS * (n_h + 1));
    for lag in 0..=n_h {
        values.extend_from_slice(trace.record(k - lag));
    }
    FeatureVector::new(values)
}

fn population_variance(values: impl Iterator<Item = f64> + Clone) -> f64 {
    let n = values.clone().count() as f64;
    let mean = values.clone().sum::<f64>() / n;
    values.map(|v| (v - mean) * (v - mean)).sum::<f64>() / n
}

/// Labels every eligible cycle of a trace. See [`label_cycles`] for the
/// plain-dataset entry point.
pub fn label_cycles_detailed(trace: &EngineTrace, cfg: &LabelingConfig) -> Result<LabelingOutcome> {
    cfg.validate()?;
    if trace.len() < cfg.min_trace_len() {
        return Err(Error::TraceTooShort {
            cycles: trace.len(),
            needed: cfg.min_trace_len(),
        });
    }
    let k_min = cfg.first_cycle();
    let k_max = trace.len() - 1 - cfg.p;

    let eligible = k_max - k_min + 1;
    let mut unstable = vec![None; eligible];
    let mut stable = vec![false; eligible];
    for k in k_min..=k_max {
        let misfire = trace.value(k + 1, channel::IMEP) < cfg.imep_misfire_limit;
        let var =
            population_variance((k + 1..=k + cfg.p).map(|j| trace.value(j, channel::CA50)));
        let high_var = var > cfg.ca50_var_limit;
        unstable[k - k_min] = match (misfire, high_var) {
            (true, true) => Some(UnstableCause::Both),
            (true, false) => Some(UnstableCause::Misfire),
            (false, true) => Some(UnstableCause::Ca50Variance),
            (false, false) => None,
        };
        if unstable[k - k_min].is_none() {
            let window_clean = (k - cfg.p..=k + cfg.p)
                .all(|j| trace.value(j, channel::IMEP) >= cfg.imep_misfire_limit);
            stable[k - k_min] = window_clean && var <= cfg.ca50_var_limit;
        }
    }

    let mut samples = Vec::new();
    let mut stable_cycles = Vec::new();
    let mut unstable_cycles = Vec::new();
    let mut suppressed = Vec::new();
    for k in k_min..=k_max {
        let i = k - k_min;
        if let Some(cause) = unstable[i] {
            let first_of_run = k == k_min || unstable[i - 1].is_none();
            if first_of_run {
                samples.push((build_feature_vector(trace, k, cfg.n_h)?, ClassLabel::Unstable));
                unstable_cycles.push((k, cause));
            } else {
                suppressed.push(k);
            }
        } else if stable[i] {
            samples.push((build_feature_vector(trace, k, cfg.n_h)?, ClassLabel::Stable));
            stable_cycles.push(k);
        }
    }

    let dataset = LabeledDataset::with_names(feature_names(cfg.n_h), samples)?;
    Ok(LabelingOutcome {
        dataset,
        stable_cycles,
        unstable_cycles,
        suppressed_unstable: suppressed,
    })
}

/// Labels a trace and returns just the dataset.
pub fn label_cycles(trace: &EngineTrace, cfg: &LabelingConfig) -> Result<LabeledDataset> {
    Ok(label_cycles_detailed(trace, cfg)?.dataset)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 30-cycle fixture: IMEP 3.0 bar, CA50 constant 8.0, other channels
    /// formulaic so ordering mistakes are visible.
    fn fixture(misfires: &[usize]) -> EngineTrace {
        let mut records = Vec::new();
        for t in 0..30usize {
            let mut row = [0.0; NUM_CHANNELS];
            for (c, v) in row.iter_mut().enumerate() {
                *v = (c + 1) as f64 * 100.0 + t as f64;
            }
            row[channel::IMEP] = 3.0;
            row[channel::CA50] = 8.0;
            records.push(row);
        }
        for &m in misfires {
            records[m][channel::IMEP] = 0.0;
        }
        EngineTrace::new(records).unwrap()
    }

    fn cfg() -> LabelingConfig {
        LabelingConfig::default()
    }

    #[test]
    fn feature_vector_lengths() {
        let trace = fixture(&[]);
        assert_eq!(build_feature_vector(&trace, 5, 2).unwrap().len(), 39);
        let flat = build_feature_vector(&trace, 5, 0).unwrap();
        assert_eq!(flat.len(), 13);
        assert_eq!(flat.values(), trace.record(5));
    }

    #[test]
    fn feature_vector_ordering() {
        let mut records = Vec::new();
        for t in 0..3usize {
            let mut row = [0.0; NUM_CHANNELS];
            for (c, v) in row.iter_mut().enumerate() {
                *v = (c + 1) as f64 * 100.0 + t as f64;
            }
            records.push(row);
        }
        let trace = EngineTrace::new(records).unwrap();
        let x = build_feature_vector(&trace, 2, 2).unwrap();
        assert_eq!(x.len(), 39);
        // entries 0..13 are cycle 2, 13..26 cycle 1, 26..39 cycle 0
        for c in 0..NUM_CHANNELS {
            assert_eq!(x.values()[c], (c + 1) as f64 * 100.0 + 2.0);
            assert_eq!(x.values()[13 + c], (c + 1) as f64 * 100.0 + 1.0);
            assert_eq!(x.values()[26 + c], (c + 1) as f64 * 100.0);
        }
    }

    #[test]
    fn insufficient_history_is_an_error() {
        let trace = fixture(&[]);
        assert!(matches!(
            build_feature_vector(&trace, 1, 2),
            Err(Error::InsufficientHistory { .. })
        ));
    }

    #[test]
    fn all_stable_fixture() {
        let out = label_cycles_detailed(&fixture(&[]), &cfg()).unwrap();
        assert_eq!(out.stable_cycles, (5..=24).collect::<Vec<_>>());
        assert!(out.unstable_cycles.is_empty());
        assert!(out.suppressed_unstable.is_empty());
        assert_eq!(out.dataset.len(), 20);
        assert_eq!(out.dataset.stable_count(), 20);
    }

    #[test]
    fn single_misfire_fixture() {
        // IMEP(16) = 0: cycle 15 caused it, and any stable window containing
        // cycle 16 is disqualified.
        let out = label_cycles_detailed(&fixture(&[16]), &cfg()).unwrap();
        assert_eq!(
            out.unstable_cycles,
            vec![(15, UnstableCause::Misfire)]
        );
        let expected: Vec<usize> = (5..=10).chain(22..=24).collect();
        assert_eq!(out.stable_cycles, expected);
        assert!(out.suppressed_unstable.is_empty());
        assert_eq!(out.dataset.len(), 10);
    }

    #[test]
    fn consecutive_misfire_fixture() {
        // IMEP(16) = IMEP(17) = 0: cycles 15 and 16 both satisfy the misfire
        // rule; only 15 is emitted, 16 goes to neither class.
        let out = label_cycles_detailed(&fixture(&[16, 17]), &cfg()).unwrap();
        assert_eq!(out.unstable_cycles, vec![(15, UnstableCause::Misfire)]);
        assert_eq!(out.suppressed_unstable, vec![16]);
        let expected: Vec<usize> = (5..=10).chain(23..=24).collect();
        assert_eq!(out.stable_cycles, expected);
    }

    #[test]
    fn ca50_variance_rule_fires() {
        let mut records = Vec::new();
        for _ in 0..30usize {
            let mut row = [1.0; NUM_CHANNELS];
            row[channel::IMEP] = 3.0;
            row[channel::CA50] = 8.0;
            records.push(row);
        }
        // alternate CA50 wildly over cycles 16..=20
        for (i, t) in (16..=20).enumerate() {
            records[t][channel::CA50] = if i % 2 == 0 { 2.0 } else { 18.0 };
        }
        let trace = EngineTrace::new(records).unwrap();
        let out = label_cycles_detailed(&trace, &cfg()).unwrap();
        assert!(out
            .unstable_cycles
            .iter()
            .any(|(_, cause)| *cause == UnstableCause::Ca50Variance));
        // no misfires anywhere
        assert!(out
            .unstable_cycles
            .iter()
            .all(|(_, cause)| *cause == UnstableCause::Ca50Variance));
    }

    #[test]
    fn emitted_indices_respect_bounds() {
        let out = label_cycles_detailed(&fixture(&[7, 20, 21]), &cfg()).unwrap();
        let cfg = cfg();
        let all: Vec<usize> = out
            .stable_cycles
            .iter()
            .copied()
            .chain(out.unstable_cycles.iter().map(|(k, _)| *k))
            .collect();
        for k in all {
            assert!(k >= cfg.first_cycle());
            assert!(k + cfg.p < 30);
        }
    }

    #[test]
    fn stable_and_unstable_sets_disjoint() {
        for misfires in [vec![6], vec![10, 11, 12], vec![6, 16, 26]] {
            let out = label_cycles_detailed(&fixture(&misfires), &cfg()).unwrap();
            for (k, _) in &out.unstable_cycles {
                assert!(!out.stable_cycles.contains(k));
            }
        }
    }

    #[test]
    fn first_unstable_rule_does_not_affect_stable_set() {
        // recompute the stable rule directly, ignoring unstable bookkeeping
        let trace = fixture(&[16, 17, 18]);
        let c = cfg();
        let out = label_cycles_detailed(&trace, &c).unwrap();
        let mut expected = Vec::new();
        for k in c.first_cycle()..=(trace.len() - 1 - c.p) {
            let clean = (k - c.p..=k + c.p)
                .all(|j| trace.value(j, channel::IMEP) >= c.imep_misfire_limit);
            let var = population_variance(
                (k + 1..=k + c.p).map(|j| trace.value(j, channel::CA50)),
            );
            let not_unstable = trace.value(k + 1, channel::IMEP) >= c.imep_misfire_limit
                && var <= c.ca50_var_limit;
            if clean && var <= c.ca50_var_limit && not_unstable {
                expected.push(k);
            }
        }
        assert_eq!(out.stable_cycles, expected);
    }

    #[test]
    fn trace_too_short_is_an_error() {
        let mut records = Vec::new();
        for _ in 0..10usize {
            records.push([1.0; NUM_CHANNELS]);
        }
        let trace = EngineTrace::new(records).unwrap();
        assert!(matches!(
            label_cycles(&trace, &cfg()),
            Err(Error::TraceTooShort { cycles: 10, needed: 11 })
        ));
    }

    #[test]
    fn labeling_is_deterministic() {
        let trace = fixture(&[12, 19]);
        let a = label_cycles(&trace, &cfg()).unwrap().to_csv_string().unwrap();
        let b = label_cycles(&trace, &cfg()).unwrap().to_csv_string().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn trace_csv_round_trip_and_missing_column() {
        let trace = fixture(&[16]);
        let text = trace.to_csv_string().unwrap();
        assert!(text.starts_with("cycle,IVO,EVC,FM,SOI,T_in,P_in,mdot_in,T_ex,P_ex,T_c,FA,IMEP,CA50\n"));
        let back = EngineTrace::read_csv(text.as_bytes()).unwrap();
        assert_eq!(back, trace);

        let broken = text.replace("mdot_in", "mdot");
        let err = EngineTrace::read_csv(broken.as_bytes()).unwrap_err();
        assert!(err.to_string().contains("mdot_in"));
    }

    #[test]
    fn dataset_feature_names_follow_lag_order() {
        let names = feature_names(2);
        assert_eq!(names.len(), 39);
        assert_eq!(names[0], "IVO");
        assert_eq!(names[12], "CA50");
        assert_eq!(names[13], "IVO_lag1");
        assert_eq!(names[26], "IVO_lag2");
    }
}
