//! Gaussian kernel k(a, b) = exp(−σ‖a−b‖²) and a byte-budgeted row cache
//! for the dual solver.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Gaussian kernel width parameter, in the σ-multiplier form
/// k = exp(−σ‖a−b‖²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    pub sigma: f64,
}

impl KernelParams {
    pub fn new(sigma: f64) -> Result<Self> {
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::InvalidParameter("sigma must be > 0".into()));
        }
        Ok(KernelParams { sigma })
    }
}

/// k(a, b) = exp(−σ‖a−b‖²); always in (0, 1] and exactly 1 at a = b.
pub fn rbf_kernel(a: &[f64], b: &[f64], sigma: f64) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::InvalidParameter("sigma must be > 0".into()));
    }
    let d2: f64 = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum();
    Ok((-sigma * d2).exp())
}

struct CacheRow {
    stamp: u64,
    values: Vec<f64>,
}

/// Kernel rows over a fixed sample set, recomputed on demand and kept in a
/// least-recently-used cache bounded by a byte budget.
pub(crate) struct KernelCache {
    samples: Vec<Vec<f64>>,
    sq_norms: Vec<f64>,
    sigma: f64,
    rows: HashMap<usize, CacheRow>,
    capacity_rows: usize,
    clock: u64,
}

impl KernelCache {
    pub fn new(samples: Vec<Vec<f64>>, sigma: f64, budget_bytes: usize) -> Self {
        let n = samples.len();
        let row_bytes = n * std::mem::size_of::<f64>();
        let capacity_rows = (budget_bytes / row_bytes.max(1)).max(2);
        let sq_norms = samples
            .iter()
            .map(|x| x.iter().map(|v| v * v).sum())
            .collect();
        KernelCache {
            samples,
            sq_norms,
            sigma,
            rows: HashMap::new(),
            capacity_rows,
            clock: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn samples(&self) -> &[Vec<f64>] {
        &self.samples
    }

    fn compute_row(&self, i: usize) -> Vec<f64> {
        let xi = &self.samples[i];
        let ni = self.sq_norms[i];
        self.samples
            .iter()
            .zip(&self.sq_norms)
            .map(|(xt, nt)| {
                let dot: f64 = xi.iter().zip(xt).map(|(a, b)| a * b).sum();
                let d2 = (ni + nt - 2.0 * dot).max(0.0);
                (-self.sigma * d2).exp()
            })
            .collect()
    }

    fn touch(&mut self, i: usize) {
        self.clock += 1;
        if let Some(row) = self.rows.get_mut(&i) {
            row.stamp = self.clock;
        }
    }

    /// Materializes row `i`, never evicting `pinned`.
    fn ensure(&mut self, i: usize, pinned: usize) {
        if self.rows.contains_key(&i) {
            self.touch(i);
            return;
        }
        if self.rows.len() >= self.capacity_rows {
            let victim = self
                .rows
                .iter()
                .filter(|(&k, _)| k != pinned)
                .min_by_key(|(_, row)| row.stamp)
                .map(|(&k, _)| k);
            if let Some(v) = victim {
                self.rows.remove(&v);
            }
        }
        let values = self.compute_row(i);
        self.clock += 1;
        self.rows.insert(
            i,
            CacheRow {
                stamp: self.clock,
                values,
            },
        );
    }

    /// Kernel rows for a working pair.
    pub fn pair(&mut self, i: usize, j: usize) -> (&[f64], &[f64]) {
        self.ensure(i, j);
        self.ensure(j, i);
        let ri = &self.rows[&i].values;
        let rj = &self.rows[&j].values;
        (ri, rj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_fixed_values() {
        let a = [1.0, 2.0];
        assert_eq!(rbf_kernel(&a, &a, 1.0).unwrap(), 1.0);
        // unit squared distance
        let b = [1.0, 3.0];
        assert!((rbf_kernel(&a, &b, 1.0).unwrap() - (-1.0f64).exp()).abs() < 1e-15);
        assert!((rbf_kernel(&a, &b, 1.0).unwrap() - 0.367879).abs() < 1e-6);
    }

    #[test]
    fn kernel_is_symmetric() {
        let a = [0.3, -1.2, 4.0];
        let b = [2.0, 0.7, -0.5];
        assert_eq!(
            rbf_kernel(&a, &b, 0.37).unwrap(),
            rbf_kernel(&b, &a, 0.37).unwrap()
        );
    }

    #[test]
    fn kernel_rejects_bad_arguments() {
        assert!(rbf_kernel(&[1.0], &[1.0, 2.0], 1.0).is_err());
        assert!(rbf_kernel(&[1.0], &[1.0], 0.0).is_err());
        assert!(rbf_kernel(&[1.0], &[1.0], -2.0).is_err());
        assert!(KernelParams::new(-1.0).is_err());
    }

    #[test]
    fn cache_returns_exact_rows_under_tiny_budget() {
        let samples: Vec<Vec<f64>> = (0..6).map(|i| vec![i as f64, (i * i) as f64]).collect();
        // budget of two rows forces constant eviction
        let budget = 2 * 6 * std::mem::size_of::<f64>();
        let mut cache = KernelCache::new(samples.clone(), 0.1, budget);
        for i in 0..6 {
            for j in 0..6 {
                let (ri, rj) = cache.pair(i, j);
                let expected_ij = rbf_kernel(&samples[i], &samples[j], 0.1).unwrap();
                assert!((ri[j] - expected_ij).abs() < 1e-15);
                assert!((rj[i] - expected_ij).abs() < 1e-15);
                assert_eq!(ri[i], 1.0);
            }
        }
        assert!(cache.rows.len() <= 2);
    }
}
