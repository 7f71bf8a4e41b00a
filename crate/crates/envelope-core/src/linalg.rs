//! Dense symmetric positive-definite solves shared by the least-squares
//! trainers.

use crate::error::{Error, Result};

/// Solves `a * x = b` for a symmetric positive-definite matrix `a` given in
/// row-major order, via an in-place Cholesky factorization.
///
/// A pivot that is not clearly positive (relative to the largest diagonal
/// entry) is reported as a singular system rather than producing garbage,
/// which is how rank-deficient unregularized normal equations surface.
pub fn solve_spd(mut a: Vec<f64>, b: &[f64]) -> Result<Vec<f64>> {
    let d = b.len();
    assert_eq!(a.len(), d * d, "matrix/vector size mismatch");

    let max_diag = (0..d).map(|i| a[i * d + i].abs()).fold(0.0_f64, f64::max);
    let tol = 1e-12 * max_diag.max(1.0);

    // Lower-triangular factor written into the lower triangle of `a`.
    for j in 0..d {
        let mut pivot = a[j * d + j];
        for k in 0..j {
            pivot -= a[j * d + k] * a[j * d + k];
        }
        if pivot <= tol {
            return Err(Error::SingularSystem(
                "matrix is not positive definite (rank-deficient normal equations)",
            ));
        }
        let ljj = pivot.sqrt();
        a[j * d + j] = ljj;
        for i in (j + 1)..d {
            let mut v = a[i * d + j];
            for k in 0..j {
                v -= a[i * d + k] * a[j * d + k];
            }
            a[i * d + j] = v / ljj;
        }
    }

    // Forward substitution: L y = b.
    let mut x = b.to_vec();
    for i in 0..d {
        for k in 0..i {
            x[i] -= a[i * d + k] * x[k];
        }
        x[i] /= a[i * d + i];
    }
    // Back substitution: L^T x = y.
    for i in (0..d).rev() {
        for k in (i + 1)..d {
            x[i] -= a[k * d + i] * x[k];
        }
        x[i] /= a[i * d + i];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_spd_system() {
        // a = [[4,2],[2,3]], b = [8, 7] -> x = [1, 5/3 ... ]
        let a = vec![4.0, 2.0, 2.0, 3.0];
        let b = [8.0, 7.0];
        let x = solve_spd(a, &b).unwrap();
        // residual check
        assert!((4.0 * x[0] + 2.0 * x[1] - 8.0).abs() < 1e-12);
        assert!((2.0 * x[0] + 3.0 * x[1] - 7.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_singular_matrix() {
        // rank-1 matrix
        let a = vec![1.0, 2.0, 2.0, 4.0];
        let b = [1.0, 2.0];
        assert!(matches!(
            solve_spd(a, &b),
            Err(Error::SingularSystem(_))
        ));
    }

    #[test]
    fn rejects_indefinite_matrix() {
        let a = vec![0.0, 1.0, 1.0, 0.0];
        let b = [1.0, 1.0];
        assert!(solve_spd(a, &b).is_err());
    }

    #[test]
    fn identity_returns_rhs() {
        let a = vec![1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0];
        let b = [3.0, -4.0, 0.5];
        let x = solve_spd(a, &b).unwrap();
        assert_eq!(x, b.to_vec());
    }
}
