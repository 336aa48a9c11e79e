//! Internal dense linear algebra: a cyclic Jacobi eigensolver for real
//! symmetric matrices and, built on top of it, an eigenvalue-angle solver
//! for real orthogonal matrices.
//!
//! The matrices this crate diagonalizes are small (a few hundred rows at
//! most) and either exactly symmetric or exactly orthogonal by
//! construction, which is the regime where Jacobi iteration is both simple
//! and accurate to machine precision — no external LAPACK backend needed.
//!
//! A real orthogonal matrix `U` has spectrum on the unit circle, closed
//! under conjugation. Its angles are recovered in two stages:
//!
//! 1. diagonalize the symmetric part `W = (U + U^T)/2`, whose eigenvalues
//!    are `cos(theta)` with an orthonormal basis `Q` grouping equal
//!    cosines;
//! 2. within each cosine cluster, the compression of the skew part
//!    `K = Q_g^T (U - U^T)/2 Q_g` is a small real skew-symmetric matrix
//!    whose "imaginary eigenvalues" are the sines; they are extracted from
//!    the symmetric embedding `[[0, K], [-K, 0]]`, whose spectrum is that
//!    of the Hermitian matrix `-iK` with every multiplicity doubled.
//!
//! Recovering each angle as `atan2(sin, cos)` keeps full precision even
//! where `acos` is ill-conditioned (eigenvalues near `±1`).

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 64;

/// Eigendecomposition of a real symmetric matrix by cyclic Jacobi
/// rotations. Returns eigenvalues in ascending order and the matching
/// orthonormal eigenvectors as columns.
///
/// # Errors
///
/// Non-square input is a domain error; failure to converge within the
/// sweep budget is an internal-consistency error (it does not happen for
/// symmetric input, which is the caller's contract).
pub(crate) fn jacobi_eigh<T: Real>(a: &Array2<T>) -> Result<(Vec<T>, Array2<T>)> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::domain("eigendecomposition needs a square matrix"));
    }
    let mut a = a.clone();
    let mut v: Array2<T> = Array2::eye(n);
    if n <= 1 {
        return Ok((a.diag().to_vec(), v));
    }

    let scale = a.iter().fold(T::zero(), |m, &x| m.max(x.abs()));
    if scale == T::zero() {
        return Ok((vec![T::zero(); n], v));
    }
    let stop = scale * T::epsilon() * T::of_usize(n);

    for _sweep in 0..MAX_SWEEPS {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[(p, q)].abs());
            }
        }
        if off <= stop {
            let mut eigs: Vec<(T, usize)> =
                a.diag().iter().copied().zip(0..n).collect();
            eigs.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("finite eigenvalues"));
            let values: Vec<T> = eigs.iter().map(|&(w, _)| w).collect();
            let mut vectors = Array2::zeros((n, n));
            for (dst, &(_, src)) in eigs.iter().enumerate() {
                vectors.column_mut(dst).assign(&v.column(src));
            }
            return Ok((values, vectors));
        }

        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() <= stop {
                    continue;
                }
                // Rotation angle that annihilates a[(p, q)].
                let theta = (a[(q, q)] - a[(p, p)]) / (apq * T::of(2.0));
                let t = if theta.abs() > T::of(1e10) {
                    // theta^2 dominates 1: tan collapses to 1/(2 theta).
                    (theta * T::of(2.0)).recip()
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                let c = (t * t + T::one()).sqrt().recip();
                let s = t * c;

                // A <- J^T A J with J the (p, q)-plane rotation.
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                // Enforce the annihilation exactly to stop drift.
                a[(p, q)] = T::zero();
                a[(q, p)] = T::zero();
                // Accumulate V <- V J.
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    Err(Error::internal(format!(
        "jacobi iteration did not converge in {MAX_SWEEPS} sweeps (matrix not symmetric?)"
    )))
}

/// Eigenvalue angles of a real orthogonal matrix, in ascending order in
/// `[0, 2*pi)`, one entry per eigenvalue (multiplicities expanded).
///
/// `cos_cluster_tol` groups the eigenvalues of the symmetric part that
/// belong to a common conjugate pair family; `1e-8` is appropriate for
/// `f64` matrices built by this crate.
///
/// # Errors
///
/// Domain error for non-square input; internal-consistency error if the
/// symmetric-part compression of a cluster is not scalar (which would mean
/// the input was not orthogonal).
pub(crate) fn orthogonal_angles<T: Real>(u: &Array2<T>, cos_cluster_tol: T) -> Result<Vec<T>> {
    let n = u.nrows();
    if u.ncols() != n {
        return Err(Error::domain("angle extraction needs a square matrix"));
    }
    let half = T::of(0.5);
    let w = (u + &u.t()) * half;
    let (cosines, q) = jacobi_eigh(&w)?;

    let mut angles = Vec::with_capacity(n);
    let snap = T::of(1e-9);
    let two_pi = T::PI() * T::of(2.0);

    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && cosines[end] - cosines[end - 1] <= cos_cluster_tol {
            end += 1;
        }
        let k = end - start;
        let cos_mean = cosines[start..end]
            .iter()
            .fold(T::zero(), |acc, &x| acc + x)
            / T::of_usize(k);

        // Compress U onto the cluster's eigenspace of W.
        let qg = q.slice(ndarray::s![.., start..end]).to_owned();
        let b = qg.t().dot(&u.dot(&qg));

        // The symmetric part must be cos_mean * I for orthogonal input.
        let mut sym_residual = T::zero();
        for i in 0..k {
            for j in 0..k {
                let sym = (b[(i, j)] + b[(j, i)]) * half;
                let expected = if i == j { cos_mean } else { T::zero() };
                sym_residual = sym_residual.max((sym - expected).abs());
            }
        }
        if sym_residual > T::of(1e-6) {
            return Err(Error::internal(format!(
                "cosine cluster compression not scalar (residual {sym_residual}); \
                 input is not orthogonal"
            )));
        }

        // Sines: spectrum of the Hermitian -i K, where K is the skew part.
        // The symmetric embedding [[0, K], [-K, 0]] carries that spectrum
        // with every multiplicity doubled, so take every second value.
        let mut embed: Array2<T> = Array2::zeros((2 * k, 2 * k));
        for i in 0..k {
            for j in 0..k {
                let kij = (b[(i, j)] - b[(j, i)]) * half;
                embed[(i, k + j)] = kij;
                embed[(k + i, j)] = -kij;
            }
        }
        let (doubled, _) = jacobi_eigh(&embed)?;
        for idx in 0..k {
            let sin = doubled[2 * idx];
            let theta = if sin.abs() <= snap {
                if cos_mean >= T::zero() {
                    T::zero()
                } else {
                    T::PI()
                }
            } else {
                let raw = sin.atan2(cos_mean);
                if raw < T::zero() {
                    raw + two_pi
                } else {
                    raw
                }
            };
            angles.push(theta);
        }
        start = end;
    }

    angles.sort_by(|x, y| x.partial_cmp(y).expect("finite angles"));
    Ok(angles)
}

/// Largest absolute entry of `a - b`.
pub(crate) fn max_abs_diff<T: Real>(a: &Array2<T>, b: &Array2<T>) -> T {
    debug_assert_eq!(a.dim(), b.dim());
    a.iter()
        .zip(b.iter())
        .fold(T::zero(), |m, (&x, &y)| m.max((x - y).abs()))
}

/// Largest absolute entry of `a - I`.
pub(crate) fn identity_residual<T: Real>(a: &Array2<T>) -> T {
    let mut res = T::zero();
    for ((i, j), &x) in a.indexed_iter() {
        let target = if i == j { T::one() } else { T::zero() };
        res = res.max((x - target).abs());
    }
    res
}

/// Groups an ascending slice into `(mean, multiplicity)` clusters: a new
/// cluster starts whenever the gap to the previous value exceeds `tol`.
/// Suitable for spectra whose intra-cluster spread is far below the
/// inter-cluster gaps, which is the case everywhere this crate uses it.
pub(crate) fn cluster_sorted<T: Real>(sorted: &[T], tol: T) -> Vec<(T, usize)> {
    let mut out: Vec<(T, usize)> = Vec::new();
    let mut start = 0;
    while start < sorted.len() {
        let mut end = start + 1;
        while end < sorted.len() && sorted[end] - sorted[end - 1] <= tol {
            end += 1;
        }
        let count = end - start;
        let mean = sorted[start..end]
            .iter()
            .fold(T::zero(), |acc, &x| acc + x)
            / T::of_usize(count);
        out.push((mean, count));
        start = end;
    }
    out
}
