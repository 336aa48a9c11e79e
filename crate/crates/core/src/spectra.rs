//! Spectra: closed-form eigenvalues of circulant and unitary Cayley
//! graphs, numeric eigendecomposition, the map from discriminant spectrum
//! to evolution spectrum, eigenprojectors and supports, the Hoffman
//! polynomial identity, and walk-regularity.
//!
//! The central fact used throughout: for a connected graph the evolution
//! spectrum is determined by the discriminant spectrum. Every discriminant
//! eigenvalue `mu` in `(-1, 1)` lifts to the conjugate pair
//! `exp(±i arccos mu)`; `mu = 1` lifts to the single eigenvalue `1` and
//! `mu = -1` (present iff the graph is bipartite) to the single eigenvalue
//! `-1`. The remaining `2(m - n) + 2` eigenvalues are "flat": `+1` with
//! multiplicity `b = m - n + 1` (the cycle rank) and `-1` with
//! multiplicity `b - 1 + [G bipartite]`. The total is always `2m`.
//! [`spectral_map`] implements exactly this bookkeeping, and the numeric
//! route through the dense evolution matrix provides the independent
//! cross-check.

use std::collections::BTreeMap;

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::graphs::{CirculantSpec, Graph};
use crate::linalg;
use crate::numtheory::ramanujan_closed;
use crate::scalar::Real;
use crate::walk::WalkOperators;

/// Eigenvalues of a symmetric matrix with multiplicities, sorted
/// descending, plus a flag recording whether the values come from a closed
/// form (`exact = true`) or from numeric diagonalization.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport<T: Real> {
    entries: Vec<(T, usize)>,
    exact: bool,
}

impl<T: Real> SpectrumReport<T> {
    /// Builds a report; entries are sorted descending by eigenvalue.
    pub fn new(mut entries: Vec<(T, usize)>, exact: bool) -> Self {
        entries.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite eigenvalues"));
        SpectrumReport { entries, exact }
    }

    /// `(eigenvalue, multiplicity)` pairs, descending.
    pub fn entries(&self) -> &[(T, usize)] {
        &self.entries
    }

    /// Whether the values come from a closed form.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Distinct eigenvalues, descending.
    pub fn distinct(&self) -> Vec<T> {
        self.entries.iter().map(|&(v, _)| v).collect()
    }

    /// The expanded multiset (each value repeated its multiplicity),
    /// descending.
    pub fn expand(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.total_multiplicity());
        for &(v, c) in &self.entries {
            out.extend(std::iter::repeat_n(v, c));
        }
        out
    }

    /// Sum of multiplicities (the matrix dimension).
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|&(_, c)| c).sum()
    }
}

/// Eigenvalue angles of an evolution operator with multiplicities, sorted
/// ascending in `[0, 2*pi)` (the eigenvalues themselves are
/// `exp(i * angle)`).
#[derive(Debug, Clone, PartialEq)]
pub struct AngleSpectrum<T: Real> {
    entries: Vec<(T, usize)>,
    exact: bool,
}

impl<T: Real> AngleSpectrum<T> {
    /// Builds an angle spectrum; entries are sorted ascending by angle.
    pub fn new(mut entries: Vec<(T, usize)>, exact: bool) -> Self {
        entries.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite angles"));
        AngleSpectrum { entries, exact }
    }

    /// `(angle, multiplicity)` pairs, ascending in `[0, 2*pi)`.
    pub fn entries(&self) -> &[(T, usize)] {
        &self.entries
    }

    /// Whether the angles come from a closed form.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// The expanded angle multiset, ascending.
    pub fn expand(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.total_multiplicity());
        for &(v, c) in &self.entries {
            out.extend(std::iter::repeat_n(v, c));
        }
        out
    }

    /// Sum of multiplicities (`2m` for an evolution spectrum).
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|&(_, c)| c).sum()
    }
}

/// Adjacency spectrum of a circulant graph: the indexed eigenvalue list
/// (`lambda_j` for `j = 0..n`, in index order) together with the merged
/// multiplicity report. The indexed order matters: perfect-state-transfer
/// criteria read the list by index, not by magnitude.
#[derive(Debug, Clone, PartialEq)]
pub struct CirculantSpectrum<T: Real> {
    indexed: Vec<T>,
    report: SpectrumReport<T>,
}

impl<T: Real> CirculantSpectrum<T> {
    /// Eigenvalues in index order: `lambda_j` belongs to the character
    /// `r -> exp(2 pi i j r / n)`.
    pub fn indexed(&self) -> &[T] {
        &self.indexed
    }

    /// The merged multiplicity report.
    pub fn report(&self) -> &SpectrumReport<T> {
        &self.report
    }
}

/// Closed-form adjacency spectrum of a circulant graph:
/// `lambda_j = sum over s in C of cos(2 pi j s / n)` (the sine parts cancel
/// because the connection set is inverse-closed).
pub fn circulant_spectrum<T: Real>(spec: &CirculantSpec) -> CirculantSpectrum<T> {
    let n = spec.order();
    let two_pi = T::PI() * T::of(2.0);
    let indexed: Vec<T> = (0..n)
        .map(|j| {
            spec.connection()
                .iter()
                .map(|&s| (two_pi * T::of_usize(j * s % n) / T::of_usize(n)).cos())
                .fold(T::zero(), |acc, x| acc + x)
        })
        .collect();
    // Closed-form values carry only trigonometric rounding noise, so a
    // tiny merge tolerance recovers the exact multiplicities.
    let mut sorted = indexed.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    let entries = linalg::cluster_sorted(&sorted, T::of(1e-9));
    CirculantSpectrum {
        indexed,
        report: SpectrumReport::new(entries, true),
    }
}

/// Exact adjacency spectrum of the unitary Cayley graph on `Z_n`: the
/// indexed eigenvalues are the Ramanujan sums `R(j, n)`, which are
/// integers, so the report is assembled by exact integer merging.
///
/// # Errors
///
/// Validation error for `n < 2`.
pub fn uc_spectrum<T: Real>(n: usize) -> Result<CirculantSpectrum<T>> {
    if n < 2 {
        return Err(Error::validation(
            "unitary Cayley spectrum needs order at least 2",
        ));
    }
    let exact: Vec<i64> = (0..n)
        .map(|j| ramanujan_closed(j as i64, n as u64))
        .collect::<Result<_>>()?;
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &v in &exact {
        *counts.entry(v).or_insert(0) += 1;
    }
    let entries = counts
        .into_iter()
        .rev()
        .map(|(v, c)| (T::of_i64(v), c))
        .collect();
    Ok(CirculantSpectrum {
        indexed: exact.into_iter().map(T::of_i64).collect(),
        report: SpectrumReport::new(entries, true),
    })
}

/// Numeric spectrum of a real symmetric matrix: Jacobi eigenvalues merged
/// into multiplicity clusters by `cluster_tol`.
///
/// # Errors
///
/// Domain error if the input is not square or not symmetric (asymmetry
/// beyond `1e-9` relative to the largest entry).
pub fn numeric_spectrum<T: Real>(
    matrix: &Array2<T>,
    cluster_tol: T,
) -> Result<SpectrumReport<T>> {
    let n = matrix.nrows();
    if matrix.ncols() != n {
        return Err(Error::domain("numeric spectrum needs a square matrix"));
    }
    let scale = matrix.iter().fold(T::one(), |m, &x| m.max(x.abs()));
    let asym = linalg::max_abs_diff(matrix, &matrix.t().to_owned());
    if asym > T::of(1e-9) * scale {
        return Err(Error::domain(format!(
            "matrix is not symmetric (asymmetry {asym})"
        )));
    }
    let (values, _) = linalg::jacobi_eigh(matrix)?;
    Ok(SpectrumReport::new(
        linalg::cluster_sorted(&values, cluster_tol),
        false,
    ))
}

/// Numeric adjacency spectrum of a graph (convenience wrapper).
pub fn adjacency_spectrum_numeric<T: Real>(
    g: &Graph,
    cluster_tol: T,
) -> Result<SpectrumReport<T>> {
    numeric_spectrum(&g.adjacency::<T>(), cluster_tol)
}

/// Maps an indexed discriminant spectrum (all `n` eigenvalues of `P`,
/// with repetitions) to the full evolution spectrum of the walk on a
/// connected graph with `n` vertices and `m` edges.
///
/// Each `mu` strictly inside `(-1, 1)` contributes the conjugate pair of
/// angles `±arccos(mu)`; `mu = 1` contributes the single angle `0` and
/// `mu = -1` the single angle `pi`. On top of these the flat part
/// contributes `b = m - n + 1` extra angles `0` and
/// `b - 1 + [bipartite]` extra angles `pi`. Values within `1e-9` of `±1`
/// are snapped to `±1` before mapping (their arccos would otherwise lose
/// half the working precision).
///
/// # Errors
///
/// Domain errors when the list length differs from `n`, an eigenvalue
/// lies outside `[-1 - 1e-9, 1 + 1e-9]`, the inputs are inconsistent
/// (e.g. fewer edges than a connected graph requires, or a flat `-1`
/// multiplicity that would be negative), or the mapped total differs
/// from `2m`.
pub fn spectral_map<T: Real>(
    discriminant_eigs: &[T],
    edge_count: usize,
    vertex_count: usize,
    bipartite: bool,
    exact: bool,
) -> Result<AngleSpectrum<T>> {
    if discriminant_eigs.len() != vertex_count {
        return Err(Error::domain(format!(
            "expected {vertex_count} discriminant eigenvalues, got {}",
            discriminant_eigs.len()
        )));
    }
    if edge_count + 1 < vertex_count {
        return Err(Error::domain(
            "fewer edges than a connected graph allows (m < n - 1)",
        ));
    }
    let cycle_rank = edge_count + 1 - vertex_count;
    let snap = T::of(1e-9);

    let mut plus_one = 0usize;
    let mut minus_one = 0usize;
    let mut interior: Vec<T> = Vec::new();
    for &mu in discriminant_eigs {
        if mu.abs() > T::one() + snap {
            return Err(Error::domain(format!(
                "discriminant eigenvalue {mu} outside [-1, 1]"
            )));
        }
        if mu >= T::one() - snap {
            plus_one += 1;
        } else if mu <= snap - T::one() {
            minus_one += 1;
        } else {
            interior.push(mu);
        }
    }

    let pi_flat = cycle_rank + usize::from(bipartite);
    if pi_flat == 0 {
        return Err(Error::domain(
            "a tree must be bipartite: flat -1 multiplicity would be negative",
        ));
    }
    let pi_flat = pi_flat - 1;

    // Interior pairs, ascending positive angles in (0, pi).
    interior.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    let positive: Vec<T> = interior
        .iter()
        .map(|&mu| mu.min(T::one()).max(-T::one()).acos())
        .collect();
    let merged = linalg::cluster_sorted(&positive, T::of(1e-9));

    let two_pi = T::PI() * T::of(2.0);
    let mut entries: Vec<(T, usize)> = Vec::new();
    if plus_one + cycle_rank > 0 {
        entries.push((T::zero(), plus_one + cycle_rank));
    }
    for &(theta, c) in &merged {
        entries.push((theta, c));
    }
    if minus_one + pi_flat > 0 {
        entries.push((T::PI(), minus_one + pi_flat));
    }
    for &(theta, c) in merged.iter().rev() {
        entries.push((two_pi - theta, c));
    }

    let spectrum = AngleSpectrum::new(entries, exact);
    let total = spectrum.total_multiplicity();
    if total != 2 * edge_count {
        return Err(Error::domain(format!(
            "mapped spectrum has {total} eigenvalues, expected {}",
            2 * edge_count
        )));
    }
    Ok(spectrum)
}

/// Numeric evolution spectrum straight from the dense evolution matrix:
/// the independent cross-check for [`spectral_map`]. Angles are merged
/// with a fixed `1e-8` tolerance (they are accurate to roughly machine
/// precision).
pub fn evolution_spectrum_numeric<T: Real>(ops: &WalkOperators<T>) -> Result<AngleSpectrum<T>> {
    let angles = linalg::orthogonal_angles(ops.evolution(), T::of(1e-8))?;
    Ok(AngleSpectrum::new(
        linalg::cluster_sorted(&angles, T::of(1e-8)),
        false,
    ))
}

/// A spectral projector: the orthogonal projection onto the eigenspace of
/// one (clustered) eigenvalue.
#[derive(Debug, Clone)]
pub struct Eigenprojector<T: Real> {
    value: T,
    multiplicity: usize,
    matrix: Array2<T>,
}

impl<T: Real> Eigenprojector<T> {
    /// The eigenvalue this projector belongs to.
    pub fn value(&self) -> T {
        self.value
    }

    /// Dimension of the eigenspace.
    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    /// The dense projection matrix.
    pub fn matrix(&self) -> &Array2<T> {
        &self.matrix
    }
}

/// Spectral projectors of a real symmetric matrix, one per clustered
/// eigenvalue, sorted descending by eigenvalue. Satisfies the resolution
/// of identity: the projectors are symmetric, idempotent, mutually
/// orthogonal, sum to `I`, and weighted by eigenvalues they sum to the
/// input matrix.
///
/// # Errors
///
/// Same conditions as [`numeric_spectrum`].
pub fn eigenprojectors<T: Real>(
    matrix: &Array2<T>,
    cluster_tol: T,
) -> Result<Vec<Eigenprojector<T>>> {
    let n = matrix.nrows();
    if matrix.ncols() != n {
        return Err(Error::domain("eigenprojectors need a square matrix"));
    }
    let scale = matrix.iter().fold(T::one(), |m, &x| m.max(x.abs()));
    let asym = linalg::max_abs_diff(matrix, &matrix.t().to_owned());
    if asym > T::of(1e-9) * scale {
        return Err(Error::domain(format!(
            "matrix is not symmetric (asymmetry {asym})"
        )));
    }
    let (values, vectors) = linalg::jacobi_eigh(matrix)?;

    let mut projectors = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && values[end] - values[end - 1] <= cluster_tol {
            end += 1;
        }
        let count = end - start;
        let mean = values[start..end]
            .iter()
            .fold(T::zero(), |acc, &x| acc + x)
            / T::of_usize(count);
        let basis = vectors.slice(ndarray::s![.., start..end]);
        let proj = basis.dot(&basis.t());
        projectors.push(Eigenprojector {
            value: mean,
            multiplicity: count,
            matrix: proj,
        });
        start = end;
    }
    projectors.reverse();
    Ok(projectors)
}

/// The eigenvalue support of vertex `u`: the eigenvalues whose projector
/// does not annihilate the standard basis vector `e_u`
/// (`norm(E e_u) > 1e-8`), descending.
///
/// # Errors
///
/// Domain error if `u` is out of range for the projectors' dimension.
pub fn eigenvalue_support<T: Real>(
    projectors: &[Eigenprojector<T>],
    u: usize,
) -> Result<Vec<T>> {
    let dim = projectors
        .first()
        .map(|p| p.matrix.nrows())
        .unwrap_or(0);
    if u >= dim {
        return Err(Error::domain(format!(
            "vertex {u} out of range 0..{dim}"
        )));
    }
    let threshold = T::of(1e-8);
    Ok(projectors
        .iter()
        .filter(|p| {
            let col = p.matrix.column(u);
            col.iter()
                .fold(T::zero(), |acc, &x| acc + x * x)
                .sqrt()
                > threshold
        })
        .map(|p| p.value)
        .collect())
}

/// Result of the Hoffman polynomial identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct HoffmanReport<T: Real> {
    /// `max |q(A) - (q(k)/n) J|` where `q` is the monic polynomial with
    /// the non-principal distinct eigenvalues as roots.
    pub residual: T,
    /// Whether the residual is below the requested threshold.
    pub holds: bool,
}

/// Checks the Hoffman identity on a regular graph: with `q(x)` the product
/// of `(x - lambda)` over the distinct non-principal adjacency eigenvalues,
/// connectedness of a `k`-regular graph is equivalent to
/// `q(A) = (q(k)/n) J`. The residual is the max-norm deviation.
///
/// # Errors
///
/// Domain errors for a non-regular graph or a spectrum whose top value is
/// not the degree.
pub fn hoffman_check<T: Real>(
    g: &Graph,
    spectrum: &SpectrumReport<T>,
    threshold: T,
) -> Result<HoffmanReport<T>> {
    let Some(k) = g.regularity() else {
        return Err(Error::domain("hoffman identity applies to regular graphs"));
    };
    let distinct = spectrum.distinct();
    let Some(&top) = distinct.first() else {
        return Err(Error::domain("empty spectrum"));
    };
    if (top - T::of_usize(k)).abs() > T::of(1e-6) {
        return Err(Error::domain(format!(
            "top eigenvalue {top} does not match the degree {k}"
        )));
    }
    let n = g.vertex_count();
    let a = g.adjacency::<T>();

    let mut q_of_a: Array2<T> = Array2::eye(n);
    let mut q_of_k = T::one();
    for &lambda in &distinct[1..] {
        let mut shifted = a.clone();
        for i in 0..n {
            shifted[(i, i)] -= lambda;
        }
        q_of_a = q_of_a.dot(&shifted);
        q_of_k *= T::of_usize(k) - lambda;
    }

    let target = q_of_k / T::of_usize(n);
    let mut residual = T::zero();
    for &x in q_of_a.iter() {
        residual = residual.max((x - target).abs());
    }
    Ok(HoffmanReport {
        residual,
        holds: residual < threshold,
    })
}

/// Whether the diagonal of `A^r` is constant for every `r` up to `r_max`
/// (computed in exact integer arithmetic). Vertex-transitive graphs pass
/// at every depth; the property failing at some depth certifies that the
/// graph is not walk-regular.
pub fn is_walk_regular(g: &Graph, r_max: u32) -> bool {
    let a = g.adjacency_i64();
    let mut power = a.clone();
    for _ in 2..=r_max.max(2) {
        power = power.dot(&a);
        let first = power[(0, 0)];
        if (1..g.vertex_count()).any(|v| power[(v, v)] != first) {
            return false;
        }
    }
    true
}
