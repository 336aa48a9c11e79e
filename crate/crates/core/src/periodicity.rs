//! Periodicity of the walk: spectral decisions, exact periods as lcms of
//! eigenvalue orders, the prediction for unitary Cayley graphs, the
//! classification of integral regular periodic graphs, and the brute-force
//! oracle that cross-checks all of it.
//!
//! A walk is periodic when `U^tau = I` for some positive `tau`; the period
//! is the least such `tau`, equal to the lcm of the multiplicative orders
//! of the eigenvalues of `U`. An eigenvalue `exp(i*theta)` has finite
//! order exactly when `theta` is a rational multiple of `2*pi`; orders are
//! detected by scanning `q <= q_max` with a `1e-9` circular tolerance,
//! and a failed scan is reported as "not periodic at this resolution",
//! never as a proof of aperiodicity.
//!
//! For a connected `k`-regular graph with integral adjacency spectrum the
//! walk is periodic iff the spectrum lies inside `{±k, ±k/2, 0}`; the
//! possible spectra split into five realizable categories (see
//! [`ClassificationLabel`]).

use crate::error::{Error, Result};
use crate::numtheory::lcm;
use crate::scalar::Real;
use crate::spectra::{spectral_map, uc_spectrum, SpectrumReport};
use crate::walk::WalkOperators;
use ndarray::Array2;

/// How a periodicity verdict was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodicityMethod {
    /// Eigenvalue orders of the mapped evolution spectrum.
    Spectral,
    /// Explicit matrix powers compared against the identity.
    BruteForce,
    /// Exact closed-form spectra (unitary Cayley graphs).
    ClosedForm,
}

/// Outcome of a periodicity decision.
///
/// `evidence` lists, for each distinct eigenvalue angle `theta` of the
/// evolution operator (the eigenvalue is `exp(i*theta)`), the detected
/// multiplicative order, or `None` when no order `<= q_max` was found.
/// Brute-force reports carry no evidence. When periodic, the period is
/// the lcm of the listed orders.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicityReport<T: Real> {
    /// Whether the walk was found periodic (at the method's resolution).
    pub periodic: bool,
    /// The period, when periodic.
    pub period: Option<u64>,
    /// How the verdict was obtained.
    pub method: PeriodicityMethod,
    /// `(angle, order)` pairs for the spectral routes.
    pub evidence: Vec<(T, Option<u64>)>,
}

/// Smallest `q <= q_max` such that `q * theta` is within `1e-9` of a
/// multiple of `2*pi`, if any.
fn order_of_angle<T: Real>(theta: T, q_max: u64) -> Option<u64> {
    let two_pi = T::PI() * T::of(2.0);
    let tol = T::of(1e-9);
    for q in 1..=q_max {
        let x = theta * T::of(q as f64);
        let wrapped = x - (x / two_pi).round() * two_pi;
        if wrapped.abs() <= tol {
            return Some(q);
        }
    }
    None
}

/// Multiplicative order of the evolution eigenvalue pair arising from a
/// discriminant eigenvalue `mu`: the least `q <= q_max` with
/// `(e^{i arccos mu})^q = 1`, or `None` if no such order is detected.
/// Values within `1e-9` of `±1` are snapped before taking the arccosine.
///
/// # Errors
///
/// Domain error when `mu` lies outside `[-1, 1]` (beyond the snap
/// tolerance).
pub fn angle_order<T: Real>(mu: T, q_max: u64) -> Result<Option<u64>> {
    let snap = T::of(1e-9);
    if mu.abs() > T::one() + snap {
        return Err(Error::domain(format!(
            "discriminant eigenvalue {mu} outside [-1, 1]"
        )));
    }
    if mu >= T::one() - snap {
        return Ok(Some(1));
    }
    if mu <= snap - T::one() {
        return Ok(Some(2));
    }
    Ok(order_of_angle(mu.acos(), q_max))
}

/// Periodicity criterion for connected `k`-regular graphs with integral
/// adjacency spectrum: the walk is periodic iff every adjacency eigenvalue
/// lies in `{±k, ±k/2, 0}` (with `±k/2` available only for even `k`).
///
/// # Errors
///
/// Domain error if some eigenvalue is not an integer within `1e-6`.
pub fn is_periodic_integral_regular<T: Real>(
    spectrum: &SpectrumReport<T>,
    k: usize,
) -> Result<bool> {
    let distinct = round_integral(spectrum)?;
    let k = k as i64;
    Ok(distinct.iter().all(|&v| {
        v == k || v == -k || v == 0 || (k % 2 == 0 && (v == k / 2 || v == -k / 2))
    }))
}

fn round_integral<T: Real>(spectrum: &SpectrumReport<T>) -> Result<Vec<i64>> {
    spectrum
        .distinct()
        .into_iter()
        .map(|v| {
            let rounded = v.round();
            if (v - rounded).abs() > T::of(1e-6) {
                return Err(Error::domain(format!(
                    "spectrum is not integral: eigenvalue {v}"
                )));
            }
            Ok(rounded.to_f64().expect("rounded eigenvalue fits f64") as i64)
        })
        .collect()
}

/// Spectral periodicity decision from the discriminant spectrum: maps it
/// to the evolution spectrum, detects the order of every eigenvalue angle
/// (scanning up to `q_max`), and takes the lcm.
///
/// # Errors
///
/// Propagates [`spectral_map`] domain errors on inconsistent inputs.
pub fn period_spectral<T: Real>(
    disc_spectrum: &SpectrumReport<T>,
    edge_count: usize,
    vertex_count: usize,
    bipartite: bool,
    q_max: u64,
) -> Result<PeriodicityReport<T>> {
    let angles = spectral_map(
        &disc_spectrum.expand(),
        edge_count,
        vertex_count,
        bipartite,
        disc_spectrum.is_exact(),
    )?;
    let mut evidence = Vec::new();
    let mut period = Some(1u64);
    for &(theta, _) in angles.entries() {
        let order = order_of_angle(theta, q_max);
        evidence.push((theta, order));
        period = match (period, order) {
            (Some(p), Some(q)) => Some(lcm(p, q)),
            _ => None,
        };
    }
    Ok(PeriodicityReport {
        periodic: period.is_some(),
        period,
        method: PeriodicityMethod::Spectral,
        evidence,
    })
}

/// Brute-force periodicity oracle: iterates `U, U^2, ..., U^{tau_max}` with
/// the structured apply and returns the first power within `tol_identity`
/// of the identity (max-norm). Not finding one within the horizon yields
/// `periodic = false`.
pub fn period_bruteforce<T: Real>(
    ops: &WalkOperators<T>,
    tau_max: u64,
    tol_identity: T,
) -> PeriodicityReport<T> {
    let two_m = ops.arc_count();
    let mut m: Array2<T> = Array2::eye(two_m);
    for tau in 1..=tau_max {
        ops.right_multiply_in_place(&mut m);
        if crate::linalg::identity_residual(&m) < tol_identity {
            return PeriodicityReport {
                periodic: true,
                period: Some(tau),
                method: PeriodicityMethod::BruteForce,
                evidence: Vec::new(),
            };
        }
    }
    PeriodicityReport {
        periodic: false,
        period: None,
        method: PeriodicityMethod::BruteForce,
        evidence: Vec::new(),
    }
}

/// Predicted periodicity of the unitary Cayley graph on `Z_n`: periodic
/// exactly when `n = 2^a * 3^b`.
///
/// # Errors
///
/// Validation error for `n < 2`.
pub fn uc_periodicity_predicted(n: u64) -> Result<bool> {
    if n < 2 {
        return Err(Error::validation("prediction needs order at least 2"));
    }
    let mut rest = n;
    while rest.is_multiple_of(2) {
        rest /= 2;
    }
    while rest.is_multiple_of(3) {
        rest /= 3;
    }
    Ok(rest == 1)
}

/// Exact period of the unitary Cayley walk from the closed-form spectrum:
/// the Ramanujan-sum eigenvalues are mapped through the evolution spectrum
/// and the lcm of orders is taken. The result is the ground-truth period
/// (2 for n = 2, 3 for n = 3, 4 for n = 2^a with a >= 2, 6 for n = 6, 12
/// for every other 2^a 3^b), or not periodic.
///
/// # Errors
///
/// Validation error for `n < 2`.
pub fn uc_period_closed_form<T: Real>(n: usize, q_max: u64) -> Result<PeriodicityReport<T>> {
    let spectrum = uc_spectrum::<T>(n)?;
    let phi = crate::numtheory::euler_phi(n as u64)? as usize;
    let edge_count = n * phi / 2;
    // The closed form gives adjacency eigenvalues; the spectral map wants
    // the discriminant's, i.e. scaled down by the regularity degree.
    let degree = T::of_usize(phi);
    let scaled = SpectrumReport::new(
        spectrum
            .report()
            .entries()
            .iter()
            .map(|&(value, mult)| (value / degree, mult))
            .collect(),
        true,
    );
    let mut report = period_spectral(&scaled, edge_count, n, n.is_multiple_of(2), q_max)?;
    report.method = PeriodicityMethod::ClosedForm;
    Ok(report)
}

/// Categories of connected `k`-regular graphs with integral spectrum whose
/// walk is periodic, keyed by the set of distinct adjacency eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassificationLabel {
    /// Spectrum `{k, k/2, -k/2, -k}`: the 6-cycle.
    CycleSix,
    /// Nonzero spectrum `{k, -k}`: complete bipartite `K_{k,k}`.
    CompleteBipartite,
    /// Nonzero spectrum `{k, -k/2}`: complete tripartite `K_{k/2,k/2,k/2}`.
    CompleteTripartite,
    /// Spectrum `{k, k/2, 0, -k/2}` (no `-k`), e.g. the Hamming graph
    /// `H(3, 3)`.
    SpectrumKHalfZero,
    /// Full spectrum `{k, k/2, 0, -k/2, -k}`, e.g. the unitary Cayley
    /// graph on 12 vertices.
    SpectrumPmKHalfZero,
    /// The spectrum leaves `{±k, ±k/2, 0}`: the walk is not periodic.
    NotPeriodic,
}

/// Classifies a connected `k`-regular graph with integral adjacency
/// spectrum into the periodic categories of [`ClassificationLabel`].
///
/// The label is decided by the set of distinct eigenvalues; `n` and the
/// bipartiteness flag are used for consistency checks (a connected regular
/// graph is bipartite iff `-k` is an eigenvalue; the bipartite and
/// tripartite labels pin down `n`).
///
/// # Errors
///
/// Domain errors when the spectrum is not integral, the top eigenvalue is
/// not `k`, the bipartite flag contradicts the spectrum, or the eigenvalue
/// set passes the periodicity gate yet matches no realizable category.
pub fn classify_integral_regular_periodic<T: Real>(
    spectrum: &SpectrumReport<T>,
    k: usize,
    n: usize,
    bipartite: bool,
) -> Result<ClassificationLabel> {
    let distinct = round_integral(spectrum)?;
    let k_i = k as i64;
    let Some(&top) = distinct.first() else {
        return Err(Error::domain("empty spectrum"));
    };
    if top != k_i {
        return Err(Error::domain(format!(
            "top eigenvalue {top} does not match the degree {k}"
        )));
    }
    if !is_periodic_integral_regular(spectrum, k)? {
        return Ok(ClassificationLabel::NotPeriodic);
    }
    if bipartite != distinct.contains(&-k_i) {
        return Err(Error::domain(
            "bipartite flag contradicts the spectrum (-k must appear iff bipartite)",
        ));
    }

    let nonzero: Vec<i64> = distinct.iter().copied().filter(|&v| v != 0).collect();
    let has_zero = distinct.contains(&0);
    let half = k_i / 2;

    let label = if !has_zero && distinct == [k_i, half, -half, -k_i] {
        if n != 6 || k != 2 {
            return Err(Error::domain(
                "spectrum {k, k/2, -k/2, -k} is realizable only by the 6-cycle",
            ));
        }
        ClassificationLabel::CycleSix
    } else if nonzero == [k_i, -k_i] {
        if n != 2 * k {
            return Err(Error::domain(format!(
                "complete bipartite spectrum needs n = 2k, got n = {n}, k = {k}"
            )));
        }
        ClassificationLabel::CompleteBipartite
    } else if nonzero == [k_i, -half] && k.is_multiple_of(2) {
        if 2 * n != 3 * k {
            return Err(Error::domain(format!(
                "complete tripartite spectrum needs n = 3k/2, got n = {n}, k = {k}"
            )));
        }
        ClassificationLabel::CompleteTripartite
    } else if has_zero && distinct == [k_i, half, 0, -half] {
        ClassificationLabel::SpectrumKHalfZero
    } else if has_zero && distinct == [k_i, half, 0, -half, -k_i] {
        ClassificationLabel::SpectrumPmKHalfZero
    } else {
        return Err(Error::domain(format!(
            "eigenvalue set {distinct:?} passes the periodicity gate but is not \
             realizable by a connected {k}-regular graph"
        )));
    };
    Ok(label)
}
