//! Grover (coined quantum) walks on finite simple connected graphs.
//!
//! The crate builds the three operators of the arc-based walk — boundary
//! `d`, flip-flop shift `S`, Grover coin `C` — and the evolution
//! `U = SC`, which is a real orthogonal matrix on the space of arcs. Its
//! spectrum is governed by the discriminant `P = d S d^T` (the
//! degree-normalized adjacency matrix): every discriminant eigenvalue
//! `mu` in `(-1, 1)` lifts to the conjugate pair `exp(±i·arccos mu)`,
//! `mu = ±1` lift singly, and the leftover "flat" part contributes `±1`
//! eigenvalues counted by the cycle rank. On top of the operators the
//! crate offers:
//!
//! - exact spectra for circulant graphs (including unitary Cayley graphs,
//!   whose eigenvalues are Ramanujan sums) and numeric spectra for
//!   everything else ([`spectra`]);
//! - periodicity decisions three ways — spectral order arithmetic,
//!   brute-force matrix powers, and closed forms for unitary Cayley
//!   graphs — plus the classification of periodic integral regular graphs
//!   ([`periodicity`]);
//! - perfect state transfer: Chebyshev transfer blocks, the circulant
//!   sign-alternation criterion, no-go shortcuts, and brute-force
//!   certificate sweeps, with every result computed by two independent
//!   routes that must agree ([`pst`]).
//!
//! Everything numeric is generic over the scalar type through [`Real`]
//! (`f64` and `f32` are supported); the `*64` aliases at the crate root
//! pick `f64`, which all default tolerances are calibrated for.
//!
//! ```
//! use grover_walk::graphs;
//! use grover_walk::{build_operators, period_bruteforce};
//!
//! let g = graphs::complete(2)?;
//! let ops = build_operators::<f64>(&g)?;
//! let report = period_bruteforce(&ops, 16, 1e-9);
//! assert_eq!(report.period, Some(2));
//! # Ok::<(), grover_walk::Error>(())
//! ```

pub mod error;
pub mod graphs;
pub(crate) mod linalg;
pub mod numtheory;
pub mod periodicity;
pub mod pst;
pub mod scalar;
pub mod spectra;
pub mod walk;

pub use error::{Error, Result};
pub use graphs::{ArcSpace, CirculantSpec, Family, Graph};
pub use periodicity::{
    angle_order, classify_integral_regular_periodic, is_periodic_integral_regular,
    period_bruteforce, period_spectral, uc_period_closed_form, uc_periodicity_predicted,
    ClassificationLabel, PeriodicityMethod, PeriodicityReport,
};
pub use pst::{
    chebyshev, chebyshev_identity_residual, criterion_matches_bruteforce, pst_bruteforce,
    pst_criterion_circulant, pst_necessary_filter, pst_no_go_equal_eigs, transfer_block,
    uc_pst_classification, AgreementSweep, CertificateMethod, CriterionReport, PstCertificate,
    UcPstVerdict,
};
pub use scalar::Real;
pub use spectra::{
    adjacency_spectrum_numeric, circulant_spectrum, eigenprojectors, eigenvalue_support,
    evolution_spectrum_numeric, hoffman_check, is_walk_regular, numeric_spectrum, spectral_map,
    uc_spectrum, AngleSpectrum, CirculantSpectrum, Eigenprojector, HoffmanReport, SpectrumReport,
};
pub use walk::{build_operators, evolve, matrix_power, vertex_state, ArcState, WalkOperators};

/// Numerical tolerances threaded through operator construction and the
/// spectral, periodicity and transfer decisions.
///
/// The defaults are calibrated for `f64`; for lower-precision scalars each
/// field is floored at a multiple of the scalar's machine epsilon so the
/// checks stay meaningful.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances<T: Real> {
    /// Residual allowed in identity and consistency checks on operators
    /// (orthogonality, identity recurrence). Default `1e-9`.
    pub identity: T,
    /// How far a transfer amplitude modulus may sit from 1 and still count
    /// as perfect state transfer. Default `1e-7`.
    pub amplitude: T,
    /// Gap under which two numerically computed eigenvalues are merged
    /// into one cluster. Default `1e-6`.
    pub cluster: T,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        let eps = T::epsilon();
        Self {
            identity: T::of(1e-9).max(eps * T::of(100.0)),
            amplitude: T::of(1e-7).max(eps * T::of(100.0)),
            cluster: T::of(1e-6).max(eps * T::of(1000.0)),
        }
    }
}

/// [`Tolerances`] over `f64`.
pub type Tolerances64 = Tolerances<f64>;
/// [`walk::WalkOperators`] over `f64`.
pub type WalkOperators64 = walk::WalkOperators<f64>;
/// [`walk::ArcState`] over `f64`.
pub type ArcState64 = walk::ArcState<f64>;
/// [`spectra::SpectrumReport`] over `f64`.
pub type SpectrumReport64 = spectra::SpectrumReport<f64>;
/// [`spectra::AngleSpectrum`] over `f64`.
pub type AngleSpectrum64 = spectra::AngleSpectrum<f64>;
/// [`spectra::CirculantSpectrum`] over `f64`.
pub type CirculantSpectrum64 = spectra::CirculantSpectrum<f64>;
/// [`spectra::Eigenprojector`] over `f64`.
pub type Eigenprojector64 = spectra::Eigenprojector<f64>;
/// [`spectra::HoffmanReport`] over `f64`.
pub type HoffmanReport64 = spectra::HoffmanReport<f64>;
/// [`periodicity::PeriodicityReport`] over `f64`.
pub type PeriodicityReport64 = periodicity::PeriodicityReport<f64>;
/// [`pst::PstCertificate`] over `f64`.
pub type PstCertificate64 = pst::PstCertificate<f64>;
/// [`pst::CriterionReport`] over `f64`.
pub type CriterionReport64 = pst::CriterionReport<f64>;
/// [`pst::AgreementSweep`] over `f64`.
pub type AgreementSweep64 = pst::AgreementSweep<f64>;
/// [`pst::UcPstVerdict`] over `f64`.
pub type UcPstVerdict64 = pst::UcPstVerdict<f64>;
