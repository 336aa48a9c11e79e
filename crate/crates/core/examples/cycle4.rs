// The README usage example: periodicity and perfect state transfer on
// the 4-cycle, decided twice and cross-checked.

use grover_walk::{Graph, Tolerances64, WalkOperators};
use grover_walk::{period_bruteforce, period_spectral, pst_bruteforce};
use grover_walk::spectra::numeric_spectrum;

fn main() -> Result<(), grover_walk::Error> {
    let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)])?; // C_4
    let tol = Tolerances64::default();
    let ops = WalkOperators::build_with(&g, &tol)?;

    let disc = numeric_spectrum(ops.discriminant(), tol.cluster)?;
    let brute = period_bruteforce(&ops, 64, tol.identity);
    let spectral = period_spectral(&disc, 4, 4, true, 360)?;
    assert_eq!(brute.period, spectral.period); // Some(4)

    let certs = pst_bruteforce(&ops, 4, tol.amplitude)?;
    assert!(certs.iter().any(|c| (c.source, c.target, c.time) == (0, 2, 2)));
    Ok(())
}
