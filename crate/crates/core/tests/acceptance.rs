//! Acceptance suite: nine end-to-end criteria, each printing exactly one
//! `criterion N: PASS/FAIL` line (run with `-- --nocapture` to see the
//! lines for passing tests). Tolerances are pinned in each criterion.

use std::fmt::Write as _;
use std::path::Path;

use ndarray::{Array1, Array2};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grover_walk::graphs::{self, random_circulant_spec, Graph};
use grover_walk::periodicity::{
    period_bruteforce, period_spectral, uc_period_closed_form, uc_periodicity_predicted,
    ClassificationLabel,
};
use grover_walk::pst::{chebyshev_identity_residual, criterion_matches_bruteforce};
use grover_walk::spectra::{
    adjacency_spectrum_numeric, circulant_spectrum, eigenprojectors, evolution_spectrum_numeric,
    hoffman_check, is_walk_regular, numeric_spectrum, spectral_map, uc_spectrum,
};
use grover_walk::walk::{build_operators, evolve, ArcState, WalkOperators};
use grover_walk::{classify_integral_regular_periodic, numtheory, Tolerances};

fn report(criterion: usize, outcome: Result<String, String>) {
    match outcome {
        Ok(summary) => println!("criterion {criterion}: PASS — {summary}"),
        Err(reason) => panic!("criterion {criterion}: FAIL — {reason}"),
    }
}

fn ops_for(g: &Graph) -> WalkOperators<f64> {
    build_operators(g).expect("corpus graph must yield walk operators")
}

/// Corpus shared by the operator-identity, spectral-map, fixture and
/// property criteria. The non-regular members (paths, a random tree, a
/// barbell) are round-tripped through edge-list files on disk.
fn corpus(dir: &Path) -> Vec<(String, Graph)> {
    let mut list: Vec<(String, Graph)> = vec![
        ("K2".into(), graphs::complete(2).unwrap()),
        ("K3".into(), graphs::complete(3).unwrap()),
        ("K4".into(), graphs::complete(4).unwrap()),
        ("C4".into(), graphs::cycle(4).unwrap()),
        ("C5".into(), graphs::cycle(5).unwrap()),
        ("C6".into(), graphs::cycle(6).unwrap()),
        ("C8".into(), graphs::cycle(8).unwrap()),
        ("K33".into(), graphs::complete_bipartite(3, 3).unwrap()),
        ("K222".into(), graphs::complete_tripartite(2, 2, 2).unwrap()),
        ("H33".into(), graphs::hamming(3, 3).unwrap()),
        ("cube".into(), graphs::hamming(3, 2).unwrap()),
        ("UC8".into(), graphs::unitary_cayley(8).unwrap()),
        ("UC12".into(), graphs::unitary_cayley(12).unwrap()),
        ("star4".into(), Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()),
    ];
    for (name, graph) in file_ingested(dir) {
        list.push((name, graph));
    }
    list
}

/// Name, vertex count and edge list for a corpus member round-tripped
/// through a file.
type NamedEdgeList = (String, usize, Vec<(usize, usize)>);

/// Writes the non-regular corpus members as edge-list files and reads
/// them back through the file ingestion path.
fn file_ingested(dir: &Path) -> Vec<(String, Graph)> {
    let mut specs: Vec<NamedEdgeList> = vec![
        ("P3-file".into(), 3, vec![(0, 1), (1, 2)]),
        ("P5-file".into(), 5, vec![(0, 1), (1, 2), (2, 3), (3, 4)]),
        (
            "barbell-file".into(),
            10,
            vec![
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (6, 7),
                (6, 8),
                (6, 9),
                (7, 8),
                (7, 9),
                (8, 9),
                (3, 4),
                (4, 5),
                (5, 6),
            ],
        ),
    ];
    // A random tree on 9 vertices: each new vertex attaches to a
    // uniformly chosen earlier one (seeded, so the corpus is fixed).
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let tree: Vec<(usize, usize)> = (1..9).map(|v| (rng.gen_range(0..v), v)).collect();
    specs.push(("tree9-file".into(), 9, tree));

    specs
        .into_iter()
        .map(|(name, n, edges)| {
            let mut text = format!("{} {}\n", n, edges.len());
            for (u, v) in &edges {
                writeln!(text, "{u} {v}").unwrap();
            }
            let path = dir.join(format!("{name}.txt"));
            std::fs::write(&path, text).unwrap();
            let g = Graph::from_edge_list_file(&path).unwrap();
            (name, g)
        })
        .collect()
}

#[test]
fn criterion_1_unitary_cayley_periodicity_sweep() {
    let outcome = (|| -> Result<String, String> {
        let mut periodic_orders = Vec::new();
        for n in 2..=30usize {
            let predicted = uc_periodicity_predicted(n as u64).map_err(|e| e.to_string())?;
            let g = graphs::unitary_cayley(n).map_err(|e| e.to_string())?;
            let brute = period_bruteforce(&ops_for(&g), 144, 1e-9);
            if brute.periodic != predicted {
                return Err(format!(
                    "UC({n}): brute-force periodicity {} but 2^a*3^b predicate says {predicted}",
                    brute.periodic
                ));
            }
            if brute.periodic {
                periodic_orders.push(n);
            }
        }
        for n in 31..=60usize {
            let predicted = uc_periodicity_predicted(n as u64).map_err(|e| e.to_string())?;
            let spectral = uc_period_closed_form::<f64>(n, 360).map_err(|e| e.to_string())?;
            if spectral.periodic != predicted {
                return Err(format!(
                    "UC({n}): spectral periodicity {} but predicate says {predicted}",
                    spectral.periodic
                ));
            }
        }
        Ok(format!(
            "brute force (tau <= 144, tol 1e-9) matches the 2^a*3^b predicate on n in [2,30] \
             (periodic: {periodic_orders:?}); spectral criterion matches it on n in [31,60]"
        ))
    })();
    report(1, outcome);
}

#[test]
fn criterion_2_unitary_cayley_periods() {
    let outcome = (|| -> Result<String, String> {
        // Ground truth by the brute-force oracle, confirmed spectrally.
        let asserted: &[(usize, u64)] = &[
            (4, 4),
            (8, 4),
            (16, 4),
            (9, 12),
            (12, 12),
            (18, 12),
            (24, 12),
            (27, 12),
        ];
        // Orders where the computed period departs from the blanket
        // period-4/period-12 remark; reported and flagged, not asserted
        // against that remark.
        let flagged: &[(usize, u64)] = &[(2, 2), (3, 3), (6, 6)];

        let mut flags = String::new();
        for &(n, expected) in asserted.iter().chain(flagged) {
            let g = graphs::unitary_cayley(n).map_err(|e| e.to_string())?;
            let brute = period_bruteforce(&ops_for(&g), 144, 1e-9);
            if brute.period != Some(expected) {
                return Err(format!(
                    "UC({n}): brute-force period {:?}, computed ground truth says {expected}",
                    brute.period
                ));
            }
            let spectral = uc_period_closed_form::<f64>(n, 360).map_err(|e| e.to_string())?;
            if spectral.period != Some(expected) {
                return Err(format!(
                    "UC({n}): spectral period {:?} disagrees with brute-force {expected}",
                    spectral.period
                ));
            }
            if flagged.contains(&(n, expected)) {
                write!(flags, " UC({n})={expected}").unwrap();
            }
        }
        Ok(format!(
            "period 4 at n in {{4,8,16}} and 12 at n in {{9,12,18,24,27}} (brute force and \
             spectral agree); flagged departures from the blanket 4-or-12 remark:{flags}"
        ))
    })();
    report(2, outcome);
}

#[test]
fn criterion_3_unitary_cayley_transfer_classification() {
    let outcome = (|| -> Result<String, String> {
        let tol = Tolerances::<f64>::default();
        let verdicts = grover_walk::uc_pst_classification(24, &tol).map_err(|e| e.to_string())?;
        let with_pst: Vec<usize> = verdicts.iter().filter(|v| v.pst).map(|v| v.n).collect();
        if with_pst != vec![2, 4, 6, 12] {
            return Err(format!(
                "PST orders up to 24 came out as {with_pst:?}, expected [2, 4, 6, 12]"
            ));
        }
        let uc12 = verdicts.iter().find(|v| v.n == 12).unwrap();
        if uc12.certificates.len() != 12 {
            return Err(format!(
                "UC(12) produced {} certificates, expected one per source vertex",
                uc12.certificates.len()
            ));
        }
        for cert in &uc12.certificates {
            if cert.time != 6 || (cert.source + 6) % 12 != cert.target {
                return Err(format!(
                    "UC(12) certificate ({}, {}, tau={}) is not (u, u+6, 6)",
                    cert.source, cert.target, cert.time
                ));
            }
            if (cert.phase.norm() - 1.0).abs() > 1e-7 {
                return Err(format!("certificate phase {} is not unimodular", cert.phase));
            }
        }
        Ok(
            "sweeping n <= 24, transfer exists exactly at n in {2,4,6,12}; UC(12) certifies \
             (u, u+6 mod 12, tau=6) for every u with amplitude within 1e-7 of 1"
                .into(),
        )
    })();
    report(3, outcome);
}

#[test]
fn criterion_4_circulant_criterion_equals_bruteforce() {
    let outcome = (|| -> Result<String, String> {
        let tol = Tolerances::<f64>::default();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_CA7A);
        let mut cells = 0usize;
        let mut nearest_miss = 0.0f64;
        for _ in 0..200 {
            let n = rng.gen_range(4..=20usize);
            let spec = random_circulant_spec(n, &mut rng).map_err(|e| e.to_string())?;
            let sweep = criterion_matches_bruteforce(&spec, 50, &tol).map_err(|e| {
                format!(
                    "n = {}, connection {:?}: {e}",
                    spec.order(),
                    spec.connection()
                )
            })?;
            cells += sweep.cells;
            nearest_miss = nearest_miss.max(sweep.nearest_miss);
        }
        Ok(format!(
            "200 seeded random connected circulants (n in [4,20]), all tau <= 50: criterion \
             and brute-force verdicts agree on all {cells} cells; largest non-transfer \
             amplitude modulus {nearest_miss:.6} (margin {:.6} below the 1-1e-7 threshold)",
            1.0 - 1e-7 - nearest_miss
        ))
    })();
    report(4, outcome);
}

#[test]
fn criterion_5_transfer_block_identity_on_the_corpus() {
    let outcome = (|| -> Result<String, String> {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let mut worst = (0.0f64, String::new(), 0u64);
        for (name, g) in corpus(dir.path()) {
            let ops = ops_for(&g);
            for tau in 0..=20u64 {
                let residual = chebyshev_identity_residual(&ops, tau)
                    .map_err(|e| format!("{name}, tau {tau}: {e}"))?;
                if residual >= 1e-8 {
                    return Err(format!(
                        "{name}: transfer-block residual {residual:.3e} at tau = {tau} \
                         breaches 1e-8"
                    ));
                }
                if residual > worst.0 {
                    worst = (residual, name.clone(), tau);
                }
            }
        }
        Ok(format!(
            "max |d U^tau d^T - T_tau(P)| < 1e-8 for all tau <= 20 across the corpus \
             (incl. file-ingested paths, random tree, barbell); worst residual {:.3e} \
             ({} at tau = {})",
            worst.0, worst.1, worst.2
        ))
    })();
    report(5, outcome);
}

#[test]
fn criterion_6_spectral_map_matches_numeric_evolution_spectrum() {
    let outcome = (|| -> Result<String, String> {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let mut graphs_checked = 0usize;
        for (name, g) in corpus(dir.path()) {
            let ops = ops_for(&g);
            let disc = numeric_spectrum(ops.discriminant(), 1e-6)
                .map_err(|e| format!("{name}: {e}"))?;
            let mapped = spectral_map(
                &disc.expand(),
                g.edge_count(),
                g.vertex_count(),
                g.is_bipartite(),
                false,
            )
            .map_err(|e| format!("{name}: {e}"))?;
            let numeric = evolution_spectrum_numeric(&ops).map_err(|e| format!("{name}: {e}"))?;

            if mapped.entries().len() != numeric.entries().len() {
                return Err(format!(
                    "{name}: mapped spectrum has {} distinct angles, numeric has {}",
                    mapped.entries().len(),
                    numeric.entries().len()
                ));
            }
            for (&(theta_m, mult_m), &(theta_n, mult_n)) in
                mapped.entries().iter().zip(numeric.entries())
            {
                if mult_m != mult_n {
                    return Err(format!(
                        "{name}: angle {theta_m:.6} multiplicity {mult_m} (mapped) vs \
                         {mult_n} (numeric)"
                    ));
                }
                if (theta_m - theta_n).abs() > 1e-7 {
                    return Err(format!(
                        "{name}: mapped angle {theta_m:.12} vs numeric {theta_n:.12} \
                         differ beyond 1e-7"
                    ));
                }
            }
            if mapped.total_multiplicity() != 2 * g.edge_count() {
                return Err(format!("{name}: mapped total != 2m"));
            }
            graphs_checked += 1;
        }
        Ok(format!(
            "on all {graphs_checked} corpus graphs the mapped evolution spectrum (including \
             the cycle-rank counts of the flat ±1 angles) equals the numeric one: exact \
             multiplicities, angles within 1e-7"
        ))
    })();
    report(6, outcome);
}

#[test]
fn criterion_7_ramanujan_dual_formulas_and_spectra() {
    let outcome = (|| -> Result<String, String> {
        for n in 1..=300u64 {
            for j in 0..n as i64 {
                let closed = numtheory::ramanujan_closed(j, n).map_err(|e| e.to_string())?;
                let direct = numtheory::ramanujan_direct(j, n).map_err(|e| e.to_string())?;
                if closed != direct {
                    return Err(format!(
                        "R({j}, {n}): closed form {closed} vs direct summation {direct}"
                    ));
                }
            }
        }
        for n in 2..=60usize {
            let exact = uc_spectrum::<f64>(n).map_err(|e| e.to_string())?;
            let g = graphs::unitary_cayley(n).map_err(|e| e.to_string())?;
            let numeric = adjacency_spectrum_numeric::<f64>(&g, 1e-6)
                .map_err(|e| e.to_string())?;
            let mut exact_sorted = exact.indexed().to_vec();
            exact_sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut numeric_sorted = numeric.expand();
            numeric_sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
            if exact_sorted.len() != numeric_sorted.len() {
                return Err(format!("UC({n}): eigenvalue count mismatch"));
            }
            for (e, m) in exact_sorted.iter().zip(&numeric_sorted) {
                if (e - m).abs() > 1e-8 {
                    return Err(format!(
                        "UC({n}): exact eigenvalue {e} vs numeric {m} beyond 1e-8"
                    ));
                }
            }
        }
        Ok(
            "closed-form and direct Ramanujan sums agree exactly for all n <= 300, 0 <= j < n; \
             exact unitary Cayley spectra match numeric adjacency spectra within 1e-8 for \
             n <= 60"
                .into(),
        )
    })();
    report(7, outcome);
}

#[test]
fn criterion_8_integral_fixture_checks() {
    let outcome = (|| -> Result<String, String> {
        // Hoffman identity residuals.
        let hoffman_fixtures: Vec<(&str, Graph)> = vec![
            ("UC12", graphs::unitary_cayley(12).unwrap()),
            ("K33", graphs::complete_bipartite(3, 3).unwrap()),
            ("K222", graphs::complete_tripartite(2, 2, 2).unwrap()),
            ("H33", graphs::hamming(3, 3).unwrap()),
        ];
        for (name, g) in &hoffman_fixtures {
            let spectrum = adjacency_spectrum_numeric::<f64>(g, 1e-6).map_err(|e| e.to_string())?;
            let hoffman = hoffman_check(g, &spectrum, 1e-8).map_err(|e| e.to_string())?;
            if !hoffman.holds {
                return Err(format!(
                    "{name}: Hoffman residual {:.3e} breaches 1e-8",
                    hoffman.residual
                ));
            }
        }

        // Distinct adjacency eigenvalues of H(3,3).
        let h33 = graphs::hamming(3, 3).unwrap();
        let spectrum = adjacency_spectrum_numeric::<f64>(&h33, 1e-6).map_err(|e| e.to_string())?;
        let rounded: Vec<i64> = spectrum.distinct().iter().map(|v| v.round() as i64).collect();
        for (&value, &target) in spectrum.distinct().iter().zip(&[6i64, 3, 0, -3]) {
            if (value - target as f64).abs() > 1e-9 {
                return Err(format!(
                    "H(3,3) distinct eigenvalues {rounded:?}, expected [6, 3, 0, -3]"
                ));
            }
        }

        // Classification labels of the five category fixtures.
        let fixtures: Vec<(&str, Graph, usize, ClassificationLabel)> = vec![
            ("C6", graphs::cycle(6).unwrap(), 2, ClassificationLabel::CycleSix),
            (
                "K33",
                graphs::complete_bipartite(3, 3).unwrap(),
                3,
                ClassificationLabel::CompleteBipartite,
            ),
            (
                "K222",
                graphs::complete_tripartite(2, 2, 2).unwrap(),
                4,
                ClassificationLabel::CompleteTripartite,
            ),
            (
                "H33",
                graphs::hamming(3, 3).unwrap(),
                6,
                ClassificationLabel::SpectrumKHalfZero,
            ),
            (
                "UC12",
                graphs::unitary_cayley(12).unwrap(),
                4,
                ClassificationLabel::SpectrumPmKHalfZero,
            ),
        ];
        for (name, g, k, expected) in &fixtures {
            let spectrum = adjacency_spectrum_numeric::<f64>(g, 1e-6).map_err(|e| e.to_string())?;
            let label =
                classify_integral_regular_periodic(&spectrum, *k, g.vertex_count(), g.is_bipartite())
                    .map_err(|e| format!("{name}: {e}"))?;
            if label != *expected {
                return Err(format!("{name}: classified {label:?}, expected {expected:?}"));
            }
        }

        // Walk-regularity to depth 8 for every periodic regular corpus
        // graph; the non-regular path P_3 fails the test.
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let mut walk_regular_checked = 0usize;
        for (name, g) in corpus(dir.path()) {
            if g.regularity().is_none() {
                continue;
            }
            let ops = ops_for(&g);
            let disc = numeric_spectrum(ops.discriminant(), 1e-6).map_err(|e| e.to_string())?;
            let verdict = period_spectral(
                &disc,
                g.edge_count(),
                g.vertex_count(),
                g.is_bipartite(),
                360,
            )
            .map_err(|e| format!("{name}: {e}"))?;
            if verdict.periodic {
                if !is_walk_regular(&g, 8) {
                    return Err(format!("{name} is periodic and regular but not walk-regular"));
                }
                walk_regular_checked += 1;
            }
        }
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        if is_walk_regular(&p3, 8) {
            return Err("P_3 unexpectedly passes the walk-regularity test".into());
        }
        Ok(format!(
            "Hoffman residual < 1e-8 on the four integral fixtures; H(3,3) spectrum \
             {{6, ±3, 0}}; all five category labels verified; walk-regularity (depth 8) \
             holds on {walk_regular_checked} periodic regular corpus graphs and fails on P_3"
        ))
    })();
    report(8, outcome);
}

#[test]
fn criterion_9_property_suite_across_the_corpus() {
    let outcome = (|| -> Result<String, String> {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for (name, g) in corpus(dir.path()) {
            let ops = ops_for(&g);
            let two_m = ops.arc_count();

            // Orthogonality of the evolution matrix (its entries are real,
            // so unitarity is U^T U = I), tolerance 1e-9.
            let gram = ops.evolution().t().dot(ops.evolution());
            let mut residual = 0.0f64;
            for i in 0..two_m {
                for j in 0..two_m {
                    let target = if i == j { 1.0 } else { 0.0 };
                    residual = residual.max((gram[(i, j)] - target).abs());
                }
            }
            if residual > 1e-9 {
                return Err(format!("{name}: U^T U residual {residual:.3e} breaches 1e-9"));
            }

            // Projector axioms at 1e-8: symmetric, idempotent, mutually
            // orthogonal, resolving the identity, and reassembling P.
            let projectors =
                eigenprojectors(ops.discriminant(), 1e-6).map_err(|e| e.to_string())?;
            let n = g.vertex_count();
            let mut sum: Array2<f64> = Array2::zeros((n, n));
            let mut weighted: Array2<f64> = Array2::zeros((n, n));
            for (r, p) in projectors.iter().enumerate() {
                let m = p.matrix();
                let idem = m.dot(m);
                let mut err = 0.0f64;
                for i in 0..n {
                    for j in 0..n {
                        err = err.max((idem[(i, j)] - m[(i, j)]).abs());
                        err = err.max((m[(i, j)] - m[(j, i)]).abs());
                    }
                }
                for q in projectors.iter().skip(r + 1) {
                    let cross = m.dot(q.matrix());
                    err = cross.iter().fold(err, |acc, &x| acc.max(x.abs()));
                }
                if err > 1e-8 {
                    return Err(format!("{name}: projector axiom residual {err:.3e}"));
                }
                sum += m;
                weighted += &(m * p.value());
            }
            let mut err = 0.0f64;
            for i in 0..n {
                for j in 0..n {
                    let target = if i == j { 1.0 } else { 0.0 };
                    err = err.max((sum[(i, j)] - target).abs());
                    err = err.max((weighted[(i, j)] - ops.discriminant()[(i, j)]).abs());
                }
            }
            if err > 1e-8 {
                return Err(format!("{name}: projector resolution residual {err:.3e}"));
            }

            // Norm preservation under evolution, tolerance 1e-9.
            let raw: Array1<Complex<f64>> = Array1::from_iter(
                (0..two_m).map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))),
            );
            let state = ArcState::new(raw);
            let evolved = evolve(&ops, &state, 37);
            if (evolved.norm() - state.norm()).abs() > 1e-9 {
                return Err(format!("{name}: evolution changed the state norm"));
            }
        }

        // Circulant index symmetry lambda_j = lambda_{n-j}.
        for n in 2..=24usize {
            let spectrum = uc_spectrum::<f64>(n).map_err(|e| e.to_string())?;
            let indexed = spectrum.indexed();
            for j in 1..n {
                if (indexed[j] - indexed[n - j]).abs() > 1e-12 {
                    return Err(format!("UC({n}): lambda_{j} != lambda_{}", n - j));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(1234);
        for _ in 0..25 {
            let n = rng.gen_range(3..=20usize);
            let spec = random_circulant_spec(n, &mut rng).map_err(|e| e.to_string())?;
            let spectrum = circulant_spectrum::<f64>(&spec);
            let indexed = spectrum.indexed();
            for j in 1..n {
                if (indexed[j] - indexed[n - j]).abs() > 1e-9 {
                    return Err(format!(
                        "circulant n = {n}, connection {:?}: lambda_{j} != lambda_{}",
                        spec.connection(),
                        n - j
                    ));
                }
            }
        }
        Ok(
            "orthogonality of U (1e-9), projector axioms (1e-8), norm preservation under \
             evolution (1e-9) and circulant index symmetry all hold across the corpus"
                .into(),
        )
    })();
    report(9, outcome);
}
