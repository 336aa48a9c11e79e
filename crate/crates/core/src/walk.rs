//! The discrete-time (Grover) walk on a graph: boundary, shift, coin and
//! evolution operators, vertex-centered states, and state evolution.
//!
//! For a connected graph with `n` vertices and `m` edges the walk lives on
//! the `2m` symmetric arcs. The operators are:
//!
//! - boundary `d` (`n x 2m`): `d[x][a] = 1/sqrt(deg x)` iff arc `a`
//!   terminates at `x`;
//! - shift `S` (`2m x 2m`): the arc-inversion permutation;
//! - coin `C = 2 d^T d - I`: Grover diffusion on each vertex's incoming
//!   arcs;
//! - evolution `U = S C`, entrywise
//!   `U[a][b] = 2/deg(t(b))` iff `o(a) = t(b)`, minus `1` iff `a = b^{-1}`;
//! - discriminant `P = d S d^T`, the degree-normalized adjacency matrix
//!   `P[x][y] = A[x][y]/sqrt(deg x * deg y)` (equal to `A/k` for
//!   `k`-regular graphs, where it is materialized exactly as `A/k`).
//!
//! Every entry of every operator is real, so the matrices are stored over
//! the real scalar `T`; states carry complex amplitudes. The evolution is
//! materialized from its closed-form entries and then *checked* against
//! the operator product `S (2 d^T d - I)`, so a construction bug cannot
//! slip through silently. Besides the dense matrix, the structure of `U`
//! yields an `O(m)` apply (sum incoming amplitudes per vertex, then one
//! pass over arcs) that powers all brute-force sweeps in this crate.

use ndarray::{Array1, Array2};
use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graphs::{arc_space, ArcSpace, Graph};
use crate::linalg;
use crate::scalar::Real;
use crate::Tolerances;

/// The walk operators of a connected graph, all over the real scalar `T`.
#[derive(Debug, Clone)]
pub struct WalkOperators<T: Real> {
    graph: Graph,
    arcs: ArcSpace,
    boundary: Array2<T>,
    evolution: Array2<T>,
    discriminant: Array2<T>,
    // Per-arc coefficients 2/deg(origin) and 2/deg(terminus), precomputed
    // for the structured apply.
    two_over_deg_origin: Vec<T>,
    two_over_deg_terminus: Vec<T>,
}

/// Builds the walk operators with default tolerances; see
/// [`WalkOperators::build_with`].
pub fn build_operators<T: Real>(g: &Graph) -> Result<WalkOperators<T>> {
    WalkOperators::build_with(g, &Tolerances::default())
}

impl<T: Real> WalkOperators<T> {
    /// Builds boundary, shift, evolution and discriminant for a connected
    /// graph, verifying on the way that the closed-form evolution matches
    /// the operator product `S (2 d^T d - I)` and the discriminant matches
    /// `d S d^T`, each within `tol.identity`.
    ///
    /// # Errors
    ///
    /// Validation errors for a disconnected or edgeless graph; an
    /// internal-consistency error if a cross-check fails (a bug, not an
    /// input property).
    pub fn build_with(g: &Graph, tol: &Tolerances<T>) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::validation("walk needs a connected graph"));
        }
        let arcs = arc_space(g)?;
        let n = g.vertex_count();
        let two_m = arcs.len();

        let inv_sqrt_deg: Vec<T> = (0..n)
            .map(|v| T::of_usize(g.degree(v)).sqrt().recip())
            .collect();

        let mut boundary: Array2<T> = Array2::zeros((n, two_m));
        for a in 0..two_m {
            boundary[(arcs.terminus(a), a)] = inv_sqrt_deg[arcs.terminus(a)];
        }

        // Evolution from its closed-form entries (exact rationals 2/deg).
        let mut evolution: Array2<T> = Array2::zeros((two_m, two_m));
        for a in 0..two_m {
            for b in 0..two_m {
                let mut entry = T::zero();
                if arcs.origin(a) == arcs.terminus(b) {
                    entry = T::of(2.0) / T::of_usize(g.degree(arcs.terminus(b)));
                }
                if a == arcs.inverse(b) {
                    entry -= T::one();
                }
                evolution[(a, b)] = entry;
            }
        }

        // Discriminant: exactly A/k for regular graphs, else the
        // degree-normalized adjacency.
        let mut discriminant: Array2<T> = Array2::zeros((n, n));
        if let Some(k) = g.regularity() {
            discriminant = g.adjacency::<T>() / T::of_usize(k);
        } else {
            for &(u, v) in g.edges() {
                let w = inv_sqrt_deg[u] * inv_sqrt_deg[v];
                discriminant[(u, v)] = w;
                discriminant[(v, u)] = w;
            }
        }

        let ops = WalkOperators {
            graph: g.clone(),
            arcs,
            boundary,
            evolution,
            discriminant,
            two_over_deg_origin: Vec::new(),
            two_over_deg_terminus: Vec::new(),
        };
        let mut ops = ops;
        ops.two_over_deg_origin = (0..two_m)
            .map(|a| T::of(2.0) / T::of_usize(g.degree(ops.arcs.origin(a))))
            .collect();
        ops.two_over_deg_terminus = (0..two_m)
            .map(|a| T::of(2.0) / T::of_usize(g.degree(ops.arcs.terminus(a))))
            .collect();

        // Cross-check 1: d d^T = I_n (rows of the boundary are orthonormal).
        let dd_t = ops.boundary.dot(&ops.boundary.t());
        let residual = linalg::identity_residual(&dd_t);
        if residual > tol.identity {
            return Err(Error::internal(format!(
                "boundary rows not orthonormal (residual {residual})"
            )));
        }

        // Cross-check 2: closed-form U equals the product S (2 d^T d - I).
        let mut coin = ops.boundary.t().dot(&ops.boundary) * T::of(2.0);
        for i in 0..two_m {
            coin[(i, i)] -= T::one();
        }
        let mut product: Array2<T> = Array2::zeros((two_m, two_m));
        for a in 0..two_m {
            let src = ops.arcs.inverse(a);
            product.row_mut(a).assign(&coin.row(src));
        }
        let residual = linalg::max_abs_diff(&product, &ops.evolution);
        if residual > tol.identity {
            return Err(Error::internal(format!(
                "evolution disagrees with operator product (residual {residual})"
            )));
        }

        // Cross-check 3: discriminant equals d S d^T.
        let mut d_s: Array2<T> = Array2::zeros((n, two_m));
        for b in 0..two_m {
            let src = ops.arcs.inverse(b);
            d_s.column_mut(b).assign(&ops.boundary.column(src));
        }
        let p_product = d_s.dot(&ops.boundary.t());
        let residual = linalg::max_abs_diff(&p_product, &ops.discriminant);
        if residual > tol.identity {
            return Err(Error::internal(format!(
                "discriminant disagrees with d S d^T (residual {residual})"
            )));
        }

        Ok(ops)
    }

    /// The underlying graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The symmetric arc space the walk runs on.
    pub fn arcs(&self) -> &ArcSpace {
        &self.arcs
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Number of arcs (= matrix dimension of the evolution).
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Boundary operator `d` (`n x 2m`).
    pub fn boundary(&self) -> &Array2<T> {
        &self.boundary
    }

    /// Evolution operator `U = S C` (`2m x 2m`, real entries).
    pub fn evolution(&self) -> &Array2<T> {
        &self.evolution
    }

    /// Discriminant `P = d S d^T` (`n x n`).
    pub fn discriminant(&self) -> &Array2<T> {
        &self.discriminant
    }

    /// The shift `S` as a dense matrix (built on demand; the permutation
    /// itself lives in [`ArcSpace::inverse`]).
    pub fn shift_matrix(&self) -> Array2<T> {
        let two_m = self.arcs.len();
        let mut s = Array2::zeros((two_m, two_m));
        for a in 0..two_m {
            s[(a, self.arcs.inverse(a))] = T::one();
        }
        s
    }

    /// Applies `U` to a real vector: `dst = U src`. Runs in `O(m)` using
    /// per-vertex sums of incoming amplitudes.
    pub(crate) fn apply_real(&self, src: &[T], dst: &mut [T], sigma: &mut [T]) {
        sigma.fill(T::zero());
        for (b, &x) in src.iter().enumerate() {
            sigma[self.arcs.terminus(b)] += x;
        }
        for (a, d) in dst.iter_mut().enumerate() {
            *d = sigma[self.arcs.origin(a)] * self.two_over_deg_origin[a]
                - src[self.arcs.inverse(a)];
        }
    }

    /// Applies `U` to a complex vector: `dst = U src`.
    pub(crate) fn apply_complex(
        &self,
        src: &[Complex<T>],
        dst: &mut [Complex<T>],
        sigma: &mut [Complex<T>],
    ) {
        sigma.fill(Complex::zero());
        for (b, &x) in src.iter().enumerate() {
            sigma[self.arcs.terminus(b)] += x;
        }
        for (a, d) in dst.iter_mut().enumerate() {
            *d = sigma[self.arcs.origin(a)] * self.two_over_deg_origin[a]
                - src[self.arcs.inverse(a)];
        }
    }

    /// Replaces every row `r` of `m` by `U^T r`, i.e. computes
    /// `m <- m U` in place. One call advances `m = U^tau` to `U^{tau+1}`
    /// when iterating powers row-contiguously.
    pub(crate) fn right_multiply_in_place(&self, m: &mut Array2<T>) {
        let two_m = self.arcs.len();
        let n = self.graph.vertex_count();
        let mut shifted = vec![T::zero(); two_m];
        let mut sigma = vec![T::zero(); n];
        for mut row in m.rows_mut() {
            // U^T = C S: shift first, then the coin on terminus groups.
            for a in 0..two_m {
                shifted[a] = row[self.arcs.inverse(a)];
            }
            sigma.fill(T::zero());
            for (b, &x) in shifted.iter().enumerate() {
                sigma[self.arcs.terminus(b)] += x;
            }
            for (a, x) in row.iter_mut().enumerate() {
                *x = sigma[self.arcs.terminus(a)] * self.two_over_deg_terminus[a]
                    - shifted[a];
            }
        }
    }
}

/// A (typically unit) vector of complex amplitudes over the arcs.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcState<T: Real> {
    amplitudes: Array1<Complex<T>>,
}

impl<T: Real> ArcState<T> {
    /// Wraps raw amplitudes (one per arc).
    pub fn new(amplitudes: Array1<Complex<T>>) -> Self {
        ArcState { amplitudes }
    }

    /// The amplitude vector.
    pub fn amplitudes(&self) -> &Array1<Complex<T>> {
        &self.amplitudes
    }

    /// Euclidean norm.
    pub fn norm(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    /// Hermitian inner product `<self, other>` (conjugate-linear in
    /// `self`).
    pub fn inner(&self, other: &ArcState<T>) -> Complex<T> {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * b)
    }
}

/// The unit state centered at vertex `u`: amplitude `1/sqrt(deg u)` on
/// every arc terminating at `u`, zero elsewhere (the `u`-th column of
/// `d^T` — equivalently `d^T e_u`).
///
/// # Errors
///
/// Domain error if `u` is out of range.
pub fn vertex_state<T: Real>(ops: &WalkOperators<T>, u: usize) -> Result<ArcState<T>> {
    if u >= ops.vertex_count() {
        return Err(Error::domain(format!(
            "vertex {u} out of range 0..{}",
            ops.vertex_count()
        )));
    }
    let amp = T::of_usize(ops.graph().degree(u)).sqrt().recip();
    let mut amplitudes = Array1::zeros(ops.arc_count());
    for &a in ops.arcs().arcs_into(u) {
        amplitudes[a] = Complex::new(amp, T::zero());
    }
    Ok(ArcState::new(amplitudes))
}

/// Evolves a state forward `tau` steps: returns `U^tau psi`. Uses the
/// structured `O(m)`-per-step apply, so the cost is `O(tau * m)`.
pub fn evolve<T: Real>(ops: &WalkOperators<T>, psi: &ArcState<T>, tau: u64) -> ArcState<T> {
    let mut cur: Vec<Complex<T>> = psi.amplitudes().to_vec();
    let mut next = vec![Complex::zero(); cur.len()];
    let mut sigma = vec![Complex::zero(); ops.vertex_count()];
    for _ in 0..tau {
        ops.apply_complex(&cur, &mut next, &mut sigma);
        std::mem::swap(&mut cur, &mut next);
    }
    ArcState::new(Array1::from_vec(cur))
}

/// Dense `U^tau` by binary exponentiation (`O(log tau)` dense products).
/// For iterating *all* powers up to a horizon, prefer repeated
/// [`WalkOperators::right_multiply_in_place`] instead.
pub fn matrix_power<T: Real>(ops: &WalkOperators<T>, tau: u64) -> Array2<T> {
    let two_m = ops.arc_count();
    let mut result = Array2::eye(two_m);
    let mut base = ops.evolution().clone();
    let mut exp = tau;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result.dot(&base);
        }
        exp >>= 1;
        if exp > 0 {
            base = base.dot(&base);
        }
    }
    result
}
