//! Elementary number theory: gcd/lcm, Euler's totient, the Möbius function,
//! and Ramanujan sums.
//!
//! Ramanujan sums are the bridge between arithmetic and spectra in this
//! crate: the eigenvalues of a unitary Cayley graph are exactly the values
//! `ramanujan(j, n)` for `j = 0, ..., n-1`. Two independent evaluation
//! routes are provided — a closed form via the totient and Möbius function
//! ([`ramanujan_closed`]), and direct summation of roots of unity over the
//! units of `Z_n` ([`ramanujan_direct`]) — so each can serve as an oracle
//! for the other in tests.
//!
//! All functions here are exact integer computations (the direct sum is
//! floating-point internally but rounds to a checked integer).

use crate::error::{Error, Result};

/// Greatest common divisor (Euclid's algorithm); `gcd(0, 0) = 0`.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple; `lcm(0, x) = 0`.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing prime order. Intended for the desk-scale inputs of this crate
/// (`n` up to a few million), where trial division is instantaneous.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0u32;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient `phi(n)`: the number of residues in `[1, n]` coprime
/// to `n`.
///
/// Computed from the factorization as `n * prod_p (1 - 1/p)` in exact
/// integer arithmetic.
///
/// # Errors
///
/// `n = 0` is outside the domain.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("euler_phi(0) is undefined"));
    }
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// Möbius function `mu(n)`: `0` if `n` has a squared prime factor,
/// otherwise `(-1)^k` where `k` is the number of distinct prime factors.
///
/// # Errors
///
/// `n = 0` is outside the domain.
pub fn mobius(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::domain("mobius(0) is undefined"));
    }
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e >= 2) {
        return Ok(0);
    }
    Ok(if factors.len().is_multiple_of(2) { 1 } else { -1 })
}

/// Ramanujan sum `R(j, n)` via the closed form
/// `mu(c) * phi(n) / phi(c)` with `c = n / gcd(n, j)`.
///
/// The division is exact because `c | n` implies `phi(c) | phi(n)`; this is
/// asserted rather than assumed. `j` may be any integer (the sum is
/// periodic in `j` with period `n`, and symmetric: `R(j, n) = R(-j, n)`).
///
/// # Errors
///
/// `n = 0` is outside the domain.
pub fn ramanujan_closed(j: i64, n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::domain("ramanujan sum undefined for modulus 0"));
    }
    let j_mod = j.rem_euclid(n as i64) as u64;
    let c = n / gcd(n, j_mod);
    let phi_n = euler_phi(n)?;
    let phi_c = euler_phi(c)?;
    assert!(
        phi_n % phi_c == 0,
        "phi({c}) = {phi_c} must divide phi({n}) = {phi_n}"
    );
    Ok(mobius(c)? * (phi_n / phi_c) as i64)
}

/// Ramanujan sum `R(j, n)` by direct summation: the real part of
/// `sum over units r of Z_n` of `exp(2*pi*i*j*r/n)` (the imaginary parts
/// cancel in `r <-> n - r` pairs, so only cosines are accumulated).
///
/// The floating-point sum is rounded to the nearest integer; a residual
/// above `1e-6 * n` trips an internal-consistency error, since the sum is
/// an integer mathematically. This is the slow-but-transparent oracle for
/// [`ramanujan_closed`].
///
/// # Errors
///
/// `n = 0` is outside the domain; a rounding residual beyond tolerance is
/// an internal-consistency failure.
pub fn ramanujan_direct(j: i64, n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::domain("ramanujan sum undefined for modulus 0"));
    }
    let j_mod = j.rem_euclid(n as i64) as u64;
    let mut sum = 0.0f64;
    for r in 1..=n {
        if gcd(r, n) == 1 {
            let angle = 2.0 * std::f64::consts::PI * (j_mod * r % n) as f64 / n as f64;
            sum += angle.cos();
        }
    }
    let rounded = sum.round();
    if (sum - rounded).abs() > 1e-6 * n as f64 {
        return Err(Error::internal(format!(
            "character sum R({j}, {n}) = {sum} is not close to an integer"
        )));
    }
    Ok(rounded as i64)
}
