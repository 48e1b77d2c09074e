//! Exact integer helpers: trial-division factorization, divisors, p-adic
//! valuations and modular exponentiation.
//!
//! All values are `i128`. The largest quantities handled by the genus
//! formulas are of size roughly `q^4 * m`, which stays well inside the
//! `i128` range for every curve accepted by [`crate::params::make_params`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prime factorization `n = p_1^e_1 * ... * p_r^e_r` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    prime_powers: Vec<(i128, u32)>,
}

impl Factorization {
    pub fn prime_powers(&self) -> &[(i128, u32)] {
        &self.prime_powers
    }

    pub fn primes(&self) -> impl Iterator<Item = i128> + '_ {
        self.prime_powers.iter().map(|&(p, _)| p)
    }

    /// Multiplies the prime powers back together.
    pub fn product(&self) -> i128 {
        self.prime_powers.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_empty(&self) -> bool {
        self.prime_powers.is_empty()
    }

    /// Number of positive divisors.
    pub fn divisor_count(&self) -> usize {
        self.prime_powers.iter().map(|&(_, e)| e as usize + 1).product()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prime_powers.is_empty() {
            return write!(f, "1");
        }
        for (idx, &(p, e)) in self.prime_powers.iter().enumerate() {
            if idx > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// p-adic valuation. `Infinite` is the valuation of zero and compares above
/// every finite value, so `min(Infinite, e) == e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(e) => Some(e),
            Valuation::Infinite => None,
        }
    }
}

impl PartialEq<u32> for Valuation {
    fn eq(&self, other: &u32) -> bool {
        *self == Valuation::Finite(*other)
    }
}

impl PartialOrd<u32> for Valuation {
    fn partial_cmp(&self, other: &u32) -> Option<Ordering> {
        self.partial_cmp(&Valuation::Finite(*other))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(e) => write!(f, "{e}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

pub fn is_prime(n: i128) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Factors `n >= 1` by trial division. `factorize(1)` is the empty product.
pub fn factorize(n: i128) -> Result<Factorization> {
    if n < 1 {
        return Err(Error::NonPositive {
            what: "factorize argument",
            value: n,
        });
    }
    let mut rest = n;
    let mut prime_powers = Vec::new();
    let mut push = |p: i128, rest: &mut i128| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            prime_powers.push((p, e));
        }
    };
    push(2, &mut rest);
    let mut d = 3;
    while d * d <= rest {
        push(d, &mut rest);
        d += 2;
    }
    if rest > 1 {
        prime_powers.push((rest, 1));
    }
    Ok(Factorization { prime_powers })
}

/// Largest `e` with `p^e | n`; [`Valuation::Infinite`] for `n == 0`.
pub fn valuation(p: i128, n: i128) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Ok(Valuation::Infinite);
    }
    let mut n = n.abs();
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    Ok(Valuation::Finite(e))
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: i128) -> Result<Vec<i128>> {
    Ok(divisors_of(&factorize(n)?))
}

/// Divisors generated from a known factorization, ascending.
pub fn divisors_of(factorization: &Factorization) -> Vec<i128> {
    let mut out = vec![1i128];
    for &(p, e) in factorization.prime_powers() {
        let current = out.len();
        let mut power = 1;
        for _ in 0..e {
            power *= p;
            for idx in 0..current {
                out.push(out[idx] * power);
            }
        }
    }
    out.sort_unstable();
    out
}

/// `base^exponent mod modulus`, result in `[0, modulus)`.
pub fn mod_pow(base: i128, exponent: u64, modulus: i128) -> Result<i128> {
    if modulus < 1 {
        return Err(Error::NonPositive {
            what: "modulus",
            value: modulus,
        });
    }
    if modulus == 1 {
        return Ok(0);
    }
    // Operands stay below 2^63 so the products below cannot overflow.
    if modulus > i64::MAX as i128 {
        return Err(Error::Overflow("mod_pow modulus"));
    }
    let mut result = 1i128;
    let mut b = base.rem_euclid(modulus);
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        e >>= 1;
    }
    Ok(result)
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: i128, b: i128) -> i128 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b) * b).abs()
}

/// Euler's totient, by trial division.
pub fn totient(n: i128) -> Result<i128> {
    let f = factorize(n)?;
    Ok(f.prime_powers().iter().fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().is_empty());
        assert_eq!(factorize(481).unwrap().prime_powers(), &[(13, 1), (37, 1)]);
        assert_eq!(factorize(217).unwrap().prime_powers(), &[(7, 1), (31, 1)]);
        assert_eq!(factorize(2107).unwrap().prime_powers(), &[(7, 2), (43, 1)]);
        assert_eq!(
            factorize(0),
            Err(Error::NonPositive {
                what: "factorize argument",
                value: 0
            })
        );
        assert!(factorize(-5).is_err());
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(5, 50).unwrap(), Valuation::Finite(2));
        assert_eq!(valuation(5, 7).unwrap(), Valuation::Finite(0));
        assert_eq!(valuation(5, 0).unwrap(), Valuation::Infinite);
        assert_eq!(valuation(5, -125).unwrap(), 3);
        assert_eq!(valuation(4, 16), Err(Error::NotPrime(4)));
        assert_eq!(Valuation::Infinite.min(Valuation::Finite(3)), Valuation::Finite(3));
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(5).unwrap(), vec![1, 5]);
        assert_eq!(divisors(25).unwrap(), vec![1, 5, 25]);
        assert_eq!(divisors(481).unwrap(), vec![1, 13, 37, 481]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert!(divisors(0).is_err());
    }

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(8, 2, 5).unwrap(), 4);
        assert_eq!(mod_pow(8, 4, 5).unwrap(), 1);
        assert_eq!(mod_pow(27, 6, 19).unwrap(), 1);
        assert_eq!(mod_pow(-3, 3, 7).unwrap(), 1);
        assert_eq!(mod_pow(12, 0, 1).unwrap(), 0);
        assert!(mod_pow(2, 2, 0).is_err());
    }

    #[test]
    fn gcd_lcm_totient() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(totient(9).unwrap(), 6);
        assert_eq!(totient(1).unwrap(), 1);
    }

    #[test]
    fn primality() {
        let small: Vec<i128> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(176419));
        assert!(is_prime(19441));
    }

    proptest! {
        #[test]
        fn factorize_reconstructs(n in 1i128..1_000_000) {
            let f = factorize(n).unwrap();
            prop_assert_eq!(f.product(), n);
            let primes: Vec<i128> = f.primes().collect();
            prop_assert!(primes.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(primes.iter().all(|&p| is_prime(p)));
            prop_assert_eq!(f.divisor_count(), divisors(n).unwrap().len());
        }

        #[test]
        fn valuation_of_scaled(pi in 0usize..6, e in 0u32..12, k in 1i128..10_000) {
            let p = [2i128, 3, 5, 7, 13, 31][pi];
            prop_assume!(k % p != 0);
            prop_assert_eq!(valuation(p, p.pow(e) * k).unwrap(), Valuation::Finite(e));
        }

        #[test]
        fn mod_pow_matches_naive(base in -2000i128..2000, exp in 0u64..40, modulus in 1i128..1000) {
            let mut naive = 1i128 % modulus;
            for _ in 0..exp {
                naive = (naive * base).rem_euclid(modulus);
            }
            prop_assert_eq!(mod_pow(base, exp, modulus).unwrap(), naive);
        }

        #[test]
        fn divisors_divide(n in 1i128..100_000) {
            let ds = divisors(n).unwrap();
            prop_assert!(ds.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(ds.iter().all(|d| n % d == 0));
            let brute = (1..=n).filter(|d| n % d == 0).count();
            prop_assert_eq!(ds.len(), brute);
        }
    }
}
