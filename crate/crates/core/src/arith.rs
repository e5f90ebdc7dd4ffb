//! Integer arithmetic on 64-bit moduli: trial-division factorization,
//! divisor enumeration and Euler's totient.
//!
//! Trial division runs up to `sqrt(n)`, which is comfortable for
//! `n <= 10^12` and still correct (just slow) up to `2^63 - 1`.

use std::fmt;

use crate::error::{Result, ZdgError};

/// Largest accepted modulus.
pub const MAX_MODULUS: u64 = i64::MAX as u64;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// `(a * b) mod m` without overflow.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime-power decomposition of `n`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from explicit `(prime, exponent)` pairs.
    ///
    /// Pairs may come in any order; they are sorted by prime. Every prime is
    /// checked for primality and the product must fit in [`MAX_MODULUS`].
    pub fn from_factors(mut factors: Vec<(u64, u32)>) -> Result<Self> {
        factors.sort_unstable();
        let mut n: u64 = 1;
        for (i, &(p, e)) in factors.iter().enumerate() {
            if e == 0 {
                return Err(ZdgError::Usage(format!("exponent of {p} must be >= 1")));
            }
            if !is_prime(p) {
                return Err(ZdgError::Usage(format!("{p} is not prime")));
            }
            if i > 0 && factors[i - 1].0 == p {
                return Err(ZdgError::Usage(format!("prime {p} listed twice")));
            }
            for _ in 0..e {
                n = n
                    .checked_mul(p)
                    .filter(|&v| v <= MAX_MODULUS)
                    .ok_or_else(|| ZdgError::Usage("product exceeds 2^63 - 1".into()))?;
            }
        }
        Ok(Self { n, factors })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn min_prime(&self) -> Option<u64> {
        self.factors.first().map(|&(p, _)| p)
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    /// True when `Z_n` has a nonzero zero divisor, i.e. `n` is composite.
    pub fn is_composite(&self) -> bool {
        self.n >= 4 && !self.is_prime()
    }

    /// `Some((p, k))` when `n = p^k`.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e - 1) * (p - 1))
            .product()
    }

    /// All divisors of `n`, ascending, including 1 and `n`.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.factors {
            let len = out.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    out.push(out[i] * pk);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Number of divisors, `prod (e_i + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64 + 1).product()
    }

    /// Factorization of `n / d` for a divisor `d` of `n`.
    pub fn quotient(&self, d: u64) -> Factorization {
        debug_assert!(d != 0 && self.n.is_multiple_of(d));
        let mut rest = d;
        let factors = self
            .factors
            .iter()
            .filter_map(|&(p, e)| {
                let mut e = e;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    e -= 1;
                }
                (e > 0).then_some((p, e))
            })
            .collect();
        Factorization {
            n: self.n / d,
            factors,
        }
    }
}

/// `2^2*3` style; `1` for the empty product.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
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

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 || n > MAX_MODULUS {
        return Err(ZdgError::Usage(format!("n = {n} outside [1, 2^63 - 1]")));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut push = |rest: &mut u64, p: u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(&mut rest, 2);
    let mut p = 3u64;
    while p <= rest / p {
        push(&mut rest, p);
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn totient(f: &Factorization) -> u64 {
    f.totient()
}

pub fn divisors(f: &Factorization) -> Vec<u64> {
    f.divisors()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(n: u64) -> Factorization {
        factorize(n).unwrap()
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(f(12).factors(), &[(2, 2), (3, 1)]);
        assert_eq!(f(25).factors(), &[(5, 2)]);
        assert!(f(1).factors().is_empty());
        assert_eq!(f(1_000_000).factors(), &[(2, 6), (5, 6)]);
        assert_eq!(f(1155).to_string(), "3*5*7*11");
        assert_eq!(f(12).to_string(), "2^2*3");
        assert_eq!(f(1).to_string(), "1");
    }

    #[test]
    fn factorize_range() {
        assert!(matches!(factorize(0), Err(ZdgError::Usage(_))));
        assert!(matches!(
            factorize(MAX_MODULUS + 1),
            Err(ZdgError::Usage(_))
        ));
        // 2^61 - 1 is a Mersenne prime
        assert!(f((1u64 << 61) - 1).is_prime());
        assert_eq!(
            f(999_983 * 999_979).factors(),
            &[(999_979, 1), (999_983, 1)]
        );
    }

    #[test]
    fn totient_examples() {
        assert_eq!(totient(&f(9)), 6);
        assert_eq!(totient(&f(12)), 4);
        assert_eq!(totient(&f(1)), 1);
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(&f(12)), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(&f(27)), vec![1, 3, 9, 27]);
        assert_eq!(divisors(&f(7)), vec![1, 7]);
        assert_eq!(divisors(&f(1)), vec![1]);
    }

    #[test]
    fn quotient_factorization() {
        let g = f(360);
        for d in g.divisors() {
            assert_eq!(g.quotient(d), f(360 / d));
        }
    }

    #[test]
    fn from_factors_rejects_bad_input() {
        assert!(Factorization::from_factors(vec![(4, 1)]).is_err());
        assert!(Factorization::from_factors(vec![(3, 0)]).is_err());
        assert!(Factorization::from_factors(vec![(3, 1), (3, 2)]).is_err());
        assert!(Factorization::from_factors(vec![(2, 63)]).is_err());
        assert_eq!(
            Factorization::from_factors(vec![(3, 1), (2, 2)]).unwrap(),
            f(12)
        );
    }

    #[test]
    fn gauss_identity_up_to_1e6() {
        // sum over d | n of phi(n/d) = n; brute-force totients by sieve
        const N: usize = 1_000_000;
        let mut phi: Vec<u64> = (0..=N as u64).collect();
        for i in 2..=N {
            if phi[i] == i as u64 {
                for j in (i..=N).step_by(i) {
                    phi[j] -= phi[j] / i as u64;
                }
            }
        }
        for n in 1..=N as u64 {
            let fac = f(n);
            assert_eq!(fac.totient(), phi[n as usize], "phi({n})");
            let sum: u64 = fac.divisors().iter().map(|d| phi[(n / d) as usize]).sum();
            assert_eq!(sum, n, "gauss identity at {n}");
        }
    }

    fn factor_list() -> impl Strategy<Value = Vec<(u64, u32)>> {
        let primes = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 1009, 65537];
        proptest::sample::subsequence(primes.to_vec(), 0..=5)
            .prop_flat_map(|ps| {
                let k = ps.len();
                (Just(ps), proptest::collection::vec(1u32..=3, k))
                    .prop_map(|(ps, es)| ps.into_iter().zip(es).collect::<Vec<_>>())
            })
            .prop_filter("product fits trial division range", |list| {
                list.iter()
                    .try_fold(1u64, |acc, &(p, e)| acc.checked_mul(p.checked_pow(e)?))
                    .is_some_and(|n| n <= 1_000_000_000_000)
            })
    }

    proptest! {
        #[test]
        fn factorize_inverts_product(list in factor_list()) {
            let fac = Factorization::from_factors(list.clone()).unwrap();
            let again = factorize(fac.n()).unwrap();
            prop_assert_eq!(again.factors(), list.as_slice());
            prop_assert_eq!(again.divisors().len() as u64, again.divisor_count());
        }

        #[test]
        fn divisors_divide_and_are_complete(n in 1u64..5000) {
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            prop_assert_eq!(f(n).divisors(), brute);
        }
    }
}
