//! Exact number-theoretic helpers: factorials, binomials, Stirling numbers,
//! p-adic valuations and odd-part factorizations.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("valuation of zero is undefined")]
    ZeroInput,
    #[error("{0} is not a prime")]
    NotPrime(String),
}

/// `n!`
pub fn factorial<T: Scalar>(n: u32) -> T {
    (2..=u64::from(n)).fold(T::one(), |acc, i| acc * T::of(i))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial<T: Scalar>(n: u32, k: u32) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    // Each partial product is itself a binomial coefficient, so the division is exact.
    (0..u64::from(k)).fold(T::one(), |acc, i| {
        acc * T::of(u64::from(n) - i) / T::of(i + 1)
    })
}

/// Stirling number of the second kind `S(q, j)`: partitions of a `q`-set into
/// `j` non-empty blocks.
pub fn stirling2<T: Scalar>(q: u32, j: u32) -> T {
    if j > q {
        return T::zero();
    }
    let j = j as usize;
    // row[k] = S(n, k) for the current n.
    let mut row = vec![T::zero(); j + 1];
    row[0] = T::one();
    for n in 1..=q as usize {
        for k in (1..=j.min(n)).rev() {
            row[k] = T::of(k as u64) * row[k].clone() + row[k - 1].clone();
        }
        row[0] = T::zero();
    }
    row[j].clone()
}

/// Trial-division primality test. Values below 2 are not prime.
pub fn is_prime<T: Scalar>(p: &T) -> bool {
    let two = T::of(2);
    if *p < two {
        return false;
    }
    if p.is_even() {
        return *p == two;
    }
    let mut d = T::of(3);
    while d.clone() * d.clone() <= *p {
        if p.is_multiple_of(&d) {
            return false;
        }
        d = d + two.clone();
    }
    true
}

/// Largest `r` with `p^r | x`.
pub fn p_valuation<T: Scalar>(p: &T, x: &T) -> Result<u32, NumericError> {
    if !is_prime(p) {
        return Err(NumericError::NotPrime(p.to_string()));
    }
    if x.is_zero() {
        return Err(NumericError::ZeroInput);
    }
    let mut x = x.abs();
    let mut r = 0;
    loop {
        let (quot, rem) = x.div_rem(p);
        if !rem.is_zero() {
            return Ok(r);
        }
        x = quot;
        r += 1;
    }
}

/// `x / 2^ν₂(x)`. Zero maps to zero.
pub fn odd_part<T: Scalar>(x: &T) -> T {
    let mut x = x.clone();
    if x.is_zero() {
        return x;
    }
    let two = T::of(2);
    while x.is_even() {
        x = x / two.clone();
    }
    x
}

/// Prime factorization; exponents are always at least one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization<T: Scalar> {
    primes: BTreeMap<T, u32>,
}

impl<T: Scalar> Default for Factorization<T> {
    fn default() -> Self {
        Self {
            primes: BTreeMap::new(),
        }
    }
}

impl<T: Scalar> Factorization<T> {
    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    /// Exponent of `p`, zero if absent.
    pub fn exponent(&self, p: &T) -> u32 {
        self.primes.get(p).copied().unwrap_or(0)
    }

    /// Primes with exponents, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (&T, u32)> {
        self.primes.iter().map(|(p, e)| (p, *e))
    }

    pub fn primes(&self) -> impl Iterator<Item = &T> {
        self.primes.keys()
    }

    /// The product `Π p^e`.
    pub fn value(&self) -> T {
        self.primes.iter().fold(T::one(), |acc, (p, e)| {
            acc * num_traits::pow(p.clone(), *e as usize)
        })
    }

    fn bump(&mut self, p: T) {
        *self.primes.entry(p).or_insert(0) += 1;
    }
}

impl<T: Scalar> FromIterator<(T, u32)> for Factorization<T> {
    fn from_iter<I: IntoIterator<Item = (T, u32)>>(iter: I) -> Self {
        let mut f = Factorization::default();
        for (p, e) in iter {
            if e > 0 {
                *f.primes.entry(p).or_insert(0) += e;
            }
        }
        f
    }
}

/// Renders as `3^2·5·7`; the empty product renders as `1`.
impl<T: Scalar> fmt::Display for Factorization<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primes.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.primes.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factorization of `odd_part(x)` by trial division. `x` must be positive.
pub fn factor_odd<T: Scalar>(x: &T) -> Factorization<T> {
    assert!(
        x.is_positive(),
        "factor_odd expects a positive integer, got {x}"
    );
    let mut rest = odd_part(x);
    let mut out = Factorization::default();
    let two = T::of(2);
    let mut d = T::of(3);
    while d.clone() * d.clone() <= rest {
        loop {
            let (quot, rem) = rest.div_rem(&d);
            if !rem.is_zero() {
                break;
            }
            out.bump(d.clone());
            rest = quot;
        }
        d = d + two.clone();
    }
    if !rest.is_one() {
        out.bump(rest);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Integer;
    use num_traits::{One, Signed};
    use proptest::prelude::*;

    fn big(x: i64) -> Integer {
        Integer::from(x)
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial::<i64>(0), 1);
        assert_eq!(factorial::<i64>(5), 120);
        assert_eq!(factorial::<i64>(9), 362_880);
        assert_eq!(
            factorial::<Integer>(25).to_string(),
            "15511210043330985984000000"
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial::<i64>(4, 2), 6);
        assert_eq!(binomial::<i64>(5, 0), 1);
        assert_eq!(binomial::<i64>(3, 5), 0);
        assert_eq!(binomial::<i64>(0, 0), 1);
        for n in 0..20u32 {
            for k in 0..=n {
                let expected =
                    factorial::<i128>(n) / (factorial::<i128>(k) * factorial::<i128>(n - k));
                assert_eq!(binomial::<i128>(n, k), expected);
            }
        }
    }

    /// Counts set partitions of `{0..q}` into exactly `j` blocks by assigning
    /// each element a block label in restricted-growth form.
    fn count_partitions(q: usize, j: usize) -> u64 {
        fn go(i: usize, q: usize, used: usize, j: usize) -> u64 {
            if i == q {
                return u64::from(used == j);
            }
            let mut total = 0;
            for label in 0..=used.min(j.saturating_sub(1)) {
                let next = if label == used { used + 1 } else { used };
                if next <= j {
                    total += go(i + 1, q, next, j);
                }
            }
            total
        }
        go(0, q, 0, j)
    }

    #[test]
    fn stirling_examples_match_enumeration() {
        assert_eq!(count_partitions(3, 2), 3);
        assert_eq!(count_partitions(4, 2), 7);
        assert_eq!(stirling2::<i64>(3, 2), 3);
        assert_eq!(stirling2::<i64>(4, 2), 7);
        assert_eq!(stirling2::<i64>(2, 3), 0);
        for q in 0..=8 {
            for j in 0..=8 {
                assert_eq!(
                    stirling2::<i64>(q, j) as u64,
                    count_partitions(q as usize, j as usize),
                    "S({q},{j})"
                );
            }
        }
    }

    #[test]
    fn stirling_recurrence_exhaustive() {
        assert_eq!(stirling2::<Integer>(0, 0), big(1));
        for q in 1..=30u32 {
            assert_eq!(stirling2::<Integer>(q, 0), big(0));
            for j in 1..=30u32 {
                let lhs = stirling2::<Integer>(q, j);
                let rhs = big(i64::from(j)) * stirling2::<Integer>(q - 1, j)
                    + stirling2::<Integer>(q - 1, j - 1);
                assert_eq!(lhs, rhs, "S({q},{j})");
                if j > q {
                    assert_eq!(lhs, big(0));
                }
            }
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(p_valuation(&3i64, &45), Ok(2));
        assert_eq!(p_valuation(&2i64, &120), Ok(3));
        assert_eq!(p_valuation(&7i64, &15), Ok(0));
        assert_eq!(p_valuation(&3i64, &-27), Ok(3));
        assert_eq!(p_valuation(&3i64, &0), Err(NumericError::ZeroInput));
        assert_eq!(
            p_valuation(&9i64, &81),
            Err(NumericError::NotPrime("9".into()))
        );
        assert!(p_valuation(&1i64, &5).is_err());
    }

    #[test]
    fn odd_parts() {
        assert_eq!(odd_part(&120i64), 15);
        assert_eq!(odd_part(&1i64), 1);
        assert_eq!(odd_part(&70875i64), 70875);
    }

    #[test]
    fn factorizations() {
        let f = factor_odd(&big(315));
        assert_eq!(
            f.iter().map(|(p, e)| (p.clone(), e)).collect::<Vec<_>>(),
            vec![(big(3), 2), (big(5), 1), (big(7), 1)]
        );
        assert_eq!(f.to_string(), "3^2·5·7");
        assert!(factor_odd(&big(1)).is_empty());
        assert_eq!(factor_odd(&big(1)).to_string(), "1");
        let f = factor_odd(&big(70875));
        assert_eq!(f.exponent(&big(3)), 4);
        assert_eq!(f.exponent(&big(5)), 3);
        assert_eq!(f.exponent(&big(7)), 1);
        assert_eq!(f.len(), 3);
        // large prime cofactor
        assert_eq!(factor_odd(&big(2 * 1_000_003)).to_string(), "1000003");
    }

    #[test]
    fn primality() {
        let primes: Vec<i64> = (0..50).filter(is_prime).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
        );
        assert!(!is_prime(&-7i64));
    }

    #[test]
    fn factor_odd_multiplies_back() {
        for x in 1..=100_000i64 {
            let f = factor_odd(&x);
            assert_eq!(f.value(), odd_part(&x), "x = {x}");
            assert!(f.primes().all(|p| is_prime(p) && *p != 2));
        }
    }

    proptest! {
        #[test]
        fn odd_part_times_power_of_two(x in 1i64..1_000_000_000) {
            let v = p_valuation(&2i64, &x).unwrap();
            prop_assert_eq!(odd_part(&x) * (1i64 << v), x);
        }

        #[test]
        fn rationals_stay_reduced(
            a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000,
        ) {
            let x = crate::Rational::new(big(a), big(b));
            let y = crate::Rational::new(big(c), big(d));
            let mut results = vec![&x + &y, &x - &y, &x * &y];
            if !c.eq(&0) {
                results.push(&x / &y);
            }
            for r in results {
                prop_assert!(r.denom().is_positive());
                prop_assert!(num_integer::Integer::gcd(r.numer(), r.denom()).is_one());
            }
        }
    }
}
