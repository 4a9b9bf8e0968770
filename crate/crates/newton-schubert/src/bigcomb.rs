//! Exact integer combinatorics: factorials, binomials, multinomials and
//! lexicographic enumeration of weak compositions.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// n! with a growable, concurrently readable memo table.
pub fn factorial(n: u64) -> BigInt {
    let n = n as usize;
    {
        let table = FACTORIALS.read().unwrap();
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let next = table.last().unwrap() * BigInt::from(table.len() as u64);
        table.push(next);
    }
    table[n].clone()
}

/// Binomial coefficient with the generating-function convention:
/// zero whenever `j < 0`, `n < 0` or `j > n`.
pub fn binomial(n: i64, j: i64) -> BigInt {
    if j < 0 || n < 0 || j > n {
        return BigInt::zero();
    }
    let (n, j) = (n as u64, j as u64);
    let j = j.min(n - j);
    // small j: falling-factorial product avoids touching the memo table
    if j <= 8 {
        let mut num = BigInt::one();
        for t in 0..j {
            num *= BigInt::from(n - t);
        }
        for t in 1..=j {
            num /= BigInt::from(t);
        }
        return num;
    }
    factorial(n) / (factorial(j) * factorial(n - j))
}

/// m!/(mu_1! ... mu_h!) when the parts sum to m, zero otherwise.
pub fn multinomial(m: u64, mu: &[u64]) -> BigInt {
    if mu.iter().sum::<u64>() != m {
        return BigInt::zero();
    }
    let mut v = factorial(m);
    for &p in mu {
        if p > 1 {
            v /= factorial(p);
        }
    }
    v
}

/// A weak composition of `m` into `h` non-negative parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub parts: Vec<u32>,
}

impl Composition {
    pub fn h(&self) -> usize {
        self.parts.len()
    }

    pub fn m(&self) -> u32 {
        self.parts.iter().sum()
    }
}

/// Streams every weak composition of `m` into `h` parts exactly once,
/// in lexicographic order on the parts. `p_5(84)` has ~2.3M elements,
/// so nothing is materialized.
pub fn compositions(h: u32, m: u32) -> CompositionIter {
    assert!(h >= 1, "compositions: h must be positive");
    CompositionIter {
        current: None,
        h,
        m,
        done: false,
    }
}

pub struct CompositionIter {
    current: Option<Vec<u32>>,
    h: u32,
    m: u32,
    done: bool,
}

impl Iterator for CompositionIter {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.done {
            return None;
        }
        match &mut self.current {
            None => {
                // lexicographically least: all mass in the last part
                let mut first = vec![0u32; self.h as usize];
                *first.last_mut().unwrap() = self.m;
                self.current = Some(first.clone());
                Some(Composition { parts: first })
            }
            Some(c) => {
                // rightmost positive part p: move one unit onto p-1 and
                // flush the remainder of p to the end
                let h = c.len();
                let p = match (0..h).rev().find(|&i| c[i] > 0) {
                    Some(p) if p > 0 => p,
                    _ => {
                        self.done = true;
                        return None;
                    }
                };
                let rest = c[p] - 1;
                c[p - 1] += 1;
                for part in c[p..].iter_mut() {
                    *part = 0;
                }
                c[h - 1] = rest;
                Some(Composition { parts: c.clone() })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(-2, 0), BigInt::zero());
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn binomial_pascal() {
        // n >= 1: the zero convention for negative n breaks the identity at n = 0
        for n in 1..=30i64 {
            for j in 0..=n {
                assert_eq!(binomial(n, j), binomial(n - 1, j) + binomial(n - 1, j - 1));
            }
        }
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(3, &[1, 1, 1]), BigInt::from(6));
        assert_eq!(multinomial(4, &[4, 0, 0]), BigInt::one());
        assert_eq!(multinomial(5, &[1, 1, 1]), BigInt::zero());
    }

    #[test]
    fn multinomial_theorem() {
        // sum over p_h(m) of multinomial(m, mu) = h^m
        for h in 1..=4u32 {
            for m in 0..=6u32 {
                let total: BigInt = compositions(h, m)
                    .map(|c| {
                        let mu: Vec<u64> = c.parts.iter().map(|&p| p as u64).collect();
                        multinomial(m as u64, &mu)
                    })
                    .sum();
                assert_eq!(total, BigInt::from(h as u64).pow(m));
            }
        }
    }

    #[test]
    fn compositions_small() {
        let got: Vec<Vec<u32>> = compositions(2, 2).map(|c| c.parts).collect();
        assert_eq!(got, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        let single: Vec<Vec<u32>> = compositions(1, 7).map(|c| c.parts).collect();
        assert_eq!(single, vec![vec![7]]);
        assert_eq!(compositions(5, 4).count(), 70);
    }

    #[test]
    fn compositions_count_and_order() {
        for h in 1..=6u32 {
            for m in 0..=30u32 {
                let mut count = 0u64;
                let mut prev: Option<Vec<u32>> = None;
                for c in compositions(h, m) {
                    assert_eq!(c.parts.len(), h as usize);
                    assert_eq!(c.m(), m);
                    if let Some(p) = &prev {
                        assert!(p < &c.parts, "not lexicographically increasing");
                    }
                    prev = Some(c.parts);
                    count += 1;
                }
                let expected = binomial((m + h - 1) as i64, (h - 1) as i64);
                assert_eq!(BigInt::from(count), expected, "h={h} m={m}");
            }
        }
    }
}
