//! The operator layer: Hasse-Schmidt derivations D_h via Leibniz's rule,
//! the inverse-series operators Dbar_h, Schur-determinant operators, and
//! the direct integral evaluator used as the brute-force oracle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bigcomb::compositions;
use crate::exterior::{IndexTuple, Multivector, Shape};

/// D_h: on a k-wedge, the closed Leibniz expansion sums over weak
/// compositions (h_1,...,h_k) of h, shifting entry j by h_j. Extended
/// linearly; D_0 is the identity.
pub fn apply_d(h: u32, v: &Multivector) -> Multivector {
    if h == 0 {
        return v.clone();
    }
    let shape = v.shape();
    let k = shape.k;
    let mut out = Multivector::zero(shape);
    let mut raw = vec![0u32; k as usize];
    for (tuple, coeff) in v.terms() {
        for mu in compositions(k, h) {
            for (slot, (&i, &shift)) in raw
                .iter_mut()
                .zip(tuple.entries().iter().zip(mu.parts.iter()))
            {
                *slot = i + shift;
            }
            out.add_raw(&raw, coeff.clone());
        }
    }
    out
}

/// Dbar_h: on generators Dbar_0 = id, Dbar_1 shifts by one, Dbar_j = 0
/// for j >= 2, so on a k-wedge only 0/1 part patterns survive: the sum
/// over size-h subsets of positions, each shifted by one.
pub fn apply_dbar(h: u32, v: &Multivector) -> Multivector {
    if h == 0 {
        return v.clone();
    }
    let shape = v.shape();
    let k = shape.k;
    let mut out = Multivector::zero(shape);
    if h > k {
        return out; // Λ^k M lies in the kernel of Dbar_h
    }
    let k = k as usize;
    let h = h as usize;
    let mut raw = vec![0u32; k];
    for (tuple, coeff) in v.terms() {
        // iterate size-h subsets of positions 0..k
        let mut pos: Vec<usize> = (0..h).collect();
        loop {
            raw.copy_from_slice(tuple.entries());
            for &p in &pos {
                raw[p] += 1;
            }
            out.add_raw(&raw, coeff.clone());
            // advance to the next combination
            let mut i = h as isize - 1;
            while i >= 0 && pos[i as usize] == k - h + i as usize {
                i -= 1;
            }
            if i < 0 {
                break;
            }
            let i = i as usize;
            pos[i] += 1;
            for j in i + 1..h {
                pos[j] = pos[j - 1] + 1;
            }
        }
    }
    out
}

/// A monomial in the commuting operators D: exponent by subscript,
/// e.g. {1: 2, 3: 1} is D_1^2 D_3. Subscripts are >= 1.
pub type DMonomial = BTreeMap<u32, u32>;

/// An integer polynomial in the D operators, as monomial -> coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPolynomial {
    pub terms: BTreeMap<DMonomial, BigInt>,
}

impl DPolynomial {
    pub fn zero() -> DPolynomial {
        DPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> DPolynomial {
        let mut terms = BTreeMap::new();
        terms.insert(DMonomial::new(), BigInt::one());
        DPolynomial { terms }
    }

    /// The single operator D_h (h = 0 gives the identity).
    pub fn d(h: u32) -> DPolynomial {
        if h == 0 {
            return DPolynomial::one();
        }
        let mut mono = DMonomial::new();
        mono.insert(h, 1);
        let mut terms = BTreeMap::new();
        terms.insert(mono, BigInt::one());
        DPolynomial { terms }
    }

    pub fn add_term(&mut self, mono: DMonomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn mul(&self, other: &DPolynomial) -> DPolynomial {
        let mut out = DPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = ma.clone();
                for (&h, &e) in mb {
                    *m.entry(h).or_insert(0) += e;
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> DPolynomial {
        let mut out = DPolynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Total degree sum h*e of any monomial; polynomials built here are
    /// homogeneous, so the first term suffices.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .next()
            .map(|m| m.iter().map(|(&h, &e)| h * e).sum())
            .unwrap_or(0)
    }

    /// Applies the polynomial to a multivector via iterated apply_d.
    pub fn apply(&self, v: &Multivector) -> Multivector {
        let mut out = Multivector::zero(v.shape());
        for (mono, coeff) in &self.terms {
            let mut cur = v.clone();
            for (&h, &e) in mono {
                for _ in 0..e {
                    cur = apply_d(h, &cur);
                }
            }
            out = crate::exterior::combine(&out, &cur, &BigInt::one(), coeff);
        }
        out
    }
}

/// The Schur determinant Delta_I(D): the k x k determinant with entry
/// D_{i_c - r} at row r, column c (D_0 = identity, negative subscripts
/// vanish), expanded as a signed permutation sum. Homogeneous of degree
/// wt(I); validated by the Giambelli identity.
pub fn schur_operator(tuple: &IndexTuple) -> DPolynomial {
    let k = tuple.len();
    let entries = tuple.entries();
    let mut out = DPolynomial::zero();
    // permutation sum over column choices per row
    let mut perm: Vec<usize> = (0..k).collect();
    permute(&mut perm, 0, &mut |perm, sign| {
        let mut mono = DMonomial::new();
        for (r, &c) in perm.iter().enumerate() {
            let sub = entries[c] as i64 - (r as i64 + 1);
            if sub < 0 {
                return; // zero entry kills the permutation term
            }
            if sub > 0 {
                *mono.entry(sub as u32).or_insert(0) += 1;
            }
        }
        out.add_term(mono, BigInt::from(sign as i64));
    });
    out
}

fn permute(perm: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize], i8)) {
    // simple recursive generation tracking parity of swaps
    fn go(perm: &mut Vec<usize>, start: usize, sign: i8, visit: &mut impl FnMut(&[usize], i8)) {
        if start + 1 >= perm.len() {
            visit(perm, sign);
            return;
        }
        go(perm, start + 1, sign, visit);
        for i in start + 1..perm.len() {
            perm.swap(start, i);
            go(perm, start + 1, -sign, visit);
            perm.swap(start, i);
        }
    }
    go(perm, start, 1, visit);
}

/// One factor of an operator word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// D_h^exp
    D { h: u32, exp: u32 },
    /// Dbar_h^exp
    Dbar { h: u32, exp: u32 },
    /// (Delta_I(D))^exp
    Schur { tuple: IndexTuple, exp: u32 },
}

impl Factor {
    fn degree(&self) -> u32 {
        match self {
            Factor::D { h, exp } => h * exp,
            Factor::Dbar { h, exp } => h * exp,
            Factor::Schur { tuple, exp } => tuple.weight() * exp,
        }
    }
}

/// A finite product of D, Dbar and Schur factors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperatorWord {
    pub factors: Vec<Factor>,
}

impl OperatorWord {
    pub fn new(factors: Vec<Factor>) -> OperatorWord {
        OperatorWord { factors }
    }

    pub fn identity() -> OperatorWord {
        OperatorWord { factors: Vec::new() }
    }

    pub fn d_power(h: u32, exp: u32) -> OperatorWord {
        OperatorWord {
            factors: vec![Factor::D { h, exp }],
        }
    }

    /// Total (co)homological degree of the word.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|f| f.degree()).sum()
    }

    /// Expands every factor into a polynomial in the D operators; Dbar_h
    /// rewrites as Delta_{(2,...,h+1)}(D).
    pub fn to_d_polynomial(&self) -> DPolynomial {
        let mut poly = DPolynomial::one();
        for f in &self.factors {
            let base = match f {
                Factor::D { h, .. } => DPolynomial::d(*h),
                Factor::Dbar { h, .. } => {
                    if *h == 0 {
                        DPolynomial::one()
                    } else {
                        let tuple =
                            IndexTuple::from_canonical((2..=h + 1).collect::<Vec<u32>>());
                        schur_operator(&tuple)
                    }
                }
                Factor::Schur { tuple, .. } => schur_operator(tuple),
            };
            let exp = match f {
                Factor::D { exp, .. } | Factor::Dbar { exp, .. } | Factor::Schur { exp, .. } => {
                    *exp
                }
            };
            poly = poly.mul(&base.pow(exp));
        }
        poly
    }

    /// Applies the word right-to-left; Dbar factors go through the native
    /// subset rule, Schur factors expand into D-polynomials first.
    pub fn apply(&self, v: &Multivector) -> Multivector {
        let mut cur = v.clone();
        for f in self.factors.iter().rev() {
            match f {
                Factor::D { h, exp } => {
                    for _ in 0..*exp {
                        cur = apply_d(*h, &cur);
                    }
                }
                Factor::Dbar { h, exp } => {
                    for _ in 0..*exp {
                        cur = apply_dbar(*h, &cur);
                    }
                }
                Factor::Schur { tuple, exp } => {
                    let poly = schur_operator(tuple);
                    for _ in 0..*exp {
                        cur = poly.apply(&cur);
                    }
                }
            }
        }
        cur
    }
}

/// Brute-force oracle: the degree of `w` applied to the fundamental
/// element of Λ^k M_n.
pub fn integral_of_word(shape: Shape, w: &OperatorWord) -> BigInt {
    let g = Multivector::basis(IndexTuple::fundamental(shape), shape);
    w.apply(&g).degree_functional()
}
