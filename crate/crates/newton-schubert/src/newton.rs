//! The reduction engine: Newton binomial rewriting of D_h^m and Dbar_h^m
//! powers, reduction of arbitrary operator words to the D_1-normal form
//! `sum a_{j,J} D_1^j eps^J`, and integration of that form against
//! Schubert-variety degrees.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bigcomb::{binomial, compositions, multinomial};
use crate::derivations::{apply_d, apply_dbar, OperatorWord};
use crate::enumerate::schubert_degree;
use crate::exterior::{normalize, IndexTuple, Multivector, Shape};

/// D_1-normal form: sparse association (j, J) -> coefficient standing for
/// `sum a_{j,J} D_1^j eps^J`. All stored terms share j + wt(J).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedForm {
    shape: Shape,
    terms: BTreeMap<(u32, IndexTuple), BigInt>,
}

impl ReducedForm {
    pub fn zero(shape: Shape) -> ReducedForm {
        ReducedForm {
            shape,
            terms: BTreeMap::new(),
        }
    }

    /// The form {(0, I): 1}, i.e. the untouched wedge.
    pub fn unit(tuple: IndexTuple, shape: Shape) -> ReducedForm {
        let mut r = ReducedForm::zero(shape);
        r.add(0, tuple, BigInt::one());
        r
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, IndexTuple), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&mut self, j: u32, tuple: IndexTuple, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((j, tuple)) {
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

    pub fn scaled_accumulate(&mut self, other: &ReducedForm, c: &BigInt) {
        for ((j, tuple), a) in &other.terms {
            self.add(*j, tuple.clone(), a * c);
        }
    }
}

impl fmt::Display for ReducedForm {
    /// Debug dump: one line `a * D1^j e[J]` per term, sorted by (j, J).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((j, tuple), a) in &self.terms {
            writeln!(f, "{a} * D1^{j} {tuple}")?;
        }
        Ok(())
    }
}

/// Prepends eps^i to every term of a (k-1)-multivector, producing a
/// k-multivector in the same ambient M_n.
fn wedge_front(i: u32, p: &Multivector) -> Multivector {
    let inner = p.shape();
    let shape = Shape::new(inner.k + 1, inner.n);
    let mut out = Multivector::zero(shape);
    let mut raw = Vec::with_capacity(shape.k as usize);
    for (tuple, coeff) in p.terms() {
        raw.clear();
        raw.push(i);
        raw.extend_from_slice(tuple.entries());
        out.add_raw(&raw, coeff.clone());
    }
    out
}

/// D_h^m(eps^i ∧ p) by the Newton binomial recursion
/// `sum_j C(m,j) D_{h-1}^j(eps^{i+j} ∧ D_h^{m-j} p)`.
pub fn newton_d(h: u32, m: u32, i: u32, p: &Multivector) -> Multivector {
    assert!(h >= 1);
    let shape = Shape::new(p.shape().k + 1, p.shape().n);
    let mut out = Multivector::zero(shape);
    // precompute D_h^t p for t = 0..=m
    let mut powers = Vec::with_capacity(m as usize + 1);
    powers.push(p.clone());
    for _ in 0..m {
        let next = apply_d(h, powers.last().unwrap());
        powers.push(next);
    }
    for j in 0..=m {
        if i + j > shape.n {
            continue;
        }
        let mut term = wedge_front(i + j, &powers[(m - j) as usize]);
        for _ in 0..j {
            term = apply_d(h - 1, &term);
        }
        out = crate::exterior::combine(&out, &term, &BigInt::one(), &binomial(m as i64, j as i64));
    }
    out
}

/// Dbar_h^m(eps^i ∧ p) = sum_j C(m,j) eps^{i+j} ∧ Dbar_{h-1}^j Dbar_h^{m-j} p.
pub fn newton_dbar(h: u32, m: u32, i: u32, p: &Multivector) -> Multivector {
    assert!(h >= 1);
    let shape = Shape::new(p.shape().k + 1, p.shape().n);
    let mut out = Multivector::zero(shape);
    let mut powers = Vec::with_capacity(m as usize + 1);
    powers.push(p.clone());
    for _ in 0..m {
        let next = apply_dbar(h, &powers[powers.len() - 1]);
        powers.push(next);
    }
    for j in 0..=m {
        if i + j > shape.n {
            continue;
        }
        let mut inner = powers[(m - j) as usize].clone();
        for _ in 0..j {
            inner = apply_dbar(h - 1, &inner);
        }
        let term = wedge_front(i + j, &inner);
        out = crate::exterior::combine(&out, &term, &BigInt::one(), &binomial(m as i64, j as i64));
    }
    out
}

type MemoKey = (u32, u32, u32, Vec<u32>); // (n, h, m, canonical entries)
type TermVec = Vec<((u32, Vec<u32>), BigInt)>;

fn memo() -> &'static RwLock<HashMap<MemoKey, Arc<TermVec>>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, Arc<TermVec>>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Core recursion behind `reduce_power`, memoized on (n, h, m, I).
/// Entries of `I` are canonical and within `1..=n`.
fn reduce_power_terms(n: u32, h: u32, m: u32, entries: &[u32]) -> Arc<TermVec> {
    let k = entries.len() as u32;
    // bases: empty power, identity operator, plain D_1 power, single factor
    if m == 0 || h == 0 {
        return Arc::new(vec![((0, entries.to_vec()), BigInt::one())]);
    }
    if h == 1 {
        return Arc::new(vec![((m, entries.to_vec()), BigInt::one())]);
    }
    if k == 1 {
        let target = entries[0] + h * m;
        if target <= n {
            return Arc::new(vec![((0, vec![target]), BigInt::one())]);
        }
        return Arc::new(Vec::new());
    }
    let key: MemoKey = (n, h, m, entries.to_vec());
    if let Some(hit) = memo().read().unwrap().get(&key) {
        return hit.clone();
    }

    let shape = Shape::new(k, n);
    let i1 = entries[0];
    let tail = &entries[1..];
    let mut acc: BTreeMap<(u32, Vec<u32>), BigInt> = BTreeMap::new();
    for j in 0..=m {
        if i1 + j > n {
            break;
        }
        let c1 = binomial(m as i64, j as i64);
        // D_h^{m-j} on the tail, already in D_1-normal form
        let inner = reduce_power_terms(n, h, m - j, tail);
        for ((jp, jp_tuple), a) in inner.iter() {
            let ca = &c1 * a;
            // expand D_1^{jp} eps^{J'} into plain wedges (multinomial formula)
            for mu in compositions(k - 1, *jp) {
                let c2 = {
                    let parts: Vec<u64> = mu.parts.iter().map(|&p| p as u64).collect();
                    multinomial(*jp as u64, &parts)
                };
                let mut raw = Vec::with_capacity(k as usize);
                raw.push(i1 + j);
                for (&e, &s) in jp_tuple.iter().zip(mu.parts.iter()) {
                    raw.push(e + s);
                }
                let Some((wedge, sign)) = normalize(&raw, shape) else {
                    continue;
                };
                let mut c3 = &ca * &c2;
                if sign < 0 {
                    c3 = -c3;
                }
                // leftover D_{h-1}^j on the reassembled wedge
                let outer = reduce_power_terms(n, h - 1, j, wedge.entries());
                for ((j2, j2_tuple), b) in outer.iter() {
                    let slot = acc
                        .entry((*j2, j2_tuple.clone()))
                        .or_insert_with(BigInt::zero);
                    *slot += &c3 * b;
                }
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    let result = Arc::new(acc.into_iter().collect::<TermVec>());
    memo()
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| result.clone());
    result
}

/// D_h^m(eps^I) as a D_1-normal form whose expansion reproduces the
/// iterated Leibniz computation exactly.
pub fn reduce_power(shape: Shape, h: u32, m: u32, tuple: &IndexTuple) -> ReducedForm {
    let mut out = ReducedForm::zero(shape);
    for ((j, entries), a) in reduce_power_terms(shape.n, h, m, tuple.entries()).iter() {
        out.add(*j, IndexTuple::from_canonical(entries.clone()), a.clone());
    }
    out
}

/// Reduces an arbitrary operator word applied to eps^I. Dbar and Schur
/// factors are rewritten into D-polynomials first, then each D_h power
/// is folded through the accumulated form factor by factor.
pub fn reduce_word(w: &OperatorWord, tuple: &IndexTuple, shape: Shape) -> ReducedForm {
    let poly = w.to_d_polynomial();
    let mut out = ReducedForm::zero(shape);
    for (mono, coeff) in &poly.terms {
        let mut form = ReducedForm::unit(tuple.clone(), shape);
        // commuting factors: process higher subscripts first, D_1 last
        for (&h, &e) in mono.iter().rev() {
            let mut next = ReducedForm::zero(shape);
            for ((j, j_tuple), a) in &form.terms {
                for ((j2, entries), b) in reduce_power_terms(shape.n, h, e, j_tuple.entries()).iter()
                {
                    next.add(j + j2, IndexTuple::from_canonical(entries.clone()), a * b);
                }
            }
            form = next;
        }
        out.scaled_accumulate(&form, coeff);
    }
    out
}

/// Expands `sum a_{j,J} D_1^j eps^J` back into a multivector, with each
/// D_1^j applied in one shot by the multinomial formula.
pub fn expand_reduced(r: &ReducedForm) -> Multivector {
    let shape = r.shape;
    let mut out = Multivector::zero(shape);
    for ((j, tuple), a) in &r.terms {
        for mu in compositions(shape.k, *j) {
            let parts: Vec<u64> = mu.parts.iter().map(|&p| p as u64).collect();
            let c = multinomial(*j as u64, &parts) * a;
            let raw: Vec<u32> = tuple
                .entries()
                .iter()
                .zip(mu.parts.iter())
                .map(|(&e, &s)| e + s)
                .collect();
            out.add_raw(&raw, c);
        }
    }
    out
}

/// Integrates a reduced form: terms with j + wt(J) = k(n-k) contribute
/// a_{j,J} * omega_J, everything else dies under the degree functional.
pub fn integrate_reduced(r: &ReducedForm) -> BigInt {
    let top = r.shape.top_weight();
    let mut total = BigInt::zero();
    for ((j, tuple), a) in &r.terms {
        if j + tuple.weight() == top {
            total += a * schubert_degree(tuple.entries(), r.shape);
        }
    }
    total
}
