//! The graded exterior-algebra substrate: canonical basis wedges of
//! `Λ^k M_n`, weights, sign normalization, sparse multivectors and the
//! degree functional.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

/// Grassmannian shape (k, n): k-dimensional subspaces of n-space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub k: u32,
    pub n: u32,
}

impl Shape {
    pub fn new(k: u32, n: u32) -> Shape {
        assert!(k >= 1 && k <= n, "shape requires 1 <= k <= n, got ({k},{n})");
        Shape { k, n }
    }

    /// k(n-k), the top weight (dimension of G(k,n)).
    pub fn top_weight(&self) -> u32 {
        self.k * (self.n - self.k)
    }
}

/// A canonical basis label: strictly increasing entries in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTuple {
    entries: Vec<u32>,
}

impl IndexTuple {
    /// Builds a canonical tuple, checking the invariants against `shape`.
    pub fn new(entries: Vec<u32>, shape: Shape) -> IndexTuple {
        assert_eq!(entries.len(), shape.k as usize, "wrong tuple length");
        assert!(
            entries.windows(2).all(|w| w[0] < w[1]),
            "entries must be strictly increasing: {entries:?}"
        );
        assert!(
            entries.iter().all(|&i| i >= 1 && i <= shape.n),
            "entries out of range 1..={}: {entries:?}",
            shape.n
        );
        IndexTuple { entries }
    }

    /// Canonical tuple from already-validated entries (internal fast path).
    pub(crate) fn from_canonical(entries: Vec<u32>) -> IndexTuple {
        debug_assert!(entries.windows(2).all(|w| w[0] < w[1]));
        IndexTuple { entries }
    }

    /// The fundamental element g_{k,n} = (1, ..., k), weight 0.
    pub fn fundamental(shape: Shape) -> IndexTuple {
        IndexTuple {
            entries: (1..=shape.k).collect(),
        }
    }

    /// The point element pi_{k,n} = (n-k+1, ..., n), weight k(n-k).
    pub fn point(shape: Shape) -> IndexTuple {
        IndexTuple {
            entries: (shape.n - shape.k + 1..=shape.n).collect(),
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// wt(I) = sum (i_j - j).
    pub fn weight(&self) -> u32 {
        self.entries
            .iter()
            .zip(1u32..)
            .map(|(&i, j)| i - j)
            .sum()
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[")?;
        for (pos, i) in self.entries.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// Sorts a raw wedge into canonical form. Returns `None` for the zero
/// wedge (repeated entry, or an entry exceeding n). The sign of the
/// sorting permutation comes back with the tuple.
pub fn normalize(raw: &[u32], shape: Shape) -> Option<(IndexTuple, i8)> {
    if raw.len() != shape.k as usize {
        return None;
    }
    let mut entries = raw.to_vec();
    // insertion sort, counting inversions; k is tiny in every workload
    let mut sign = 1i8;
    for i in 1..entries.len() {
        let mut j = i;
        while j > 0 && entries[j - 1] > entries[j] {
            entries.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in entries.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    if entries.iter().any(|&i| i < 1 || i > shape.n) {
        return None;
    }
    Some((IndexTuple { entries }, sign))
}

/// Sparse element of `Λ^k M_n`: canonical tuples to nonzero coefficients,
/// iterated in lexicographic order. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multivector {
    shape: Shape,
    terms: BTreeMap<IndexTuple, BigInt>,
}

impl Multivector {
    pub fn zero(shape: Shape) -> Multivector {
        Multivector {
            shape,
            terms: BTreeMap::new(),
        }
    }

    /// The basis wedge eps^I with coefficient 1.
    pub fn basis(tuple: IndexTuple, shape: Shape) -> Multivector {
        let mut mv = Multivector::zero(shape);
        mv.add_canonical(tuple, BigInt::from(1));
        mv
    }

    /// Wedge from raw (possibly unsorted, possibly zero) entries.
    pub fn wedge(raw: &[u32], shape: Shape) -> Multivector {
        let mut mv = Multivector::zero(shape);
        mv.add_raw(raw, BigInt::from(1));
        mv
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexTuple, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, tuple: &IndexTuple) -> BigInt {
        self.terms.get(tuple).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Adds `coeff * eps^tuple` for an already-canonical tuple.
    pub(crate) fn add_canonical(&mut self, tuple: IndexTuple, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(tuple);
        match entry {
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

    /// Adds `coeff` times a raw wedge, normalizing and truncating.
    pub fn add_raw(&mut self, raw: &[u32], coeff: BigInt) {
        if let Some((tuple, sign)) = normalize(raw, self.shape) {
            let c = if sign < 0 { -coeff } else { coeff };
            self.add_canonical(tuple, c);
        }
    }

    /// The coefficient of the point element pi_{k,n}; every other basis
    /// term lies in the kernel of the degree functional.
    pub fn degree_functional(&self) -> BigInt {
        self.coefficient(&IndexTuple::point(self.shape))
    }

    pub fn scaled(&self, c: &BigInt) -> Multivector {
        let mut out = Multivector::zero(self.shape);
        if c.is_zero() {
            return out;
        }
        for (t, a) in &self.terms {
            out.terms.insert(t.clone(), a * c);
        }
        out
    }
}

/// ca*a + cb*b in canonical sparse form.
pub fn combine(a: &Multivector, b: &Multivector, ca: &BigInt, cb: &BigInt) -> Multivector {
    assert_eq!(a.shape, b.shape, "combine: shape mismatch");
    let mut out = Multivector::zero(a.shape);
    for (t, c) in &a.terms {
        out.add_canonical(t.clone(), c * ca);
    }
    for (t, c) in &b.terms {
        out.add_canonical(t.clone(), c * cb);
    }
    out
}

impl fmt::Display for Multivector {
    /// Textual golden-file form: `+2 e[1,3] -1 e[2,4]`, terms in
    /// lexicographic order, exact decimal coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (t, c)) in self.terms.iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            if c.sign() == num_bigint::Sign::Minus {
                write!(f, "{c} {t}")?;
            } else {
                write!(f, "+{c} {t}")?;
            }
        }
        Ok(())
    }
}
