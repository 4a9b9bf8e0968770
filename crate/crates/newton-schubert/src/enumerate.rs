//! Closed-form evaluators: Schubert-variety degrees, the power-expansion
//! kernels for D_2 and Dbar on small wedges, and the counting formulas
//! for pencils, nets and webs of linear series on the projective line.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bigcomb::{binomial, compositions, factorial, multinomial};
use crate::exterior::{normalize, IndexTuple, Multivector, Shape};
use crate::newton::ReducedForm;

/// omega_I for canonical I: (k(n-k) - w)! * prod_{j<l}(i_l - i_j)
/// divided by prod_j (n - i_j)!. The Vandermonde product is taken in the
/// order that is positive on sorted tuples.
fn omega_canonical(entries: &[u32], shape: Shape) -> BigInt {
    let w: u32 = entries.iter().zip(1u32..).map(|(&i, j)| i - j).sum();
    let top = shape.top_weight();
    let mut num = factorial((top - w) as u64);
    let mut vandermonde: i128 = 1;
    for l in 1..entries.len() {
        for j in 0..l {
            vandermonde *= (entries[l] - entries[j]) as i128;
        }
    }
    num *= BigInt::from(vandermonde);
    let mut den = BigInt::one();
    for &i in entries {
        let f = (shape.n - i) as u64;
        if f > 1 {
            den *= factorial(f);
        }
    }
    num / den
}

/// Degree of the Schubert variety Omega_J in the Pluecker embedding,
/// extended by the sign rule omega_{I^tau} = sgn(tau) * omega_I, and zero
/// on repeated or out-of-range indices.
pub fn schubert_degree(raw: &[u32], shape: Shape) -> BigInt {
    match normalize(raw, shape) {
        None => BigInt::zero(),
        Some((tuple, sign)) => {
            let v = omega_canonical(tuple.entries(), shape);
            if sign < 0 {
                -v
            } else {
                v
            }
        }
    }
}

/// Precomputed omega_I for every canonical I of a fixed shape; the hot
/// loops of the web formulas hit the same few hundred thousand degrees
/// tens of millions of times.
pub struct DegreeTable {
    shape: Shape,
    map: HashMap<Vec<u32>, BigInt>,
}

impl DegreeTable {
    pub fn new(shape: Shape) -> DegreeTable {
        let combos = all_index_tuples(shape);
        let map: HashMap<Vec<u32>, BigInt> = combos
            .into_par_iter()
            .map(|entries| {
                let v = omega_canonical(&entries, shape);
                (entries, v)
            })
            .collect();
        DegreeTable { shape, map }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// Signed lookup on raw (possibly unsorted) indices; zero on repeats
    /// or entries outside 1..=n.
    pub fn signed(&self, raw: &[u32]) -> BigInt {
        let mut sorted: Vec<u32> = raw.to_vec();
        let mut sign = 1i8;
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return BigInt::zero();
        }
        match self.map.get(&sorted[..]) {
            None => BigInt::zero(),
            Some(v) => {
                if sign < 0 {
                    -v.clone()
                } else {
                    v.clone()
                }
            }
        }
    }
}

/// Every canonical index tuple of the given shape, lexicographically.
pub fn all_index_tuples(shape: Shape) -> Vec<Vec<u32>> {
    let k = shape.k as usize;
    let n = shape.n;
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (1..=shape.k).collect();
    loop {
        out.push(cur.clone());
        // next combination of k from 1..=n
        let mut i = k as isize - 1;
        while i >= 0 && cur[i as usize] == n - (k as u32 - 1 - i as u32) {
            i -= 1;
        }
        if i < 0 {
            break;
        }
        let i = i as usize;
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// Dbar_{h-1}^m on an h-wedge via the multinomial kernel: each part
/// mu_j of a composition of m shifts every entry except the j-th.
pub fn dbar_power_kernel(m: u32, tuple: &IndexTuple, shape: Shape) -> Multivector {
    let h = shape.k;
    assert_eq!(tuple.len(), h as usize);
    let mut out = Multivector::zero(shape);
    let entries = tuple.entries();
    let mut raw = vec![0u32; h as usize];
    for mu in compositions(h, m) {
        let parts: Vec<u64> = mu.parts.iter().map(|&p| p as u64).collect();
        let c = multinomial(m as u64, &parts);
        for (slot, (&i, &p)) in raw.iter_mut().zip(entries.iter().zip(mu.parts.iter())) {
            *slot = i + (m - p); // sum of the other parts
        }
        out.add_raw(&raw, c);
    }
    out
}

/// Which closed-form power kernel to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelVariant {
    /// D_2^m on a 3-wedge, D_1-normal output
    D2OnThreeWedge,
    /// D_2^m on a 4-wedge, D_1-normal output
    D2OnFourWedge,
    /// Dbar_2^m on a 4-wedge, plain multivector output
    Dbar2OnFourWedge,
}

/// Output of `d2_power_kernel`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelOutput {
    Reduced(ReducedForm),
    Plain(Multivector),
}

/// Closed-form expansions of D_2^m and Dbar_2^m on 3- and 4-wedges.
pub fn d2_power_kernel(
    variant: KernelVariant,
    m: u32,
    tuple: &IndexTuple,
    shape: Shape,
) -> KernelOutput {
    let i = tuple.entries();
    match variant {
        KernelVariant::D2OnThreeWedge => {
            assert_eq!(tuple.len(), 3);
            let mut out = ReducedForm::zero(shape);
            for mu in compositions(4, m) {
                let p = &mu.parts;
                let parts: Vec<u64> = p.iter().map(|&x| x as u64).collect();
                let c = multinomial(m as u64, &parts);
                let raw = [i[0] + p[0], i[1] + p[1] + 2 * p[3], i[2] + 2 * p[2] + p[1]];
                if let Some((k, sign)) = normalize(&raw, shape) {
                    out.add(p[0], k, if sign < 0 { -c } else { c });
                }
            }
            KernelOutput::Reduced(out)
        }
        KernelVariant::D2OnFourWedge => {
            assert_eq!(tuple.len(), 4);
            let mut out = ReducedForm::zero(shape);
            for mu in compositions(5, m) {
                let p = &mu.parts;
                let parts: Vec<u64> = p.iter().map(|&x| x as u64).collect();
                let c = multinomial(m as u64, &parts);
                for l in 0..=p[1] + p[2] {
                    let cl = &c * binomial((p[1] + p[2]) as i64, l as i64);
                    let raw = [
                        i[0] + p[0],
                        i[1] + p[1] + 2 * p[4],
                        i[2] + p[2] + l,
                        i[3] + p[1] + 2 * p[3] + p[2] - l,
                    ];
                    if let Some((k, sign)) = normalize(&raw, shape) {
                        out.add(p[0], k, if sign < 0 { -cl } else { cl });
                    }
                }
            }
            KernelOutput::Reduced(out)
        }
        KernelVariant::Dbar2OnFourWedge => {
            assert_eq!(tuple.len(), 4);
            let mut out = Multivector::zero(shape);
            for mu in compositions(4, m) {
                let p = &mu.parts;
                let parts: Vec<u64> = p.iter().map(|&x| x as u64).collect();
                let c = multinomial(m as u64, &parts);
                for l in 0..=p[0] + p[1] {
                    let cl = &c * binomial((p[0] + p[1]) as i64, l as i64);
                    let raw = [
                        i[0] + p[0] + p[3],
                        i[1] + p[1] + p[3],
                        i[2] + p[2] + l,
                        i[3] + p[0] + p[1] + p[2] - l,
                    ];
                    out.add_raw(&raw, cl);
                }
            }
            KernelOutput::Plain(out)
        }
    }
}

/// `integral of D_1^a D_2^b (eps^{i1} ∧ eps^{i2})` on G(2, n+2):
/// `sum_beta C(b,beta) omega_{i1+beta, i2+2b-2beta}`. Zero unless the
/// total degree matches the dimension count a + 2b = 2n - (i1 + i2 - 3).
pub fn pencil_product(a: u32, b: u32, i1: u32, i2: u32, n: u32) -> BigInt {
    assert!(i1 >= 1 && i2 >= 1);
    let required = 2 * n as i64 - (i1 as i64 + i2 as i64 - 3);
    if (a + 2 * b) as i64 != required {
        return BigInt::zero();
    }
    let shape = Shape::new(2, n + 2);
    let mut total = BigInt::zero();
    for beta in 0..=b {
        let c = binomial(b as i64, beta as i64);
        total += c * schubert_degree(&[i1 + beta, i2 + 2 * b - 2 * beta], shape);
    }
    total
}

/// Scherbak's count of pencils with ramification weights q on G(2, n+2),
/// by inclusion-exclusion over subsets of the ramification points.
pub fn scherbak(q: &[u32], n: u32) -> BigInt {
    let h = q.len();
    if q.iter().map(|&x| x as u64).sum::<u64>() != 2 * n as u64 {
        return BigInt::zero();
    }
    assert!(h <= 63, "scherbak: too many ramification points");
    let mut total = BigInt::zero();
    for mask in 0u64..(1u64 << h) {
        let size = mask.count_ones() as i64;
        let s: i64 = (0..h)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| q[i] as i64)
            .sum();
        let term = binomial(s + size - n as i64 - 1, h as i64 - 2);
        if (h as i64 + 1 - size) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Number N_{a,b,c,d} of plane rational curves of degree n+2 with a
/// flexes, b hyperflexes, c cusps and d tacnodes; zero unless
/// a + 2b + 2c + 3d = 3n.
pub fn count_nets(a: u32, b: u32, c: u32, d: u32, n: u32) -> BigInt {
    if (a + 2 * b + 2 * c + 3 * d) as u64 != 3 * n as u64 {
        return BigInt::zero();
    }
    let shape = Shape::new(3, n + 3);
    let mut total = BigInt::zero();
    for dp in 0..=d {
        // sign goes with the exponent d - dp of the degree-3 inverse factor
        let sign_c = {
            let v = binomial(d as i64, dp as i64);
            if (d - dp) % 2 == 0 {
                v
            } else {
                -v
            }
        };
        let shift = d - dp;
        for beta in compositions(4, b) {
            let bp = &beta.parts;
            let b_parts: Vec<u64> = bp.iter().map(|&x| x as u64).collect();
            let cb = &sign_c * multinomial(b as u64, &b_parts);
            for gamma in compositions(3, c + dp) {
                let gp = &gamma.parts;
                let g_parts: Vec<u64> = gp.iter().map(|&x| x as u64).collect();
                let cg = &cb * multinomial((c + dp) as u64, &g_parts);
                let i1 = 1 + shift + gp[1] + gp[2] + bp[0];
                let i2 = 2 + shift + gp[0] + gp[2] + bp[1] + 2 * bp[3];
                let i3 = 3 + shift + gp[0] + gp[1] + 2 * bp[2] + bp[1];
                total += cg * schubert_degree(&[i1, i2, i3], shape);
            }
        }
    }
    total
}

/// Number f_{a,b,c,d} of space rational curves with a stalls, b
/// hyperstalls, c flexes and d cusps; zero unless a + 2b + 2c + 3d = 4n.
pub fn count_webs(a: u32, b: u32, c: u32, d: u32, n: u32) -> BigInt {
    if (a + 2 * b + 2 * c + 3 * d) as u64 != 4 * n as u64 {
        return BigInt::zero();
    }
    let shape = Shape::new(4, n + 4);
    let table = DegreeTable::new(shape);
    let mut total = BigInt::zero();
    for beta in compositions(5, b) {
        let bp = &beta.parts;
        let b_parts: Vec<u64> = bp.iter().map(|&x| x as u64).collect();
        let cb = multinomial(b as u64, &b_parts);
        for gamma in compositions(4, c) {
            let gp = &gamma.parts;
            let g_parts: Vec<u64> = gp.iter().map(|&x| x as u64).collect();
            let cg = &cb * multinomial(c as u64, &g_parts);
            for delta in compositions(4, d) {
                let dp = &delta.parts;
                let d_parts: Vec<u64> = dp.iter().map(|&x| x as u64).collect();
                let cd = &cg * multinomial(d as u64, &d_parts);
                for l in 0..=bp[1] + bp[2] {
                    let cl = &cd * binomial((bp[1] + bp[2]) as i64, l as i64);
                    for mm in 0..=gp[0] + gp[1] {
                        let cm = &cl * binomial((gp[0] + gp[1]) as i64, mm as i64);
                        let i1 = 1 + (d - dp[0]) + gp[0] + gp[3] + bp[0];
                        let i2 = 2 + (d - dp[1]) + gp[1] + gp[3] + bp[1] + 2 * bp[4];
                        let i3 = 3 + (d - dp[2]) + gp[2] + bp[2] + l + mm;
                        let i4 = 4 + (d - dp[3])
                            + gp[0]
                            + gp[1]
                            + gp[2]
                            + bp[1]
                            + 2 * bp[3]
                            + bp[2]
                            - l
                            - mm;
                        total += cm * table.signed(&[i1, i2, i3, i4]);
                    }
                }
            }
        }
    }
    total
}

/// Pascal triangle rows 0..=n as exact integers.
fn pascal_rows(n: u32) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize + 1);
    rows.push(vec![BigInt::one()]);
    for r in 1..=n as usize {
        let prev = &rows[r - 1];
        let mut row = Vec::with_capacity(r + 1);
        row.push(BigInt::one());
        for j in 1..r {
            row.push(&prev[j - 1] + &prev[j]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows
}

/// Machine-integer evaluation of HS_n for small n. Loop bounds are cut
/// to the window where every index stays within range, coefficients are
/// u64 partial products of Pascal entries, and the accumulator is a
/// checked i128; any overflow aborts to the arbitrary-precision path.
/// For n <= 10 the worst-case coefficient is multinomial(20;4,4,4,4,4) *
/// C(20,10) < 2^63 and each term is below 2^126, so in practice the
/// checks never fire.
fn hyperstalls_fast(n: u32) -> Option<BigInt> {
    if n > 10 {
        return None;
    }
    let cap = n + 4; // largest legal index
    let b = 2 * n;
    let side = cap as usize + 1;

    // Pascal rows 0..=b in u64 (b <= 20, far below overflow)
    let mut pascal: Vec<Vec<u64>> = Vec::with_capacity(b as usize + 1);
    pascal.push(vec![1]);
    for r in 1..=b as usize {
        let prev = &pascal[r - 1];
        let mut row = vec![1u64; r + 1];
        for j in 1..r {
            row[j] = prev[j - 1] + prev[j];
        }
        pascal.push(row);
    }

    let (omega, omega_max) = &*signed_omega_table(n)?;
    // every coefficient c4 * C(b2+b3, l) is one term of the expansion of
    // (1 + 2 + 2 + 1 + 1)^b, so 7^b bounds all u64 partial products, and
    // 7^b * max|omega| * (number of terms) bounds the i128 accumulator;
    // proving both here lets the hot loop run unchecked
    let coef_bound = 7u128.checked_pow(b)?;
    if coef_bound > u64::MAX as u128 {
        return None;
    }
    let terms_bound = ((b as u128 + 1).checked_pow(4)?).checked_mul(cap as u128 + 1)?;
    coef_bound
        .checked_mul(*omega_max as u128)?
        .checked_mul(terms_bound)?
        .checked_mul(2)?; // headroom below i128::MAX
    let enc = |i1: u32, i2: u32, i3: u32, i4: u32| {
        ((i1 as usize * side + i2 as usize) * side + i3 as usize) * side + i4 as usize
    };

    let mut total: i128 = 0;
    for b1 in 0..b.min(cap - 1) + 1 {
        let c1 = pascal[b as usize][b1 as usize];
        let r1 = b - b1;
        let i1 = 1 + b1;
        for b2 in 0..r1.min(cap - 2) + 1 {
            let c2 = c1 * pascal[r1 as usize][b2 as usize];
            let r2 = r1 - b2;
            for b3 in 0..r2.min(cap - 3) + 1 {
                let c3 = c2 * pascal[r2 as usize][b3 as usize];
                let r3 = r2 - b3;
                let lrow = &pascal[(b2 + b3) as usize];
                let l_hi = (b2 + b3).min(cap - 3 - b3);
                // i2 = 2 + b2 + 2*b5 <= cap pins b5, hence a floor for b4
                let b5_max = (cap - 2 - b2) / 2;
                let b4_lo = r3.saturating_sub(b5_max);
                for b4 in b4_lo..r3 + 1 {
                    let b5 = r3 - b4;
                    let c4 = c3 * pascal[r3 as usize][b4 as usize];
                    let i2 = 2 + b2 + 2 * b5;
                    // i4 = 4 + b2 + b3 + 2*b4 - l <= cap gives a floor for l
                    let l_lo = (b2 + b3 + 2 * b4).saturating_sub(cap - 4);
                    // walking l by one moves the third index up and the
                    // fourth down, a fixed stride in the flat table
                    if l_lo > l_hi {
                        continue;
                    }
                    let base = enc(i1, i2, 3 + b3, 4 + b2 + b3 + 2 * b4);
                    let start = base + l_lo as usize * (side - 1);
                    let weights = omega[start..].iter().step_by(side - 1);
                    for (&cl, &w) in lrow[l_lo as usize..l_hi as usize + 1]
                        .iter()
                        .zip(weights)
                    {
                        total += (c4 * cl) as i128 * w as i128;
                    }
                }
            }
        }
    }
    Some(BigInt::from(total))
}

/// Signed omega values for shape (4, n+4), indexed by the raw unsorted
/// tuple: entry [i1][i2][i3][i4] (flattened) holds sgn(tau) * omega of the
/// sorted tuple, zero on duplicates or weights the hyperstall sum cannot
/// reach. Built once per n and shared; only a handful of small n qualify.
fn signed_omega_table(n: u32) -> Option<Arc<(Vec<i32>, i64)>> {
    static TABLES: OnceLock<RwLock<HashMap<u32, Arc<(Vec<i32>, i64)>>>> = OnceLock::new();
    let lock = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = lock.read().unwrap().get(&n) {
        return Some(t.clone());
    }
    let cap = n + 4;
    let top = 4 * n;
    let side = cap as usize + 1;
    let mut fact = [1u128; 18];
    for i in 1..18usize {
        fact[i] = fact[i - 1] * i as u128;
    }
    let enc = |i1: u32, i2: u32, i3: u32, i4: u32| {
        ((i1 as usize * side + i2 as usize) * side + i3 as usize) * side + i4 as usize
    };
    let mut omega = vec![0i32; side * side * side * side];
    let mut omega_max = 1i64;
    // even permutations of the four slots; the other twelve are one swap away
    const EVEN: [[usize; 4]; 12] = [
        [0, 1, 2, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
        [1, 0, 3, 2],
        [1, 2, 0, 3],
        [1, 3, 2, 0],
        [2, 0, 1, 3],
        [2, 1, 3, 0],
        [2, 3, 0, 1],
        [3, 0, 2, 1],
        [3, 1, 0, 2],
        [3, 2, 1, 0],
    ];
    for i1 in 1..=cap {
        for i2 in i1 + 1..=cap {
            for i3 in i2 + 1..=cap {
                for i4 in i3 + 1..=cap {
                    let w = (i1 - 1) + (i2 - 2) + (i3 - 3) + (i4 - 4);
                    // the residual power of the first derivation is top - w
                    // and can be at most cap - 1, so deeper weights never
                    // come up in the sum
                    if w > top || top - w >= cap {
                        continue;
                    }
                    let vand = ((i2 - i1) * (i3 - i1) * (i4 - i1)) as u128
                        * ((i3 - i2) * (i4 - i2) * (i4 - i3)) as u128;
                    let num = fact[(top - w) as usize].checked_mul(vand)?;
                    let den = fact[(cap - i1) as usize]
                        .checked_mul(fact[(cap - i2) as usize])?
                        .checked_mul(fact[(cap - i3) as usize])?
                        .checked_mul(fact[(cap - i4) as usize])?;
                    let v = num / den;
                    if v > i32::MAX as u128 {
                        return None;
                    }
                    let v = v as i32;
                    omega_max = omega_max.max(v as i64);
                    let idx = [i1, i2, i3, i4];
                    for p in EVEN {
                        omega[enc(idx[p[0]], idx[p[1]], idx[p[2]], idx[p[3]])] = v;
                        // odd partner: swap the last two slots
                        omega[enc(idx[p[0]], idx[p[1]], idx[p[3]], idx[p[2]])] = -v;
                    }
                }
            }
        }
    }
    let arc = Arc::new((omega, omega_max));
    lock.write().unwrap().insert(n, arc.clone());
    Some(arc)
}

/// HS_n: the number (with multiplicities) of rational space curves with
/// 2n hyperstalls at prescribed points. Specialization of the web count
/// to b = 2n, evaluated with incremental multinomial partial products
/// and a precomputed degree table; the composition stream is partitioned
/// over the first part, so worker count never changes the exact result.
pub fn hyperstalls(n: u32) -> BigInt {
    if let Some(v) = hyperstalls_fast(n) {
        return v;
    }
    let shape = Shape::new(4, n + 4);
    let table = DegreeTable::new(shape);
    let b = 2 * n;
    let pascal = pascal_rows(b);
    (0..=b)
        .into_par_iter()
        .map(|b1| {
            let c1 = &pascal[b as usize][b1 as usize];
            let mut partial = BigInt::zero();
            let r1 = b - b1;
            for b2 in 0..=r1 {
                let c2 = c1 * &pascal[r1 as usize][b2 as usize];
                let r2 = r1 - b2;
                for b3 in 0..=r2 {
                    let c3 = &c2 * &pascal[r2 as usize][b3 as usize];
                    let r3 = r2 - b3;
                    let lrow = &pascal[(b2 + b3) as usize];
                    for b4 in 0..=r3 {
                        let b5 = r3 - b4;
                        let c4 = &c3 * &pascal[r3 as usize][b4 as usize];
                        let i1 = 1 + b1;
                        let i2 = 2 + b2 + 2 * b5;
                        for l in 0..=b2 + b3 {
                            let i3 = 3 + b3 + l;
                            let i4 = 4 + b2 + b3 + 2 * b4 - l;
                            let omega = table.signed(&[i1, i2, i3, i4]);
                            if !omega.is_zero() {
                                partial += &c4 * &lrow[l as usize] * omega;
                            }
                        }
                    }
                }
            }
            partial
        })
        .reduce(BigInt::zero, |a, b| a + b)
}

/// f_{0,0,2n,0}: rational space curves with 2n flexes at prescribed
/// points (Ranestad's question). Same evaluation strategy as
/// `hyperstalls`, over compositions of 2n into four parts.
pub fn ranestad(n: u32) -> BigInt {
    let shape = Shape::new(4, n + 4);
    let table = DegreeTable::new(shape);
    let c = 2 * n;
    let pascal = pascal_rows(c);
    (0..=c)
        .into_par_iter()
        .map(|g1| {
            let c1 = &pascal[c as usize][g1 as usize];
            let mut partial = BigInt::zero();
            let r1 = c - g1;
            for g2 in 0..=r1 {
                let c2 = c1 * &pascal[r1 as usize][g2 as usize];
                let r2 = r1 - g2;
                let mrow = &pascal[(g1 + g2) as usize];
                for g3 in 0..=r2 {
                    let g4 = r2 - g3;
                    let c3 = &c2 * &pascal[r2 as usize][g3 as usize];
                    let i1 = 1 + g1 + g4;
                    let i2 = 2 + g2 + g4;
                    for mm in 0..=g1 + g2 {
                        let i3 = 3 + g3 + mm;
                        let i4 = 4 + g1 + g2 + g3 - mm;
                        let omega = table.signed(&[i1, i2, i3, i4]);
                        if !omega.is_zero() {
                            partial += &c3 * &mrow[mm as usize] * omega;
                        }
                    }
                }
            }
            partial
        })
        .reduce(BigInt::zero, |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivations::{apply_d, apply_dbar, integral_of_word, Factor, OperatorWord};
    use crate::newton::expand_reduced;

    #[test]
    fn schubert_degree_examples() {
        let s24 = Shape::new(2, 4);
        assert_eq!(schubert_degree(&[1, 2], s24), BigInt::from(2));
        assert_eq!(schubert_degree(&[4, 1], s24), BigInt::from(-1));
        assert_eq!(schubert_degree(&[1, 3], s24), BigInt::from(2));
        assert_eq!(schubert_degree(&[1, 1], s24), BigInt::zero());
        assert_eq!(schubert_degree(&[1, 5], s24), BigInt::zero());
    }

    #[test]
    fn degree_table_matches_function() {
        let shape = Shape::new(3, 7);
        let table = DegreeTable::new(shape);
        for entries in all_index_tuples(shape) {
            assert_eq!(table.signed(&entries), schubert_degree(&entries, shape));
        }
        assert_eq!(
            table.signed(&[2, 1, 3]),
            schubert_degree(&[2, 1, 3], shape)
        );
    }

    #[test]
    fn goldberg_catalan() {
        for n in 1..=12u32 {
            let shape = Shape::new(2, n + 2);
            let catalan =
                binomial(2 * n as i64, n as i64) / BigInt::from(n as u64 + 1);
            assert_eq!(schubert_degree(&[1, 2], shape), catalan);
        }
    }

    #[test]
    fn dbar_power_kernel_examples() {
        // h=2, m=1: Dbar_1 = D_1 single step
        let s24 = Shape::new(2, 4);
        let t = IndexTuple::new(vec![1, 3], s24);
        let got = dbar_power_kernel(1, &t, s24);
        assert_eq!(got, apply_d(1, &Multivector::basis(t, s24)));
        // h=1: Dbar_0 = identity
        let s15 = Shape::new(1, 5);
        let t = IndexTuple::new(vec![2], s15);
        assert_eq!(
            dbar_power_kernel(5, &t, s15),
            Multivector::basis(t.clone(), s15)
        );
        // h=3, m=2 against the Dbar_2 oracle
        let s37 = Shape::new(3, 7);
        let t = IndexTuple::new(vec![1, 2, 3], s37);
        let mut oracle = Multivector::basis(t.clone(), s37);
        for _ in 0..2 {
            oracle = apply_dbar(2, &oracle);
        }
        assert_eq!(dbar_power_kernel(2, &t, s37), oracle);
    }

    #[test]
    fn d2_kernels_match_oracles() {
        // 3-wedge, m = 0..3
        let s37 = Shape::new(3, 7);
        let t = IndexTuple::new(vec![1, 2, 3], s37);
        for m in 0..=3u32 {
            let out = d2_power_kernel(KernelVariant::D2OnThreeWedge, m, &t, s37);
            let KernelOutput::Reduced(r) = out else {
                panic!()
            };
            let mut oracle = Multivector::basis(t.clone(), s37);
            for _ in 0..m {
                oracle = apply_d(2, &oracle);
            }
            assert_eq!(expand_reduced(&r), oracle, "3-wedge m={m}");
        }
        // 4-wedge D_2, m = 0..2 in M_8
        let s48 = Shape::new(4, 8);
        let t = IndexTuple::new(vec![1, 2, 3, 4], s48);
        for m in 0..=2u32 {
            let out = d2_power_kernel(KernelVariant::D2OnFourWedge, m, &t, s48);
            let KernelOutput::Reduced(r) = out else {
                panic!()
            };
            let mut oracle = Multivector::basis(t.clone(), s48);
            for _ in 0..m {
                oracle = apply_d(2, &oracle);
            }
            assert_eq!(expand_reduced(&r), oracle, "4-wedge m={m}");
        }
        // 4-wedge Dbar_2 in M_6
        let s46 = Shape::new(4, 6);
        let t = IndexTuple::new(vec![1, 2, 3, 4], s46);
        for m in 0..=2u32 {
            let out = d2_power_kernel(KernelVariant::Dbar2OnFourWedge, m, &t, s46);
            let KernelOutput::Plain(v) = out else {
                panic!()
            };
            let mut oracle = Multivector::basis(t.clone(), s46);
            for _ in 0..m {
                oracle = apply_dbar(2, &oracle);
            }
            assert_eq!(v, oracle, "dbar 4-wedge m={m}");
        }
    }

    #[test]
    fn pencil_product_examples() {
        assert_eq!(pencil_product(4, 0, 1, 2, 2), BigInt::from(2));
        assert_eq!(pencil_product(2, 1, 1, 2, 2), BigInt::one());
        // imbalanced input returns zero
        assert_eq!(pencil_product(3, 0, 1, 2, 2), BigInt::zero());
        // sigma_2^3 on G(2,5) against the oracle
        let oracle = integral_of_word(Shape::new(2, 5), &OperatorWord::d_power(2, 3));
        assert_eq!(pencil_product(0, 3, 1, 2, 3), oracle);
    }

    #[test]
    fn scherbak_examples() {
        assert_eq!(scherbak(&[1, 1, 1, 1], 2), BigInt::from(2));
        for n in 1..=6u32 {
            assert_eq!(scherbak(&[2 * n], n), BigInt::zero(), "h=1, n={n}");
        }
        assert_eq!(
            scherbak(&[3, 3], 3),
            integral_of_word(Shape::new(2, 5), &OperatorWord::d_power(3, 2))
        );
        // weight imbalance
        assert_eq!(scherbak(&[1, 1, 1], 2), BigInt::zero());
    }

    #[test]
    fn scherbak_permutation_invariant() {
        let base = [1u32, 2, 2, 3];
        let n = 4;
        let reference = scherbak(&base, n);
        let perms = [[1, 2, 2, 3], [2, 1, 3, 2], [3, 2, 2, 1], [2, 3, 1, 2]];
        for p in perms {
            assert_eq!(scherbak(&p, n), reference);
        }
    }

    #[test]
    fn nets_examples() {
        let g34 = Shape::new(3, 4);
        assert_eq!(
            count_nets(3, 0, 0, 0, 1),
            integral_of_word(g34, &OperatorWord::d_power(1, 3))
        );
        assert_eq!(count_nets(3, 0, 0, 0, 1), BigInt::one());
        assert_eq!(
            count_nets(6, 0, 0, 0, 2),
            BigInt::from(5) // degree of G(3,5)
        );
        let oracle = integral_of_word(
            g34,
            &OperatorWord::new(vec![
                Factor::D { h: 1, exp: 1 },
                Factor::D { h: 2, exp: 1 },
            ]),
        );
        assert_eq!(count_nets(1, 1, 0, 0, 1), oracle);
        // imbalance
        assert_eq!(count_nets(2, 0, 0, 0, 1), BigInt::zero());
    }

    #[test]
    fn webs_examples() {
        assert_eq!(count_webs(4, 0, 0, 0, 1), BigInt::one());
        assert_eq!(count_webs(0, 2, 0, 0, 1), BigInt::zero());
        assert_eq!(count_webs(0, 0, 2, 0, 1), ranestad(1));
    }

    #[test]
    fn hyperstalls_small() {
        assert_eq!(hyperstalls(0), BigInt::one());
        assert_eq!(hyperstalls(1), BigInt::zero());
        for n in 0..=4u32 {
            assert_eq!(hyperstalls(n), count_webs(0, 2 * n, 0, 0, n), "n={n}");
        }
    }

    #[test]
    fn ranestad_small() {
        assert_eq!(ranestad(0), BigInt::one());
        let oracle = integral_of_word(
            Shape::new(4, 5),
            &OperatorWord::new(vec![Factor::Dbar { h: 2, exp: 2 }]),
        );
        assert_eq!(ranestad(1), oracle);
        for n in 0..=3u32 {
            assert_eq!(ranestad(n), count_webs(0, 0, 2 * n, 0, n), "n={n}");
        }
    }
}
