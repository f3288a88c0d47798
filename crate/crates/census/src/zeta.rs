//! From point counts to L-polynomials and isogeny classes.
//!
//! For a genus-4 curve over F_2 the counts N_1..N_4 determine the degree-8
//! numerator L(T) = ∏(1 − α_i·T) of the zeta function: the power sums
//! s_k = 2^k + 1 − N_k feed Newton's identities, giving the elementary
//! symmetric functions of the Frobenius eigenvalues, and the functional
//! equation c_{8−i} = 2^{4−i}·c_i supplies the top half. Curves share an
//! isogeny class of Jacobians exactly when their L-polynomials agree.

use std::collections::BTreeMap;

use crate::record::CurveRecord;
use crate::{Error, Result};

/// Degree-8 zeta numerator; `c[i]` is the coefficient of T^i, `c[0]` = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LPolynomial {
    pub c: [i64; 9],
}

impl LPolynomial {
    /// Functional-equation constraint c_{8−i} = 2^{4−i}·c_i for i = 0..=3,
    /// plus the normalization c_0 = 1.
    pub fn satisfies_functional_equation(&self) -> bool {
        self.c[0] == 1 && (0..=3).all(|i| self.c[8 - i] == (1 << (4 - i as u32)) * self.c[i])
    }
}

/// Degree-exactly-n point counts from the N_k: a_1 = N_1 and
/// n·a_n = N_n − Σ_{d|n, d<n} d·a_d. Errors on non-integral or negative
/// values, which indicate an upstream counting bug.
pub fn a_numbers(n: &[i64]) -> Result<Vec<i64>> {
    let mut a = Vec::with_capacity(n.len());
    for (idx, &nk) in n.iter().enumerate() {
        let k = idx + 1;
        let mut rest = nk;
        for d in 1..k {
            if k % d == 0 {
                rest -= d as i64 * a[d - 1];
            }
        }
        if rest < 0 || rest % k as i64 != 0 {
            return Err(Error::InconsistentCounts(format!(
                "degree-{k} residual {rest} from counts {n:?}"
            )));
        }
        a.push(rest / k as i64);
    }
    Ok(a)
}

/// Weil-bound check |2^k + 1 − N_k| ≤ 8·2^(k/2) in exact integers.
fn weil_ok(k: u32, n: i64) -> bool {
    let s = (1i64 << k) + 1 - n;
    s * s <= 64 << k
}

/// L-polynomial from the counts over F_2, F_4, F_8, F_16.
pub fn l_from_counts(n: &[i64; 4]) -> Result<LPolynomial> {
    let mut s = [0i64; 5];
    for k in 1..=4usize {
        if !weil_ok(k as u32, n[k - 1]) {
            return Err(Error::WeilBoundViolated { k: k as u32, n: n[k - 1] });
        }
        s[k] = (1i64 << k) + 1 - n[k - 1];
    }
    // Newton: k·e_k = Σ_{i=1..k} (−1)^(i−1) e_{k−i} s_i.
    let mut e = [0i64; 5];
    e[0] = 1;
    for k in 1..=4usize {
        let mut acc = 0i64;
        for i in 1..=k {
            let term = e[k - i] * s[i];
            acc += if i % 2 == 1 { term } else { -term };
        }
        if acc % k as i64 != 0 {
            return Err(Error::InconsistentCounts(format!(
                "Newton step {k} is non-integral for counts {n:?}"
            )));
        }
        e[k] = acc / k as i64;
    }
    let mut c = [0i64; 9];
    for i in 0..=4usize {
        c[i] = if i % 2 == 0 { e[i] } else { -e[i] };
    }
    for i in 0..=3usize {
        c[8 - i] = (1 << (4 - i as u32)) * c[i];
    }
    Ok(LPolynomial { c })
}

/// Point count over GF(2^k) implied by an L-polynomial, any k ≥ 1.
pub fn counts_from_l(l: &LPolynomial, k: u32) -> i64 {
    let mut e = [0i64; 9];
    for (i, ei) in e.iter_mut().enumerate() {
        *ei = if i % 2 == 0 { l.c[i] } else { -l.c[i] };
    }
    let mut p = vec![0i64; k as usize + 1];
    for m in 1..=k as usize {
        let mut acc = 0i64;
        for i in 1..m.min(9) {
            let term = e[i] * p[m - i];
            acc += if i % 2 == 1 { term } else { -term };
        }
        if m <= 8 {
            let term = m as i64 * e[m];
            acc += if m % 2 == 1 { term } else { -term };
        }
        p[m] = acc;
    }
    (1i64 << k) + 1 - p[k as usize]
}

/// Summary of one isogeny class (one distinct L-polynomial).
#[derive(Debug, Clone)]
pub struct IsoClass {
    pub id: u32,
    pub l: LPolynomial,
    pub size: u32,
    pub hyp_members: u32,
    pub trig_members: u32,
}

/// Group records by L-polynomial; class ids follow the lexicographic order
/// of the coefficient vectors, so they are independent of record order and
/// of any parallel schedule.
pub fn isogeny_group(records: &mut [CurveRecord]) -> Vec<IsoClass> {
    let mut by_l: BTreeMap<[i64; 9], (u32, u32)> = BTreeMap::new();
    for r in records.iter() {
        let entry = by_l.entry(r.l.c).or_insert((0, 0));
        if r.is_hyperelliptic() {
            entry.0 += 1;
        } else {
            entry.1 += 1;
        }
    }
    let classes: Vec<IsoClass> = by_l
        .iter()
        .enumerate()
        .map(|(idx, (&c, &(hyp, trig)))| IsoClass {
            id: idx as u32 + 1,
            l: LPolynomial { c },
            size: hyp + trig,
            hyp_members: hyp,
            trig_members: trig,
        })
        .collect();
    let id_of: BTreeMap<[i64; 9], (u32, u32)> = classes
        .iter()
        .map(|cl| (cl.l.c, (cl.id, cl.size)))
        .collect();
    for r in records.iter_mut() {
        let (id, size) = id_of[&r.l.c];
        r.iso_class = id;
        r.iso_size = size;
    }
    classes
}

/// Histogram over class sizes: entry i = number of classes with i members
/// of the given family (0 counts classes whose members are all of the other
/// family), plus a total row counting whole classes by size.
pub fn multiplicity_histogram(classes: &[IsoClass], max_size: usize) -> MultiplicityTable {
    let mut hyp = vec![0u32; max_size + 1];
    let mut trig = vec![0u32; max_size + 1];
    let mut total = vec![0u32; max_size + 1];
    for cl in classes {
        hyp[cl.hyp_members as usize] += 1;
        trig[cl.trig_members as usize] += 1;
        total[cl.size as usize] += 1;
    }
    MultiplicityTable { hyp, trig, total }
}

/// Rows of the "curves sharing one L-polynomial" table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub hyp: Vec<u32>,
    pub trig: Vec<u32>,
    pub total: Vec<u32>,
}
