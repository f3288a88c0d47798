//! Quadratic and cubic forms in four variables over GF(2), the substitution
//! action of GL(4, 2), and the rank / Arf classification of quadrics.
//!
//! Forms are bit masks over a fixed monomial order (see [`QUAD_MONOMIALS`]
//! and [`CUBIC_MONOMIALS`]). Variables transform as a column vector v ↦ A·v,
//! so a form F maps to F∘A; with that convention the action is a right
//! action: act(B, act(A, F)) = act(A·B, F).

use std::fmt;
use std::sync::OnceLock;

use crate::{Error, Result};

pub const VAR_NAMES: [&str; 4] = ["X", "Y", "Z", "T"];

/// Degree-2 monomials x_i·x_j with i ≤ j, in lexicographic exponent order.
pub const QUAD_MONOMIALS: [(usize, usize); 10] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 3),
];

/// Degree-3 monomials x_i·x_j·x_k with i ≤ j ≤ k, in lexicographic order.
pub const CUBIC_MONOMIALS: [(usize, usize, usize); 20] = [
    (0, 0, 0),
    (0, 0, 1),
    (0, 0, 2),
    (0, 0, 3),
    (0, 1, 1),
    (0, 1, 2),
    (0, 1, 3),
    (0, 2, 2),
    (0, 2, 3),
    (0, 3, 3),
    (1, 1, 1),
    (1, 1, 2),
    (1, 1, 3),
    (1, 2, 2),
    (1, 2, 3),
    (1, 3, 3),
    (2, 2, 2),
    (2, 2, 3),
    (2, 3, 3),
    (3, 3, 3),
];

fn quad_index(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    QUAD_MONOMIALS.iter().position(|&m| m == (i, j)).unwrap()
}

fn cubic_index(i: usize, j: usize, k: usize) -> usize {
    let mut t = [i, j, k];
    t.sort_unstable();
    CUBIC_MONOMIALS
        .iter()
        .position(|&m| m == (t[0], t[1], t[2]))
        .unwrap()
}

/// Homogeneous quadratic form in 4 variables; bit i = [`QUAD_MONOMIALS`]\[i\].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QuadForm4(u16);

impl QuadForm4 {
    pub const ZERO: QuadForm4 = QuadForm4(0);

    #[inline]
    pub const fn new(bits: u16) -> QuadForm4 {
        debug_assert!(bits < 1 << 10);
        QuadForm4(bits)
    }

    /// Form from a list of (i, j) variable pairs (unordered, duplicates cancel).
    pub fn from_monomials(monos: &[(usize, usize)]) -> QuadForm4 {
        let mut bits = 0u16;
        for &(i, j) in monos {
            bits ^= 1 << quad_index(i, j);
        }
        QuadForm4(bits)
    }

    #[inline]
    pub const fn bits(self) -> u16 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Value at a GF(2)-point given as a 4-bit mask (bit i = coordinate x_i).
    pub fn eval_bits(self, v: u8) -> u8 {
        let mut acc = 0u8;
        let mut m = self.0;
        while m != 0 {
            let idx = m.trailing_zeros() as usize;
            let (i, j) = QUAD_MONOMIALS[idx];
            acc ^= (v >> i) & (v >> j) & 1;
            m &= m - 1;
        }
        acc
    }

    /// Polar form b(u, v) = Q(u+v) + Q(u) + Q(v), bilinear and alternating.
    #[inline]
    pub fn polar_bits(self, u: u8, v: u8) -> u8 {
        self.eval_bits(u ^ v) ^ self.eval_bits(u) ^ self.eval_bits(v)
    }
}

/// Homogeneous cubic form in 4 variables; bit i = [`CUBIC_MONOMIALS`]\[i\].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CubicForm4(u32);

impl CubicForm4 {
    pub const ZERO: CubicForm4 = CubicForm4(0);

    #[inline]
    pub const fn new(bits: u32) -> CubicForm4 {
        debug_assert!(bits < 1 << 20);
        CubicForm4(bits)
    }

    /// Form from a list of (i, j, k) variable triples (duplicates cancel).
    pub fn from_monomials(monos: &[(usize, usize, usize)]) -> CubicForm4 {
        let mut bits = 0u32;
        for &(i, j, k) in monos {
            bits ^= 1 << cubic_index(i, j, k);
        }
        CubicForm4(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Product of two linear forms (4-bit masks), as a quadratic form.
pub fn lin_mul_lin(u: u8, w: u8) -> QuadForm4 {
    let mut bits = 0u16;
    for i in 0..4 {
        if (u >> i) & 1 == 0 {
            continue;
        }
        for j in 0..4 {
            if (w >> j) & 1 == 1 {
                bits ^= 1 << quad_index(i, j);
            }
        }
    }
    QuadForm4(bits)
}

/// Product of a quadratic form and a linear form, as a cubic form.
pub fn quad_mul_lin(q: QuadForm4, u: u8) -> CubicForm4 {
    let mut bits = 0u32;
    let mut m = q.bits();
    while m != 0 {
        let idx = m.trailing_zeros() as usize;
        let (i, j) = QUAD_MONOMIALS[idx];
        for s in 0..4 {
            if (u >> s) & 1 == 1 {
                bits ^= 1 << cubic_index(i, j, s);
            }
        }
        m &= m - 1;
    }
    CubicForm4(bits)
}

/// An invertible 4×4 matrix over GF(2); `rows[i]` is row i as a 4-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat4 {
    pub rows: [u8; 4],
}

impl Mat4 {
    pub const IDENTITY: Mat4 = Mat4 { rows: [1, 2, 4, 8] };

    pub fn is_invertible(self) -> bool {
        let mut rows = self.rows;
        for col in 0..4 {
            let pivot = (col..4).find(|&r| (rows[r] >> col) & 1 == 1);
            match pivot {
                None => return false,
                Some(p) => {
                    rows.swap(col, p);
                    for r in 0..4 {
                        if r != col && (rows[r] >> col) & 1 == 1 {
                            rows[r] ^= rows[col];
                        }
                    }
                }
            }
        }
        true
    }

    /// Standard matrix product self·rhs.
    pub fn mul(self, rhs: Mat4) -> Mat4 {
        let mut rows = [0u8; 4];
        for i in 0..4 {
            let mut acc = 0u8;
            let mut m = self.rows[i];
            while m != 0 {
                let k = m.trailing_zeros() as usize;
                acc ^= rhs.rows[k];
                m &= m - 1;
            }
            rows[i] = acc;
        }
        Mat4 { rows }
    }

    pub fn inverse(self) -> Mat4 {
        // Gauss-Jordan on [self | I].
        let mut a = self.rows;
        let mut inv = Mat4::IDENTITY.rows;
        for col in 0..4 {
            let pivot = (col..4)
                .find(|&r| (a[r] >> col) & 1 == 1)
                .expect("matrix not invertible");
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..4 {
                if r != col && (a[r] >> col) & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Mat4 { rows: inv }
    }
}

/// All 20160 elements of GL(4, 2), ascending in the packed 16-bit row encoding.
pub fn gl4_elements() -> &'static [Mat4] {
    static GL4: OnceLock<Vec<Mat4>> = OnceLock::new();
    GL4.get_or_init(|| {
        let mut out = Vec::with_capacity(20160);
        for code in 0u32..1 << 16 {
            let m = Mat4 {
                rows: [
                    (code & 0xF) as u8,
                    ((code >> 4) & 0xF) as u8,
                    ((code >> 8) & 0xF) as u8,
                    ((code >> 12) & 0xF) as u8,
                ],
            };
            if m.is_invertible() {
                out.push(m);
            }
        }
        out
    })
}

/// Substitute x_i ↦ (row i of A)·x in a quadratic form.
pub fn act_quad(a: Mat4, q: QuadForm4) -> QuadForm4 {
    let mut bits = 0u16;
    let mut m = q.bits();
    while m != 0 {
        let idx = m.trailing_zeros() as usize;
        let (i, j) = QUAD_MONOMIALS[idx];
        bits ^= lin_mul_lin(a.rows[i], a.rows[j]).bits();
        m &= m - 1;
    }
    QuadForm4(bits)
}

/// Substitute x_i ↦ (row i of A)·x in a cubic form.
pub fn act_cubic(a: Mat4, f: CubicForm4) -> CubicForm4 {
    let table = cubic_action_table(a);
    let mut bits = 0u32;
    let mut m = f.bits();
    while m != 0 {
        let idx = m.trailing_zeros() as usize;
        bits ^= table[idx];
        m &= m - 1;
    }
    CubicForm4(bits)
}

/// Image of each cubic monomial under the substitution given by `a`.
pub fn cubic_action_table(a: Mat4) -> [u32; 20] {
    let mut table = [0u32; 20];
    for (idx, &(i, j, k)) in CUBIC_MONOMIALS.iter().enumerate() {
        let q = lin_mul_lin(a.rows[i], a.rows[j]);
        table[idx] = quad_mul_lin(q, a.rows[k]).bits();
    }
    table
}

/// Rank of a quadratic form in characteristic 2 and, for rank 4, its Arf
/// invariant.
///
/// The rank is 4 minus the dimension of {v in the radical of the polar form
/// with Q(v) = 0}; this matches "minimal number of variables after an
/// invertible change". For rank 4 the polar form is symplectic and
/// arf = Σ Q(e_i)Q(f_i) over any symplectic basis.
pub fn rank_arf(q: QuadForm4) -> (u32, Option<u8>) {
    let radical: Vec<u8> = (0u8..16)
        .filter(|&v| (0..4).all(|i| q.polar_bits(v, 1 << i) == 0))
        .collect();
    let quasi_radical_size = radical.iter().filter(|&&v| q.eval_bits(v) == 0).count();
    // Q restricted to the radical is additive, so its kernel is a subspace.
    let dim = quasi_radical_size.trailing_zeros();
    let rank = 4 - dim;
    if rank < 4 {
        return (rank, None);
    }
    // Greedy symplectic basis of the (nondegenerate) polar form.
    let mut space: Vec<u8> = (0..16).collect();
    let mut arf = 0u8;
    for _ in 0..2 {
        let e = *space.iter().find(|&&v| v != 0).unwrap();
        let f = *space
            .iter()
            .find(|&&w| q.polar_bits(e, w) == 1)
            .expect("polar form nondegenerate at rank 4");
        arf ^= q.eval_bits(e) & q.eval_bits(f);
        space.retain(|&v| q.polar_bits(v, e) == 0 && q.polar_bits(v, f) == 0);
    }
    (4, Some(arf))
}

/// Arf invariant of a rank-4 form; errors below rank 4.
pub fn arf_invariant(q: QuadForm4) -> Result<u8> {
    match rank_arf(q) {
        (4, Some(a)) => Ok(a),
        (rank, _) => Err(Error::ArfUndefined(rank)),
    }
}

/// All matrices fixing the form exactly (over GF(2) there are no scalars).
pub fn stabilizer4(q: QuadForm4) -> Vec<Mat4> {
    gl4_elements()
        .iter()
        .copied()
        .filter(|&a| act_quad(a, q) == q)
        .collect()
}

/// One GL(4,2)-orbit of quadratic forms of rank ≥ 3.
#[derive(Debug, Clone)]
pub struct QuadOrbit {
    /// Minimal-mask representative.
    pub rep: QuadForm4,
    pub size: usize,
    pub rank: u32,
    pub arf: Option<u8>,
}

/// Brute-force orbit decomposition of all 1024 quadratic forms, restricted to
/// rank ≥ 3; exactly three orbits exist (two nonsingular, one of rank 3).
pub fn quad_classify_check() -> Vec<QuadOrbit> {
    let mut visited = vec![false; 1 << 10];
    let mut orbits = Vec::new();
    for mask in 0u16..1 << 10 {
        if visited[mask as usize] {
            continue;
        }
        let q = QuadForm4(mask);
        let (rank, arf) = rank_arf(q);
        if rank < 3 {
            continue;
        }
        let mut size = 0usize;
        for &a in gl4_elements() {
            let img = act_quad(a, q);
            if !visited[img.bits() as usize] {
                visited[img.bits() as usize] = true;
                size += 1;
            }
        }
        orbits.push(QuadOrbit { rep: q, size, rank, arf });
    }
    orbits
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, vars: &[usize]) -> fmt::Result {
    let mut first = true;
    let mut i = 0;
    while i < vars.len() {
        let v = vars[i];
        let mut e = 1;
        while i + e < vars.len() && vars[i + e] == v {
            e += 1;
        }
        if !first {
            write!(f, "*")?;
        }
        if e == 1 {
            write!(f, "{}", VAR_NAMES[v])?;
        } else {
            write!(f, "{}^{}", VAR_NAMES[v], e)?;
        }
        first = false;
        i += e;
    }
    Ok(())
}

impl fmt::Display for QuadForm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, &(i, j)) in QUAD_MONOMIALS.iter().enumerate() {
            if (self.0 >> idx) & 1 == 1 {
                if !first {
                    write!(f, " + ")?;
                }
                fmt_monomial(f, &[i, j])?;
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Display for CubicForm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, &(i, j, k)) in CUBIC_MONOMIALS.iter().enumerate() {
            if (self.0 >> idx) & 1 == 1 {
                if !first {
                    write!(f, " + ")?;
                }
                fmt_monomial(f, &[i, j, k])?;
                first = false;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q1() -> QuadForm4 {
        QuadForm4::from_monomials(&[(0, 1), (2, 3)]) // XY + ZT
    }
    fn q2() -> QuadForm4 {
        QuadForm4::from_monomials(&[(0, 1), (2, 2), (2, 3), (3, 3)]) // XY + Z² + ZT + T²
    }
    fn q3() -> QuadForm4 {
        QuadForm4::from_monomials(&[(0, 1), (2, 2)]) // XY + Z²
    }

    #[test]
    fn gl4_has_order_20160() {
        let g = gl4_elements();
        assert_eq!(g.len(), 20160);
        assert!(g.contains(&Mat4::IDENTITY));
        // Spot-check closure under inverse on a stride of the group.
        for a in g.iter().step_by(997) {
            assert_eq!(a.mul(a.inverse()), Mat4::IDENTITY);
            assert!(g.contains(&a.inverse()));
        }
    }

    #[test]
    fn substitution_examples() {
        assert_eq!(act_quad(Mat4::IDENTITY, q1()), q1());
        // Swapping X and Y fixes XY + ZT.
        let swap = Mat4 { rows: [2, 1, 4, 8] };
        assert_eq!(act_quad(swap, q1()), q1());
        // Z ↦ Z + T sends Z³ to Z³ + Z²T + ZT² + T³.
        let shear = Mat4 { rows: [1, 2, 4 | 8, 8] };
        let z3 = CubicForm4::from_monomials(&[(2, 2, 2)]);
        let expect = CubicForm4::from_monomials(&[(2, 2, 2), (2, 2, 3), (2, 3, 3), (3, 3, 3)]);
        assert_eq!(act_cubic(shear, z3), expect);
    }

    #[test]
    fn action_law_right_composition() {
        // act(B, act(A, F)) = act(A·B, F), exhaustively over both stabilizer
        // subgroups would be slow here; a deterministic stride suffices.
        let g = gl4_elements();
        let f = CubicForm4::new(0b1010_1100_0011_0101_1001);
        let q = q2();
        for a in g.iter().step_by(1013) {
            for b in g.iter().step_by(1511) {
                let ab = a.mul(*b);
                assert_eq!(act_cubic(*b, act_cubic(*a, f)), act_cubic(ab, f));
                assert_eq!(act_quad(*b, act_quad(*a, q)), act_quad(ab, q));
            }
        }
    }

    #[test]
    fn multiplicativity_of_cubic_action() {
        // act_cubic(A, Q·ℓ) = act_quad(A, Q)·(ℓ∘A) for every linear form ℓ.
        let g = gl4_elements();
        for a in g.iter().step_by(643) {
            for l in 1u8..16 {
                // ℓ∘A as a linear form: substitute each variable by its row.
                let mut l_img = 0u8;
                for i in 0..4 {
                    if (l >> i) & 1 == 1 {
                        l_img ^= a.rows[i];
                    }
                }
                for &q in &[q1(), q2(), q3()] {
                    let lhs = act_cubic(*a, quad_mul_lin(q, l));
                    let rhs = quad_mul_lin(act_quad(*a, q), l_img);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn rank_and_arf_of_normal_forms() {
        assert_eq!(rank_arf(q1()), (4, Some(0)));
        assert_eq!(rank_arf(q2()), (4, Some(1)));
        assert_eq!(rank_arf(q3()), (3, None));
        assert!(arf_invariant(q3()).is_err());
        assert_eq!(rank_arf(QuadForm4::ZERO), (0, None));
        // A single square has rank 1.
        assert_eq!(rank_arf(QuadForm4::from_monomials(&[(0, 0)])), (1, None));
    }

    #[test]
    fn three_orbits_of_rank_ge_3() {
        let orbits = quad_classify_check();
        assert_eq!(orbits.len(), 3);
        let find = |q: QuadForm4| {
            orbits
                .iter()
                .find(|o| {
                    let mut img = false;
                    for &a in gl4_elements() {
                        if act_quad(a, o.rep) == q {
                            img = true;
                            break;
                        }
                    }
                    img
                })
                .unwrap()
        };
        let o1 = find(q1());
        assert_eq!((o1.rank, o1.arf), (4, Some(0)));
        assert_eq!(o1.size * stabilizer4(q1()).len(), 20160);
        let o2 = find(q2());
        assert_eq!((o2.rank, o2.arf), (4, Some(1)));
        let o3 = find(q3());
        assert_eq!((o3.rank, o3.arf), (3, None));
        // The three orbits exhaust the rank ≥ 3 forms.
        let total: usize = orbits.iter().map(|o| o.size).sum();
        let direct = (0u16..1 << 10)
            .filter(|&m| rank_arf(QuadForm4::new(m)).0 >= 3)
            .count();
        assert_eq!(total, direct);
    }

    #[test]
    fn stabilizer_orders() {
        let s1 = stabilizer4(q1());
        let s2 = stabilizer4(q2());
        assert_eq!(s1.len(), 72);
        assert_eq!(s2.len(), 120);
        assert!(s1.contains(&Mat4::IDENTITY));
        // Subgroup closure.
        for a in s1.iter().step_by(7) {
            for b in s1.iter().step_by(11) {
                assert!(s1.contains(&a.mul(*b)));
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(q1().to_string(), "X*Y + Z*T");
        assert_eq!(q2().to_string(), "X*Y + Z^2 + Z*T + T^2");
        let f = CubicForm4::from_monomials(&[(0, 0, 0), (1, 2, 3), (3, 3, 3)]);
        assert_eq!(f.to_string(), "X^3 + Y*Z*T + T^3");
    }
}
