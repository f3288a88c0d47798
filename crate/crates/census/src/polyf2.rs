//! Univariate polynomials over GF(2), bit-packed into a `u64`, and the
//! weighted Möbius action of PGL(2, F_2) on polynomials of bounded degree.
//!
//! Bit i of the mask is the coefficient of x^i, so the zero polynomial is the
//! zero mask and every nonzero polynomial is monic. The action with weight n
//! sends q(x) to the numerator of (cx+d)^n · q((ax+b)/(cx+d)); orbits of this
//! action classify the polynomials of degree ≤ n up to fractional-linear
//! substitution.

use std::fmt;

use crate::{Error, Result};

/// A polynomial over GF(2) with degree ≤ 63; bit i = coefficient of x^i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PolyF2(u64);

impl PolyF2 {
    pub const ZERO: PolyF2 = PolyF2(0);
    pub const ONE: PolyF2 = PolyF2(1);
    pub const X: PolyF2 = PolyF2(2);

    #[inline]
    pub const fn new(bits: u64) -> PolyF2 {
        PolyF2(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Degree; −1 serves as the sentinel for the zero polynomial.
    #[inline]
    pub const fn degree(self) -> i32 {
        63 - self.0.leading_zeros() as i32
    }

    /// Coefficient of x^i as 0 or 1.
    #[inline]
    pub const fn coeff(self, i: u32) -> u8 {
        ((self.0 >> i) & 1) as u8
    }

    #[inline]
    pub fn add(self, rhs: PolyF2) -> PolyF2 {
        PolyF2(self.0 ^ rhs.0)
    }

    /// Carryless product; panics if the result would not fit in 64 bits.
    pub fn mul(self, rhs: PolyF2) -> PolyF2 {
        let mut acc = 0u128;
        let a = self.0 as u128;
        let mut b = rhs.0;
        while b != 0 {
            let i = b.trailing_zeros();
            acc ^= a << i;
            b &= b - 1;
        }
        assert!(acc >> 64 == 0, "polynomial product exceeds degree 63");
        PolyF2(acc as u64)
    }

    /// Remainder of self modulo rhs.
    pub fn rem(self, rhs: PolyF2) -> Result<PolyF2> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = rhs.degree();
        let mut r = self.0;
        loop {
            let rd = 63 - r.leading_zeros() as i32;
            if r == 0 || rd < d {
                return Ok(PolyF2(r));
            }
            r ^= rhs.0 << (rd - d) as u32;
        }
    }

    /// Greatest common divisor, with gcd(p, 0) = p.
    pub fn gcd(self, rhs: PolyF2) -> PolyF2 {
        let (mut a, mut b) = (self, rhs);
        while !b.is_zero() {
            let r = a.rem(b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    /// Formal derivative; in characteristic 2 only odd-degree terms survive.
    #[inline]
    pub const fn derivative(self) -> PolyF2 {
        PolyF2((self.0 >> 1) & 0x5555_5555_5555_5555)
    }

    /// Value of the polynomial at a field element, by Horner's rule.
    pub fn eval(
        self,
        ctx: &crate::gf2k::FieldCtx,
        e: crate::gf2k::FieldElem,
    ) -> crate::gf2k::FieldElem {
        let mut acc = crate::gf2k::FieldElem::ZERO;
        let mut i = self.degree();
        while i >= 0 {
            acc = ctx.mul(acc, e);
            if self.coeff(i as u32) == 1 {
                acc = ctx.add(acc, crate::gf2k::FieldElem::ONE);
            }
            i -= 1;
        }
        acc
    }

    /// True iff the polynomial is irreducible over GF(2).
    ///
    /// Trial division by every polynomial of degree 1..=deg/2; fine for the
    /// degree ≤ 8 moduli this crate ever validates.
    pub fn is_irreducible(self) -> bool {
        let d = self.degree();
        if d <= 0 {
            return false;
        }
        for f in 2u64..1 << (d / 2 + 1) {
            let f = PolyF2(f);
            if f.degree() >= 1 && self.rem(f).unwrap().is_zero() {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for PolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..=self.degree() as u32).rev() {
            if self.coeff(i) == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// An element of PGL(2, F_2) = GL(2, F_2): an invertible 2×2 bit matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub d: u8,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1, b: 0, c: 0, d: 1 };

    #[inline]
    pub fn det(self) -> u8 {
        (self.a & self.d) ^ (self.b & self.c)
    }

    /// Composition in action order: `a.compose(b)` acts like "b first, then a",
    /// so that moebius_act(n, A, moebius_act(n, B, q)) = moebius_act(n, A.compose(B), q).
    #[inline]
    pub fn compose(self, rhs: Mat2) -> Mat2 {
        // Action order corresponds to the literal matrix product rhs·self.
        rhs.matmul(self)
    }

    #[inline]
    fn matmul(self, rhs: Mat2) -> Mat2 {
        Mat2 {
            a: (self.a & rhs.a) ^ (self.b & rhs.c),
            b: (self.a & rhs.b) ^ (self.b & rhs.d),
            c: (self.c & rhs.a) ^ (self.d & rhs.c),
            d: (self.c & rhs.b) ^ (self.d & rhs.d),
        }
    }

    /// Inverse; over GF(2) the adjugate [d b; c a] with det 1.
    #[inline]
    pub fn inverse(self) -> Mat2 {
        Mat2 { a: self.d, b: self.b, c: self.c, d: self.a }
    }
}

/// The six elements of PGL(2, F_2), in lexicographic (a,b,c,d) order.
pub fn pgl2_elements() -> Vec<Mat2> {
    let mut out = Vec::with_capacity(6);
    for bits in 0u8..16 {
        let m = Mat2 {
            a: (bits >> 3) & 1,
            b: (bits >> 2) & 1,
            c: (bits >> 1) & 1,
            d: bits & 1,
        };
        if m.det() == 1 {
            out.push(m);
        }
    }
    out
}

/// The weighted substitution action: numerator of (cx+d)^n · q((ax+b)/(cx+d)).
///
/// The zero polynomial maps to zero. Errors when deg q > n, since then the
/// substitution would not land back in the degree-≤-n space.
pub fn moebius_act(n: u32, m: Mat2, q: PolyF2) -> Result<PolyF2> {
    let d = q.degree();
    if d > n as i32 {
        return Err(Error::DegreeExceedsWeight { degree: d, weight: n });
    }
    let num = PolyF2::new(((m.a as u64) << 1) | m.b as u64); // ax + b
    let den = PolyF2::new(((m.c as u64) << 1) | m.d as u64); // cx + d
    // Σ_i q_i (ax+b)^i (cx+d)^(n-i), assembled from power ladders.
    let mut num_pow = vec![PolyF2::ONE; n as usize + 1];
    let mut den_pow = vec![PolyF2::ONE; n as usize + 1];
    for i in 1..=n as usize {
        num_pow[i] = num_pow[i - 1].mul(num);
        den_pow[i] = den_pow[i - 1].mul(den);
    }
    let mut acc = PolyF2::ZERO;
    for i in 0..=n {
        if q.coeff(i) == 1 {
            acc = acc.add(num_pow[i as usize].mul(den_pow[(n - i) as usize]));
        }
    }
    Ok(acc)
}

/// Orbit (as a sorted set) and stabilizer of q under the weight-n action.
pub fn orbit_and_stabilizer(n: u32, q: PolyF2) -> Result<(Vec<PolyF2>, Vec<Mat2>)> {
    let mut orbit = Vec::new();
    let mut stab = Vec::new();
    for m in pgl2_elements() {
        let img = moebius_act(n, m, q)?;
        if img == q {
            stab.push(m);
        }
        if !orbit.contains(&img) {
            orbit.push(img);
        }
    }
    orbit.sort();
    Ok((orbit, stab))
}

/// One representative per orbit of the nonzero polynomials of degree ≤ n,
/// chosen as the minimal bit mask in each orbit, in increasing mask order.
pub fn classify_deg_le(n: u32) -> Vec<PolyF2> {
    let limit = 1u64 << (n + 1);
    let mut visited = vec![false; limit as usize];
    let mut reps = Vec::new();
    for mask in 1..limit {
        if visited[mask as usize] {
            continue;
        }
        let q = PolyF2::new(mask);
        reps.push(q);
        let (orbit, _) = orbit_and_stabilizer(n, q).expect("degree within bound");
        for member in orbit {
            visited[member.bits() as usize] = true;
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(bits: u64) -> PolyF2 {
        PolyF2::new(bits)
    }

    #[test]
    fn arithmetic_basics() {
        // gcd(x²+x, x²+1) = x+1: factorizations x(x+1) and (x+1)².
        assert_eq!(p(0b110).gcd(p(0b101)), p(0b11));
        // derivative(x⁹+x⁸+x³) = x⁸+x².
        assert_eq!(p(0b11_0000_1000).derivative(), p(0b1_0000_0100));
        // (x+1)² = x²+1.
        assert_eq!(p(0b11).mul(p(0b11)), p(0b101));
        assert_eq!(p(0b110).gcd(PolyF2::ZERO), p(0b110));
        assert!(p(0b10).rem(PolyF2::ZERO).is_err());
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(PolyF2::ZERO.degree(), -1);
        assert_eq!(PolyF2::ONE.degree(), 0);
        assert_eq!(p(0b10_0000_0000).degree(), 9);
    }

    #[test]
    fn eval_cases() {
        let f1 = crate::gf2k::field_new(1).unwrap();
        let f2 = crate::gf2k::field_new(2).unwrap();
        let q = p(0b111); // x²+x+1
        assert_eq!(q.eval(&f1, f1.elem(1)).bits(), 1);
        // x²+x+1 vanishes at the class of x, being the modulus of GF(4).
        assert_eq!(q.eval(&f2, f2.elem(0b10)).bits(), 0);
        assert_eq!(PolyF2::ZERO.eval(&f2, f2.elem(0b11)).bits(), 0);
    }

    #[test]
    fn display_form() {
        assert_eq!(p(0b11001).to_string(), "x^4 + x^3 + 1");
        assert_eq!(PolyF2::ZERO.to_string(), "0");
        assert_eq!(PolyF2::X.to_string(), "x");
    }

    #[test]
    fn pgl2_is_the_full_group() {
        let g = pgl2_elements();
        assert_eq!(g.len(), 6);
        assert!(g.contains(&Mat2::IDENTITY));
        for &a in &g {
            assert!(g.contains(&a.inverse()));
            assert_eq!(a.compose(a.inverse()), Mat2::IDENTITY);
            for &b in &g {
                assert!(g.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn moebius_examples() {
        // Identity fixes everything.
        for mask in 1..64 {
            assert_eq!(moebius_act(5, Mat2::IDENTITY, p(mask)).unwrap(), p(mask));
        }
        // x ↦ 1/x on x⁴+x+1 with weight 5: x⁵+x⁴+x.
        let inv = Mat2 { a: 0, b: 1, c: 1, d: 0 };
        assert_eq!(moebius_act(5, inv, p(0b10011)).unwrap(), p(0b110010));
        // x ↦ x+1 on x with weight 5: x+1.
        let shift = Mat2 { a: 1, b: 1, c: 0, d: 1 };
        assert_eq!(moebius_act(5, shift, PolyF2::X).unwrap(), p(0b11));
        // Degree above the weight is rejected.
        assert!(moebius_act(3, inv, p(0b10011)).is_err());
        // Zero maps to zero.
        assert_eq!(moebius_act(5, inv, PolyF2::ZERO).unwrap(), PolyF2::ZERO);
    }

    #[test]
    fn action_law_exhaustive_weight_le_5() {
        for n in 1..=5u32 {
            let polys: Vec<PolyF2> = (1..1u64 << (n + 1)).map(PolyF2::new).collect();
            for &a in &pgl2_elements() {
                for &b in &pgl2_elements() {
                    let ab = a.compose(b);
                    for &q in &polys {
                        let two_step =
                            moebius_act(n, a, moebius_act(n, b, q).unwrap()).unwrap();
                        let one_step = moebius_act(n, ab, q).unwrap();
                        assert_eq!(two_step, one_step);
                    }
                }
            }
        }
    }

    #[test]
    fn action_is_multiplicative_over_products() {
        // ψ_{m+n}(A)(f·g) = ψ_m(A)(f)·ψ_n(A)(g) on a full sweep of small cases.
        for &a in &pgl2_elements() {
            for fm in 1u64..32 {
                for gm in 1u64..16 {
                    let (f, g) = (p(fm), p(gm));
                    let lhs = moebius_act(4 + 3, a, f.mul(g)).unwrap();
                    let rhs = moebius_act(4, a, f)
                        .unwrap()
                        .mul(moebius_act(3, a, g).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn orbit_stabilizer_products() {
        for n in 1..=5u32 {
            for mask in 1..1u64 << (n + 1) {
                let (orbit, stab) = orbit_and_stabilizer(n, p(mask)).unwrap();
                assert_eq!(orbit.len() * stab.len(), 6);
            }
        }
    }

    #[test]
    fn stabilizer_orders_of_named_polynomials() {
        let (_, s) = orbit_and_stabilizer(5, p(0b10010)).unwrap(); // x⁴+x
        assert_eq!(s.len(), 6);
        let (_, s) = orbit_and_stabilizer(5, p(0b100011)).unwrap(); // x⁵+x+1
        assert_eq!(s.len(), 3);
        let (_, s) = orbit_and_stabilizer(5, PolyF2::X).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn classification_small_degrees() {
        // Degree ≤ 1: {1, x, x+1} form a single orbit.
        assert_eq!(classify_deg_le(1).len(), 1);
        // Degree ≤ 5: 15 orbits partitioning all 63 nonzero polynomials.
        let reps = classify_deg_le(5);
        assert_eq!(reps.len(), 15);
        let mut total = 0;
        for &r in &reps {
            let (orbit, _) = orbit_and_stabilizer(5, r).unwrap();
            total += orbit.len();
        }
        assert_eq!(total, 63);
    }
}
