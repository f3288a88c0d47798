//! Arithmetic in the finite fields GF(2^k) for k = 1..8.
//!
//! Elements are residue classes of GF(2)[x] modulo a fixed irreducible
//! polynomial, packed into the low k bits of a byte. Multiplication is
//! table-driven (log/antilog against a fixed generator); trace and
//! Artin–Schreier solution counting sit on top. Every operation is a pure
//! function of an immutable [`FieldCtx`], so contexts can be shared freely
//! across threads.

use crate::polyf2::PolyF2;
use crate::{Error, Result};

/// Fixed modulus per extension degree, bit i = coefficient of x^i.
///
/// Any irreducible of the right degree yields the same field up to
/// isomorphism (and identical downstream counts); fixing one makes element
/// encodings reproducible bit-exactly.
///
/// k=1: x; k=2: x²+x+1; k=3: x³+x+1; k=4: x⁴+x+1; k=5: x⁵+x²+1;
/// k=6: x⁶+x+1; k=7: x⁷+x+1; k=8: x⁸+x⁴+x³+x²+1.
pub const DEFAULT_MODULI: [u64; 8] = [
    0b10,
    0b111,
    0b1011,
    0b1_0011,
    0b10_0101,
    0b100_0011,
    0b1000_0011,
    0b1_0001_1101,
];

/// An element of GF(2^k), valid only relative to the context that made it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
#[repr(transparent)]
pub struct FieldElem(pub u8);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn bits(self) -> u8 {
        self.0
    }
}

/// Arithmetic context for GF(2^k): modulus plus log/antilog tables.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    k: u32,
    modulus: u64,
    order: u16, // 2^k - 1
    log: Vec<u16>,
    antilog: Vec<u8>,
    trace: Vec<u8>,
}

/// Context with the fixed default modulus for the given degree.
pub fn field_new(k: u32) -> Result<FieldCtx> {
    if !(1..=8).contains(&k) {
        return Err(Error::UnsupportedExtensionDegree(k));
    }
    FieldCtx::with_modulus(k, DEFAULT_MODULI[(k - 1) as usize])
}

impl FieldCtx {
    /// Context over an explicit irreducible modulus of degree exactly k.
    pub fn with_modulus(k: u32, modulus: u64) -> Result<FieldCtx> {
        if !(1..=8).contains(&k) {
            return Err(Error::UnsupportedExtensionDegree(k));
        }
        let m = PolyF2::new(modulus);
        if m.degree() != k as i32 || !m.is_irreducible() {
            return Err(Error::ReducibleModulus(modulus, k));
        }
        let size = 1usize << k;
        let order = (size - 1) as u16;
        let mut ctx = FieldCtx {
            k,
            modulus,
            order,
            log: vec![0; size],
            antilog: vec![0; size.max(2) - 1],
            trace: vec![0; size],
        };
        ctx.build_tables();
        Ok(ctx)
    }

    // Find a generator of the multiplicative group and fill the
    // log/antilog/trace tables. For k = 1 the group is trivial.
    fn build_tables(&mut self) {
        let size = 1u16 << self.k;
        let mut generator = 0u8;
        'search: for cand in 2..size {
            let cand = cand as u8;
            let mut acc = 1u8;
            for step in 0..self.order {
                acc = self.mul_slow(acc, cand);
                if acc == 1 {
                    if step + 1 == self.order {
                        generator = cand;
                        break 'search;
                    }
                    continue 'search;
                }
            }
        }
        if self.k == 1 {
            generator = 1;
        }
        assert!(generator != 0, "no generator found; modulus not irreducible?");
        let mut acc = 1u8;
        for e in 0..self.order {
            self.antilog[e as usize] = acc;
            self.log[acc as usize] = e;
            acc = self.mul_slow(acc, generator);
        }
        debug_assert_eq!(acc, 1, "generator order must be exactly 2^k - 1");
        for a in 0..size as usize {
            // Tr(a) = a + a^2 + ... + a^(2^(k-1))
            let mut term = a as u8;
            let mut sum = 0u8;
            for _ in 0..self.k {
                sum ^= term;
                term = self.mul_slow(term, term);
            }
            self.trace[a] = if sum == 0 { 0 } else { 1 };
        }
    }

    // Shift-and-reduce product, used only while building the tables.
    fn mul_slow(&self, a: u8, b: u8) -> u8 {
        let mut acc = 0u64;
        let (a, b) = (a as u64, b as u64);
        for i in 0..self.k {
            if (b >> i) & 1 == 1 {
                acc ^= a << i;
            }
        }
        PolyF2::new(acc).rem(PolyF2::new(self.modulus)).unwrap().bits() as u8
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of field elements, 2^k.
    #[inline]
    pub fn size(&self) -> u16 {
        1 << self.k
    }

    /// Element from its bit representation; bits above position k-1 must be 0.
    #[inline]
    pub fn elem(&self, bits: u8) -> FieldElem {
        debug_assert!((bits as u16) < self.size());
        FieldElem(bits)
    }

    /// All 2^k elements in bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.size()).map(|b| FieldElem(b as u8))
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        let e = self.log[a.0 as usize] as u32 + self.log[b.0 as usize] as u32;
        let e = if e >= self.order as u32 { e - self.order as u32 } else { e };
        FieldElem(self.antilog[e as usize])
    }

    #[inline]
    pub fn sqr(&self, a: FieldElem) -> FieldElem {
        self.mul(a, a)
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: FieldElem) -> FieldElem {
        assert!(a.0 != 0, "inverse of zero");
        let e = (self.order - self.log[a.0 as usize]) % self.order;
        FieldElem(self.antilog[e as usize])
    }

    /// The unique square root, a^(2^(k-1)); squaring is a bijection here.
    pub fn sqrt(&self, a: FieldElem) -> FieldElem {
        let mut r = a;
        for _ in 0..self.k.saturating_sub(1) {
            r = self.sqr(r);
        }
        r
    }

    /// Absolute trace down to GF(2): Tr(a) = a + a² + a⁴ + ... + a^(2^(k-1)).
    #[inline]
    pub fn trace(&self, a: FieldElem) -> u8 {
        self.trace[a.0 as usize]
    }

    /// Number of y in GF(2^k) with y² + b·y = c.
    ///
    /// When b = 0 the Frobenius is a bijection, so exactly one solution; when
    /// b ≠ 0 the substitution y = b·z reduces to z² + z = c/b², which has two
    /// solutions if Tr(c/b²) = 0 and none otherwise.
    #[inline]
    pub fn artin_schreier_count(&self, b: FieldElem, c: FieldElem) -> u32 {
        if b.is_zero() {
            1
        } else {
            let b_inv = self.inv(b);
            let t = self.mul(c, self.sqr(b_inv));
            if self.trace(t) == 0 {
                2
            } else {
                0
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_new_bounds() {
        assert!(field_new(0).is_err());
        assert!(field_new(9).is_err());
        for k in 1..=8 {
            let ctx = field_new(k).unwrap();
            assert_eq!(ctx.size() as u32, 1 << k);
        }
    }

    #[test]
    fn k1_is_prime_field() {
        let ctx = field_new(1).unwrap();
        assert_eq!(ctx.modulus(), 0b10);
        assert_eq!(ctx.mul(FieldElem(1), FieldElem(1)), FieldElem(1));
        assert_eq!(ctx.trace(FieldElem(1)), 1);
        assert_eq!(ctx.trace(FieldElem(0)), 0);
    }

    #[test]
    fn k2_modulus_is_unique_quadratic() {
        let ctx = field_new(2).unwrap();
        assert_eq!(ctx.modulus(), 0b111);
        // Tr(x) = x + x² = x + (x+1) = 1 with modulus x²+x+1.
        let x = ctx.elem(0b10);
        assert_eq!(ctx.trace(x), 1);
        // sqrt(x) = x² = x+1, and (x+1)² = x²+1 = x.
        assert_eq!(ctx.sqrt(x), ctx.elem(0b11));
        assert_eq!(ctx.sqr(ctx.elem(0b11)), x);
    }

    #[test]
    fn artin_schreier_small_cases() {
        let ctx = field_new(1).unwrap();
        assert_eq!(ctx.artin_schreier_count(FieldElem(0), FieldElem(1)), 1);
        assert_eq!(ctx.artin_schreier_count(FieldElem(1), FieldElem(0)), 2);
        assert_eq!(ctx.artin_schreier_count(FieldElem(1), FieldElem(1)), 0);
        for k in 2..=8 {
            let ctx = field_new(k).unwrap();
            for c in ctx.elements() {
                assert_eq!(ctx.artin_schreier_count(FieldElem::ZERO, c), 1);
            }
        }
    }

    #[test]
    fn frobenius_is_additive_and_periodic() {
        for k in 1..=8 {
            let ctx = field_new(k).unwrap();
            for a in ctx.elements() {
                for b in ctx.elements() {
                    let lhs = ctx.sqr(ctx.add(a, b));
                    let rhs = ctx.add(ctx.sqr(a), ctx.sqr(b));
                    assert_eq!(lhs, rhs);
                }
                let mut f = a;
                for _ in 0..k {
                    f = ctx.sqr(f);
                }
                assert_eq!(f, a, "x^(2^k) = x must hold");
            }
        }
    }

    #[test]
    fn trace_is_linear_and_balanced() {
        for k in 1..=8 {
            let ctx = field_new(k).unwrap();
            let zero_traces = ctx.elements().filter(|&a| ctx.trace(a) == 0).count();
            assert_eq!(zero_traces, 1 << (k - 1));
            for a in ctx.elements() {
                for b in ctx.elements() {
                    assert_eq!(
                        ctx.trace(ctx.add(a, b)),
                        ctx.trace(a) ^ ctx.trace(b)
                    );
                }
            }
        }
    }

    #[test]
    fn artin_schreier_counts_partition_the_field() {
        for k in 1..=8 {
            let ctx = field_new(k).unwrap();
            for b in ctx.elements().filter(|b| !b.is_zero()) {
                let mut total = 0u32;
                let mut twos = 0u32;
                for c in ctx.elements() {
                    let n = ctx.artin_schreier_count(b, c);
                    total += n;
                    if n == 2 {
                        twos += 1;
                    }
                }
                assert_eq!(total, 1 << k);
                assert_eq!(twos, 1 << (k - 1));
            }
        }
    }

    #[test]
    fn counts_match_direct_enumeration() {
        // The table-driven count must agree with brute force over all (b, c).
        for k in 1..=6 {
            let ctx = field_new(k).unwrap();
            for b in ctx.elements() {
                for c in ctx.elements() {
                    let direct = ctx
                        .elements()
                        .filter(|&y| ctx.add(ctx.sqr(y), ctx.mul(b, y)) == c)
                        .count() as u32;
                    assert_eq!(ctx.artin_schreier_count(b, c), direct);
                }
            }
        }
    }

    #[test]
    fn alternative_moduli_are_rejected_or_accepted_correctly() {
        assert!(FieldCtx::with_modulus(2, 0b110).is_err()); // x²+x = x(x+1)
        assert!(FieldCtx::with_modulus(3, 0b1001).is_err()); // x³+1
        assert!(FieldCtx::with_modulus(4, 0b11001).is_ok()); // x⁴+x³+1
        assert!(FieldCtx::with_modulus(8, 0b1_0001_1011).is_ok()); // x⁸+x⁴+x³+x+1
    }
}
