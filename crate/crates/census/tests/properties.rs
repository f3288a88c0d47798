//! Property tests for the algebraic layers: ring identities for the packed
//! polynomials, action laws, modulus independence of the field arithmetic,
//! and the L-polynomial round trip.

use proptest::prelude::*;

use genus4_census::gf2k::{field_new, FieldCtx};
use genus4_census::hyper;
use genus4_census::polyf2::{moebius_act, pgl2_elements, PolyF2};
use genus4_census::zeta::{counts_from_l, l_from_counts};

fn poly(max_bits: u64) -> impl Strategy<Value = PolyF2> {
    (0..max_bits).prop_map(PolyF2::new)
}

proptest! {
    #[test]
    fn distributivity(a in poly(1 << 16), b in poly(1 << 16), c in poly(1 << 16)) {
        prop_assert_eq!(a.add(b).mul(c), a.mul(c).add(b.mul(c)));
    }

    #[test]
    fn remainder_is_stable_under_multiples(
        p in poly(1 << 20),
        q in poly(1 << 10).prop_filter("nonzero divisor", |q| !q.is_zero()),
        m in poly(1 << 10),
    ) {
        let shifted = p.add(q.mul(m));
        prop_assert_eq!(p.rem(q).unwrap(), shifted.rem(q).unwrap());
        let r = p.rem(q).unwrap();
        prop_assert!(r.degree() < q.degree());
    }

    #[test]
    fn gcd_divides_both(a in poly(1 << 20), b in poly(1 << 20)) {
        let g = a.gcd(b);
        if !g.is_zero() {
            prop_assert!(a.rem(g).unwrap().is_zero());
            prop_assert!(b.rem(g).unwrap().is_zero());
        } else {
            prop_assert!(a.is_zero() && b.is_zero());
        }
    }

    #[test]
    fn moebius_multiplicativity(
        f in poly(1 << 6).prop_filter("nonzero", |p| !p.is_zero()),
        g in poly(1 << 6).prop_filter("nonzero", |p| !p.is_zero()),
        which in 0usize..6,
    ) {
        let a = pgl2_elements()[which];
        let lhs = moebius_act(10, a, f.mul(g)).unwrap();
        let rhs = moebius_act(5, a, f).unwrap().mul(moebius_act(5, a, g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_root_squares_back(k in 1u32..=8, bits in 0u8..) {
        let ctx = field_new(k).unwrap();
        let a = ctx.elem(bits & ((ctx.size() - 1) as u8));
        prop_assert_eq!(ctx.sqr(ctx.sqrt(a)), a);
    }

    #[test]
    fn l_round_trip_on_plausible_counts(n1 in 0i64..=11, a2 in 0i64..=7, a3 in 0i64..=8, a4 in 0i64..=10) {
        // Build counts from degree-point data, the shape real curves have.
        let n = [n1, n1 + 2 * a2, n1 + 3 * a3, n1 + 2 * a2 + 4 * a4];
        if let Ok(l) = l_from_counts(&n) {
            for k in 1..=4u32 {
                prop_assert_eq!(counts_from_l(&l, k), n[(k - 1) as usize]);
            }
        }
    }
}

#[test]
fn alternative_moduli_give_identical_counts() {
    // The census counts must not depend on which irreducible modulus
    // represents GF(2^k): recount a known curve in both representations.
    let alternatives: [(u32, u64); 4] = [
        (3, 0b1101),      // x³+x²+1
        (4, 0b11001),     // x⁴+x³+1
        (5, 0b101001),    // x⁵+x³+1
        (6, 0b1101101),   // x⁶+x⁵+x³+x²+1
    ];
    let q = PolyF2::new(0b11001);
    let p = PolyF2::new(0b10_0000_0001);
    for (k, modulus) in alternatives {
        let default_ctx = field_new(k).unwrap();
        let alt_ctx = FieldCtx::with_modulus(k, modulus).unwrap();
        assert_eq!(
            hyper::count_points(q, p, &default_ctx),
            hyper::count_points(q, p, &alt_ctx),
            "counts differ for k={k}"
        );
        // Artin–Schreier statistics agree as well.
        let histogram = |ctx: &FieldCtx| {
            let mut h = [0u32; 3];
            for b in ctx.elements() {
                for c in ctx.elements() {
                    h[ctx.artin_schreier_count(b, c) as usize] += 1;
                }
            }
            h
        };
        assert_eq!(histogram(&default_ctx), histogram(&alt_ctx));
    }
}

#[test]
fn moebius_action_preserves_degree_bound_and_nonzero() {
    for n in 1..=5u32 {
        for mask in 1..1u64 << (n + 1) {
            let q = PolyF2::new(mask);
            for &a in &pgl2_elements() {
                let img = moebius_act(n, a, q).unwrap();
                assert!(!img.is_zero());
                assert!(img.degree() <= n as i32);
            }
        }
    }
}
