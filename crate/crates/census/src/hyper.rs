//! The hyperelliptic census: every genus-4 curve y² + q(x)y = p(x) over F_2
//! up to isomorphism.
//!
//! The coefficient q is pinned to one of the 15 orbit representatives of the
//! weight-5 Möbius action; curves with inequivalent q are never isomorphic,
//! so the p-sweep runs independently per representative. Within a fixed q,
//! two models are isomorphic exactly when their p's are related by
//! p ↦ ψ₁₀(A)(p) + r² + q·r with A in the stabilizer of q and deg r ≤ 5.

use rayon::prelude::*;

use crate::gf2k::{field_new, FieldCtx, FieldElem};
use crate::polyf2::{classify_deg_le, moebius_act, orbit_and_stabilizer, Mat2, PolyF2};

/// Degree bound for p: all masks below 2^11 are candidate right-hand sides.
const P_SPACE: usize = 1 << 11;

/// An accepted census model with its point counts over F_2 .. F_32.
#[derive(Debug, Clone)]
pub struct HypCurve {
    pub q: PolyF2,
    pub p: PolyF2,
    pub n: [i64; 5],
}

/// Genus-4 smoothness criterion for y² + q(x)y = p(x) with deg q ≤ 5,
/// deg p ≤ 10.
///
/// Affine part: gcd(q, p'² + q'²·p) = 1. Infinity: deg q = 5, or the x⁹ and
/// x¹⁰·(coefficient of x⁴ in q) coefficients of p differ. The second clause
/// also rejects every p of degree ≤ 8 when deg q ≤ 4, which is exactly the
/// standard-model degree bound.
pub fn genus4_check(q: PolyF2, p: PolyF2) -> bool {
    debug_assert!(!q.is_zero() && q.degree() <= 5 && p.degree() <= 10);
    let dp = p.derivative();
    let dq = q.derivative();
    let affine_ok = q.gcd(dp.mul(dp).add(dq.mul(dq).mul(p))) == PolyF2::ONE;
    let infinity_ok = q.degree() == 5 || p.coeff(9) != (p.coeff(10) & q.coeff(4));
    affine_ok && infinity_ok
}

/// All p-masks isomorphic to p for this q: {ψ₁₀(A)(p) + r² + q·r}, sorted.
pub fn p_orbit(q: PolyF2, stab: &[Mat2], p: PolyF2) -> Vec<PolyF2> {
    let moves = square_move_table(q);
    let mut out = Vec::with_capacity(stab.len() * moves.len());
    for &a in stab {
        let img = moebius_act(10, a, p).expect("degree ≤ 10");
        for &mv in &moves {
            out.push(img.add(mv));
        }
    }
    out.sort();
    out.dedup();
    out
}

// r² + q·r for every r of degree ≤ 5, r = 0 included.
fn square_move_table(q: PolyF2) -> Vec<PolyF2> {
    (0u64..64)
        .map(|r| {
            let r = PolyF2::new(r);
            r.mul(r).add(q.mul(r))
        })
        .collect()
}

/// Number of points over GF(2^k): Artin–Schreier solutions over all affine x
/// plus the points at infinity, which obey y² + b₅y = a₁₀ in the flipped
/// chart (x, y) ↦ (1/x, y/x⁵).
pub fn count_points(q: PolyF2, p: PolyF2, ctx: &FieldCtx) -> i64 {
    let mut total = 0i64;
    for x in ctx.elements() {
        total += ctx.artin_schreier_count(q.eval(ctx, x), p.eval(ctx, x)) as i64;
    }
    let b5 = FieldElem(q.coeff(5));
    let a10 = FieldElem(p.coeff(10));
    total + ctx.artin_schreier_count(b5, a10) as i64
}

/// Census entry point: all 264 curves, sorted by (q mask, p mask).
pub fn census() -> Vec<HypCurve> {
    let ctxs: Vec<FieldCtx> = (1..=5).map(|k| field_new(k).unwrap()).collect();
    let reps = classify_deg_le(5);
    let per_q: Vec<Vec<HypCurve>> = reps
        .par_iter()
        .map(|&q| census_for_q(q, &ctxs))
        .collect();
    per_q.into_iter().flatten().collect()
}

fn census_for_q(q: PolyF2, ctxs: &[FieldCtx]) -> Vec<HypCurve> {
    let (_, stab) = orbit_and_stabilizer(5, q).expect("representative has degree ≤ 5");
    let mut visited = vec![false; P_SPACE];
    let mut out = Vec::new();
    for mask in 0..P_SPACE as u64 {
        if visited[mask as usize] {
            continue;
        }
        let p = PolyF2::new(mask);
        for member in p_orbit(q, &stab, p) {
            debug_assert!((member.bits() as usize) < P_SPACE);
            visited[member.bits() as usize] = true;
        }
        if genus4_check(q, p) {
            let mut n = [0i64; 5];
            for (i, ctx) in ctxs.iter().enumerate() {
                n[i] = count_points(q, p, ctx);
            }
            out.push(HypCurve { q, p, n });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(bits: u64) -> PolyF2 {
        PolyF2::new(bits)
    }

    #[test]
    fn genus_check_named_cases() {
        // q = 1 accepts exactly when the x⁹ coefficient is set.
        assert!(genus4_check(PolyF2::ONE, p(1 << 9)));
        assert!(!genus4_check(PolyF2::ONE, p(1 << 10)));
        // q = x: x⁹ + 1 passes, x⁹ + x + 1 has a singular affine point.
        assert!(genus4_check(PolyF2::X, p(0b10_0000_0001)));
        assert!(!genus4_check(PolyF2::X, p(0b10_0000_0011)));
        // p = 0 gives the reducible curve y(y + q) = 0.
        assert!(!genus4_check(p(0b100101), PolyF2::ZERO));
        // deg q = 5 needs no condition at infinity.
        assert!(genus4_check(p(0b100101), PolyF2::ONE));
    }

    #[test]
    fn orbit_moves_stay_in_place() {
        let q = p(0b11001); // x⁴+x³+1, trivial stabilizer
        let (_, stab) = orbit_and_stabilizer(5, q).unwrap();
        assert_eq!(stab.len(), 1);
        let base = p(0b10_0000_0001); // x⁹+1
        let orbit = p_orbit(q, &stab, base);
        assert!(orbit.len() <= 64);
        assert!(orbit.contains(&base));
        // r = 1 move: p + q + 1.
        assert!(orbit.contains(&base.add(q).add(PolyF2::ONE)));
        // Every member stays within the degree-10 mask space.
        assert!(orbit.iter().all(|m| m.bits() < 1 << 11));
    }

    #[test]
    fn four_isogenous_models_are_pairwise_non_isomorphic() {
        let q = p(0b11001); // x⁴+x³+1
        let (_, stab) = orbit_and_stabilizer(5, q).unwrap();
        let models = [
            p(0b10_0000_0001), // x⁹+1
            p(0b11_0000_0010), // x⁹+x⁸+x
            p(0b11_0000_1000), // x⁹+x⁸+x³
            p(0b10_0000_1011), // x⁹+x³+x+1
        ];
        for (i, &a) in models.iter().enumerate() {
            let orbit = p_orbit(q, &stab, a);
            for (j, &b) in models.iter().enumerate() {
                assert_eq!(orbit.contains(&b), i == j);
            }
        }
    }

    #[test]
    fn point_counts_of_named_curves() {
        // (x⁴+x³+1, x⁹+1) has counts (3, 9, 9, 21) over F_2..F_16.
        let q = p(0b11001);
        let pp = p(0b10_0000_0001);
        let expect = [3, 9, 9, 21];
        for k in 1..=4u32 {
            let ctx = field_new(k).unwrap();
            assert_eq!(count_points(q, pp, &ctx), expect[(k - 1) as usize]);
        }
        // (1, x⁹): two points over x = 0, none over x = 1, one at infinity.
        let ctx = field_new(1).unwrap();
        assert_eq!(count_points(PolyF2::ONE, p(1 << 9), &ctx), 3);
    }

    #[test]
    fn weil_bound_on_census() {
        let curves = census();
        for c in &curves {
            for (i, &nk) in c.n.iter().enumerate() {
                let k = (i + 1) as u32;
                let diff = nk - ((1i64 << k) + 1);
                assert!(diff * diff <= 64 << k, "Weil bound violated: {c:?}");
            }
        }
    }

    #[test]
    fn census_size_and_order() {
        let curves = census();
        assert_eq!(curves.len(), 264);
        // Sorted by (q mask, p mask); every representative contributes.
        let mut seen_q = std::collections::BTreeSet::new();
        for w in curves.windows(2) {
            assert!((w[0].q, w[0].p) < (w[1].q, w[1].p));
        }
        for c in &curves {
            seen_q.insert(c.q);
        }
        assert_eq!(seen_q.len(), 15);
    }

    #[test]
    fn orbit_members_agree_on_verdict_and_counts() {
        // Isomorphic models must share the genus verdict and all point counts.
        let q = p(0b111); // x²+x+1
        let (_, stab) = orbit_and_stabilizer(5, q).unwrap();
        let ctxs: Vec<FieldCtx> = (1..=5).map(|k| field_new(k).unwrap()).collect();
        for base in (0u64..1 << 11).step_by(97) {
            let base = PolyF2::new(base);
            let verdict = genus4_check(q, base);
            let counts: Vec<i64> = if verdict {
                ctxs.iter().map(|c| count_points(q, base, c)).collect()
            } else {
                Vec::new()
            };
            for member in p_orbit(q, &stab, base) {
                assert_eq!(genus4_check(q, member), verdict);
                if verdict {
                    let mc: Vec<i64> =
                        ctxs.iter().map(|c| count_points(q, member, c)).collect();
                    assert_eq!(mc, counts);
                }
            }
        }
    }
}
