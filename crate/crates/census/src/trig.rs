//! The trigonal census: every non-hyperelliptic genus-4 curve over F_2 as a
//! quadric ∩ cubic in P³, up to isomorphism.
//!
//! The quadric is pinned to one of the three normal forms (hyperbolic,
//! elliptic, cone); cubics equivalent under the quadric's stabilizer and
//! shifts by multiples of the quadric describe the same scheme. Smoothness is
//! decided by searching for singular points of the intersection over
//! GF(2^k), k ≤ kmax; a smooth (2,3) complete intersection in P³ is a
//! geometrically integral curve of genus 4.

use rayon::prelude::*;

use crate::forms4::{
    act_cubic, cubic_action_table, quad_mul_lin, stabilizer4, CubicForm4, Mat4, QuadForm4,
    CUBIC_MONOMIALS, QUAD_MONOMIALS,
};
use crate::gf2k::{field_new, FieldCtx, FieldElem};
use crate::{Error, Result};

/// Candidate space: all nonzero 20-bit cubic masks.
const CUBIC_SPACE: usize = 1 << 20;

/// Largest singular-point search degree validated against the census totals.
pub const VALIDATED_KMAX: u32 = 6;

/// The three quadric normal forms, in output order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quadric {
    /// q1 = XY + ZT: nonsingular, Arf 0.
    Hyperbolic,
    /// q2 = XY + Z² + ZT + T²: nonsingular, Arf 1.
    Elliptic,
    /// q3 = XY + Z²: the rank-3 cone.
    Cone,
}

impl Quadric {
    pub const ALL: [Quadric; 3] = [Quadric::Hyperbolic, Quadric::Elliptic, Quadric::Cone];

    pub fn label(self) -> &'static str {
        match self {
            Quadric::Hyperbolic => "q1",
            Quadric::Elliptic => "q2",
            Quadric::Cone => "q3",
        }
    }

    pub fn from_label(label: &str) -> Option<Quadric> {
        match label {
            "q1" => Some(Quadric::Hyperbolic),
            "q2" => Some(Quadric::Elliptic),
            "q3" => Some(Quadric::Cone),
            _ => None,
        }
    }

    pub fn form(self) -> QuadForm4 {
        match self {
            Quadric::Hyperbolic => QuadForm4::from_monomials(&[(0, 1), (2, 3)]),
            Quadric::Elliptic => {
                QuadForm4::from_monomials(&[(0, 1), (2, 2), (2, 3), (3, 3)])
            }
            Quadric::Cone => QuadForm4::from_monomials(&[(0, 1), (2, 2)]),
        }
    }
}

/// An accepted census model with its point counts over F_2 .. F_32.
#[derive(Debug, Clone)]
pub struct TrigCurve {
    pub quadric: Quadric,
    pub cubic: CubicForm4,
    pub n: [i64; 5],
}

/// The 15 cubics q·ℓ for ℓ a nonzero linear form; these cut out the same
/// scheme as the quadric alone and are excluded from the candidate sweep.
pub fn linear_multiples(q: QuadForm4) -> Vec<CubicForm4> {
    (1u8..16).map(|l| quad_mul_lin(q, l)).collect()
}

/// All cubics describing a scheme linearly equivalent to (q, f):
/// {act(A, f) + q·ℓ} over the stabilizer and all ℓ (0 included), sorted.
pub fn cubic_orbit(q: QuadForm4, stab: &[Mat4], f: CubicForm4) -> Vec<CubicForm4> {
    let mut out = Vec::with_capacity(stab.len() * 16);
    for &a in stab {
        let img = act_cubic(a, f);
        out.push(img);
        for l in 1u8..16 {
            out.push(CubicForm4::new(img.bits() ^ quad_mul_lin(q, l).bits()));
        }
    }
    out.sort();
    out.dedup();
    out
}

// Values of every degree ≤ 3 monomial and of ∇Q at one point of V(Q).
struct PointData {
    cubic: [u8; 20],
    quad: [u8; 10],
    grad_q: [u8; 4],
}

// ∂(cubic monomial j)/∂x_v as a quadratic monomial index, when the formal
// derivative survives characteristic 2.
fn cubic_derivative_table() -> [[Option<usize>; 20]; 4] {
    let mut table = [[None; 20]; 4];
    for (j, &(a, b, c) ) in CUBIC_MONOMIALS.iter().enumerate() {
        for v in 0..4 {
            let exp = [a, b, c].iter().filter(|&&x| x == v).count();
            if exp % 2 == 1 {
                // Remove one copy of x_v; the remaining pair is the monomial.
                let mut rest = Vec::with_capacity(2);
                let mut dropped = false;
                for &x in &[a, b, c] {
                    if x == v && !dropped {
                        dropped = true;
                    } else {
                        rest.push(x);
                    }
                }
                let idx = QUAD_MONOMIALS
                    .iter()
                    .position(|&m| m == (rest[0], rest[1]))
                    .unwrap();
                table[v][j] = Some(idx);
            }
        }
    }
    table
}

// All points of V(Q) in P³(GF(2^k)), with per-point monomial tables.
fn quadric_points(q: QuadForm4, ctx: &FieldCtx) -> Vec<PointData> {
    let mut pts = Vec::new();
    let size = ctx.size() as u32;
    // Normalized representatives: first nonzero coordinate equal to 1.
    for lead in 0..4usize {
        let free = 3 - lead;
        for rest in 0u32..(1u32 << (ctx.k() * free as u32)) {
            let mut coords = [FieldElem::ZERO; 4];
            coords[lead] = FieldElem::ONE;
            let mut r = rest;
            for c in coords.iter_mut().skip(lead + 1) {
                *c = ctx.elem((r % size) as u8);
                r /= size;
            }
            let mut quad = [0u8; 10];
            for (idx, &(i, j)) in QUAD_MONOMIALS.iter().enumerate() {
                quad[idx] = ctx.mul(coords[i], coords[j]).bits();
            }
            let mut qv = 0u8;
            let mut m = q.bits();
            while m != 0 {
                qv ^= quad[m.trailing_zeros() as usize];
                m &= m - 1;
            }
            if qv != 0 {
                continue;
            }
            let mut cubic = [0u8; 20];
            for (idx, &(i, j, k)) in CUBIC_MONOMIALS.iter().enumerate() {
                cubic[idx] = ctx
                    .mul(ctx.mul(coords[i], coords[j]), coords[k])
                    .bits();
            }
            // ∂Q/∂x_v = Σ over mixed monomials x_i·x_j of Q touching v.
            let mut grad_q = [0u8; 4];
            let mut m = q.bits();
            while m != 0 {
                let idx = m.trailing_zeros() as usize;
                let (i, j) = QUAD_MONOMIALS[idx];
                if i != j {
                    grad_q[i] ^= coords[j].bits();
                    grad_q[j] ^= coords[i].bits();
                }
                m &= m - 1;
            }
            pts.push(PointData { cubic, quad, grad_q });
        }
    }
    pts
}

#[inline]
fn eval_cubic(point: &PointData, f: u32) -> u8 {
    let mut acc = 0u8;
    let mut m = f;
    while m != 0 {
        acc ^= point.cubic[m.trailing_zeros() as usize];
        m &= m - 1;
    }
    acc
}

// Jacobian of (Q, f) at a common zero has rank < 2 iff ∇Q and ∇f are
// proportional over the field (zero gradients included).
fn singular_at(
    ctx: &FieldCtx,
    point: &PointData,
    f: u32,
    deriv: &[[Option<usize>; 20]; 4],
) -> bool {
    let mut grad_f = [0u8; 4];
    for v in 0..4 {
        let mut acc = 0u8;
        let mut m = f;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            if let Some(idx) = deriv[v][j] {
                acc ^= point.quad[idx];
            }
            m &= m - 1;
        }
        grad_f[v] = acc;
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            let minor = ctx
                .mul(FieldElem(point.grad_q[i]), FieldElem(grad_f[j]))
                .bits()
                ^ ctx
                    .mul(FieldElem(point.grad_q[j]), FieldElem(grad_f[i]))
                    .bits();
            if minor != 0 {
                return false;
            }
        }
    }
    true
}

/// True iff V(Q) ∩ V(f) is a smooth curve: no point over GF(2^k), k ≤ kmax,
/// where both forms vanish and the 2×4 Jacobian drops below rank 2.
///
/// Errors when f is zero or a multiple of Q (the pencil degenerates and the
/// intersection is not a curve).
pub fn smooth_genus4(q: QuadForm4, f: CubicForm4, kmax: u32) -> Result<bool> {
    if f.is_zero() || linear_multiples(q).contains(&f) {
        return Err(Error::DegeneratePencil);
    }
    let deriv = cubic_derivative_table();
    for k in 1..=kmax {
        let ctx = field_new(k)?;
        for point in quadric_points(q, &ctx) {
            if eval_cubic(&point, f.bits()) == 0 && singular_at(&ctx, &point, f.bits(), &deriv)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of points of V(Q) ∩ V(f) in P³(GF(2^k)).
pub fn count_points(q: QuadForm4, f: CubicForm4, k: u32) -> i64 {
    let ctx = field_new(k).expect("supported degree");
    quadric_points(q, &ctx)
        .iter()
        .filter(|p| eval_cubic(p, f.bits()) == 0)
        .count() as i64
}

/// Census of one quadric: sweep all nonzero cubic masks in ascending order,
/// take the minimal mask of each orbit, and keep the smooth intersections.
pub fn census_for_quadric(quadric: Quadric, kmax: u32) -> Vec<TrigCurve> {
    let q = quadric.form();
    let stab = stabilizer4(q);
    let tables: Vec<[u32; 20]> = stab.iter().map(|&a| cubic_action_table(a)).collect();
    let multiples: Vec<u32> = {
        let mut v: Vec<u32> = linear_multiples(q).iter().map(|m| m.bits()).collect();
        v.push(0);
        v
    };

    let mut visited = vec![false; CUBIC_SPACE];
    visited[0] = true;
    for &m in &multiples {
        visited[m as usize] = true;
    }
    let mut candidates: Vec<u32> = Vec::new();
    let mut orbit_total = 0usize;
    for mask in 1..CUBIC_SPACE as u32 {
        if visited[mask as usize] {
            continue;
        }
        candidates.push(mask);
        for table in &tables {
            let mut img = 0u32;
            let mut m = mask;
            while m != 0 {
                img ^= table[m.trailing_zeros() as usize];
                m &= m - 1;
            }
            for &mult in &multiples {
                let member = (img ^ mult) as usize;
                if !visited[member] {
                    visited[member] = true;
                    orbit_total += 1;
                }
            }
        }
    }
    // Orbits plus the excluded multiples partition the nonzero masks.
    debug_assert_eq!(orbit_total + multiples.len() - 1, CUBIC_SPACE - 1);

    let scan_max = kmax.max(5);
    let ctxs: Vec<FieldCtx> = (1..=scan_max).map(|k| field_new(k).unwrap()).collect();
    let points: Vec<Vec<PointData>> = ctxs.iter().map(|ctx| quadric_points(q, ctx)).collect();
    let deriv = cubic_derivative_table();

    candidates
        .par_iter()
        .filter_map(|&mask| {
            let mut n = [0i64; 5];
            for (ki, ctx) in ctxs.iter().enumerate() {
                let k = ki as u32 + 1;
                let mut count = 0i64;
                for point in &points[ki] {
                    if eval_cubic(point, mask) == 0 {
                        if k <= kmax && singular_at(ctx, point, mask, &deriv) {
                            return None;
                        }
                        count += 1;
                    }
                }
                if k <= 5 {
                    n[ki] = count;
                }
            }
            Some(TrigCurve { quadric, cubic: CubicForm4::new(mask), n })
        })
        .collect()
}

/// Census entry point: all 780 curves, sorted by (quadric label, cubic mask).
pub fn census(kmax: u32) -> Vec<TrigCurve> {
    Quadric::ALL
        .iter()
        .flat_map(|&quadric| census_for_quadric(quadric, kmax))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic(monos: &[(usize, usize, usize)]) -> CubicForm4 {
        CubicForm4::from_monomials(monos)
    }

    #[test]
    fn linear_multiples_basics() {
        let q = Quadric::Hyperbolic.form();
        let mults = linear_multiples(q);
        assert_eq!(mults.len(), 15);
        assert!(!mults.contains(&CubicForm4::ZERO));
        // (XY + ZT)·X = X²Y + XZT.
        let expect = cubic(&[(0, 0, 1), (0, 2, 3)]);
        assert!(mults.contains(&expect));
        // Distinctness: Q·ℓ determines ℓ.
        let mut sorted: Vec<u32> = mults.iter().map(|m| m.bits()).collect();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 15);
    }

    #[test]
    fn orbit_contains_base_and_respects_bound() {
        let q = Quadric::Hyperbolic.form();
        let stab = stabilizer4(q);
        let f = cubic(&[(0, 0, 0), (1, 1, 1), (2, 2, 2), (3, 3, 3)]);
        let orbit = cubic_orbit(q, &stab, f);
        assert!(orbit.contains(&f));
        assert!(orbit.len() <= stab.len() * 16);
        // Orbits are an equivalence: the orbit of any member is the same set.
        let other = orbit[orbit.len() / 2];
        assert_eq!(cubic_orbit(q, &stab, other), orbit);
    }

    #[test]
    fn quadric_point_counts_match_classical_formulas() {
        for k in 1..=4u32 {
            let size = 1i64 << k;
            let hyper = quadric_points(Quadric::Hyperbolic.form(), &field_new(k).unwrap());
            assert_eq!(hyper.len() as i64, (size + 1) * (size + 1));
            let ell = quadric_points(Quadric::Elliptic.form(), &field_new(k).unwrap());
            // The elliptic form splits over even-degree extensions.
            let expect = if k % 2 == 1 { size * size + 1 } else { (size + 1) * (size + 1) };
            assert_eq!(ell.len() as i64, expect);
            let cone = quadric_points(Quadric::Cone.form(), &field_new(k).unwrap());
            assert_eq!(cone.len() as i64, size * size + size + 1);
        }
    }

    #[test]
    fn smoothness_fixtures() {
        // The paper-flavoured minimal model: quadric X² + XY + Y² + ZT with
        // cubic Y³ + XZ² + Z³ + XYT + T³ is a smooth genus-4 curve.
        let q = QuadForm4::from_monomials(&[(0, 0), (0, 1), (1, 1), (2, 3)]);
        let f = cubic(&[(1, 1, 1), (0, 2, 2), (2, 2, 2), (0, 1, 3), (3, 3, 3)]);
        assert!(smooth_genus4(q, f, 6).unwrap());

        // X³ on the hyperbolic quadric: (0:1:0:0) is a singular point.
        let q1 = Quadric::Hyperbolic.form();
        assert!(!smooth_genus4(q1, cubic(&[(0, 0, 0)]), 2).unwrap());

        // Multiples of the quadric are rejected outright.
        let mult = quad_mul_lin(q1, 0b0001);
        assert!(matches!(
            smooth_genus4(q1, mult, 2),
            Err(Error::DegeneratePencil)
        ));
        assert!(smooth_genus4(q1, CubicForm4::ZERO, 2).is_err());
    }

    #[test]
    fn point_count_fixtures() {
        // Maximal curve: 8 points over F_2 on the hyperbolic quadric.
        let q1 = Quadric::Hyperbolic.form();
        let max_curve = cubic(&[
            (0, 1, 1),
            (1, 1, 1),
            (0, 0, 2),
            (1, 1, 2),
            (0, 2, 2),
            (0, 0, 3),
            (1, 1, 3),
            (0, 3, 3),
        ]);
        assert!(smooth_genus4(q1, max_curve, 6).unwrap());
        assert_eq!(count_points(q1, max_curve, 1), 8);

        // Minimal curve: counts (0, 0, 0, 4) over F_2..F_16.
        let q = QuadForm4::from_monomials(&[(0, 0), (0, 1), (1, 1), (2, 3)]);
        let f = cubic(&[(1, 1, 1), (0, 2, 2), (2, 2, 2), (0, 1, 3), (3, 3, 3)]);
        assert_eq!(count_points(q, f, 1), 0);
        assert_eq!(count_points(q, f, 2), 0);
        assert_eq!(count_points(q, f, 3), 0);
        assert_eq!(count_points(q, f, 4), 4);
    }
}
